#include "fsind/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace fsind {

namespace {

std::vector<long> divisors_of(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Exact division of a monic-divisor polynomial, in place; returns quotient.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    std::vector<mpz_class> quo(num.size() - den.size() + 1, 0);
    for (long i = static_cast<long>(quo.size()) - 1; i >= 0; --i) {
        mpz_class coef = num[i + den.size() - 1];
        quo[i] = coef;
        if (coef != 0)
            for (size_t j = 0; j < den.size(); ++j) num[i + j] -= coef * den[j];
    }
    return quo;
}

// Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d, filled bottom-up into `cache`.
void fill_phi(long n, std::map<long, std::vector<mpz_class>>& cache) {
    if (cache.count(n)) return;
    for (long d : divisors_of(n)) {
        if (d == n || cache.count(d)) continue;
        std::vector<mpz_class> num(d + 1, 0);
        num[0] = -1;
        num[d] = 1;
        for (long f : divisors_of(d))
            if (f != d) num = divide_monic(std::move(num), cache.at(f));
        cache.emplace(d, std::move(num));
    }
    std::vector<mpz_class> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long f : divisors_of(n))
        if (f != n) num = divide_monic(std::move(num), cache.at(f));
    cache.emplace(n, std::move(num));
}

} // namespace

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<mpz_class>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    fill_phi(n, cache);
    return cache.at(n);
}

Cyclotomic Cyclotomic::rational(const Rational& q) {
    Rational v = q;
    v.canonicalize(); // GMP rational arithmetic requires canonical operands
    return Cyclotomic(1, std::vector<Rational>{std::move(v)});
}

Cyclotomic Cyclotomic::root_of_unity(long k, long n) {
    if (n <= 0) throw input_error("root_of_unity: conductor must be positive");
    long e = ((k % n) + n) % n;
    std::vector<Rational> c(n, Rational(0));
    c[e] = 1;
    Cyclotomic r(n, std::move(c));
    r.canonicalize();
    return r;
}

Cyclotomic Cyclotomic::from_coeffs(long n, std::vector<Rational> coeffs) {
    if (n <= 0) throw input_error("from_coeffs: conductor must be positive");
    std::vector<Rational> c(n, Rational(0));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        coeffs[i].canonicalize();
        c[i % n] += coeffs[i];
    }
    Cyclotomic r(n, std::move(c));
    r.canonicalize();
    return r;
}

bool Cyclotomic::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::as_rational() const {
    if (!is_rational()) throw not_an_integer("value is not rational: " + compact());
    return c_[0];
}

long Cyclotomic::as_integer() const {
    Rational q = as_rational();
    if (q.get_den() != 1) throw not_an_integer("value is not a rational integer: " + compact());
    if (!q.get_num().fits_slong_p()) throw not_an_integer("integer out of range");
    return q.get_num().get_si();
}

void Cyclotomic::reduce_mod_phi() {
    const std::vector<mpz_class>& phi = cyclotomic_polynomial(n_);
    long d = static_cast<long>(phi.size()) - 1; // = euler_phi(n_)
    for (long i = n_ - 1; i >= d; --i) {
        if (c_[i] == 0) continue;
        Rational coef = c_[i];
        c_[i] = 0;
        for (long j = 0; j < d; ++j) c_[i - d + j] -= coef * Rational(phi[j]);
    }
}

bool Cyclotomic::fixed_by_galois(long j) const {
    std::vector<Rational> acc(n_, Rational(0));
    for (long i = 0; i < n_; ++i)
        if (c_[i] != 0) acc[(i * j) % n_] += c_[i];
    Cyclotomic img(n_, std::move(acc));
    img.reduce_mod_phi();
    return img.c_ == c_;
}

void Cyclotomic::rebase(long d) {
    // Columns: canonical coefficients over zeta_n of zeta_d^t, t < phi(d).
    long pn = euler_phi(n_);
    long pd = euler_phi(d);
    long step = n_ / d;
    std::vector<std::vector<Rational>> col(pd);
    for (long t = 0; t < pd; ++t) {
        std::vector<Rational> v(n_, Rational(0));
        v[(t * step) % n_] = 1;
        Cyclotomic e(n_, std::move(v));
        e.reduce_mod_phi();
        col[t] = std::move(e.c_);
    }
    // Solve sum_t x_t * col[t] = c_ by Gaussian elimination (consistent by
    // construction since membership was already verified).
    std::vector<std::vector<Rational>> m(pn, std::vector<Rational>(pd + 1, Rational(0)));
    for (long r = 0; r < pn; ++r) {
        for (long t = 0; t < pd; ++t) m[r][t] = col[t][r];
        m[r][pd] = c_[r];
    }
    long row = 0;
    std::vector<long> pivot_of(pd, -1);
    for (long coli = 0; coli < pd && row < pn; ++coli) {
        long pr = -1;
        for (long r = row; r < pn; ++r)
            if (m[r][coli] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        Rational inv = Rational(1) / m[row][coli];
        for (long t = coli; t <= pd; ++t) m[row][t] *= inv;
        for (long r = 0; r < pn; ++r) {
            if (r == row || m[r][coli] == 0) continue;
            Rational f = m[r][coli];
            for (long t = coli; t <= pd; ++t) m[r][t] -= f * m[row][t];
        }
        pivot_of[coli] = row;
        ++row;
    }
    std::vector<Rational> sol(d, Rational(0));
    for (long t = 0; t < pd; ++t)
        if (pivot_of[t] >= 0) sol[t] = m[pivot_of[t]][pd];
    n_ = d;
    c_ = std::move(sol);
}

void Cyclotomic::minimize_conductor() {
    if (is_zero()) {
        n_ = 1;
        c_.assign(1, Rational(0));
        return;
    }
    if (n_ == 1) return;
    for (long d : divisors_of(n_)) {
        if (d == n_) break;
        bool fixed = true;
        for (long j = 2; j < n_ && fixed; ++j) {
            if (j % d != 1 % d) continue;
            if (std::gcd(j, n_) != 1) continue;
            fixed = fixed_by_galois(j);
        }
        if (fixed) {
            rebase(d);
            return;
        }
    }
    c_.resize(n_, Rational(0));
}

void Cyclotomic::canonicalize() {
    reduce_mod_phi();
    minimize_conductor();
}

std::vector<Rational> Cyclotomic::lifted_coeffs(long L) const {
    if (L % n_ != 0) throw input_error("lifted_coeffs: target conductor must be a multiple");
    std::vector<Rational> out(L, Rational(0));
    long step = L / n_;
    for (long i = 0; i < n_; ++i)
        if (c_[i] != 0) out[i * step] += c_[i];
    Cyclotomic lifted(L, std::move(out));
    lifted.reduce_mod_phi();
    return lifted.c_;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long L = std::lcm(n_, o.n_);
    std::vector<Rational> a = lifted_coeffs(L);
    std::vector<Rational> b = o.lifted_coeffs(L);
    for (long i = 0; i < L; ++i) a[i] += b[i];
    Cyclotomic r(L, std::move(a));
    r.canonicalize();
    return r;
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> a = c_;
    for (Rational& q : a) q = -q;
    return Cyclotomic(n_, std::move(a));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long L = std::lcm(n_, o.n_);
    std::vector<Rational> a = lifted_coeffs(L);
    std::vector<Rational> b = o.lifted_coeffs(L);
    std::vector<Rational> prod(L, Rational(0));
    for (long i = 0; i < L; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < L; ++j) {
            if (b[j] == 0) continue;
            prod[(i + j) % L] += a[i] * b[j];
        }
    }
    Cyclotomic r(L, std::move(prod));
    r.canonicalize();
    return r;
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<Rational> acc(n_, Rational(0));
    for (long i = 0; i < n_; ++i)
        if (c_[i] != 0) acc[(n_ - i) % n_] += c_[i];
    Cyclotomic r(n_, std::move(acc));
    r.canonicalize();
    return r;
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) throw input_error("pow: negative exponent");
    Cyclotomic acc = integer(1);
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

long Cyclotomic::multiplicative_order() const {
    // Roots of unity in Q(zeta_N) all have order dividing lcm(2, N),
    // so scanning 2N powers decides the question.
    Cyclotomic one = integer(1);
    Cyclotomic p = *this;
    long bound = 2 * n_;
    for (long m = 1; m <= bound; ++m) {
        if (p == one) return m;
        p = p * *this;
    }
    throw input_error("multiplicative_order: value is not a root of unity: " + compact());
}

std::complex<double> Cyclotomic::approx() const {
    std::complex<double> acc(0.0, 0.0);
    const double tau = 6.283185307179586476925286766559;
    for (long i = 0; i < n_; ++i) {
        if (c_[i] == 0) continue;
        double v = c_[i].get_d();
        double ang = tau * static_cast<double>(i) / static_cast<double>(n_);
        acc += v * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

std::string Cyclotomic::to_json() const {
    std::ostringstream os;
    os << "{\"conductor\":" << n_ << ",\"coeffs\":[";
    for (long i = 0; i < n_; ++i) {
        if (i) os << ',';
        os << '"' << c_[i].get_str() << '"';
    }
    std::complex<double> a = approx();
    os << "],\"approx\":[" << a.real() << ',' << a.imag() << "]}";
    return os.str();
}

std::string Cyclotomic::compact() const {
    std::ostringstream os;
    os << n_ << ':';
    for (long i = 0; i < n_; ++i) {
        if (i) os << ',';
        os << c_[i].get_str();
    }
    return os.str();
}

Cyclotomic Cyclotomic::parse_compact(const std::string& s) {
    size_t colon = s.find(':');
    if (colon == std::string::npos) throw input_error("bad cyclotomic literal: " + s);
    long n = 0;
    try {
        n = std::stol(s.substr(0, colon));
    } catch (const std::exception&) {
        throw input_error("bad cyclotomic conductor: " + s);
    }
    if (n <= 0) throw input_error("bad cyclotomic conductor: " + s);
    std::vector<Rational> c;
    std::string body = s.substr(colon + 1);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            Rational q(tok);
            q.canonicalize();
            c.push_back(q);
        } catch (const std::exception&) {
            throw input_error("bad rational coefficient '" + tok + "'");
        }
    }
    if (static_cast<long>(c.size()) != n) throw input_error("cyclotomic literal length mismatch: " + s);
    return from_coeffs(n, std::move(c));
}

long root_exponent(const Cyclotomic& a, long L) {
    Cyclotomic z = Cyclotomic::root_of_unity(1, L);
    Cyclotomic p = Cyclotomic::integer(1);
    for (long k = 0; k < L; ++k) {
        if (p == a) return k;
        p = p * z;
    }
    return -1;
}

} // namespace fsind
