#include "fsind/ty.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fsind {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long pow_mod(long base, long e, long m) {
    long r = 1;
    base = mod(base, m);
    while (e > 0) {
        if (e & 1) r = r * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return r;
}

long pow_long(long base, long e) {
    long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

int sign_pow(int s, long e) { return (e % 2 == 0) ? 1 : s; }

// The principal square root of (-1/p): 1 if p = 1 mod 4, i if p = 3 mod 4.
Cyclotomic epsilon_p(long p) {
    return (p % 4 == 1) ? Cyclotomic::integer(1) : Cyclotomic::root_of_unity(1, 4);
}

} // namespace

int legendre(long a, long p) {
    if (p == 2 || !is_prime(p)) throw input_error("Legendre symbol needs an odd prime modulus");
    a = mod(a, p);
    if (a == 0) return 0;
    long e = pow_mod(a, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

BilinearForm BilinearForm::parse(long p, const std::string& text) {
    BilinearForm b;
    b.p = p;
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<long> entries;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            size_t used = 0;
            long v;
            try {
                v = std::stol(cell, &used);
            } catch (const std::exception&) {
                throw input_error("Gram matrix: bad entry '" + cell + "'");
            }
            while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
            if (used != cell.size()) throw input_error("Gram matrix: bad entry '" + cell + "'");
            entries.push_back(mod(v, p));
        }
        if (entries.empty()) throw input_error("Gram matrix: empty row");
        b.gram.push_back(std::move(entries));
    }
    b.r = static_cast<long>(b.gram.size());
    if (b.r == 0) throw input_error("Gram matrix: no rows");
    for (const auto& row_entries : b.gram)
        if (static_cast<long>(row_entries.size()) != b.r)
            throw input_error("Gram matrix must be square");
    return b;
}

bool BilinearForm::is_symmetric() const {
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j)
            if (gram[i][j] % p != gram[j][i] % p) return false;
    return true;
}

long BilinearForm::det_mod_p() const {
    std::vector<std::vector<long>> a = gram;
    for (auto& row : a)
        for (auto& v : row) v = mod(v, p);
    long det = 1;
    for (long col = 0; col < r; ++col) {
        long pivot = -1;
        for (long i = col; i < r && pivot < 0; ++i)
            if (a[i][col] != 0) pivot = i;
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = mod(-det, p);
        }
        det = det * a[col][col] % p;
        long inv = pow_mod(a[col][col], p - 2, p);
        for (long i = col + 1; i < r; ++i) {
            long f = a[i][col] * inv % p;
            for (long j = col; j < r; ++j) a[i][j] = mod(a[i][j] - f * a[col][j], p);
        }
    }
    return det;
}

FormClass classify_form(const BilinearForm& b) {
    if (!b.is_symmetric()) throw input_error("Gram matrix must be symmetric");
    FormClass out;
    long det = b.det_mod_p();
    out.nondegenerate = det != 0;
    out.alternating = true;
    for (long i = 0; i < b.r; ++i)
        if (mod(b.gram[i][i], b.p) != 0) out.alternating = false;
    if (b.p != 2 && out.nondegenerate) {
        out.discriminant_class = legendre(det, b.p);
        out.hyperbolic = out.discriminant_class == sign_pow(legendre(-1, b.p), b.r / 2);
    }
    return out;
}

TYCategory::TYCategory(BilinearForm form, int sign_tau)
    : form_(std::move(form)),
      sign_(sign_tau),
      group_(std::vector<long>(static_cast<size_t>(std::max<long>(form_.r, 1)), form_.p)) {
    if (!is_prime(form_.p)) throw input_error("TY base characteristic must be prime");
    if (form_.r <= 0 || form_.r % 2 != 0)
        throw input_error("integral TY categories need an even-rank form");
    if (sign_ != 1 && sign_ != -1) throw input_error("tau sign must be +1 or -1");
    class_ = classify_form(form_);
    if (!class_.nondegenerate) throw input_error("TY bilinear form must be non-degenerate");
    if (form_.p != 2) epsilon_ = sign_pow(legendre(-1, form_.p), ell()) * class_.discriminant_class * sign_;
}

long TYCategory::dim_m() const { return pow_long(form_.p, ell()); }

long TYCategory::dim_total() const { return 2 * pow_long(form_.p, form_.r); }

Cyclotomic TYCategory::indicator_m(long n) const {
    if (n < 1) throw input_error("indicator order must be positive");
    if (n % 2 != 0) return Cyclotomic();
    long k = n / 2;
    long r = form_.r;
    if (form_.p == 2) {
        if (class_.alternating)
            return Cyclotomic::integer(k % 2 == 1 ? sign_ : pow_long(2, ell()));
        // sgn^k * zeta_8^{rk} * ((1 + i^{-k}) / sqrt(2))^r
        Cyclotomic half_sqrt2 =
            (Cyclotomic::root_of_unity(1, 8) + Cyclotomic::root_of_unity(7, 8)) *
            Cyclotomic::rational(Rational(1, 2)); // 1/sqrt(2)
        Cyclotomic factor =
            (Cyclotomic::integer(1) + Cyclotomic::root_of_unity(mod(-k, 4), 4)) * half_sqrt2;
        return Cyclotomic::integer(sign_pow(sign_, k)) *
               Cyclotomic::root_of_unity(mod(r * k, 8), 8) * factor.pow(r);
    }
    long p = form_.p;
    Cyclotomic eps = epsilon_p(p);
    int det_class = class_.discriminant_class;
    if (k % p != 0) {
        Cyclotomic v = Cyclotomic::integer(sign_pow(sign_, k)) * eps.pow(mod(r * (k + 1), 4));
        v *= Cyclotomic::integer(sign_pow(legendre(-k, p), r));
        v *= Cyclotomic::integer(sign_pow(legendre(-2, p), r * (k + 1)));
        v *= Cyclotomic::integer(sign_pow(det_class, k + 1));
        return v;
    }
    Cyclotomic v = Cyclotomic::integer(sign_pow(sign_, k)) * eps.pow(mod(r * k, 4));
    v *= Cyclotomic::integer(sign_pow(legendre(-2, p), r * k));
    v *= Cyclotomic::integer(sign_pow(det_class, k));
    v *= Cyclotomic::integer(dim_m()); // sqrt(p^r) = p^{r/2}
    return v;
}

Cyclotomic TYCategory::indicator_invertible(const GroupElement& a, long n) const {
    if (n < 1) throw input_error("indicator order must be positive");
    bool zero = group_.power(a, n) == group_.identity();
    return zero ? Cyclotomic::integer(1) : Cyclotomic();
}

long TYCategory::fs_exponent() const {
    if (cached_exponent_ > 0) return cached_exponent_;
    long closed;
    if (form_.p == 2)
        closed = class_.alternating ? 4 : 8;
    else
        closed = (epsilon_ == 1 ? 2 : 4) * form_.p;
    // Least n with nu_n(m) = d(m) and nu_n(a) = 1 for every invertible a.
    Cyclotomic dm = Cyclotomic::integer(dim_m());
    long scanned = 0;
    for (long n = 1; n <= closed && scanned == 0; ++n)
        if (n % form_.p == 0 && indicator_m(n) == dm) scanned = n;
    if (scanned != closed)
        throw integrity_error("FS exponent mismatch between the closed form and the scan");
    cached_exponent_ = closed;
    return closed;
}

long TYCategory::total_m() const {
    long closed;
    if (form_.p == 2)
        closed = (class_.alternating ? 1 : 2) * sign_ + pow_long(2, ell());
    else
        closed = epsilon_ == 1 ? dim_m() + (form_.p - 1) * sign_ : 0;
    long N = fs_exponent();
    Cyclotomic sum;
    for (long n = 1; n <= N; ++n) sum += indicator_m(n);
    if (sum != Cyclotomic::integer(closed))
        throw integrity_error("total indicator of m: closed form disagrees with the summation");
    return closed;
}

long TYCategory::total_invertible(const GroupElement& a) const {
    long N = fs_exponent();
    long ord = group_.element_order(a);
    long closed = N / ord;
    long counted = 0;
    for (long n = 1; n <= N; ++n)
        if (group_.power(a, n) == group_.identity()) ++counted;
    if (counted != closed)
        throw integrity_error("total indicator of " + a.label() +
                              ": closed form disagrees with the summation");
    return closed;
}

FibrationVerdict TYCategory::admits_fibration() const {
    bool yes;
    if (form_.p == 2)
        yes = !(ell() == 1 && !class_.alternating && sign_ == -1);
    else
        yes = sign_ == 1 && class_.hyperbolic;
    return yes ? FibrationVerdict::Fibration : FibrationVerdict::NoFibration;
}

} // namespace fsind
