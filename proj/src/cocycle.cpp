#include "fsind/cocycle.hpp"

#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace fsind {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

} // namespace

// ---------------------------------------------------------------- ThreeCochain

ThreeCochain::ThreeCochain(FiniteAbelianGroup group, long modulus)
    : group_(std::move(group)), modulus_(modulus) {
    if (modulus_ < 1) throw input_error("cochain modulus must be >= 1");
    long n = group_.order();
    table_.assign(n * n * n, 0);
}

long ThreeCochain::exp_at(long i, long j, long k) const {
    long n = group_.order();
    return table_[(i * n + j) * n + k];
}

void ThreeCochain::set_exp(long i, long j, long k, long e) {
    long n = group_.order();
    table_[(i * n + j) * n + k] = mod(e, modulus_);
}

long ThreeCochain::exp_at(const GroupElement& x, const GroupElement& y, const GroupElement& z) const {
    return exp_at(group_.index_of(x), group_.index_of(y), group_.index_of(z));
}

Cyclotomic ThreeCochain::value(const GroupElement& x, const GroupElement& y, const GroupElement& z) const {
    return Cyclotomic::root_of_unity(exp_at(x, y, z), modulus_);
}

bool ThreeCochain::is_normalized() const {
    long n = group_.order();
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (exp_at(0, i, j) != 0 || exp_at(i, 0, j) != 0 || exp_at(i, j, 0) != 0) return false;
    return true;
}

bool ThreeCochain::is_cocycle() const {
    if (!is_normalized()) return false;
    long n = group_.order();
    std::vector<GroupElement> els = group_.elements();
    // mul[i][j] = index of els[i]*els[j]
    std::vector<long> mul(n * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) mul[i * n + j] = group_.index_of(group_.compose(els[i], els[j]));
    for (long g = 0; g < n; ++g)
        for (long h = 0; h < n; ++h)
            for (long k = 0; k < n; ++k)
                for (long l = 0; l < n; ++l) {
                    long e = exp_at(h, k, l) + exp_at(g, mul[h * n + k], l) + exp_at(g, h, k) -
                             exp_at(mul[g * n + h], k, l) - exp_at(g, h, mul[k * n + l]);
                    if (mod(e, modulus_) != 0) return false;
                }
    return true;
}

ThreeCochain ThreeCochain::generating_cyclic(long ell, long a) {
    if (ell < 1) throw input_error("generating_cyclic: ell must be >= 1");
    if (a < 0 || a >= std::max<long>(ell, 1)) throw input_error("generating_cyclic: need 0 <= a < ell");
    FiniteAbelianGroup g({ell});
    ThreeCochain w(g, ell);
    for (long i = 0; i < ell; ++i)
        for (long j = 0; j < ell; ++j)
            for (long k = 0; k < ell; ++k) {
                long carry = (j + k) / ell; // (j + k - ((j+k) mod ell)) / ell
                w.set_exp(i, j, k, a * i * carry);
            }
    return w;
}

ThreeCochain ThreeCochain::inflate(const ThreeCochain& w, const FiniteAbelianGroup& gamma,
                                   const std::vector<GroupElement>& pi) {
    long n = gamma.order();
    if (static_cast<long>(pi.size()) != n) throw input_error("inflate: projection table size mismatch");
    const FiniteAbelianGroup& g = w.group();
    std::vector<bool> hit(g.order(), false);
    for (const GroupElement& img : pi) {
        if (!g.contains(img)) throw input_error("inflate: projection image outside target group");
        hit[g.index_of(img)] = true;
    }
    for (bool b : hit)
        if (!b) throw input_error("inflate: projection is not surjective");
    std::vector<GroupElement> els = gamma.elements();
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            long ij = gamma.index_of(gamma.compose(els[i], els[j]));
            if (g.compose(pi[i], pi[j]) != pi[ij]) throw input_error("inflate: projection is not a homomorphism");
        }
    ThreeCochain out(gamma, w.modulus());
    std::vector<long> img(n);
    for (long i = 0; i < n; ++i) img[i] = g.index_of(pi[i]);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k) out.set_exp(i, j, k, w.exp_at(img[i], img[j], img[k]));
    return out;
}

ThreeCochain ThreeCochain::with_modulus(long m) const {
    if (m % modulus_ != 0) throw input_error("with_modulus: target must be a multiple");
    ThreeCochain out(group_, m);
    long scale = m / modulus_;
    for (size_t t = 0; t < table_.size(); ++t) out.table_[t] = table_[t] * scale;
    return out;
}

ThreeCochain ThreeCochain::product(const ThreeCochain& o) const {
    if (!(group_ == o.group_)) throw input_error("cochain product: group mismatch");
    long m = std::lcm(modulus_, o.modulus_);
    ThreeCochain a = with_modulus(m);
    ThreeCochain b = o.with_modulus(m);
    for (size_t t = 0; t < a.table_.size(); ++t) a.table_[t] = mod(a.table_[t] + b.table_[t], m);
    return a;
}

ThreeCochain ThreeCochain::inverse() const {
    ThreeCochain out = *this;
    for (long& e : out.table_) e = mod(-e, modulus_);
    return out;
}

ThreeCochain ThreeCochain::power(long a) const {
    ThreeCochain out = *this;
    for (long& e : out.table_) e = mod(e * a, modulus_);
    return out;
}

bool ThreeCochain::operator==(const ThreeCochain& o) const {
    if (!(group_ == o.group_)) return false;
    long m = std::lcm(modulus_, o.modulus_);
    return with_modulus(m).table_ == o.with_modulus(m).table_;
}

// ----------------------------------------------------------------- TwoCochain

TwoCochain::TwoCochain(FiniteAbelianGroup group, long modulus)
    : group_(std::move(group)), modulus_(modulus) {
    if (modulus_ < 1) throw input_error("cochain modulus must be >= 1");
    long n = group_.order();
    table_.assign(n * n, 0);
}

long TwoCochain::exp_at(long i, long j) const { return table_[i * group_.order() + j]; }

void TwoCochain::set_exp(long i, long j, long e) { table_[i * group_.order() + j] = mod(e, modulus_); }

long TwoCochain::exp_at(const GroupElement& x, const GroupElement& y) const {
    return exp_at(group_.index_of(x), group_.index_of(y));
}

Cyclotomic TwoCochain::value(const GroupElement& x, const GroupElement& y) const {
    return Cyclotomic::root_of_unity(exp_at(x, y), modulus_);
}

bool TwoCochain::is_normalized() const {
    long n = group_.order();
    for (long i = 0; i < n; ++i)
        if (exp_at(0, i) != 0 || exp_at(i, 0) != 0) return false;
    return true;
}

ThreeCochain TwoCochain::coboundary3() const {
    long n = group_.order();
    std::vector<GroupElement> els = group_.elements();
    std::vector<long> mul(n * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) mul[i * n + j] = group_.index_of(group_.compose(els[i], els[j]));
    ThreeCochain out(group_, modulus_);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            for (long z = 0; z < n; ++z) {
                long e = exp_at(y, z) + exp_at(x, mul[y * n + z]) - exp_at(mul[x * n + y], z) - exp_at(x, y);
                out.set_exp(x, y, z, e);
            }
    return out;
}

TwoCochain TwoCochain::skew() const {
    long n = group_.order();
    TwoCochain out(group_, modulus_);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) out.set_exp(i, j, exp_at(j, i) - exp_at(i, j));
    return out;
}

TwoCochain TwoCochain::symmetrize() const {
    long n = group_.order();
    TwoCochain out(group_, modulus_);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) out.set_exp(i, j, exp_at(i, j) + exp_at(j, i));
    return out;
}

bool TwoCochain::is_bicharacter() const {
    long n = group_.order();
    std::vector<GroupElement> els = group_.elements();
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            long ij = group_.index_of(group_.compose(els[i], els[j]));
            for (long k = 0; k < n; ++k) {
                if (mod(exp_at(ij, k) - exp_at(i, k) - exp_at(j, k), modulus_) != 0) return false;
                if (mod(exp_at(k, ij) - exp_at(k, i) - exp_at(k, j), modulus_) != 0) return false;
            }
        }
    return true;
}

TwoCochain TwoCochain::with_modulus(long m) const {
    if (m % modulus_ != 0) throw input_error("with_modulus: target must be a multiple");
    TwoCochain out(group_, m);
    long scale = m / modulus_;
    for (size_t t = 0; t < table_.size(); ++t) out.table_[t] = table_[t] * scale;
    return out;
}

TwoCochain TwoCochain::product(const TwoCochain& o) const {
    if (!(group_ == o.group_)) throw input_error("cochain product: group mismatch");
    long m = std::lcm(modulus_, o.modulus_);
    TwoCochain a = with_modulus(m);
    TwoCochain b = o.with_modulus(m);
    for (size_t t = 0; t < a.table_.size(); ++t) a.table_[t] = mod(a.table_[t] + b.table_[t], m);
    return a;
}

TwoCochain TwoCochain::inverse() const {
    TwoCochain out = *this;
    for (long& e : out.table_) e = mod(-e, modulus_);
    return out;
}

// ---------------------------------------------------------- QuadraticFunction

bool QuadraticFunction::is_quadratic() const {
    long n = group.order();
    if (static_cast<long>(values.size()) != n) return false;
    std::vector<GroupElement> els = group.elements();
    Cyclotomic one = Cyclotomic::integer(1);
    for (const Cyclotomic& v : values)
        if (v.is_zero() || !(v * v.conj() == one)) return false;
    for (long i = 0; i < n; ++i) {
        for (long a = 0; a <= group.exponent(); ++a) {
            GroupElement xa = group.power(els[i], a);
            if (!(values[group.index_of(xa)] == values[i].pow(a * a))) return false;
        }
    }
    // b_t(x,y) = t(xy)/(t(x)t(y)) must be a bicharacter; values are roots
    // of unity so inversion is conjugation.
    auto bt = [&](long i, long j) {
        long ij = group.index_of(group.compose(els[i], els[j]));
        return values[ij] * values[i].conj() * values[j].conj();
    };
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            long ij = group.index_of(group.compose(els[i], els[j]));
            for (long k = 0; k < n; ++k) {
                if (!(bt(ij, k) == bt(i, k) * bt(j, k))) return false;
                if (!(bt(k, ij) == bt(k, i) * bt(k, j))) return false;
            }
        }
    return true;
}

// ------------------------------------------------------------------ EMCocycle

EMCocycle::EMCocycle(ThreeCochain omega, TwoCochain c)
    : omega_(std::move(omega)), c_(std::move(c)) {
    if (!(omega_.group() == c_.group())) throw input_error("EM cocycle: group mismatch");
    long m = std::lcm(omega_.modulus(), c_.modulus());
    omega_ = omega_.with_modulus(m);
    c_ = c_.with_modulus(m);
}

bool EMCocycle::check() const {
    const FiniteAbelianGroup& g = omega_.group();
    long n = g.order();
    long m = omega_.modulus();
    std::vector<GroupElement> els = g.elements();
    std::vector<long> mul(n * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) mul[i * n + j] = g.index_of(g.compose(els[i], els[j]));
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            for (long z = 0; z < n; ++z) {
                long xy = mul[x * n + y];
                long yz = mul[y * n + z];
                long e1 = c_.exp_at(xy, z) - c_.exp_at(x, z) - c_.exp_at(y, z) + omega_.exp_at(x, z, y) -
                          omega_.exp_at(x, y, z) - omega_.exp_at(z, x, y);
                long e2 = c_.exp_at(x, yz) - c_.exp_at(x, y) - c_.exp_at(x, z) + omega_.exp_at(x, y, z) +
                          omega_.exp_at(y, z, x) - omega_.exp_at(y, x, z);
                if (mod(e1, m) != 0 || mod(e2, m) != 0) return false;
            }
    return true;
}

QuadraticFunction EMCocycle::trace() const {
    if (!check()) throw input_error("EM trace: pair fails the Eilenberg-MacLane equalities");
    const FiniteAbelianGroup& g = omega_.group();
    QuadraticFunction t{g, {}};
    t.values.reserve(g.order());
    for (long i = 0; i < g.order(); ++i)
        t.values.push_back(Cyclotomic::root_of_unity(c_.exp_at(i, i), c_.modulus()));
    return t;
}

// ------------------------------------------------------------------- file I/O

namespace {

struct Parser {
    std::istream& in;
    std::string name;
    long lineno = 0;

    [[noreturn]] void fail(long col, const std::string& msg) const {
        std::ostringstream os;
        os << name << ':' << lineno << ':' << col << ": " << msg;
        throw input_error(os.str());
    }

    GroupElement parse_tuple(const std::string& tok, long col, const FiniteAbelianGroup& g) const {
        GroupElement x;
        std::istringstream is(tok);
        std::string part;
        while (std::getline(is, part, ',')) {
            try {
                size_t pos = 0;
                x.coords.push_back(std::stol(part, &pos));
                if (pos != part.size()) fail(col, "bad element coordinate '" + part + "'");
            } catch (const input_error&) {
                throw;
            } catch (const std::exception&) {
                fail(col, "bad element coordinate '" + part + "'");
            }
        }
        if (x.coords.size() != g.rank()) fail(col, "element '" + tok + "' has wrong arity for group " + g.spec());
        for (size_t i = 0; i < x.coords.size(); ++i)
            x.coords[i] = mod(x.coords[i], g.moduli()[i]);
        return x;
    }
};

struct CochainFile {
    FiniteAbelianGroup group{std::vector<long>{1}};
    long modulus = 1;
    std::vector<std::pair<std::vector<GroupElement>, long>> entries;
};

// Shared header/entry scan; arity is the number of element columns.
CochainFile read_cochain_generic(std::istream& in, const std::string& name, long arity) {
    Parser p{in, name};
    CochainFile out;
    std::string line;
    bool have_group = false, have_modulus = false;
    while (std::getline(in, line)) {
        ++p.lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "group") {
            std::string spec;
            if (!(ls >> spec)) p.fail(7, "expected group spec after 'group'");
            try {
                out.group = FiniteAbelianGroup::parse(spec);
            } catch (const input_error& e) {
                p.fail(7, e.what());
            }
            have_group = true;
        } else if (first == "modulus") {
            if (!(ls >> out.modulus) || out.modulus < 1) p.fail(9, "expected positive integer after 'modulus'");
            have_modulus = true;
        } else {
            if (!have_group || !have_modulus) p.fail(1, "entry before 'group'/'modulus' header");
            std::vector<GroupElement> tuple;
            size_t start = 0;
            for (long t = 0; t < arity; ++t) {
                size_t bar = first.find('|', start);
                bool last = (t == arity - 1);
                if (!last && bar == std::string::npos)
                    p.fail(1, "expected " + std::to_string(arity) + " '|'-separated elements");
                if (last && bar != std::string::npos) p.fail(1, "too many element columns");
                std::string tok = last ? first.substr(start) : first.substr(start, bar - start);
                tuple.push_back(p.parse_tuple(tok, static_cast<long>(start) + 1, out.group));
                start = bar + 1;
            }
            long e;
            if (!(ls >> e)) p.fail(static_cast<long>(first.size()) + 2, "expected integer exponent");
            std::string rest;
            if (ls >> rest) p.fail(static_cast<long>(line.find(rest)) + 1, "trailing content '" + rest + "'");
            tuple.shrink_to_fit();
            out.entries.emplace_back(std::move(tuple), mod(e, out.modulus));
        }
    }
    if (!have_group) throw input_error(name + ": missing 'group' header");
    if (!have_modulus) throw input_error(name + ": missing 'modulus' header");
    return out;
}

} // namespace

ThreeCochain read_three_cochain(std::istream& in, const std::string& name) {
    CochainFile f = read_cochain_generic(in, name, 3);
    ThreeCochain w(f.group, f.modulus);
    for (auto& [t, e] : f.entries)
        w.set_exp(f.group.index_of(t[0]), f.group.index_of(t[1]), f.group.index_of(t[2]), e);
    if (!w.is_normalized()) throw input_error(name + ": cochain is not normalized at the identity");
    return w;
}

ThreeCochain read_three_cochain_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open cocycle file '" + path + "'");
    return read_three_cochain(in, path);
}

TwoCochain read_two_cochain(std::istream& in, const std::string& name) {
    CochainFile f = read_cochain_generic(in, name, 2);
    TwoCochain h(f.group, f.modulus);
    for (auto& [t, e] : f.entries) h.set_exp(f.group.index_of(t[0]), f.group.index_of(t[1]), e);
    if (!h.is_normalized()) throw input_error(name + ": cochain is not normalized at the identity");
    return h;
}

TwoCochain read_two_cochain_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open cocycle file '" + path + "'");
    return read_two_cochain(in, path);
}

void write_three_cochain(std::ostream& out, const ThreeCochain& w) {
    const FiniteAbelianGroup& g = w.group();
    out << "group " << g.spec() << '\n';
    out << "modulus " << w.modulus() << '\n';
    long n = g.order();
    auto bare = [&](long idx) {
        std::string s = g.element_at(idx).label();
        return s.substr(1, s.size() - 2);
    };
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k)
                if (w.exp_at(i, j, k) != 0)
                    out << bare(i) << '|' << bare(j) << '|' << bare(k) << ' ' << w.exp_at(i, j, k) << '\n';
}

void write_three_cochain_file(const std::string& path, const ThreeCochain& w) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write cocycle file '" + path + "'");
    write_three_cochain(out, w);
}

} // namespace fsind
