#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fsind/cyclotomic.hpp"
#include "fsind/group.hpp"

namespace fsind {

/// A normalized 3-cochain on a finite abelian group, with values the
/// roots of unity zeta_M^e. Stored as a dense exponent table over G^3.
class ThreeCochain {
public:
    ThreeCochain(FiniteAbelianGroup group, long modulus);

    static ThreeCochain trivial(const FiniteAbelianGroup& g) { return ThreeCochain(g, 1); }

    /// The generating 3-cocycle phi^a of H^3(Z_ell):
    /// phi(x^i, x^j, x^k) = q^(i(j+k-((j+k) mod ell))/ell) with q = zeta_ell.
    static ThreeCochain generating_cyclic(long ell, long a);

    /// Pullback along a surjective homomorphism pi: Gamma -> G given as a
    /// table indexed by Gamma's element enumeration.
    static ThreeCochain inflate(const ThreeCochain& w, const FiniteAbelianGroup& gamma,
                                const std::vector<GroupElement>& pi);

    const FiniteAbelianGroup& group() const { return group_; }
    long modulus() const { return modulus_; }

    long exp_at(long i, long j, long k) const;
    void set_exp(long i, long j, long k, long e);
    long exp_at(const GroupElement& x, const GroupElement& y, const GroupElement& z) const;
    Cyclotomic value(const GroupElement& x, const GroupElement& y, const GroupElement& z) const;

    bool is_normalized() const;
    bool is_cocycle() const;

    ThreeCochain product(const ThreeCochain& o) const; // exponentwise over joined modulus
    ThreeCochain inverse() const;
    ThreeCochain power(long a) const;
    ThreeCochain with_modulus(long m) const; // m a multiple of modulus()

    bool operator==(const ThreeCochain& o) const;

private:
    FiniteAbelianGroup group_;
    long modulus_;
    std::vector<long> table_; // |G|^3 exponents in [0, modulus)
};

/// A normalized 2-cochain, same representation over G^2.
class TwoCochain {
public:
    TwoCochain(FiniteAbelianGroup group, long modulus);

    static TwoCochain trivial(const FiniteAbelianGroup& g) { return TwoCochain(g, 1); }

    const FiniteAbelianGroup& group() const { return group_; }
    long modulus() const { return modulus_; }

    long exp_at(long i, long j) const;
    void set_exp(long i, long j, long e);
    long exp_at(const GroupElement& x, const GroupElement& y) const;
    Cyclotomic value(const GroupElement& x, const GroupElement& y) const;

    bool is_normalized() const;

    /// delta h (x,y,z) = h(y,z) h(x,yz) / (h(xy,z) h(x,y)).
    ThreeCochain coboundary3() const;

    /// c(x,y) = h(y,x)/h(x,y), the braiding naturally attached to
    /// coboundary3(h): the pair (delta h, skew(h)) always satisfies the
    /// Eilenberg-MacLane equalities.
    TwoCochain skew() const;

    /// b(x,y) = c(x,y) c(y,x).
    TwoCochain symmetrize() const;

    bool is_bicharacter() const;

    TwoCochain product(const TwoCochain& o) const;
    TwoCochain inverse() const;
    TwoCochain with_modulus(long m) const;

private:
    FiniteAbelianGroup group_;
    long modulus_;
    std::vector<long> table_;
};

/// A quadratic function t: G -> roots of unity, t(x^a) = t(x)^(a^2) with
/// bicharacter polarization b_t(x,y) = t(xy)/(t(x)t(y)).
struct QuadraticFunction {
    FiniteAbelianGroup group;
    std::vector<Cyclotomic> values; // indexed by element enumeration

    const Cyclotomic& at(const GroupElement& x) const { return values[group.index_of(x)]; }
    bool is_quadratic() const;
};

/// An Eilenberg-MacLane pair (omega, c) with moduli joined at construction.
class EMCocycle {
public:
    EMCocycle(ThreeCochain omega, TwoCochain c);

    const ThreeCochain& omega() const { return omega_; }
    const TwoCochain& c() const { return c_; }

    /// Both displayed Eilenberg-MacLane equalities, at every triple.
    bool check() const;

    /// t(x) = c(x,x). Requires check().
    QuadraticFunction trace() const;

private:
    ThreeCochain omega_;
    TwoCochain c_;
};

/// .cocyc file format: header lines `group n1,n2,...` and `modulus M`,
/// then entries `g|h|k e` (3-cochain) or `g|h e` (2-cochain); unlisted
/// tuples default to exponent 0; `#` starts a comment. Parse errors carry
/// a line:column diagnostic.
ThreeCochain read_three_cochain(std::istream& in, const std::string& name);
ThreeCochain read_three_cochain_file(const std::string& path);
TwoCochain read_two_cochain(std::istream& in, const std::string& name);
TwoCochain read_two_cochain_file(const std::string& path);
void write_three_cochain(std::ostream& out, const ThreeCochain& w);
void write_three_cochain_file(const std::string& path, const ThreeCochain& w);

} // namespace fsind
