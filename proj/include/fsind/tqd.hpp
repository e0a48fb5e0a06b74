#pragma once

#include <memory>
#include <vector>

#include "fsind/cocycle.hpp"
#include "fsind/cyclotomic.hpp"
#include "fsind/group.hpp"

namespace fsind {

/// A subgroup of an abelian group presented by an independent generating
/// set: shape = Z_{m_1} x ... x Z_{m_r} with gens[i] of order m_i in the
/// parent, and elements[idx] = prod gens[i]^{a_i} where (a_i) is the
/// shape's element enumeration at idx. The trivial subgroup has shape Z_1.
struct SubgroupBasis {
    FiniteAbelianGroup shape{std::vector<long>{1}};
    std::vector<GroupElement> gens;     // parent coordinates, one per shape factor
    std::vector<GroupElement> elements; // parent coordinates, shape enumeration order

    long index_of(const GroupElement& x) const; // throws input_error if absent
    bool contains(const GroupElement& x) const;
};

/// Find an independent generating set for the subgroup consisting of
/// `members` (must be closed under the parent's operation and contain the
/// identity).
SubgroupBasis decompose_subgroup(const FiniteAbelianGroup& parent, std::vector<GroupElement> members);

/// A function f: H -> roots of unity with f(h)f(k) = f(hk) t(h,k) for a
/// fixed 2-cochain t; stored as exponents of zeta_modulus per element of H
/// (in H's enumeration order).
struct TwistedCharacter {
    long modulus = 1;
    std::vector<long> exps;

    Cyclotomic value_at(long idx) const { return Cyclotomic::root_of_unity(exps[idx], modulus); }
    bool operator==(const TwistedCharacter& o) const = default;
};

/// All f with f(h)f(k) = f(hk) zeta_M^{t(h,k)} on t's group. Values are
/// assigned on the coordinate generators (each an m_i-th root of the
/// telescoping product of t along the cyclic factor), extended by the
/// recurrence f(xy) = f(x)f(y)/t(x,y), and kept only if the full table
/// verifies. Returns exactly |H| characters, or none. The restriction of
/// t must be symmetric (input_error otherwise).
std::vector<TwistedCharacter> solve_twisted_characters(const TwoCochain& t);

/// A group-like element (g, f) of D^omega(G): f(h)f(k) = f(hk) gamma_g(h,k).
struct GroupLike {
    GroupElement g;
    TwistedCharacter f; // domain = the whole group G
};

/// A simple module of D^omega(G) for abelian G: a grading g, the radical
/// of beta_g, a theta_g-twisted character f of the radical, dimension
/// sqrt([G : rad]) and twist f(g).
struct CenterSimple {
    GroupElement g;
    SubgroupBasis rad;
    TwistedCharacter f; // domain = rad (rad.shape enumeration)
    long dim = 1;
    Cyclotomic twist;
};

enum class Genuineness { Genuine, NotGenuine };

/// The twisted quantum double D^omega(G) of a finite abelian group.
class TwistedDouble {
public:
    TwistedDouble(FiniteAbelianGroup group, ThreeCochain omega); // validates the cocycle

    const FiniteAbelianGroup& group() const { return group_; }
    const ThreeCochain& omega() const { return omega_; }

    /// theta_g(x,y) = omega(g,x,y) omega(x,y,g) / omega(x,g,y) and
    /// gamma_g(x,y) = omega(x,y,g) omega(g,x,y) / omega(x,g,y); for
    /// abelian G the two coincide. Exponents are mod omega's modulus.
    long theta_exp(long g, long x, long y) const;
    Cyclotomic theta(const GroupElement& g, const GroupElement& x, const GroupElement& y) const;
    Cyclotomic gamma(const GroupElement& g, const GroupElement& x, const GroupElement& y) const;

    /// True iff theta_g(x,y) = theta_g(y,x) everywhere, i.e. the algebra
    /// is commutative.
    bool is_commutative() const;

    /// Structure-constant axioms at every basis point: associativity of
    /// the product, multiplicativity of the coproduct, counit
    /// normalization, and quasi-coassociativity (each gamma_x a
    /// 2-cocycle).
    bool structure_checks() const;

    /// All group-likes, ordered by (g, f). Fibers may be empty when the
    /// double is not commutative.
    std::vector<GroupLike> grouplikes() const;

    /// (g,f)(g',f') = (gg', h -> f(h) f'(h) theta_h(g,g')).
    GroupLike grouplike_product(const GroupLike& u, const GroupLike& v) const;

    /// Simple modules, ordered by grading then by character exponents.
    std::vector<CenterSimple> center_simples() const;

    /// lcm of the twist orders over all simples; this equals the FS
    /// exponent of the underlying pointed category.
    long fs_exponent_center() const;

    /// nu-bar(V_a) = (N/|G|) * sum of dim^2 over twist-1 simples graded
    /// at a; exact integer (integrity_error otherwise).
    long total_indicator_via_center(const GroupElement& a) const;

    /// The group Gamma^omega of group-likes, presented on a product-of-
    /// cyclics shape with the projection (g,f) -> g per element, plus the
    /// inflation of omega^{-1} along that projection.
    struct GrouplikeGroup {
        FiniteAbelianGroup shape{std::vector<long>{1}};
        std::vector<GroupLike> members;       // shape enumeration order
        std::vector<GroupElement> projection; // image in G per member
        ThreeCochain omega_prime;
    };
    GrouplikeGroup grouplike_group() const; // requires is_commutative

    /// Genuine iff some total indicator of the pointed category on
    /// (Gamma^omega, omega') vanishes. Requires is_commutative
    /// (input_error otherwise).
    Genuineness is_genuine() const;

    /// The pair (omega', c) on Gamma^omega with c(u,v) = f_v(g_u); must
    /// pass the Eilenberg-MacLane equalities (integrity_error otherwise).
    EMCocycle em_on_grouplikes() const;

private:
    FiniteAbelianGroup group_;
    ThreeCochain omega_;
    std::vector<long> mul_; // composition table by element index
    mutable std::shared_ptr<const std::vector<CenterSimple>> simples_cache_;

    const std::vector<CenterSimple>& simples() const;

    struct unchecked_tag {};
    TwistedDouble(FiniteAbelianGroup group, ThreeCochain omega, unchecked_tag);

    long mul(long i, long j) const { return mul_[i * group_.order() + j]; }
    TwoCochain theta_table(long g) const;

    friend class PointedCategory;
};

} // namespace fsind
