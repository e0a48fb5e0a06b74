#pragma once

#include "fsind/cocycle.hpp"
#include "fsind/cyclotomic.hpp"
#include "fsind/group.hpp"

namespace fsind {

enum class CoboundaryVerdict { Coboundary, NotCoboundary };

/// The pointed fusion category Vec_G^omega = Rep(H(G,omega)) for abelian
/// G: one invertible simple V_x per x in G, all of dimension 1.
class PointedCategory {
public:
    PointedCategory(FiniteAbelianGroup group, ThreeCochain omega); // validates the cocycle

    const FiniteAbelianGroup& group() const { return group_; }
    const ThreeCochain& omega() const { return omega_; }

    /// nu_n(V_x) = delta_{x^n,e} * prod_{r=1}^{n-1} omega(x, x^r, x).
    Cyclotomic indicator(const GroupElement& x, long n) const;

    /// FS exponent: lcm of the center twist orders, cross-checked against
    /// the least n with indicator(x,n) = 1 for all x (integrity_error on
    /// mismatch).
    long fs_exponent() const;

    /// Sum of nu_1..nu_N for V_x; certified to be a non-negative integer
    /// with N | |G| * total (integrity_error otherwise).
    long total_indicator(const GroupElement& x) const;

    /// Coboundary iff every total indicator is positive; requires (omega,
    /// c) to satisfy the Eilenberg-MacLane equalities (input_error
    /// otherwise).
    CoboundaryVerdict positivity_coboundary_test(const TwoCochain& c) const;

private:
    FiniteAbelianGroup group_;
    ThreeCochain omega_;
    mutable long cached_exponent_ = 0;

    struct unchecked_tag {};
    PointedCategory(FiniteAbelianGroup group, ThreeCochain omega, unchecked_tag);

    // indicator as (is_zero, exponent of zeta_M)
    std::pair<bool, long> indicator_exp(long x_idx, long n) const;

    friend class TwistedDouble;
};

} // namespace fsind
