#pragma once

#include <string>
#include <vector>

#include "fsind/cyclotomic.hpp"
#include "fsind/errors.hpp"

namespace fsind {

/// An element of a finite abelian group, as a tuple of residues.
struct GroupElement {
    std::vector<long> coords;

    bool operator==(const GroupElement& o) const { return coords == o.coords; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const { return coords < o.coords; }

    std::string label() const; // "(c1,c2,...)"
};

/// Z_{n_1} x ... x Z_{n_k}, given by an arbitrary modulus list (trivial
/// factors n_i = 1 permitted). Immutable after construction.
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<long> moduli);

    /// Parse a spec string "n1,n2,...,nk".
    static FiniteAbelianGroup parse(const std::string& spec);
    std::string spec() const;

    const std::vector<long>& moduli() const { return moduli_; }
    long order() const { return order_; }
    long exponent() const { return exponent_; }
    size_t rank() const { return moduli_.size(); }

    GroupElement identity() const;
    bool contains(const GroupElement& x) const;
    GroupElement compose(const GroupElement& x, const GroupElement& y) const;
    GroupElement inverse(const GroupElement& x) const;
    GroupElement power(const GroupElement& x, long k) const;
    long element_order(const GroupElement& x) const;

    /// All |G| elements in lexicographic coordinate order, identity first.
    std::vector<GroupElement> elements() const;

    /// Mixed-radix index of an element in the enumeration order (and back).
    long index_of(const GroupElement& x) const;
    GroupElement element_at(long idx) const;

    /// <chi, x> = zeta_L^(sum_i chi_i x_i L/n_i), L = exponent. The dual
    /// group is modeled on the same coordinate shape; bimultiplicative.
    Cyclotomic character_pairing(const GroupElement& chi, const GroupElement& x) const;

    bool operator==(const FiniteAbelianGroup& o) const { return moduli_ == o.moduli_; }

private:
    std::vector<long> moduli_;
    long order_;
    long exponent_;

    void check_shape(const GroupElement& x) const;
};

} // namespace fsind
