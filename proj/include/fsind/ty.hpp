#pragma once

#include <string>
#include <vector>

#include "fsind/cyclotomic.hpp"
#include "fsind/errors.hpp"
#include "fsind/group.hpp"

namespace fsind {

/// Legendre symbol (a/p) for an odd prime p: 0 if p | a, +1 for nonzero
/// squares mod p, -1 otherwise.
int legendre(long a, long p);

/// A symmetric bilinear form on F_p^r given by its Gram matrix mod p.
struct BilinearForm {
    long p = 2;
    long r = 0;
    std::vector<std::vector<long>> gram;

    /// Rows separated by ';', entries by ',': "1,0;0,1".
    static BilinearForm parse(long p, const std::string& text);

    bool is_symmetric() const;
    long det_mod_p() const;
};

struct FormClass {
    bool nondegenerate = false;
    bool alternating = false;     // meaningful for p = 2
    int discriminant_class = 0;   // legendre(det, p), odd p only
    bool hyperbolic = false;      // odd p only
};

FormClass classify_form(const BilinearForm& b);

enum class FibrationVerdict { Fibration, NoFibration };

/// An integral Tambara-Yamagami category TY(F_p^{2l}, chi_B, tau) with
/// tau = sign_tau * p^{-l}. Simple objects are the elements of F_p^{2l}
/// together with one non-invertible object m of dimension p^l.
class TYCategory {
public:
    TYCategory(BilinearForm form, int sign_tau);

    const BilinearForm& form() const { return form_; }
    int sign_tau() const { return sign_; }
    long p() const { return form_.p; }
    long ell() const { return form_.r / 2; }
    const FiniteAbelianGroup& base_group() const { return group_; }
    const FormClass& form_class() const { return class_; }

    long dim_m() const;     // p^l
    long dim_total() const; // 2 p^{2l}

    /// nth indicator of m (closed form; zero for odd n).
    Cyclotomic indicator_m(long n) const;
    /// nth indicator of the invertible a: 1 if n*a = 0, else 0.
    Cyclotomic indicator_invertible(const GroupElement& a, long n) const;

    /// Closed-form FS exponent, cross-checked against a direct scan of the
    /// indicator values over all simples.
    long fs_exponent() const;

    /// Total indicators, closed form certified against the summation.
    long total_m() const;
    long total_invertible(const GroupElement& a) const;

    FibrationVerdict admits_fibration() const;

private:
    BilinearForm form_;
    int sign_;
    FiniteAbelianGroup group_;
    FormClass class_;
    int epsilon_ = 0; // legendre(-1,p)^l * legendre(det,p) * sign, odd p
    mutable long cached_exponent_ = 0;
};

} // namespace fsind
