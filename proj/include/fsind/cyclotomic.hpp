#pragma once

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fsind/errors.hpp"

namespace fsind {

using Rational = mpq_class;

/// An exact element of the cyclotomic field Q(zeta_N).
///
/// The value is sum coeffs[i] * zeta_N^i. Stored in canonical form: the
/// coefficient polynomial is reduced modulo the N-th cyclotomic polynomial
/// Phi_N, and N is the smallest conductor over which the value is
/// expressible. Two values are equal iff their canonical forms coincide,
/// so operator== is a plain component compare.
///
/// Values are immutable after construction and safe to share across threads.
class Cyclotomic {
public:
    /// Zero, at conductor 1.
    Cyclotomic() : n_(1), c_(1, Rational(0)) {}

    static Cyclotomic rational(const Rational& q);
    static Cyclotomic integer(long v) { return rational(Rational(v)); }

    /// zeta_N^k (k taken mod N). N = 0 is a domain error.
    static Cyclotomic root_of_unity(long k, long n);

    /// Construct from an explicit coefficient vector over zeta_n (any
    /// length; exponents are taken mod n). Canonicalized.
    static Cyclotomic from_coeffs(long n, std::vector<Rational> coeffs);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational as_rational() const; // throws not_an_integer if irrational
    long as_integer() const;      // throws not_an_integer

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    Cyclotomic conj() const;
    Cyclotomic pow(long e) const; // e >= 0

    bool operator==(const Cyclotomic& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Least m >= 1 with a^m = 1. Throws input_error if the value is not a
    /// root of unity.
    long multiplicative_order() const;

    /// The coefficient vector of this value lifted to conductor L (a
    /// multiple of the current conductor), Phi_L-reduced but with the
    /// conductor deliberately not re-minimized.
    std::vector<Rational> lifted_coeffs(long L) const;

    /// Double-precision complex approximation. Display only; never used
    /// for decisions.
    std::complex<double> approx() const;

    /// JSON per the wire schema: {"conductor":N,"coeffs":["a/b",...],"approx":[re,im]}.
    std::string to_json() const;

    /// Compact single-token form "N:c0,c1,..." used in TSV cells.
    std::string compact() const;
    static Cyclotomic parse_compact(const std::string& s);

private:
    long n_;
    std::vector<Rational> c_; // length n_, degree < phi(n_)

    Cyclotomic(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
    void canonicalize();       // Phi-reduce then minimize conductor
    void reduce_mod_phi();
    void minimize_conductor();
    bool fixed_by_galois(long j) const;
    void rebase(long d); // rewrite over Q(zeta_d); caller guarantees membership
};

/// Euler phi and the (cached) N-th cyclotomic polynomial.
long euler_phi(long n);
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

/// Exponent k with a = zeta_L^k, or -1 if a is no such power.
long root_exponent(const Cyclotomic& a, long L);

} // namespace fsind
