/*
 * laurent.hpp
 * -----------
 * Integer Laurent polynomials in one variable with the involution t -> 1/t,
 * cyclotomic polynomials, resultants of unit-normalized polynomial parts,
 * and the reduction of circle-symmetric elements to real polynomials in
 * x = (t + 1/t)/2.
 *
 * Coefficients are arbitrary-precision integers. A polynomial is a sparse
 * exponent -> coefficient map; zero coefficients are never stored, so the
 * zero polynomial is the empty map.
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rhoslice/arith.hpp"

namespace rhoslice {

class RealPoly;

class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Int& constant);
    explicit LaurentPoly(long constant) : LaurentPoly(Int(constant)) {}

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Int(1)); }
    // c * t^e
    static LaurentPoly monomial(long exponent, const Int& coeff);
    // the variable t
    static LaurentPoly var() { return monomial(1, Int(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    // true iff +-t^k
    bool is_unit() const;

    // Lowest/highest stored exponent; only valid on nonzero polynomials.
    long min_exp() const;
    long max_exp() const;
    // max_exp - min_exp for nonzero input, -1 for zero.
    long span() const;

    Int coeff(long exponent) const;
    const std::map<long, Int>& terms() const { return coeffs_; }
    void set_coeff(long exponent, const Int& value);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    bool operator==(const LaurentPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    LaurentPoly pow(unsigned long e) const;

    // The ring involution t -> 1/t: coefficient of t^k moves to t^-k.
    LaurentPoly involute() const;
    bool is_palindromic() const { return involute() == *this; }

    // Augmentation t -> 1: the coefficient sum.
    Int eval_at_one() const;
    // Evaluation at t = -1.
    Int eval_at_minus_one() const;
    // Substitution t -> t^a. For a = 0 this collapses to the coefficient sum.
    LaurentPoly substitute_power(long a) const;
    // t^shift * this
    LaurentPoly shifted(long shift) const;

    // Canonical representative within the unit class {+-t^k f}: nonnegative
    // exponents, nonzero constant term, positive leading coefficient.
    // Throws on zero input.
    LaurentPoly unit_normalized() const;

    // Exact division in Z[t,1/t]; nullopt if rhs does not divide this.
    std::optional<LaurentPoly> divided_exactly_by(const LaurentPoly& rhs) const;

    // Dense ascending coefficient list of the shift-normalized part together
    // with the shift, so that this = t^shift * poly(coeffs). Zero -> ({}, 0).
    std::pair<std::vector<Int>, long> dense_parts() const;

    std::string to_string(const std::string& var_name = "t") const;

  private:
    std::map<long, Int> coeffs_;
};

LaurentPoly operator*(const Int& scalar, const LaurentPoly& p);

// The m-th cyclotomic polynomial (m >= 1), by exact division of t^m - 1 by
// the product of the lower cyclotomic factors. Results are cached.
LaurentPoly cyclotomic_poly(unsigned long m);

// Resultant of the unit-normalized polynomial parts of f and g, as the
// Sylvester determinant with the f-block on top. Throws on zero input.
Int resultant(const LaurentPoly& f, const LaurentPoly& g);

// For palindromic d (so d is real on |t| = 1): the real polynomial P with
// P(cos theta) = d(e^{i theta}), via t^k + t^-k = 2 T_k(x). Throws
// std::invalid_argument("not real on circle") if d is not palindromic.
RealPoly chebyshev_reduce(const LaurentPoly& d);

struct CyclotomicFactor {
    unsigned long m = 0;
    unsigned long multiplicity = 0;
    bool operator==(const CyclotomicFactor&) const = default;
};

struct CyclotomicSplit {
    std::vector<CyclotomicFactor> factors;  // ascending m
    LaurentPoly remainder;                  // unit-normalized cofactor
};

// Removes every cyclotomic factor Phi_m with phi(m) <= deg f by repeated
// trial division. The remainder is the unit-normalized cofactor.
CyclotomicSplit cyclotomic_strip(const LaurentPoly& f);

// Canonical unit representative (see unit_normalized); the conventional
// normal form for Alexander polynomials here.
LaurentPoly alexander_normalize(const LaurentPoly& f);

// Determinant of a square row-major Laurent matrix (cofactor expansion;
// intended for the small presentation sizes used here).
LaurentPoly laurent_matrix_det(const std::vector<LaurentPoly>& row_major, std::size_t n);

}  // namespace rhoslice
