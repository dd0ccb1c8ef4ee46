/*
 * real_poly.hpp
 * -------------
 * Dense univariate polynomials with rational coefficients, plus Sturm-chain
 * root isolation over rational intervals. This is the certified-real layer
 * under the signature function: breakpoints of signatures on the circle are
 * isolated here and only ever refined, never floated.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rhoslice/arith.hpp"

namespace rhoslice {

class RealPoly {
  public:
    RealPoly() = default;
    explicit RealPoly(std::vector<Rat> ascending_coeffs);
    static RealPoly zero() { return RealPoly(); }
    static RealPoly constant(const Rat& c);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
    Rat leading() const;

    Rat eval(const Rat& x) const;

    RealPoly operator-() const;
    RealPoly operator+(const RealPoly& rhs) const;
    RealPoly operator-(const RealPoly& rhs) const;
    RealPoly operator*(const RealPoly& rhs) const;
    RealPoly operator*(const Rat& scalar) const;
    bool operator==(const RealPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

    RealPoly derivative() const;

    // Euclidean division by a nonzero divisor: returns {quotient, remainder}.
    std::pair<RealPoly, RealPoly> divmod(const RealPoly& divisor) const;

    // Monic gcd (zero polynomial if both inputs are zero).
    static RealPoly gcd(const RealPoly& a, const RealPoly& b);

    // this / gcd(this, this'): same roots, all simple.
    RealPoly squarefree_part() const;

    // Monic scalar normalization (unchanged if zero).
    RealPoly monic() const;

    std::string to_string(const std::string& var_name = "x") const;

  private:
    void trim();
    std::vector<Rat> coeffs_;  // ascending, trailing zeros trimmed
};

// A real algebraic number: the unique root of `poly` (squarefree) inside
// [lo, hi]. Either the endpoints straddle a sign change, or lo == hi and the
// root is that exact rational. `multiplicity` refers back to the polynomial
// the root was isolated from.
struct IsolatedRoot {
    RealPoly poly;
    Rat lo;
    Rat hi;
    unsigned long multiplicity = 1;

    bool is_exact() const { return lo == hi; }
    Rat midpoint() const { return (lo + hi) / 2; }
    // Halves the interval width (no-op on exact roots), preserving the
    // sign-change invariant.
    void refine();
    void refine_below_width(const Rat& width);
};

// Complete, pairwise-disjoint isolation of the real roots of p in [lo, hi].
// Multiplicities come from Yun's squarefree decomposition. Throws on the
// zero polynomial or when lo >= hi.
std::vector<IsolatedRoot> sturm_isolate(const RealPoly& p, const Rat& lo, const Rat& hi);

// Number of distinct real roots of p in (lo, hi].
unsigned long sturm_count(const RealPoly& p, const Rat& lo, const Rat& hi);

}  // namespace rhoslice
