/*
 * dyadic.hpp
 * ----------
 * Fixed-point interval arithmetic over dyadic rationals: the enclosure
 * backend for the certified-sign ladder and for arc angles in numeric mode.
 * An interval at precision p is [lo, hi] * 2^-p with integer endpoints.
 */
#pragma once

#include "rhoslice/arith.hpp"
#include "rhoslice/real_poly.hpp"

namespace rhoslice {

struct DyadicInterval {
    Int lo;
    Int hi;
    long prec = 0;  // endpoints are multiples of 2^-prec

    static DyadicInterval from_rational(const Rat& x, long prec);
    static DyadicInterval exact_zero(long prec) { return {Int(0), Int(0), prec}; }

    Rat lower() const;
    Rat upper() const;
    Rat width() const;

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    // -1 / +1 when the interval is strictly one-signed, 0 when undecided.
    int definite_sign() const;

    DyadicInterval operator+(const DyadicInterval& rhs) const;
    DyadicInterval operator-(const DyadicInterval& rhs) const;
    DyadicInterval operator*(const DyadicInterval& rhs) const;
    DyadicInterval operator-() const;
    DyadicInterval scaled(const Rat& c) const;
};

// Enclosure of pi at 2^-prec resolution (a few guard units wide).
DyadicInterval pi_interval(long prec);

// Enclosure of cos(2 pi q) for rational q.
DyadicInterval cos_two_pi(const Rat& q, long prec);

// theta / pi for theta = arccos of the algebraic number in `root`
// (abscissa in [-1, 1]), enclosed to within 2^-prec. Refines a copy of the
// root interval as needed. Requires that the abscissa not be the cosine of
// a dyadic multiple of pi unless it is exactly rational with |x| in
// {0, 1/2, 1} (those cases are returned exactly).
DyadicInterval arccos_over_pi(const IsolatedRoot& root, long prec);

}  // namespace rhoslice
