/*
 * quad_ext.hpp
 * ------------
 * Numbers a + b*sqrt(rad) with rational a, b and a signed rational radicand.
 * Circle points at a rational abscissa x evaluate into rad = x^2 - 1 < 0
 * (so sqrt(rad) = i*sqrt(1 - x^2)); positive radicands model the real
 * quadratic case and get exact sign determination by rationalization.
 * Perfect-square radicands collapse to plain rationals on construction.
 */
#pragma once

#include <string>

#include "rhoslice/arith.hpp"

namespace rhoslice {

class QuadExtNumber {
  public:
    QuadExtNumber() : a_(0), b_(0), rad_(0) {}
    QuadExtNumber(Rat a, Rat b, Rat rad);
    static QuadExtNumber from_rational(const Rat& a) { return QuadExtNumber(a, Rat(0), Rat(0)); }

    const Rat& rational_part() const { return a_; }
    const Rat& radical_coeff() const { return b_; }
    const Rat& radicand() const { return rad_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadExtNumber operator+(const QuadExtNumber& rhs) const;
    QuadExtNumber operator-(const QuadExtNumber& rhs) const;
    QuadExtNumber operator*(const QuadExtNumber& rhs) const;
    QuadExtNumber operator-() const;
    QuadExtNumber scaled(const Rat& c) const;
    bool operator==(const QuadExtNumber& rhs) const;

    // Complex conjugation: flips b when the radicand is negative, identity
    // otherwise (the number is already real).
    QuadExtNumber conj() const;
    bool is_real() const { return b_ == 0 || rad_ > 0; }

    // Exact sign of a real value (rationalization). Throws
    // std::invalid_argument("not real") on non-real input.
    int exact_sign() const;

    std::string to_string() const;

  private:
    void check_compatible(const QuadExtNumber& rhs) const;
    Rat a_;
    Rat b_;
    Rat rad_;
};

}  // namespace rhoslice
