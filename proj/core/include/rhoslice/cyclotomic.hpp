/*
 * cyclotomic.hpp
 * --------------
 * Exact arithmetic in the cyclotomic field Q(zeta_k), elements stored in the
 * power basis of Q[x]/Phi_k(x). Evaluation of group-ring matrices at roots
 * of unity lands here.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rhoslice/arith.hpp"
#include "rhoslice/dyadic.hpp"

namespace rhoslice {

class CyclotomicElement {
  public:
    // Zero in Q(zeta_k).
    explicit CyclotomicElement(unsigned long order);
    static CyclotomicElement from_rational(unsigned long order, const Rat& value);
    // zeta_k^power
    static CyclotomicElement root_power(unsigned long order, long power);

    unsigned long order() const { return order_; }
    // phi(order) coordinates in the power basis, ascending degree.
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    // Only valid when is_rational().
    Rat rational_value() const;

    CyclotomicElement operator+(const CyclotomicElement& rhs) const;
    CyclotomicElement operator-(const CyclotomicElement& rhs) const;
    CyclotomicElement operator*(const CyclotomicElement& rhs) const;
    CyclotomicElement operator-() const;
    CyclotomicElement scaled(const Rat& c) const;
    bool operator==(const CyclotomicElement& rhs) const;

    // Complex conjugation, zeta -> zeta^(k-1).
    CyclotomicElement conj() const;
    bool is_real() const;

    // Enclosure of the value as a real number. Precondition: is_real().
    DyadicInterval real_enclosure(long prec) const;

    std::string to_string() const;

  private:
    void check_same_order(const CyclotomicElement& rhs) const;
    unsigned long order_;
    std::vector<Rat> coords_;
};

}  // namespace rhoslice
