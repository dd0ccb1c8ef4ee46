/*
 * metabelian.hpp
 * --------------
 * Exact arithmetic in the semidirect products Z |x A for A = Z[t,1/t]/p(t)
 * with unit extreme coefficients, so that A is a free abelian group of rank
 * deg p and t acts by the (unimodular) companion matrix. The multiplication
 * convention is (n1, v1)(n2, v2) = (n1 + n2, v1 + C^n1 v2); it is the one
 * under which (0,-h)(1,0)(0,h) = (1, (t-1)h).
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rhoslice/arith.hpp"
#include "rhoslice/int_matrix.hpp"
#include "rhoslice/laurent.hpp"

namespace rhoslice {

class MetabelianGroupCtx {
  public:
    // Throws std::invalid_argument unless the normalized p has unit leading
    // and constant coefficients (otherwise A is not Z-free of finite rank).
    explicit MetabelianGroupCtx(const LaurentPoly& p);

    const LaurentPoly& relation() const { return p_; }
    unsigned long degree() const { return degree_; }
    // Companion action of t on A = Z^degree; determinant +-1.
    const IntMatrix& companion() const { return companion_; }
    const IntMatrix& companion_inverse() const { return companion_inv_; }
    // |p(1)| = 1, i.e. t - 1 acts invertibly on A.
    bool is_alexander() const { return is_alexander_; }

    IntMatrix companion_power(long n) const;

  private:
    LaurentPoly p_;
    unsigned long degree_ = 0;
    IntMatrix companion_;
    IntMatrix companion_inv_;
    bool is_alexander_ = false;
};

struct MetabelianElement {
    long n = 0;
    std::vector<Int> v;  // element of A in the 1, t, ..., t^(d-1) basis

    bool operator==(const MetabelianElement& rhs) const { return n == rhs.n && v == rhs.v; }
};

MetabelianElement mg_identity(const MetabelianGroupCtx& ctx);
MetabelianElement mg_mul(const MetabelianGroupCtx& ctx, const MetabelianElement& a,
                         const MetabelianElement& b);
MetabelianElement mg_inv(const MetabelianGroupCtx& ctx, const MetabelianElement& a);

// |p(1)| == 1: multiplication by t - 1 is an automorphism of Z[t,1/t]/p.
bool is_alexander(const LaurentPoly& p);

// The witness that (n, v') is a product of conjugates of (1, 0): the unique
// h with (t - 1) h = v' and the four-letter word
//   (0, -h) (1, 0) (0, h) (n - 1, 0)
// which multiplies out to (n, v'). Requires ctx.is_alexander().
struct NormalGenerationWitness {
    std::vector<Int> conjugator;          // h
    std::vector<MetabelianElement> word;  // evaluates to the target
};
NormalGenerationWitness normal_generation_witness(const MetabelianGroupCtx& ctx,
                                                  const MetabelianElement& target);

enum class CoefficientField { rationals, prime_field };

struct QuotientOrder {
    bool infinite = false;
    unsigned long finite_order = 1;  // meaningful when !infinite
};

// Order of (0, h) after changing coefficients: over Q, infinite unless
// h = 0; over F_p, p unless h reduces to 0 mod p.
QuotientOrder order_in_quotient(const MetabelianGroupCtx& ctx, const std::vector<Int>& h,
                                CoefficientField field, unsigned long p = 0);

}  // namespace rhoslice
