/*
 * covers.hpp
 * ----------
 * Orders of the r-fold branched-cover homology groups presented by a square
 * matrix over Z[t,1/t]: the resultant route (det A against t^r - 1) and the
 * independent block-circulant integer determinant, plus the cyclotomic
 * vanishing criterion and the inapplicability sweep built on them.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rhoslice/arith.hpp"
#include "rhoslice/laurent.hpp"

namespace rhoslice {

struct AlexanderPresentation {
    std::size_t size = 0;
    std::vector<LaurentPoly> entries;  // row-major, size x size

    const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
    LaurentPoly determinant() const;
};

struct CoverOrderResult {
    unsigned long r = 1;
    std::optional<Int> order;  // nullopt = infinite; >= 1 when finite

    bool infinite() const { return !order.has_value(); }
};

// |Res(det A, t^r - 1)|, with 0 reported as infinite order.
CoverOrderResult fox_order(const AlexanderPresentation& a, unsigned long r);

// The same order as the absolute determinant of the rk x rk integer matrix
// assembled from the coefficient blocks of A(t) against the cyclic shift.
// Throws std::invalid_argument when r * size exceeds `bound`.
CoverOrderResult block_circulant_order(const AlexanderPresentation& a, unsigned long r,
                                       unsigned long bound = 200);

struct LivingstonRow {
    unsigned long r = 1;
    bool prime_power = true;  // false rows are outside the criterion
    CoverOrderResult order;
    bool vanishes = false;  // order == 1
};

struct LivingstonReport {
    CyclotomicSplit split;
    bool remainder_is_unit = false;
    // Every cyclotomic factor has index with >= 3 distinct primes.
    bool all_factors_three_primes = false;
    bool criterion_applies = false;
    std::vector<LivingstonRow> rows;
};

// Checks whether delta is a product of cyclotomics Phi_m with m divisible by
// at least three distinct primes, and cross-checks the stated vanishing on
// the requested covers (non-prime-power entries are flagged, not skipped).
LivingstonReport livingston_check(const LaurentPoly& delta,
                                  const std::vector<unsigned long>& covers);

struct RubermanReport {
    unsigned long r_max = 1;
    std::vector<LivingstonRow> rows;        // one per prime power r <= r_max
    std::vector<unsigned long> failing_rs;  // covers with order != 1
    bool inapplicable = false;              // all orders 1
};

// For every prime power r <= r_max, asserts first branched-cover homology
// of order 1; on success there is no finite cyclic representation to feed a
// Casson-Gordon-type doubly slice obstruction.
RubermanReport ruberman_inapplicability(const LaurentPoly& delta, unsigned long r_max);

std::vector<unsigned long> prime_powers_up_to(unsigned long r_max);

}  // namespace rhoslice
