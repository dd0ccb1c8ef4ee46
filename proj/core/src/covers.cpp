#include "rhoslice/covers.hpp"

#include <algorithm>

#include "rhoslice/int_matrix.hpp"

namespace rhoslice {

LaurentPoly AlexanderPresentation::determinant() const {
    if (entries.size() != size * size) {
        throw std::invalid_argument("presentation entries do not match size");
    }
    return laurent_matrix_det(entries, size);
}

CoverOrderResult fox_order(const AlexanderPresentation& a, unsigned long r) {
    if (r == 0) throw std::invalid_argument("fox_order: r must be positive");
    const LaurentPoly det = a.determinant();
    if (det.is_zero()) return CoverOrderResult{r, std::nullopt};
    const LaurentPoly tr_minus_1 =
        LaurentPoly::monomial(static_cast<long>(r), Int(1)) - LaurentPoly::one();
    const Int res = resultant(det.unit_normalized(), tr_minus_1);
    if (res == 0) return CoverOrderResult{r, std::nullopt};
    return CoverOrderResult{r, abs_int(res)};
}

CoverOrderResult block_circulant_order(const AlexanderPresentation& a, unsigned long r,
                                       unsigned long bound) {
    if (r == 0) throw std::invalid_argument("block_circulant_order: r must be positive");
    const std::size_t k = a.size;
    if (r * k > bound) throw std::invalid_argument("block_circulant_order: size bound exceeded");
    if (a.entries.size() != k * k) {
        throw std::invalid_argument("presentation entries do not match size");
    }
    // M = sum_i (shift^i) (x) A_i over the coefficient blocks A(t) = sum A_i t^i:
    // the block at (block-row (b + i) mod r, block-col b) accumulates A_i.
    IntMatrix m(r * k, r * k);
    for (std::size_t row = 0; row < k; ++row) {
        for (std::size_t col = 0; col < k; ++col) {
            for (const auto& [e, c] : a.at(row, col).terms()) {
                const long shift = ((e % static_cast<long>(r)) + static_cast<long>(r)) %
                                   static_cast<long>(r);
                for (unsigned long b = 0; b < r; ++b) {
                    const unsigned long dest = (b + static_cast<unsigned long>(shift)) % r;
                    m.at(dest * k + row, b * k + col) += c;
                }
            }
        }
    }
    const Int d = det_bareiss(m);
    if (d == 0) return CoverOrderResult{r, std::nullopt};
    return CoverOrderResult{r, abs_int(d)};
}

std::vector<unsigned long> prime_powers_up_to(unsigned long r_max) {
    std::vector<unsigned long> out;
    for (unsigned long r = 2; r <= r_max; ++r) {
        if (is_prime_power(r)) out.push_back(r);
    }
    return out;
}

LivingstonReport livingston_check(const LaurentPoly& delta,
                                  const std::vector<unsigned long>& covers) {
    LivingstonReport report;
    report.split = cyclotomic_strip(delta);
    report.remainder_is_unit = report.split.remainder.is_one();
    // Vacuously true for a trivial polynomial: "every factor" over none.
    report.all_factors_three_primes = true;
    for (const auto& f : report.split.factors) {
        if (prime_divisors(f.m).size() < 3) report.all_factors_three_primes = false;
    }
    report.criterion_applies = report.remainder_is_unit && report.all_factors_three_primes;

    AlexanderPresentation pres{1, {delta}};
    for (unsigned long r : covers) {
        LivingstonRow row;
        row.r = r;
        row.prime_power = is_prime_power(r);
        row.order = fox_order(pres, r);
        row.vanishes = !row.order.infinite() && *row.order.order == 1;
        report.rows.push_back(std::move(row));
    }
    return report;
}

RubermanReport ruberman_inapplicability(const LaurentPoly& delta, unsigned long r_max) {
    RubermanReport report;
    report.r_max = r_max;
    AlexanderPresentation pres{1, {delta}};
    for (unsigned long r : prime_powers_up_to(r_max)) {
        LivingstonRow row;
        row.r = r;
        row.prime_power = true;
        row.order = fox_order(pres, r);
        row.vanishes = !row.order.infinite() && *row.order.order == 1;
        if (!row.vanishes) report.failing_rs.push_back(r);
        report.rows.push_back(std::move(row));
    }
    report.inapplicable = report.failing_rs.empty();
    return report;
}

}  // namespace rhoslice
