#include "rhoslice/metabelian.hpp"

namespace rhoslice {

MetabelianGroupCtx::MetabelianGroupCtx(const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("metabelian context: zero relation");
    p_ = alexander_normalize(p);
    const long d = p_.span();
    if (d <= 0) throw std::invalid_argument("metabelian context: constant relation");
    if (abs_int(p_.coeff(0)) != 1 || abs_int(p_.coeff(d)) != 1) {
        throw std::invalid_argument(
            "metabelian context: relation needs unit extreme coefficients "
            "(the coefficient module is not a finite-rank free abelian group otherwise)");
    }
    degree_ = static_cast<unsigned long>(d);
    is_alexander_ = abs_int(p_.eval_at_one()) == 1;

    // Companion matrix of t acting on 1, t, ..., t^(d-1).
    companion_ = IntMatrix(degree_, degree_);
    for (unsigned long i = 0; i + 1 < degree_; ++i) companion_.at(i + 1, i) = 1;
    // t * t^(d-1) = t^d = -(c_0 + ... + c_{d-1} t^{d-1}) / c_d, c_d = +-1.
    const Int lead = p_.coeff(d);
    for (unsigned long i = 0; i < degree_; ++i) {
        companion_.at(i, degree_ - 1) = -p_.coeff(static_cast<long>(i)) * lead;
    }
    companion_inv_ = unimodular_inverse(companion_);
}

IntMatrix MetabelianGroupCtx::companion_power(long n) const {
    IntMatrix result = IntMatrix::identity(degree_);
    const IntMatrix& base = n >= 0 ? companion_ : companion_inv_;
    long e = n >= 0 ? n : -n;
    IntMatrix b = base;
    while (e > 0) {
        if (e & 1L) result = result * b;
        b = b * b;
        e >>= 1L;
    }
    return result;
}

MetabelianElement mg_identity(const MetabelianGroupCtx& ctx) {
    return MetabelianElement{0, std::vector<Int>(ctx.degree(), Int(0))};
}

MetabelianElement mg_mul(const MetabelianGroupCtx& ctx, const MetabelianElement& a,
                         const MetabelianElement& b) {
    if (a.v.size() != ctx.degree() || b.v.size() != ctx.degree()) {
        throw std::invalid_argument("mg_mul: wrong coefficient rank");
    }
    MetabelianElement out;
    out.n = a.n + b.n;
    out.v = ctx.companion_power(a.n).apply(b.v);
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += a.v[i];
    return out;
}

MetabelianElement mg_inv(const MetabelianGroupCtx& ctx, const MetabelianElement& a) {
    MetabelianElement out;
    out.n = -a.n;
    out.v = ctx.companion_power(-a.n).apply(a.v);
    for (Int& x : out.v) x = -x;
    return out;
}

bool is_alexander(const LaurentPoly& p) {
    if (p.is_zero()) return false;
    return abs_int(p.eval_at_one()) == 1;
}

NormalGenerationWitness normal_generation_witness(const MetabelianGroupCtx& ctx,
                                                  const MetabelianElement& target) {
    if (!ctx.is_alexander()) {
        throw std::invalid_argument("normal generation requires |p(1)| = 1 (t - 1 invertible)");
    }
    if (target.v.size() != ctx.degree()) {
        throw std::invalid_argument("normal_generation_witness: wrong coefficient rank");
    }
    // Solve (C - I) h = v'; det(C - I) = +-p(1) = +-1 makes this integral.
    const IntMatrix c_minus_i = ctx.companion() - IntMatrix::identity(ctx.degree());
    const auto h = solve_integer(c_minus_i, target.v);
    if (!h) throw std::logic_error("normal_generation_witness: (C - I) h = v' had no solution");

    NormalGenerationWitness w;
    w.conjugator = *h;
    std::vector<Int> minus_h = *h;
    for (Int& x : minus_h) x = -x;
    const std::vector<Int> zero(ctx.degree(), Int(0));
    w.word = {
        MetabelianElement{0, minus_h},
        MetabelianElement{1, zero},
        MetabelianElement{0, *h},
        MetabelianElement{target.n - 1, zero},
    };
    return w;
}

QuotientOrder order_in_quotient(const MetabelianGroupCtx& ctx, const std::vector<Int>& h,
                                CoefficientField field, unsigned long p) {
    if (h.size() != ctx.degree()) {
        throw std::invalid_argument("order_in_quotient: wrong coefficient rank");
    }
    bool zero = true;
    if (field == CoefficientField::rationals) {
        for (const Int& x : h) {
            if (x != 0) zero = false;
        }
        if (zero) return QuotientOrder{false, 1};
        return QuotientOrder{true, 0};
    }
    if (!is_prime(p)) throw std::invalid_argument("order_in_quotient: p must be prime");
    for (const Int& x : h) {
        if (x % Int(p) != 0) zero = false;
    }
    if (zero) return QuotientOrder{false, 1};
    return QuotientOrder{false, p};
}

}  // namespace rhoslice
