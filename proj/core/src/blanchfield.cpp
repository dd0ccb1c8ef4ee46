#include "rhoslice/blanchfield.hpp"

#include <algorithm>
#include <set>

#include "rhoslice/metabelian.hpp"

namespace rhoslice {

QZmodZZ::QZmodZZ(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::invalid_argument("QZmodZZ: zero denominator");
}

QZmodZZ QZmodZZ::operator+(const QZmodZZ& rhs) const {
    if (den == rhs.den) return QZmodZZ(num + rhs.num, den);
    return QZmodZZ(num * rhs.den + rhs.num * den, den * rhs.den);
}

QZmodZZ QZmodZZ::operator-() const { return QZmodZZ(-num, den); }

QZmodZZ QZmodZZ::scaled(const LaurentPoly& p) const { return QZmodZZ(num * p, den); }

QZmodZZ QZmodZZ::conj() const { return QZmodZZ(num.involute(), den.involute()); }

bool qz_is_zero(const QZmodZZ& v) {
    if (v.den.is_zero()) throw std::invalid_argument("qz_is_zero: zero denominator");
    if (v.num.is_zero()) return true;
    return v.num.divided_exactly_by(v.den).has_value();
}

namespace {

bool qz_equal(const QZmodZZ& a, const QZmodZZ& b) { return qz_is_zero(a + (-b)); }

}  // namespace

BlanchfieldForm::BlanchfieldForm(std::vector<LaurentPoly> summands,
                                 std::vector<QZmodZZ> gram_row_major)
    : summands_(std::move(summands)), gram_(std::move(gram_row_major)) {
    const std::size_t n = summands_.size();
    if (n == 0) throw std::invalid_argument("BlanchfieldForm: no summands");
    if (gram_.size() != n * n) throw std::invalid_argument("BlanchfieldForm: gram shape mismatch");

    IntMatrix blocks(0, 0);
    for (auto& p : summands_) {
        p = alexander_normalize(p);
        MetabelianGroupCtx ctx(p);  // validates unit extreme coefficients
        if (!ctx.is_alexander()) {
            throw std::invalid_argument("BlanchfieldForm: summand with |p(1)| != 1");
        }
        offsets_.push_back(lattice_rank_);
        degrees_.push_back(ctx.degree());
        lattice_rank_ += ctx.degree();
        // Grow the block-diagonal t-action.
        IntMatrix bigger(lattice_rank_, lattice_rank_);
        for (std::size_t i = 0; i < blocks.rows(); ++i) {
            for (std::size_t j = 0; j < blocks.cols(); ++j) bigger.at(i, j) = blocks.at(i, j);
        }
        const IntMatrix& c = ctx.companion();
        const std::size_t base = lattice_rank_ - ctx.degree();
        for (std::size_t i = 0; i < c.rows(); ++i) {
            for (std::size_t j = 0; j < c.cols(); ++j) bigger.at(base + i, base + j) = c.at(i, j);
        }
        blocks = std::move(bigger);
    }
    t_action_ = std::move(blocks);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!qz_equal(gram(j, i), gram(i, j).conj())) {
                throw std::invalid_argument("BlanchfieldForm: gram is not Hermitian");
            }
            if (!qz_is_zero(gram(i, j).scaled(summands_[i].involute())) ||
                !qz_is_zero(gram(i, j).scaled(summands_[j]))) {
                throw std::invalid_argument(
                    "BlanchfieldForm: gram value not annihilated by its summand relations");
            }
        }
    }
}

BlanchfieldForm BlanchfieldForm::hyperbolic(const LaurentPoly& p) {
    const LaurentPoly pn = alexander_normalize(p);
    const LaurentPoly one = LaurentPoly::one();
    std::vector<QZmodZZ> gram = {
        QZmodZZ(LaurentPoly::zero(), pn), QZmodZZ(one, pn),
        QZmodZZ(one, pn.involute()), QZmodZZ(LaurentPoly::zero(), pn)};
    return BlanchfieldForm({pn, pn}, std::move(gram));
}

BlanchfieldForm BlanchfieldForm::from_diagonal_presentation(const std::vector<LaurentPoly>& diag) {
    // Diagonal entries of a Hermitian presentation are involution-fixed;
    // that is exactly what makes the pairing values 1/p Hermitian.
    std::vector<LaurentPoly> summands;
    std::vector<QZmodZZ> gram(diag.size() * diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (!diag[i].is_palindromic()) {
            throw std::invalid_argument(
                "from_diagonal_presentation: diagonal entries must be involution-fixed");
        }
        summands.push_back(alexander_normalize(diag[i]));
        for (std::size_t j = 0; j < diag.size(); ++j) {
            gram[i * diag.size() + j] =
                i == j ? QZmodZZ(LaurentPoly::one(), diag[i]) : QZmodZZ(LaurentPoly::zero(), diag[i]);
        }
    }
    return BlanchfieldForm(std::move(summands), std::move(gram));
}

BlanchfieldForm BlanchfieldForm::from_hyperbolic_presentation(const LaurentPoly& p) {
    // Gram = inverse of [[0, p], [conj p, 0]].
    const LaurentPoly pn = alexander_normalize(p);
    const LaurentPoly one = LaurentPoly::one();
    std::vector<QZmodZZ> gram = {
        QZmodZZ(LaurentPoly::zero(), pn), QZmodZZ(one, pn.involute()),
        QZmodZZ(one, pn), QZmodZZ(LaurentPoly::zero(), pn)};
    return BlanchfieldForm({pn, pn}, std::move(gram));
}

std::vector<LaurentPoly> BlanchfieldForm::coordinate_polys(const std::vector<Int>& x) const {
    if (x.size() != lattice_rank_) throw std::invalid_argument("coordinate_polys: wrong rank");
    std::vector<LaurentPoly> out(summands_.size());
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        LaurentPoly poly;
        for (unsigned long s = 0; s < degrees_[i]; ++s) {
            poly.set_coeff(static_cast<long>(s), x[offsets_[i] + s]);
        }
        out[i] = poly;
    }
    return out;
}

QZmodZZ pairing_eval(const BlanchfieldForm& form, const std::vector<Int>& x,
                     const std::vector<Int>& y) {
    const auto xs = form.coordinate_polys(x);
    const auto ys = form.coordinate_polys(y);
    QZmodZZ acc(LaurentPoly::zero(), LaurentPoly::one());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].is_zero()) continue;
        for (std::size_t j = 0; j < ys.size(); ++j) {
            if (ys[j].is_zero()) continue;
            acc = acc + form.gram(i, j).scaled(xs[i].involute() * ys[j]);
        }
    }
    return acc;
}

Submodule Submodule::from_generators(const BlanchfieldForm& form, const IntMatrix& generators) {
    if (generators.rows() != form.lattice_rank()) {
        throw std::invalid_argument("Submodule: generator dimension mismatch");
    }
    Lattice l = Lattice::from_generators(generators);
    // Close under the (unimodular) t-action; the ascending chain stabilizes.
    while (true) {
        const Lattice next = l.sum(Lattice::from_generators(form.t_action() * l.basis));
        if (next == l) break;
        l = next;
    }
    return Submodule{generators, std::move(l)};
}

Submodule Submodule::span_of_summand_generator(const BlanchfieldForm& form, std::size_t i) {
    if (i >= form.summand_count()) throw std::invalid_argument("no such summand");
    std::size_t base = 0;
    for (std::size_t s = 0; s < i; ++s) {
        base += static_cast<std::size_t>(form.summands()[s].span());
    }
    std::vector<Int> e(form.lattice_rank(), Int(0));
    e[base] = 1;
    IntMatrix gen(form.lattice_rank(), 1);
    gen.set_column(0, e);
    return from_generators(form, gen);
}

namespace {

void require_t_invariant(const BlanchfieldForm& form, const Submodule& l) {
    const Lattice image = Lattice::from_generators(form.t_action() * l.closure.basis);
    if (!l.closure.contains_lattice(image)) {
        throw std::invalid_argument("submodule is not t-invariant");
    }
}

std::vector<Int> basis_column(const IntMatrix& m, std::size_t j) {
    std::vector<Int> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
    return v;
}

}  // namespace

Lattice orthogonal_submodule(const BlanchfieldForm& form, const Submodule& l) {
    const std::size_t dim = form.lattice_rank();
    if (l.closure.rank() == 0) return Lattice::full(dim);

    // One congruence block per closure generator g: the window of Laurent
    // coefficients of sum_s x_s * Bl(e_s, g) must land in Q * Z[t,1/t].
    struct Block {
        long lo = 0;
        long hi = -1;                       // coefficient window
        std::vector<LaurentPoly> nums;      // scaled numerators, one per s
        LaurentPoly q;                      // common denominator, normalized
    };
    std::vector<Block> blocks;
    for (std::size_t gcol = 0; gcol < l.closure.rank(); ++gcol) {
        const std::vector<Int> g = basis_column(l.closure.basis, gcol);
        std::vector<QZmodZZ> vals;
        vals.reserve(dim);
        for (std::size_t s = 0; s < dim; ++s) {
            std::vector<Int> e(dim, Int(0));
            e[s] = 1;
            vals.push_back(pairing_eval(form, e, g));
        }
        // Common denominator: product of the distinct denominators seen.
        std::vector<LaurentPoly> distinct;
        for (const auto& v : vals) {
            const LaurentPoly dn = v.den.unit_normalized();
            if (std::find(distinct.begin(), distinct.end(), dn) == distinct.end()) {
                distinct.push_back(dn);
            }
        }
        LaurentPoly q = LaurentPoly::one();
        for (const auto& dn : distinct) q = q * dn;

        Block blk;
        blk.q = q;
        blk.nums.reserve(dim);
        bool any = false;
        for (const auto& v : vals) {
            auto mult = q.divided_exactly_by(v.den.unit_normalized());
            if (!mult) throw std::logic_error("orthogonal_submodule: denominator mismatch");
            const LaurentPoly scaled = v.num * *mult;
            if (!scaled.is_zero()) {
                if (!any) {
                    blk.lo = scaled.min_exp();
                    blk.hi = scaled.max_exp();
                    any = true;
                } else {
                    blk.lo = std::min(blk.lo, scaled.min_exp());
                    blk.hi = std::max(blk.hi, scaled.max_exp());
                }
            }
            blk.nums.push_back(scaled);
        }
        if (any) blocks.push_back(std::move(blk));
    }
    if (blocks.empty()) return Lattice::full(dim);

    // Stack the blocks into one integer kernel problem over (x, z_1, ..).
    std::size_t total_rows = 0;
    std::size_t slack_cols = 0;
    for (auto& blk : blocks) {
        const long qdeg = blk.q.span();
        total_rows += static_cast<std::size_t>(blk.hi - blk.lo + 1);
        const long shifts = blk.hi - blk.lo + 1 - qdeg;
        if (shifts > 0) slack_cols += static_cast<std::size_t>(shifts);
    }
    IntMatrix big(total_rows, dim + slack_cols);
    std::size_t row_base = 0;
    std::size_t slack_base = dim;
    for (const auto& blk : blocks) {
        const std::size_t window = static_cast<std::size_t>(blk.hi - blk.lo + 1);
        for (std::size_t s = 0; s < dim; ++s) {
            for (const auto& [e, c] : blk.nums[s].terms()) {
                big.at(row_base + static_cast<std::size_t>(e - blk.lo), s) = c;
            }
        }
        const long qdeg = blk.q.span();
        const long shifts = blk.hi - blk.lo + 1 - qdeg;
        for (long sh = 0; sh < shifts; ++sh) {
            for (const auto& [e, c] : blk.q.terms()) {
                big.at(row_base + static_cast<std::size_t>(e + sh), slack_base) = -c;
            }
            ++slack_base;
        }
        row_base += window;
    }
    const IntMatrix ker = kernel_basis(big);
    IntMatrix xs(dim, ker.cols());
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        for (std::size_t i = 0; i < dim; ++i) xs.at(i, j) = ker.at(i, j);
    }
    return Lattice::from_generators(xs);
}

LagrangianCheck is_lagrangian(const BlanchfieldForm& form, const Submodule& l) {
    require_t_invariant(form, l);
    LagrangianCheck out;

    out.isotropic = true;
    for (std::size_t a = 0; a < l.closure.rank() && out.isotropic; ++a) {
        for (std::size_t b = a; b < l.closure.rank() && out.isotropic; ++b) {
            const QZmodZZ v = pairing_eval(form, basis_column(l.closure.basis, a),
                                           basis_column(l.closure.basis, b));
            if (!qz_is_zero(v)) out.isotropic = false;
        }
    }

    const Lattice perp = orthogonal_submodule(form, l);
    out.equals_orthogonal = l.closure == perp;
    out.quotient_torsion_free = l.closure.is_saturated();
    out.lagrangian = out.isotropic && out.equals_orthogonal && out.quotient_torsion_free;
    if (!out.isotropic) {
        out.failing_condition = "isotropy";
    } else if (!out.equals_orthogonal) {
        out.failing_condition = "exactness: submodule differs from its orthogonal complement";
    } else if (!out.quotient_torsion_free) {
        out.failing_condition = "exactness: quotient has integer torsion";
    }
    return out;
}

bool are_complementary(const BlanchfieldForm& form, const Submodule& l1, const Submodule& l2) {
    require_t_invariant(form, l1);
    require_t_invariant(form, l2);
    const Lattice inter = l1.closure.intersection(l2.closure);
    if (inter.rank() != 0) return false;
    const Lattice total = l1.closure.sum(l2.closure);
    return total == Lattice::full(form.lattice_rank());
}

DoubleSliceVerdict algebraic_double_slice_check(const BlanchfieldForm& form, const Submodule& l1,
                                                const Submodule& l2) {
    DoubleSliceVerdict v;
    v.first = is_lagrangian(form, l1);
    v.second = is_lagrangian(form, l2);
    v.complementary = are_complementary(form, l1, l2);
    if (!v.first.lagrangian) v.failures.push_back("first submodule: " + v.first.failing_condition);
    if (!v.second.lagrangian) {
        v.failures.push_back("second submodule: " + v.second.failing_condition);
    }
    if (!v.complementary) v.failures.push_back("submodules are not complementary");
    v.algebraically_doubly_slice = v.failures.empty();
    return v;
}

}  // namespace rhoslice
