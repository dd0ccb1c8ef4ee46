#include "rhoslice/hermitian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rhoslice/dyadic.hpp"

namespace rhoslice {

HermMatrix::HermMatrix(std::size_t size, std::vector<LaurentPoly> row_major_entries,
                       CyclicEmbedding context)
    : size_(size), entries_(std::move(row_major_entries)), context_(std::move(context)) {
    if (entries_.size() != size_ * size_) {
        throw std::invalid_argument("HermMatrix: entries do not match size");
    }
    if (context_.order && *context_.order < 1) {
        throw std::invalid_argument("HermMatrix: finite order must be >= 1");
    }
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = 0; j < size_; ++j) {
            if (at(j, i) != at(i, j).involute()) {
                throw std::invalid_argument("HermMatrix: not Hermitian under t -> 1/t");
            }
        }
    }
}

LaurentPoly HermMatrix::determinant() const { return laurent_matrix_det(entries_, size_); }

HermMatrix model_matrix() {
    const LaurentPoly diag = LaurentPoly::var() - LaurentPoly(2) + LaurentPoly::monomial(-1, Int(1));
    const LaurentPoly one = LaurentPoly::one();
    return HermMatrix(2, {diag, one, one, diag},
                      CyclicEmbedding{"g", std::nullopt, 0});
}

std::optional<EvennessWitness> is_even(const HermMatrix& u) {
    const std::size_t n = u.size();
    std::vector<LaurentPoly> v(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const LaurentPoly& d = u.at(i, i);
        if (d.coeff(0) % 2 != 0) return std::nullopt;
        // d = c0 + sum_{k>0} c_k (t^k + t^-k); take c0/2 plus the positive part.
        LaurentPoly half(d.coeff(0) / 2);
        for (const auto& [e, c] : d.terms()) {
            if (e > 0) half = half + LaurentPoly::monomial(e, c);
        }
        v[i * n + i] = half;
        for (std::size_t j = i + 1; j < n; ++j) {
            v[i * n + j] = u.at(i, j);
        }
    }
    return EvennessWitness{std::move(v)};
}

bool zz_nonsingular(const HermMatrix& u) {
    const long a = u.context().abelianization_image;
    std::vector<LaurentPoly> image(u.entries().size());
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = u.entries()[i].substitute_power(a);
    const LaurentPoly det = laurent_matrix_det(image, u.size());
    return !det.is_zero() && det.is_unit();
}

namespace {

std::vector<std::vector<Rat>> rational_matrix_at_one(const HermMatrix& u) {
    const std::size_t n = u.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(u.at(i, j).eval_at_one());
    }
    return m;
}

}  // namespace

int augmentation_signature(const HermMatrix& u, const SignPolicy& policy) {
    return signature_descartes(char_poly(rational_matrix_at_one(u)), policy);
}

EvaluatedMatrix epsilon_eval(const HermMatrix& u, const CirclePoint& w) {
    const std::size_t n = u.size();
    if (const auto* root = std::get_if<CirclePoint::RootOfUnity>(&w.point)) {
        const unsigned long k = root->k;
        const long j = root->j;
        CyclotomicMatrix m(n, std::vector<CyclotomicElement>(n, CyclotomicElement(k)));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                CyclotomicElement acc(k);
                for (const auto& [e, coeff] : u.at(r, c).terms()) {
                    acc = acc + CyclotomicElement::root_power(k, j * e).scaled(Rat(coeff));
                }
                m[r][c] = acc;
            }
        }
        if (!is_hermitian(m)) throw std::logic_error("epsilon_eval: lost Hermitian symmetry");
        return m;
    }
    const auto& ra = std::get<CirclePoint::RationalAbscissa>(w.point);
    const Rat rad = ra.x * ra.x - 1;  // <= 0 on the circle
    const QuadExtNumber omega(ra.x, ra.upper_half ? Rat(1) : Rat(-1), rad);
    const QuadExtNumber omega_inv = omega.conj();  // |omega| = 1

    // Power table covering every exponent in the matrix.
    long lo = 0, hi = 0;
    for (const LaurentPoly& p : u.entries()) {
        if (p.is_zero()) continue;
        lo = std::min(lo, p.min_exp());
        hi = std::max(hi, p.max_exp());
    }
    std::vector<QuadExtNumber> pos(static_cast<std::size_t>(hi) + 1), neg(static_cast<std::size_t>(-lo) + 1);
    pos[0] = QuadExtNumber::from_rational(Rat(1));
    neg[0] = pos[0];
    for (long e = 1; e <= hi; ++e) pos[static_cast<std::size_t>(e)] = pos[static_cast<std::size_t>(e - 1)] * omega;
    for (long e = 1; e <= -lo; ++e) neg[static_cast<std::size_t>(e)] = neg[static_cast<std::size_t>(e - 1)] * omega_inv;
    const auto power = [&](long e) -> const QuadExtNumber& {
        return e >= 0 ? pos[static_cast<std::size_t>(e)] : neg[static_cast<std::size_t>(-e)];
    };

    QuadExtMatrix m(n, std::vector<QuadExtNumber>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            QuadExtNumber acc;
            for (const auto& [e, coeff] : u.at(r, c).terms()) {
                acc = acc + power(e).scaled(Rat(coeff));
            }
            m[r][c] = acc;
        }
    }
    if (!is_hermitian(m)) throw std::logic_error("epsilon_eval: lost Hermitian symmetry");
    return m;
}

int signature_at(const HermMatrix& u, const CirclePoint& w, const SignPolicy& policy) {
    const EvaluatedMatrix m = epsilon_eval(u, w);
    if (const auto* cm = std::get_if<CyclotomicMatrix>(&m)) {
        return signature_descartes(char_poly(*cm), policy);
    }
    return signature_descartes(char_poly(std::get<QuadExtMatrix>(m)), policy);
}

namespace {

// Coprime residues j with 0 < j < m/2, ascending: the angles 2 pi j / m in
// (0, pi) of the primitive m-th roots of unity above the real axis.
std::vector<unsigned long> upper_primitive_residues(unsigned long m) {
    std::vector<unsigned long> out;
    for (unsigned long j = 1; 2 * j < m; ++j) {
        if (std::gcd(j, m) == 1) out.push_back(j);
    }
    return out;
}

}  // namespace

SignatureFunction signature_function(const HermMatrix& u, const SignPolicy& policy) {
    SignatureFunction sf;
    const LaurentPoly det = u.determinant();
    if (det.is_zero()) throw std::invalid_argument("degenerate on circle");
    sf.det_on_circle = chebyshev_reduce(det);

    // Isolate abscissae of circle zeros; +-1 are endpoint data, not arcs.
    auto roots = sturm_isolate(sf.det_on_circle, Rat(-1), Rat(1));
    sf.singular_at_one = sf.det_on_circle.eval(Rat(1)) == 0;
    sf.singular_at_minus_one = sf.det_on_circle.eval(Rat(-1)) == 0;
    std::vector<IsolatedRoot> interior;
    for (auto& r : roots) {
        if (r.is_exact() && (r.lo == 1 || r.lo == -1)) continue;
        // Shrink away from the endpoints so arc samples stay inside (-1, 1).
        while (!r.is_exact() && (r.hi >= 1 || r.lo <= -1)) r.refine();
        interior.push_back(r);
    }
    // Descending abscissa = ascending angle.
    std::sort(interior.begin(), interior.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo > b.lo; });

    // Cyclotomic factors of the determinant tag breakpoints at roots of unity.
    const CyclotomicSplit split = cyclotomic_strip(det);
    struct FactorData {
        unsigned long m;
        RealPoly reduced;                     // chebyshev image of Phi_m
        std::vector<unsigned long> residues;  // ascending j, angles ascending
    };
    std::vector<FactorData> factors;
    for (const auto& f : split.factors) {
        if (f.m < 3) continue;  // Phi_1, Phi_2 vanish only at x = +-1
        const unsigned long deg = totient(f.m);
        const LaurentPoly symmetric = cyclotomic_poly(f.m).shifted(-static_cast<long>(deg / 2));
        factors.push_back({f.m, chebyshev_reduce(symmetric), upper_primitive_residues(f.m)});
    }

    sf.all_breakpoints_cyclotomic = true;
    for (const auto& root : interior) {
        SignatureBreakpoint bp;
        bp.abscissa = root;
        for (const auto& fd : factors) {
            bool hit = false;
            if (root.is_exact()) {
                hit = fd.reduced.eval(root.lo) == 0;
            } else {
                hit = sturm_count(fd.reduced, root.lo, root.hi) >= 1;
            }
            if (!hit) continue;
            // Angle rank: count this factor's roots above the abscissa.
            const unsigned long above =
                root.is_exact() ? sturm_count(fd.reduced, root.lo, Rat(1))
                                : sturm_count(fd.reduced, root.hi, Rat(1));
            const unsigned long j = fd.residues.at(above);
            bp.exact_cos_of = rat(Int(j), Int(fd.m));
            bp.singular_value = signature_at(
                u, CirclePoint::root_of_unity(fd.m, static_cast<long>(j)), policy);
            break;
        }
        if (!bp.exact_cos_of) sf.all_breakpoints_cyclotomic = false;
        sf.breakpoints.push_back(std::move(bp));
    }

    // Make the isolating intervals pairwise strictly separated so that arc
    // samples in the gaps are guaranteed root-free.
    bool touching = true;
    while (touching) {
        touching = false;
        for (std::size_t i = 0; i + 1 < sf.breakpoints.size(); ++i) {
            auto& a = sf.breakpoints[i].abscissa;      // higher abscissa
            auto& b = sf.breakpoints[i + 1].abscissa;  // lower abscissa
            if (a.lo <= b.hi) {
                a.refine();
                b.refine();
                touching = true;
            }
        }
    }

    // One sample strictly inside each arc.
    std::vector<Rat> samples;
    Rat upper(1);
    for (const auto& bp : sf.breakpoints) {
        samples.push_back((upper + bp.abscissa.hi) / 2);
        upper = bp.abscissa.lo;
    }
    samples.push_back((upper + Rat(-1)) / 2);
    for (const Rat& x : samples) {
        sf.arc_values.push_back(signature_at(u, CirclePoint::rational_abscissa(x), policy));
    }

    sf.value_at_one = signature_at(u, CirclePoint::rational_abscissa(Rat(1)), policy);
    sf.value_at_minus_one = signature_at(u, CirclePoint::rational_abscissa(Rat(-1)), policy);
    return sf;
}

bool RhoResult::nonzero() const {
    if (is_exact()) return exact_value() != 0;
    const auto& c = std::get<Certified>(value);
    return c.lo > 0 || c.hi < 0;
}

Rat RhoResult::midpoint() const {
    if (is_exact()) return exact_value();
    const auto& c = std::get<Certified>(value);
    return (c.lo + c.hi) / 2;
}

RhoResult rho_finite(const HermMatrix& u, unsigned long k, unsigned long copies,
                     const SignPolicy& policy) {
    if (k == 0 || copies == 0) throw std::invalid_argument("rho_finite: k, copies >= 1");
    long total = 0;
    for (unsigned long j = 1; j <= k; ++j) {
        total += signature_at(u, CirclePoint::root_of_unity(k, static_cast<long>(j)), policy);
    }
    RhoResult out;
    out.copies = copies;
    out.value = RhoResult::Exact{rat(Int(total), Int(copies) * Int(k))};
    return out;
}

RhoResult rho_integral(const HermMatrix& u, unsigned long copies, RhoMode mode, const Rat& tol,
                       const SignPolicy& policy) {
    if (copies == 0) throw std::invalid_argument("rho_integral: copies >= 1");
    if (tol <= 0) throw std::invalid_argument("rho_integral: tolerance must be positive");
    const SignatureFunction sf = signature_function(u, policy);

    const bool exact_ok = sf.all_breakpoints_cyclotomic;
    RhoResult out;
    out.copies = copies;
    out.fell_back_to_numeric = mode == RhoMode::exact_if_possible && !exact_ok;

    if (mode == RhoMode::exact_if_possible && exact_ok) {
        // Boundary angles over pi are 2q for the tags q; arcs contribute
        // value * (angle span) / pi, normalized by copies.
        Rat rho(0);
        Rat prev(0);
        for (std::size_t i = 0; i < sf.breakpoints.size(); ++i) {
            const Rat s = 2 * *sf.breakpoints[i].exact_cos_of;
            rho += Rat(sf.arc_values[i]) * (s - prev);
            prev = s;
        }
        rho += Rat(sf.arc_values.back()) * (Rat(1) - prev);
        rho /= Rat(Int(copies));
        out.value = RhoResult::Exact{rho};
        return out;
    }

    // Certified interval: enclose each boundary angle-over-pi and refine
    // until the accumulated width meets the tolerance.
    for (long prec = 64;; prec *= 2) {
        std::vector<DyadicInterval> bounds;
        bounds.reserve(sf.breakpoints.size());
        bool ok = true;
        for (const auto& bp : sf.breakpoints) {
            if (bp.exact_cos_of) {
                bounds.push_back(DyadicInterval::from_rational(2 * *bp.exact_cos_of, prec));
            } else {
                try {
                    bounds.push_back(arccos_over_pi(bp.abscissa, prec));
                } catch (const precision_exhausted&) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            Rat lo(0), hi(0);
            Rat prev_lo(0), prev_hi(0);
            for (std::size_t i = 0; i < sf.breakpoints.size(); ++i) {
                const Rat v(sf.arc_values[i]);
                const Rat b_lo = bounds[i].lower();
                const Rat b_hi = bounds[i].upper();
                // v * (b - prev), interval arithmetic.
                const Rat c1 = v * (b_lo - prev_hi);
                const Rat c2 = v * (b_hi - prev_lo);
                lo += std::min(c1, c2);
                hi += std::max(c1, c2);
                prev_lo = b_lo;
                prev_hi = b_hi;
            }
            const Rat v(sf.arc_values.back());
            const Rat c1 = v * (Rat(1) - prev_hi);
            const Rat c2 = v * (Rat(1) - prev_lo);
            lo += std::min(c1, c2);
            hi += std::max(c1, c2);
            lo /= Rat(Int(copies));
            hi /= Rat(Int(copies));
            if (hi - lo <= tol) {
                out.value = RhoResult::Certified{lo, hi};
                return out;
            }
        }
        if (prec > policy.max_bits * 4) {
            throw precision_exhausted("rho_integral: tolerance unreachable within precision cap");
        }
    }
}

std::string RepresentationSpec::describe() const {
    std::ostringstream os;
    os << (label == Label::phi_A ? "phi_A" : "phi_B");
    if (coefficients == CoefficientField::rationals) {
        os << "^Q";
    } else {
        os << "^F" << prime;
    }
    return os.str();
}

std::string to_string(ObstructionVerdict v) {
    switch (v) {
        case ObstructionVerdict::not_doubly_slice:
            return "NOT_DOUBLY_SLICE";
        case ObstructionVerdict::inconclusive:
            return "INCONCLUSIVE";
        default:
            return "WITHHELD";
    }
}

ObstructionReport doubly_slice_report(const HermMatrix& u, const LaurentPoly& p,
                                      const std::vector<unsigned long>& primes,
                                      unsigned long copies, const SignPolicy& policy) {
    ObstructionReport report;

    const auto witness = is_even(u);
    report.hypothesis_checks.push_back(
        {"even", witness.has_value(),
         witness ? "U = V + involute(V)^T with explicit V" : "odd diagonal constant term"});

    const bool nonsing = zz_nonsingular(u);
    report.hypothesis_checks.push_back(
        {"zz_nonsingular", nonsing,
         nonsing ? "abelianized determinant is a unit" : "abelianized determinant is not a unit"});

    const int aug_sig = augmentation_signature(u, policy);
    report.hypothesis_checks.push_back({"augmentation_signature_zero", aug_sig == 0,
                                        "signature at u -> 1, t -> 1 is " + std::to_string(aug_sig)});

    bool p_admissible = false;
    std::string p_detail;
    std::optional<MetabelianGroupCtx> ctx;
    try {
        ctx.emplace(p);
        p_admissible = ctx->is_alexander();
        p_detail = p_admissible ? "|p(1)| = 1, unit extreme coefficients"
                                : "|p(1)| != 1: t - 1 does not act invertibly";
    } catch (const std::invalid_argument& e) {
        p_detail = e.what();
    }
    report.hypothesis_checks.push_back({"relation_admissible", p_admissible, p_detail});

    // Best-effort irreducibility: cyclotomic polynomials are irreducible;
    // a proper cyclotomic factor or a low-degree non-cyclotomic (which has
    // no rational roots once Phi_1, Phi_2 are excluded) settles it.
    const CyclotomicSplit split = cyclotomic_strip(p);
    if (split.factors.size() == 1 && split.factors[0].multiplicity == 1 &&
        split.remainder.is_one()) {
        report.irreducibility = "confirmed";
    } else if (!split.factors.empty()) {
        report.irreducibility = "refuted";
    } else if (split.remainder.span() <= 3) {
        report.irreducibility = "confirmed";
    } else {
        report.irreducibility = "assumed";
    }

    report.hypotheses_ok = true;
    for (const auto& c : report.hypothesis_checks) report.hypotheses_ok &= c.passed;
    if (!report.hypotheses_ok || report.irreducibility == "refuted") {
        report.verdict = ObstructionVerdict::withheld;
        return report;
    }

    // phi_A over Q: the embedded generator has infinite order, so the rho
    // value is the circle integral (the doubly slice base contributes 0).
    {
        RhoReportRow row;
        row.rep = {RepresentationSpec::Label::phi_A, CoefficientField::rationals, 0, std::nullopt};
        row.rho = rho_integral(u, copies, RhoMode::exact_if_possible, Rat(1, 1000000000), policy);
        row.note = "circle integral of the signature function";
        row.nonzero = row.rho->nonzero();
        report.rho_values.push_back(std::move(row));
    }

    // phi_A over F_p: the generator's additive order drops to p.
    std::vector<Int> e1(ctx->degree(), Int(0));
    e1[0] = 1;
    for (unsigned long q : primes) {
        const QuotientOrder ord = order_in_quotient(*ctx, e1, CoefficientField::prime_field, q);
        RhoReportRow row;
        row.rep = {RepresentationSpec::Label::phi_A, CoefficientField::prime_field, q,
                   ord.finite_order};
        row.rho = rho_finite(u, ord.finite_order, copies, policy);
        row.note = "root-of-unity signature average at k = " + std::to_string(ord.finite_order);
        row.nonzero = row.rho->nonzero();
        report.rho_values.push_back(std::move(row));
    }

    // phi_B: the complementary summand is zero for irreducible p; the
    // matrix abelianizes to a constant one whose signature already vanished.
    {
        RhoReportRow row;
        row.rep = {RepresentationSpec::Label::phi_B, CoefficientField::rationals, 0, 1};
        RhoResult zero;
        zero.copies = copies;
        zero.value = RhoResult::Exact{Rat(0)};
        row.rho = zero;
        row.note = "second summand is zero; constant matrix with vanishing augmentation signature";
        row.nonzero = false;
        report.rho_values.push_back(std::move(row));
    }

    bool any_nonzero = false;
    for (const auto& row : report.rho_values) any_nonzero |= row.nonzero;
    report.verdict =
        any_nonzero ? ObstructionVerdict::not_doubly_slice : ObstructionVerdict::inconclusive;
    return report;
}

}  // namespace rhoslice
