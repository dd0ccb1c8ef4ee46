/*
 * hermitian.hpp
 * -------------
 * Hermitian matrices over Z[u,1/u] carrying a cyclic-embedding context
 * (the generator's order and abelianization image), their evaluations at
 * unit-circle points, the piecewise-constant signature function on the
 * circle, and the rho invariants computed from it:
 *
 *   finite order k:  rho = (1/rk) * sum_{j=1..k} sgn(eps_{zeta_k^j}(U))
 *   infinite order:  rho = (1/2 pi r) * integral over S^1 of sgn(eps_w(U))
 *
 * The integral is evaluated arc by arc; when every breakpoint of the
 * signature function lies at a root of unity the arc angles are rational
 * multiples of pi and the result is an exact rational.
 */
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rhoslice/arith.hpp"
#include "rhoslice/cyclotomic.hpp"
#include "rhoslice/laurent.hpp"
#include "rhoslice/metabelian.hpp"
#include "rhoslice/quad_ext.hpp"
#include "rhoslice/real_poly.hpp"
#include "rhoslice/signature.hpp"

namespace rhoslice {

struct CyclicEmbedding {
    std::string generator_name = "g";
    std::optional<unsigned long> order;  // nullopt = infinite; finite k >= 1
    long abelianization_image = 0;       // g -> t^a under the abelianization
};

class HermMatrix {
  public:
    HermMatrix(std::size_t size, std::vector<LaurentPoly> row_major_entries,
               CyclicEmbedding context);

    std::size_t size() const { return size_; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
    const std::vector<LaurentPoly>& entries() const { return entries_; }
    const CyclicEmbedding& context() const { return context_; }

    LaurentPoly determinant() const;

  private:
    std::size_t size_;
    std::vector<LaurentPoly> entries_;
    CyclicEmbedding context_;
};

// The worked-example matrix [[u - 2 + 1/u, 1], [1, u - 2 + 1/u]] with an
// infinite-order generator in the commutator subgroup (image a = 0).
HermMatrix model_matrix();

// U = V + conj(V)^T solvability. The diagonal is the only constraint: each
// diagonal entry (palindromic) splits iff its constant coefficient is even.
struct EvennessWitness {
    std::vector<LaurentPoly> v;  // row-major V with U = V + involute(V)^T
};
std::optional<EvennessWitness> is_even(const HermMatrix& u);

// Substitutes u -> t^a (a = abelianization image) and tests whether the
// determinant is a unit +-t^k of Z[t,1/t].
bool zz_nonsingular(const HermMatrix& u);

// Signature of the integer symmetric matrix at u -> 1, t -> 1.
int augmentation_signature(const HermMatrix& u, const SignPolicy& policy = {});

using CyclotomicMatrix = std::vector<std::vector<CyclotomicElement>>;
using QuadExtMatrix = std::vector<std::vector<QuadExtNumber>>;
using EvaluatedMatrix = std::variant<CyclotomicMatrix, QuadExtMatrix>;

// Exact substitution u -> w. Roots of unity evaluate into Q(zeta_k);
// rational abscissae into Q(x + i sqrt(1 - x^2)). The result is validated
// Hermitian.
EvaluatedMatrix epsilon_eval(const HermMatrix& u, const CirclePoint& w);

int signature_at(const HermMatrix& u, const CirclePoint& w, const SignPolicy& policy = {});

// One breakpoint of the signature function: an isolated abscissa in (-1, 1),
// tagged with q when it is exactly cos(2 pi q) (a root of unity of the
// determinant), and the signature at the point when computable exactly.
struct SignatureBreakpoint {
    IsolatedRoot abscissa;
    std::optional<Rat> exact_cos_of;      // q with breakpoint = cos(2 pi q), 0 < q < 1/2
    std::optional<int> singular_value;    // signature at the breakpoint (cyclotomic case)
};

struct SignatureFunction {
    // Descending abscissae, i.e. ordered by increasing angle in (0, pi).
    std::vector<SignatureBreakpoint> breakpoints;
    // Arc values from the arc at omega = 1 down to the arc at omega = -1;
    // size = breakpoints.size() + 1.
    std::vector<int> arc_values;
    int value_at_one = 0;
    int value_at_minus_one = 0;
    // Whether det(eps_w) vanishes at w = +-1 (the endpoint values are then
    // signatures of singular matrices).
    bool singular_at_one = false;
    bool singular_at_minus_one = false;
    // True when every breakpoint carries an exact_cos_of tag.
    bool all_breakpoints_cyclotomic = true;
    // Chebyshev reduction of the determinant (breakpoints are its roots).
    RealPoly det_on_circle;
};

// Computes the full signature function. Throws
// std::invalid_argument("degenerate on circle") when det vanishes
// identically on the circle.
SignatureFunction signature_function(const HermMatrix& u, const SignPolicy& policy = {});

struct RhoResult {
    struct Exact {
        Rat value;
    };
    struct Certified {
        Rat lo;
        Rat hi;
    };
    std::variant<Exact, Certified> value;
    unsigned long copies = 1;  // the r in the 1/r normalization
    // Set when exact evaluation was requested but a non-cyclotomic
    // breakpoint forced the numeric path.
    bool fell_back_to_numeric = false;

    bool is_exact() const { return std::holds_alternative<Exact>(value); }
    const Rat& exact_value() const { return std::get<Exact>(value).value; }
    // True when the result is provably nonzero.
    bool nonzero() const;
    Rat midpoint() const;
};

// (1/rk) sum_{j=1..k} sgn(eps_{zeta_k^j}(u)), all signatures exact.
RhoResult rho_finite(const HermMatrix& u, unsigned long k, unsigned long copies = 1,
                     const SignPolicy& policy = {});

enum class RhoMode { exact_if_possible, numeric };

// (1/2 pi r) integral of the signature over the circle, via arccos of the
// breakpoints. Exact when all breakpoints are cyclotomic; otherwise a
// certified interval of width <= tol.
RhoResult rho_integral(const HermMatrix& u, unsigned long copies = 1,
                       RhoMode mode = RhoMode::exact_if_possible, const Rat& tol = Rat(1, 1000000000),
                       const SignPolicy& policy = {});

// A representation in the family attached to a summand of the Alexander
// module: rational or mod-p coefficients, with the induced order of the
// embedded generator.
struct RepresentationSpec {
    enum class Label { phi_A, phi_B };
    Label label = Label::phi_A;
    CoefficientField coefficients = CoefficientField::rationals;
    unsigned long prime = 0;                     // set for prime_field
    std::optional<unsigned long> induced_order;  // nullopt = infinite

    std::string describe() const;
};

struct HypothesisCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct RhoReportRow {
    RepresentationSpec rep;
    std::optional<RhoResult> rho;  // empty when the row is settled by a note
    std::string note;
    bool nonzero = false;
};

enum class ObstructionVerdict { not_doubly_slice, inconclusive, withheld };

std::string to_string(ObstructionVerdict v);

struct ObstructionReport {
    std::vector<HypothesisCheck> hypothesis_checks;
    bool hypotheses_ok = false;
    // confirmed (p is a cyclotomic polynomial) / assumed (caller's word,
    // nothing found against it) / refuted (a proper factor was found).
    std::string irreducibility;
    std::vector<RhoReportRow> rho_values;
    ObstructionVerdict verdict = ObstructionVerdict::withheld;
};

// The full doubly-slice obstruction report for a matrix over the group ring
// of Z |x Z[t,1/t]/p: hypothesis checks (evenness, Z[Z]-nonsingularity,
// vanishing augmentation signature, p admissible), the rho value of the
// rational representation, one finite rho per requested prime, and the
// explicit vanishing second-summand row. The verdict is NOT_DOUBLY_SLICE
// as soon as one rho value is provably nonzero.
ObstructionReport doubly_slice_report(const HermMatrix& u, const LaurentPoly& p,
                                      const std::vector<unsigned long>& primes,
                                      unsigned long copies = 1, const SignPolicy& policy = {});

}  // namespace rhoslice
