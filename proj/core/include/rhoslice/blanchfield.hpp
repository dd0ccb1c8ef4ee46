/*
 * blanchfield.hpp
 * ---------------
 * Linking forms on direct sums of cyclic torsion modules over Z[t,1/t],
 * with values in Q(Z)/Z[Z], and the lagrangian/complementary-lagrangian
 * checks that define algebraic double sliceness.
 *
 * Each summand Z[t,1/t]/(p_i) has unit extreme coefficients, so the
 * underlying abelian group of H is the lattice Z^D (D = sum deg p_i) with
 * the block-companion t-action. Submodules are t-closed sublattices; the
 * exactness half of the lagrangian condition is certified by computing the
 * orthogonal sublattice L-perp exactly and comparing lattices.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rhoslice/arith.hpp"
#include "rhoslice/int_matrix.hpp"
#include "rhoslice/laurent.hpp"

namespace rhoslice {

// A value of Q(Z)/Z[Z] as a formal fraction num/den of Laurent polynomials.
// Equality is the membership test "den divides num with integer quotient",
// never syntactic comparison.
struct QZmodZZ {
    LaurentPoly num;
    LaurentPoly den = LaurentPoly::one();

    QZmodZZ() = default;
    QZmodZZ(LaurentPoly n, LaurentPoly d);

    QZmodZZ operator+(const QZmodZZ& rhs) const;
    QZmodZZ operator-() const;
    QZmodZZ scaled(const LaurentPoly& p) const;  // p * this
    // Involution of both numerator and denominator (the conjugate value).
    QZmodZZ conj() const;
};

// true iff v lies in Z[Z], i.e. den | num over Q[t,1/t] with an integer
// quotient. Throws on a zero denominator.
bool qz_is_zero(const QZmodZZ& v);

class BlanchfieldForm {
  public:
    // summands[i] presents Z[t,1/t]/(p_i); gram is the Hermitian matrix of
    // pairings of the summand generators. Validates Hermitian symmetry and
    // p_i-annihilation of row and column i. Each p_i must have unit extreme
    // coefficients.
    BlanchfieldForm(std::vector<LaurentPoly> summands, std::vector<QZmodZZ> gram_row_major);

    // The hyperbolic form on (Z[t,1/t]/p)^2: gram [[0, 1/p], [1/conj p, 0]].
    static BlanchfieldForm hyperbolic(const LaurentPoly& p);
    // Bl(e_i, e_j) = (A^-1)_{ij} for a diagonal presentation A, i.e. the
    // direct sum of pairings 1/p_i.
    static BlanchfieldForm from_diagonal_presentation(const std::vector<LaurentPoly>& diag);
    // The 2x2 presentation [[0, p], [conj p, 0]].
    static BlanchfieldForm from_hyperbolic_presentation(const LaurentPoly& p);

    std::size_t summand_count() const { return summands_.size(); }
    const std::vector<LaurentPoly>& summands() const { return summands_; }
    const QZmodZZ& gram(std::size_t i, std::size_t j) const {
        return gram_[i * summands_.size() + j];
    }

    // Ambient rank D = sum deg p_i of the underlying lattice.
    std::size_t lattice_rank() const { return lattice_rank_; }
    // Block companion matrix of the t-action on Z^D (unimodular).
    const IntMatrix& t_action() const { return t_action_; }

    // Coordinate polynomials of a lattice vector, one per summand.
    std::vector<LaurentPoly> coordinate_polys(const std::vector<Int>& x) const;

  private:
    std::vector<LaurentPoly> summands_;
    std::vector<QZmodZZ> gram_;
    std::size_t lattice_rank_ = 0;
    std::vector<std::size_t> offsets_;  // start of each summand block in Z^D
    std::vector<unsigned long> degrees_;
    IntMatrix t_action_;
};

// A t-closed sublattice of the underlying lattice of a form, retained with
// the generators it was built from.
struct Submodule {
    IntMatrix generators;  // columns, in Z^D
    Lattice closure;       // HNF basis of the t-closed span

    static Submodule from_generators(const BlanchfieldForm& form, const IntMatrix& generators);
    static Submodule span_of_summand_generator(const BlanchfieldForm& form, std::size_t i);
};

// Bl(x, y) = sum_i conj(x_i) gram[i][j] y_j, reduced as a formal fraction.
QZmodZZ pairing_eval(const BlanchfieldForm& form, const std::vector<Int>& x,
                     const std::vector<Int>& y);

// The orthogonal sublattice {x in Z^D : Bl(x, L) = 0 in Q(Z)/Z[Z]}.
Lattice orthogonal_submodule(const BlanchfieldForm& form, const Submodule& l);

// Lagrangian test: isotropy (Bl vanishes on L x L) plus exactness of
//   0 -> L -> H -> L^ -> 0,
// certified as L = L-perp together with H/L having no Z-torsion
// (saturation). Throws std::invalid_argument on a non-t-invariant closure.
struct LagrangianCheck {
    bool isotropic = false;
    bool equals_orthogonal = false;
    bool quotient_torsion_free = false;
    bool lagrangian = false;
    std::string failing_condition;  // empty when lagrangian
};
LagrangianCheck is_lagrangian(const BlanchfieldForm& form, const Submodule& l);

// L1 cap L2 = 0 and L1 + L2 = H as lattices.
bool are_complementary(const BlanchfieldForm& form, const Submodule& l1, const Submodule& l2);

struct DoubleSliceVerdict {
    bool algebraically_doubly_slice = false;
    LagrangianCheck first;
    LagrangianCheck second;
    bool complementary = false;
    std::vector<std::string> failures;
};
DoubleSliceVerdict algebraic_double_slice_check(const BlanchfieldForm& form, const Submodule& l1,
                                                const Submodule& l2);

}  // namespace rhoslice
