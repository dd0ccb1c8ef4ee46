/*
 * int_matrix.hpp
 * --------------
 * Arbitrary-precision integer matrices and the lattice toolkit: fraction-free
 * determinants, Hermite and Smith normal forms, integer kernels and solves,
 * and sublattice operations (sum, intersection, saturation, membership).
 * Lattices are the integer column spans of their basis matrices.
 */
#pragma once

#include <optional>
#include <vector>

#include "rhoslice/arith.hpp"

namespace rhoslice {

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const;
    IntMatrix transposed() const;

    std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * column
    IntMatrix column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<Int>& v);
    IntMatrix with_columns_appended(const IntMatrix& rhs) const;

    bool is_zero() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

// Determinant of a square matrix by fraction-free Bareiss elimination.
Int det_bareiss(const IntMatrix& m);

// Inverse of a unimodular matrix (|det| = 1); throws otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Solve m * x = v exactly over the integers; nullopt when no integer
// solution exists. m need not be square but must have full column rank
// for a unique solution; with deficient rank any one solution is returned.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& v);

// Column-style Hermite normal form of the column span: returns a canonical
// basis matrix (full column rank, echelon, positive pivots, entries right of
// a pivot reduced). The zero lattice yields a rows x 0 matrix.
IntMatrix hnf_basis(const IntMatrix& generators);

// Basis of the integer kernel {x : m x = 0} (saturated by construction).
IntMatrix kernel_basis(const IntMatrix& m);

// Diagonal of the Smith normal form (nonnegative, each dividing the next).
std::vector<Int> smith_diagonal(const IntMatrix& m);

struct Lattice {
    // Basis columns in HNF; rows = ambient dimension.
    IntMatrix basis;

    static Lattice from_generators(const IntMatrix& generators);
    static Lattice zero(std::size_t ambient_dim);
    static Lattice full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return basis.rows(); }
    std::size_t rank() const { return basis.cols(); }

    bool contains(const std::vector<Int>& v) const;
    bool contains_lattice(const Lattice& other) const;
    bool operator==(const Lattice& other) const;

    Lattice sum(const Lattice& other) const;
    Lattice intersection(const Lattice& other) const;
    // Smallest saturated (Z-torsion-free quotient) overlattice of the same rank.
    Lattice saturation() const;
    bool is_saturated() const;

    // Index [ambient : this] when finite (full rank), else nullopt.
    std::optional<Int> index_in_ambient() const;
};

}  // namespace rhoslice
