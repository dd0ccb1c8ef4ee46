#include "rhoslice/int_matrix.hpp"

#include <algorithm>

namespace rhoslice {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    }
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: shape mismatch");
    std::vector<Int> out(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    }
    return out;
}

IntMatrix IntMatrix::column(std::size_t j) const {
    IntMatrix out(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) out.at(i, 0) = at(i, j);
    return out;
}

void IntMatrix::set_column(std::size_t j, const std::vector<Int>& v) {
    if (v.size() != rows_) throw std::invalid_argument("set_column: shape mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntMatrix IntMatrix::with_columns_appended(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw std::invalid_argument("append: row mismatch");
    IntMatrix out(rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, cols_ + j) = rhs.at(i, j);
    }
    return out;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : data_) {
        if (x != 0) return false;
    }
    return true;
}

Int det_bareiss(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Int(1);
    IntMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return Int(0);
            for (std::size_t j = k; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a.at(i, j) = divexact(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign == 1 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

namespace {

// Column echelon form by unimodular column operations. On return, columns
// are either zero or have strictly increasing pivot rows, pivots positive,
// and entries to the left of each pivot reduced into [0, pivot). When
// `transform` is non-null it receives U with input * U = output.
IntMatrix column_echelon(const IntMatrix& input, IntMatrix* transform) {
    IntMatrix a = input;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    IntMatrix u = IntMatrix::identity(cols);

    auto swap_cols = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(a.at(i, x), a.at(i, y));
        for (std::size_t i = 0; i < cols; ++i) std::swap(u.at(i, x), u.at(i, y));
    };
    auto addmul_col = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < rows; ++i) a.at(i, dst) += q * a.at(i, src);
        for (std::size_t i = 0; i < cols; ++i) u.at(i, dst) += q * u.at(i, src);
    };
    auto negate_col = [&](std::size_t x) {
        for (std::size_t i = 0; i < rows; ++i) a.at(i, x) = -a.at(i, x);
        for (std::size_t i = 0; i < cols; ++i) u.at(i, x) = -u.at(i, x);
    };

    std::size_t next = 0;  // next pivot column slot
    for (std::size_t row = 0; row < rows && next < cols; ++row) {
        // Euclidean reduction across columns next..cols-1 on this row.
        while (true) {
            std::size_t best = cols;
            for (std::size_t j = next; j < cols; ++j) {
                if (a.at(row, j) == 0) continue;
                if (best == cols || abs_int(a.at(row, j)) < abs_int(a.at(row, best))) best = j;
            }
            if (best == cols) break;  // row clear
            swap_cols(next, best);
            bool reduced_all = true;
            for (std::size_t j = next + 1; j < cols; ++j) {
                if (a.at(row, j) == 0) continue;
                const Int q = fdiv(a.at(row, j), a.at(row, next));
                addmul_col(j, next, -q);
                if (a.at(row, j) != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (a.at(row, next) == 0) continue;
        if (a.at(row, next) < 0) negate_col(next);
        // Reduce earlier pivot columns against this pivot row.
        for (std::size_t j = 0; j < next; ++j) {
            const Int q = fdiv(a.at(row, j), a.at(row, next));
            addmul_col(j, next, -q);
        }
        ++next;
    }
    if (transform) *transform = u;
    return a;
}

std::vector<std::size_t> pivot_rows_of(const IntMatrix& echelon) {
    std::vector<std::size_t> pivots;
    for (std::size_t j = 0; j < echelon.cols(); ++j) {
        std::size_t i = 0;
        while (i < echelon.rows() && echelon.at(i, j) == 0) ++i;
        if (i == echelon.rows()) break;  // zero columns trail
        pivots.push_back(i);
    }
    return pivots;
}

}  // namespace

IntMatrix hnf_basis(const IntMatrix& generators) {
    const IntMatrix ech = column_echelon(generators, nullptr);
    const auto pivots = pivot_rows_of(ech);
    IntMatrix out(ech.rows(), pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j) {
        for (std::size_t i = 0; i < ech.rows(); ++i) out.at(i, j) = ech.at(i, j);
    }
    return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    IntMatrix u;
    const IntMatrix ech = column_echelon(m, &u);
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = 0; j < ech.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < ech.rows() && zero; ++i) zero = ech.at(i, j) == 0;
        if (zero) zero_cols.push_back(j);
    }
    IntMatrix raw(m.cols(), zero_cols.size());
    for (std::size_t j = 0; j < zero_cols.size(); ++j) {
        for (std::size_t i = 0; i < m.cols(); ++i) raw.at(i, j) = u.at(i, zero_cols[j]);
    }
    return hnf_basis(raw);
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& v) {
    if (v.size() != m.rows()) throw std::invalid_argument("solve_integer: shape mismatch");
    IntMatrix u;
    const IntMatrix ech = column_echelon(m, &u);
    const auto pivots = pivot_rows_of(ech);
    std::vector<Int> residue = v;
    std::vector<Int> y(m.cols(), Int(0));
    for (std::size_t j = 0; j < pivots.size(); ++j) {
        const std::size_t r = pivots[j];
        // Rows above the pivot must already be clear.
        const Int& p = ech.at(r, j);
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), residue[r].get_mpz_t(), p.get_mpz_t());
        if (rem != 0) continue;  // cannot clear with this pivot; checked below
        if (q != 0) {
            for (std::size_t i = 0; i < m.rows(); ++i) residue[i] -= q * ech.at(i, j);
            y[j] = q;
        }
    }
    for (const Int& r : residue) {
        if (r != 0) return std::nullopt;
    }
    return u.apply(y);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    const Int d = det_bareiss(m);
    if (d != 1 && d != -1) throw std::invalid_argument("unimodular_inverse: |det| != 1");
    const std::size_t n = m.rows();
    IntMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> e(n, Int(0));
        e[j] = 1;
        auto x = solve_integer(m, e);
        if (!x) throw std::logic_error("unimodular_inverse: solve failed");
        inv.set_column(j, *x);
    }
    return inv;
}

std::vector<Int> smith_diagonal(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<Int> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Find the smallest nonzero entry in the remaining block.
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (a.at(i, j) == 0) continue;
                if (pi == rows || abs_int(a.at(i, j)) < abs_int(a.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi == rows) break;  // remaining block is zero
        for (std::size_t j = t; j < cols; ++j) std::swap(a.at(t, j), a.at(pi, j));
        for (std::size_t i = t; i < rows; ++i) std::swap(a.at(i, t), a.at(i, pj));

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            const Int q = fdiv(a.at(i, t), a.at(t, t));
            if (q != 0) {
                for (std::size_t j = t; j < cols; ++j) a.at(i, j) -= q * a.at(t, j);
            }
            if (a.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            const Int q = fdiv(a.at(t, j), a.at(t, t));
            if (q != 0) {
                for (std::size_t i = t; i < rows; ++i) a.at(i, j) -= q * a.at(i, t);
            }
            if (a.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders exist; repeat with them

        // Divisibility sweep: fold in any entry the pivot misses.
        bool divides_all = true;
        for (std::size_t i = t + 1; i < rows && divides_all; ++i) {
            for (std::size_t j = t + 1; j < cols && divides_all; ++j) {
                if (a.at(i, j) % a.at(t, t) != 0) {
                    for (std::size_t jj = t; jj < cols; ++jj) a.at(t, jj) += a.at(i, jj);
                    divides_all = false;
                }
            }
        }
        if (!divides_all) continue;

        diag.push_back(abs_int(a.at(t, t)));
        ++t;
    }
    return diag;
}

Lattice Lattice::from_generators(const IntMatrix& generators) {
    return Lattice{hnf_basis(generators)};
}

Lattice Lattice::zero(std::size_t ambient_dim) { return Lattice{IntMatrix(ambient_dim, 0)}; }

Lattice Lattice::full(std::size_t ambient_dim) {
    return Lattice{IntMatrix::identity(ambient_dim)};
}

bool Lattice::contains(const std::vector<Int>& v) const {
    if (v.size() != basis.rows()) throw std::invalid_argument("contains: dimension mismatch");
    return solve_integer(basis, v).has_value();
}

bool Lattice::contains_lattice(const Lattice& other) const {
    for (std::size_t j = 0; j < other.basis.cols(); ++j) {
        std::vector<Int> col(other.basis.rows());
        for (std::size_t i = 0; i < col.size(); ++i) col[i] = other.basis.at(i, j);
        if (!contains(col)) return false;
    }
    return true;
}

bool Lattice::operator==(const Lattice& other) const {
    if (ambient_dim() != other.ambient_dim() || rank() != other.rank()) return false;
    return contains_lattice(other) && other.contains_lattice(*this);
}

Lattice Lattice::sum(const Lattice& other) const {
    return from_generators(basis.with_columns_appended(other.basis));
}

Lattice Lattice::intersection(const Lattice& other) const {
    if (ambient_dim() != other.ambient_dim()) {
        throw std::invalid_argument("intersection: dimension mismatch");
    }
    if (rank() == 0 || other.rank() == 0) return zero(ambient_dim());
    const IntMatrix combined = basis.with_columns_appended(other.basis);
    const IntMatrix ker = kernel_basis(combined);
    // Kernel columns split as (x; y) with B1 x = -B2 y; B1 x spans the
    // intersection.
    IntMatrix gens(ambient_dim(), ker.cols());
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        std::vector<Int> x(rank());
        for (std::size_t i = 0; i < rank(); ++i) x[i] = ker.at(i, c);
        gens.set_column(c, basis.apply(x));
    }
    return from_generators(gens);
}

Lattice Lattice::saturation() const {
    if (rank() == 0) return *this;
    const IntMatrix ortho = kernel_basis(basis.transposed());
    if (ortho.cols() == 0) return full(ambient_dim());
    return Lattice{kernel_basis(ortho.transposed())};
}

bool Lattice::is_saturated() const { return *this == saturation(); }

std::optional<Int> Lattice::index_in_ambient() const {
    if (rank() != ambient_dim()) return std::nullopt;
    return abs_int(det_bareiss(basis));
}

}  // namespace rhoslice
