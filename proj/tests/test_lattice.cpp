#include <doctest.h>

#include "oracles.hpp"
#include "rhoslice/int_matrix.hpp"

using namespace rhoslice;

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("int_matrix");

TEST_CASE("bareiss determinants") {
    CHECK(det_bareiss(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(det_bareiss(from_rows({{2, 0}, {0, 3}})) == 6);
    CHECK(det_bareiss(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
    CHECK(det_bareiss(IntMatrix::identity(5)) == 1);

    // Row operations preserve the determinant.
    oracles::Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.pick(1, 5));
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.pick(-5, 5);
        }
        IntMatrix m2 = m;
        if (n >= 2) {
            for (std::size_t j = 0; j < n; ++j) m2.at(0, j) += 3 * m2.at(1, j);
        }
        CHECK(det_bareiss(m) == det_bareiss(m2));
    }
}

TEST_CASE("unimodular inverse") {
    const IntMatrix m = from_rows({{2, 1}, {1, 1}});
    const IntMatrix inv = unimodular_inverse(m);
    CHECK(m * inv == IntMatrix::identity(2));
    CHECK(inv * m == IntMatrix::identity(2));
    CHECK_THROWS_AS(unimodular_inverse(from_rows({{2, 0}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("integer solving") {
    const IntMatrix m = from_rows({{2, 0}, {0, 3}});
    const auto x = solve_integer(m, {Int(4), Int(9)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 3);
    CHECK(!solve_integer(m, {Int(1), Int(0)}).has_value());

    // Random consistent systems round-trip.
    oracles::Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(rng.pick(1, 4));
        const std::size_t cols = static_cast<std::size_t>(rng.pick(1, 4));
        IntMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = rng.pick(-4, 4);
        }
        std::vector<Int> x0(cols);
        for (auto& v : x0) v = rng.pick(-3, 3);
        const auto sol = solve_integer(a, a.apply(x0));
        REQUIRE(sol.has_value());
        CHECK(a.apply(*sol) == a.apply(x0));
    }
}

TEST_CASE("hermite basis and membership") {
    const Lattice l = Lattice::from_generators(from_rows({{2, 4}, {0, 2}}));
    CHECK(l.rank() == 2);
    CHECK(l.contains({Int(2), Int(0)}));
    CHECK(l.contains({Int(0), Int(2)}));
    CHECK(!l.contains({Int(1), Int(0)}));
    CHECK(l.index_in_ambient().has_value());
    CHECK(*l.index_in_ambient() == 4);
}

TEST_CASE("kernel bases") {
    const IntMatrix m = from_rows({{1, 2, 3}});
    const IntMatrix k = kernel_basis(m);
    CHECK(k.cols() == 2);
    for (std::size_t j = 0; j < k.cols(); ++j) {
        Int acc = 0;
        for (std::size_t i = 0; i < 3; ++i) acc += m.at(0, i) * k.at(i, j);
        CHECK(acc == 0);
    }
    // The kernel lattice is saturated.
    CHECK(Lattice{k}.is_saturated());
}

TEST_CASE("sum, intersection, saturation") {
    const Lattice a = Lattice::from_generators(from_rows({{1}, {0}}));
    const Lattice b = Lattice::from_generators(from_rows({{0}, {1}}));
    CHECK(a.sum(b) == Lattice::full(2));
    CHECK(a.intersection(b).rank() == 0);

    const Lattice even = Lattice::from_generators(from_rows({{2}, {0}}));
    CHECK(even.saturation() == a);
    CHECK(!even.is_saturated());
    CHECK(a.is_saturated());

    const Lattice diag = Lattice::from_generators(from_rows({{1, 2}, {1, 0}}));
    const Lattice inter = a.intersection(diag);
    // Columns of diag span {(x+2y, x)}; intersection with the x-axis is
    // generated by (2, 0).
    CHECK(inter.rank() == 1);
    CHECK(inter.contains({Int(2), Int(0)}));
    CHECK(!inter.contains({Int(1), Int(0)}));
}

TEST_CASE("smith diagonals") {
    CHECK(smith_diagonal(from_rows({{2, 0}, {0, 4}})) == std::vector<Int>{Int(2), Int(4)});
    CHECK(smith_diagonal(from_rows({{0, 1}, {1, 0}})) == std::vector<Int>{Int(1), Int(1)});
    CHECK(smith_diagonal(from_rows({{2, 1}, {1, 2}})) == std::vector<Int>{Int(1), Int(3)});
    const auto d = smith_diagonal(from_rows({{6, 0, 0}, {0, 10, 0}, {0, 0, 15}}));
    REQUIRE(d.size() == 3);
    CHECK(d[0] == 1);
    CHECK(d[1] == 30);
    CHECK(d[2] == 30);
    // Divisibility chain on random inputs.
    oracles::Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.pick(1, 4));
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.pick(-6, 6);
        }
        const auto diag = smith_diagonal(m);
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            CHECK(diag[i + 1] % diag[i] == 0);
        }
        // Product of invariant factors = |det| when nonsingular.
        const Int det = abs_int(det_bareiss(m));
        if (det != 0) {
            Int prod(1);
            for (const auto& v : diag) prod *= v;
            CHECK(prod == det);
        }
    }
}

TEST_SUITE_END();
