#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaff/errors.hpp"
#include "qaff/matrix.hpp"

#include <random>

using namespace qaff;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = Rational(static_cast<int>(rng() % 11) - 5);
    return m;
}

}  // namespace

TEST_CASE("construction and arithmetic") {
    const Matrix a{{1, 2}, {3, 4}};
    const Matrix b{{0, 1}, {1, 0}};
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 2);
    CHECK(a + b == Matrix{{1, 3}, {4, 4}});
    CHECK(a - a == Matrix(2, 2));
    CHECK((a - a).is_zero());
    CHECK(-b == Matrix{{0, -1}, {-1, 0}});
    CHECK(a * b == Matrix{{2, 1}, {4, 3}});
    CHECK(Rational(1, 2) * a == Matrix{{Rational(1, 2), 1}, {Rational(3, 2), 2}});
    CHECK(Matrix::identity(3) * Matrix::identity(3) == Matrix::identity(3));
}

TEST_CASE("pow and transpose") {
    const Matrix n{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    CHECK(n.pow(0) == Matrix::identity(3));
    CHECK(n.pow(2) == Matrix{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}});
    CHECK(n.pow(3).is_zero());
    CHECK(n.transpose().transpose() == n);
    const Matrix a{{1, 2, 3}, {4, 5, 6}};
    CHECK(a.transpose() == Matrix{{1, 4}, {2, 5}, {3, 6}});
}

TEST_CASE("submatrix, column, hcat, block_diag") {
    const Matrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    CHECK(a.submatrix(0, 2, 1, 3) == Matrix{{2, 3}, {5, 6}});
    CHECK(a.column(2) == Matrix{{3}, {6}, {9}});
    CHECK(hcat(Matrix{{1}, {2}}, Matrix{{3}, {4}}) == Matrix{{1, 3}, {2, 4}});
    CHECK(block_diag(Matrix{{1}}, Matrix{{2, 0}, {0, 3}}) ==
          Matrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
}

TEST_CASE("rref canonical form") {
    Matrix m{{0, 0, 2}, {1, 2, 3}, {2, 4, 8}};
    const auto pivots = m.rref_in_place();
    CHECK(m == Matrix{{1, 2, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK(pivots == std::vector<std::size_t>{0, 2});

    // idempotent on echelon forms
    Matrix again = m;
    again.rref_in_place();
    CHECK(again == m);
}

TEST_CASE("rank") {
    CHECK(Matrix(3, 3).rank() == 0);
    CHECK(Matrix::identity(4).rank() == 4);
    CHECK(Matrix{{1, 2}, {2, 4}}.rank() == 1);
    CHECK(Matrix{{1, 2, 3}, {4, 5, 6}}.rank() == 2);
}

TEST_CASE("inverse") {
    const Matrix a{{1, 2}, {3, 4}};
    CHECK(a.inverse() == Matrix{{-2, 1}, {Rational(3, 2), Rational(-1, 2)}});
    CHECK(a * a.inverse() == Matrix::identity(2));
    CHECK_THROWS_AS((Matrix{{1, 2}, {2, 4}}.inverse()), DomainError);
    CHECK_THROWS_AS(Matrix(2, 2).inverse(), DomainError);
}

TEST_CASE("kernel_basis") {
    const Matrix a{{1, 2, 3}};
    const Matrix k = a.kernel_basis();
    CHECK(k.cols() == 2);
    CHECK((a * k).is_zero());
    CHECK(Matrix::identity(3).kernel_basis().cols() == 0);
}

TEST_CASE("solve recovers the unique preimage") {
    const Matrix a{{1, 0}, {2, 1}, {0, 3}};  // full column rank
    const Matrix x{{5, -1}, {Rational(1, 2), 7}};
    CHECK(solve(a, a * x) == x);
    CHECK_THROWS_AS(solve(a, Matrix{{1, 0}, {0, 0}, {0, 0}}), DomainError);  // inconsistent
}

TEST_CASE("rank-nullity and transpose rank, seeded random") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng() % 5;
        const std::size_t cols = 1 + rng() % 6;
        const Matrix a = random_matrix(rows, cols, rng);
        const Matrix k = a.kernel_basis();
        CAPTURE(trial);
        CAPTURE(rows);
        CAPTURE(cols);
        CHECK(a.rank() + k.cols() == cols);
        CHECK((a * k).is_zero());
        CHECK(a.rank() == a.transpose().rank());
    }
}

TEST_CASE("inverse property, seeded random") {
    std::mt19937 rng(11);
    int done = 0;
    while (done < 20) {
        const std::size_t n = 1 + rng() % 5;
        const Matrix a = random_matrix(n, n, rng);
        if (a.rank() != n) continue;
        CHECK(a * a.inverse() == Matrix::identity(n));
        CHECK(a.inverse() * a == Matrix::identity(n));
        ++done;
    }
}

TEST_CASE("max_numerator_bits") {
    CHECK(max_numerator_bits(Matrix(2, 2)) == 0);
    CHECK(max_numerator_bits(Matrix{{1, 0}, {0, -9}}) == 4);
}
