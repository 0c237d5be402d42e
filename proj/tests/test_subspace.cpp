#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaff/errors.hpp"
#include "qaff/subspace.hpp"

#include <random>
#include <vector>

using namespace qaff;

namespace {

Matrix random_columns(std::size_t ambient, std::size_t count, std::mt19937& rng) {
    Matrix m(ambient, count);
    for (std::size_t i = 0; i < ambient; ++i)
        for (std::size_t j = 0; j < count; ++j)
            m.at(i, j) = Rational(static_cast<int>(rng() % 7) - 3);
    return m;
}

Subspace random_subspace(std::size_t ambient, std::mt19937& rng) {
    return Subspace::span(random_columns(ambient, rng() % (ambient + 1), rng));
}

}  // namespace

TEST_CASE("canonical form makes equality structural") {
    const Subspace a = Subspace::span(Matrix{{1, 0}, {0, 1}, {1, 1}});
    const Subspace b = Subspace::span(Matrix{{1, 1}, {1, -1}, {2, 0}});
    CHECK(a == b);
    CHECK(a.dim() == 2);
    CHECK(a.ambient() == 3);

    // dependent and zero columns collapse
    CHECK(Subspace::span(Matrix{{1, 2, 0}, {1, 2, 0}}).dim() == 1);
    CHECK(Subspace::span(Matrix(3, 2)) == Subspace::zero(3));
    CHECK(Subspace::span(Matrix::identity(4)) == Subspace::full(4));
}

TEST_CASE("zero and full") {
    CHECK(Subspace::zero(5).dim() == 0);
    CHECK(Subspace::zero(5).is_zero());
    CHECK(Subspace::full(5).dim() == 5);
    CHECK(Subspace::full(5).contains(Subspace::zero(5)));
}

TEST_CASE("contains") {
    const Subspace s = Subspace::span(Matrix{{1}, {-2}, {0}});
    CHECK(s.contains(Matrix{{Rational(1, 2)}, {-1}, {0}}));
    CHECK(s.contains(Matrix(3, 1)));  // zero vector
    CHECK_FALSE(s.contains(Matrix{{1}, {-2}, {1}}));
    CHECK(Subspace::full(3).contains(s));
    CHECK_FALSE(s.contains(Subspace::full(3)));
}

TEST_CASE("kernel and eigenspace") {
    CHECK(kernel(Matrix{{0, 0}, {1, Rational(3, 2)}}) == Subspace::span(Matrix{{3}, {-2}}));
    CHECK(kernel(Matrix::identity(3)).is_zero());
    CHECK(kernel(Matrix(2, 3)) == Subspace::full(3));

    const Matrix k{{Rational(1, 2), 0}, {0, 2}};
    CHECK(eigenspace(k, Rational(1, 2)) == Subspace::span(Matrix{{1}, {0}}));
    CHECK(eigenspace(k, Rational(2)) == Subspace::span(Matrix{{0}, {1}}));
    CHECK(eigenspace(k, Rational(7)).is_zero());
}

TEST_CASE("sum and intersect, known values") {
    const Subspace x = Subspace::span(Matrix{{1}, {0}, {0}});
    const Subspace y = Subspace::span(Matrix{{0}, {1}, {0}});
    const Subspace xy = Subspace::span(Matrix{{1, 1}, {1, -1}, {0, 0}});
    CHECK(sum(x, y) == xy);
    CHECK(intersect(xy, Subspace::span(Matrix{{1, 0}, {0, 0}, {0, 1}})) == x);
    CHECK(intersect(x, y).is_zero());

    const std::vector<Subspace> parts = {x, y};
    CHECK(sum(std::span<const Subspace>(parts)) == xy);
    CHECK(is_direct_sum(std::span<const Subspace>(parts)));
    const std::vector<Subspace> overlapping = {xy, x};
    CHECK_FALSE(is_direct_sum(std::span<const Subspace>(overlapping)));
}

TEST_CASE("modular law, seeded random") {
    // a <= c  implies  a + (b n c) = (a + b) n c
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng() % 5;
        const Subspace c = random_subspace(n, rng);
        // carve a out of c
        const Subspace a =
            c.is_zero() ? c : intersect(c, random_subspace(n, rng));
        const Subspace b = random_subspace(n, rng);
        CAPTURE(trial);
        CAPTURE(n);
        REQUIRE(c.contains(a));
        CHECK(sum(a, intersect(b, c)) == intersect(sum(a, b), c));
    }
}

TEST_CASE("inclusion-exclusion of dimensions, seeded random") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        const Subspace a = random_subspace(n, rng);
        const Subspace b = random_subspace(n, rng);
        CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
    }
}

TEST_CASE("image") {
    const Matrix shift{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    CHECK(image(shift, Subspace::span(Matrix{{1}, {0}, {0}})) ==
          Subspace::span(Matrix{{0}, {1}, {0}}));
    CHECK(image(shift, Subspace::full(3)) ==
          Subspace::span(Matrix{{0, 0}, {1, 0}, {0, 1}}));
    CHECK(image(Matrix(3, 3), Subspace::full(3)).is_zero());
}

TEST_CASE("restricts_to_bijection") {
    const Matrix shift{{0, 0}, {1, 0}};
    const Subspace u0 = Subspace::span(Matrix{{1}, {0}});
    const Subspace u1 = Subspace::span(Matrix{{0}, {1}});
    CHECK(restricts_to_bijection(shift, 1, u0, u1));
    CHECK_FALSE(restricts_to_bijection(shift, 1, u1, u0));  // shift kills u1
    CHECK(restricts_to_bijection(Matrix::identity(2), 3, u0, u0));
    CHECK_FALSE(restricts_to_bijection(shift, 2, u0, u1));
}

TEST_CASE("operator_with_eigenspaces rebuilds the diagonal action") {
    const std::vector<Subspace> parts = {Subspace::span(Matrix{{1}, {1}}),
                                         Subspace::span(Matrix{{0}, {1}})};
    const std::vector<Rational> eigs = {Rational(1, 2), Rational(2)};
    const Matrix k = operator_with_eigenspaces(parts, eigs);
    CHECK(k == Matrix{{Rational(1, 2), 0}, {Rational(-3, 2), 2}});
    CHECK(eigenspace(k, Rational(1, 2)) == parts[0]);
    CHECK(eigenspace(k, Rational(2)) == parts[1]);

    const std::vector<Subspace> short_parts = {parts[0]};
    const std::vector<Rational> one = {Rational(2)};
    CHECK_THROWS_AS(operator_with_eigenspaces(short_parts, one), DomainError);
}
