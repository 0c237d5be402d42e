#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaff/errors.hpp"
#include "qaff/relations.hpp"
#include "qaff/sl2.hpp"

#include <algorithm>
#include <utility>
#include <vector>

using namespace qaff;

namespace {

const QParam q2{Rational(2)};

std::vector<std::pair<int, unsigned>> tag_pairs(const std::vector<IrreducibleTag>& tags) {
    std::vector<std::pair<int, unsigned>> out;
    for (const IrreducibleTag& t : tags) out.emplace_back(t.epsilon, t.d);
    std::sort(out.begin(), out.end());
    return out;
}

// Matrix of D -> XD - DX acting on vec(D), written into `rows` starting at
// row block `block`.  Entry at (i,j),(k,l) is X_ik d_jl - d_ik X_lj.
void fill_commutator_block(Matrix& rows, std::size_t block, const Matrix& x) {
    const std::size_t n = x.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Rational coeff = 0;
                    if (j == l) coeff += x.at(i, k);
                    if (i == k) coeff -= x.at(l, j);
                    rows.at(block * n * n + i * n + j, k * n + l) = coeff;
                }
}

// dim of { D : Dk = kD, De = eD, Df = fD }
std::size_t commutant_dim(const Sl2Module& m) {
    const std::size_t n = m.dim();
    Matrix rows(3 * n * n, n * n);
    fill_commutator_block(rows, 0, m.k);
    fill_commutator_block(rows, 1, m.e);
    fill_commutator_block(rows, 2, m.f);
    return kernel(rows).dim();
}

}  // namespace

TEST_CASE("irreducible_module frozen matrices") {
    const Sl2Module m = irreducible_module(1, 2, q2);
    CHECK(m.k == Matrix{{4, 0, 0}, {0, 1, 0}, {0, 0, Rational(1, 4)}});
    CHECK(m.f == Matrix{{0, 0, 0}, {1, 0, 0}, {0, Rational(5, 2), 0}});
    CHECK(m.e == Matrix{{0, Rational(5, 2), 0}, {0, 0, 1}, {0, 0, 0}});

    const Sl2Module neg = irreducible_module(-1, 1, q2);
    CHECK(neg.k == Matrix{{-2, 0}, {0, Rational(-1, 2)}});
    CHECK(neg.e == Matrix{{0, -1}, {0, 0}});
    CHECK(neg.f == Matrix{{0, 0}, {1, 0}});
}

TEST_CASE("irreducibles satisfy the defining relations, both signs") {
    for (const Rational& qv : {Rational(2), Rational(3, 2), Rational(5)}) {
        const QParam q{qv};
        const std::string qs = to_text(qv);
        for (int eps : {1, -1}) {
            for (unsigned d = 0; d <= 8; ++d) {
                CAPTURE(qs);
                CAPTURE(eps);
                CAPTURE(d);
                CHECK(check_sl2_relations(irreducible_module(eps, d, q)).passed());
            }
        }
    }
}

TEST_CASE("direct_sum blocks") {
    const Sl2Module s = direct_sum(irreducible_module(1, 1, q2), irreducible_module(-1, 0, q2));
    CHECK(s.dim() == 3);
    CHECK(s.k == Matrix{{2, 0, 0}, {0, Rational(1, 2), 0}, {0, 0, -1}});
}

TEST_CASE("decompose recovers a single irreducible") {
    for (int eps : {1, -1}) {
        const auto tags = decompose_irreducibles(irreducible_module(eps, 3, q2));
        REQUIRE(tags.size() == 1);
        CHECK(tags[0].epsilon == eps);
        CHECK(tags[0].d == 3);
        CHECK(tags[0].basis.cols() == 4);
    }
}

TEST_CASE("decompose splits mixed block sums") {
    const Sl2Module m = direct_sum(
        direct_sum(irreducible_module(1, 2, q2), irreducible_module(1, 4, q2)),
        irreducible_module(-1, 2, q2));
    const auto tags = decompose_irreducibles(m);
    CHECK(tag_pairs(tags) ==
          std::vector<std::pair<int, unsigned>>{{-1, 2}, {1, 2}, {1, 4}});

    // chain bases assemble to a basis of the whole space
    Matrix all = tags[0].basis;
    for (std::size_t i = 1; i < tags.size(); ++i) all = hcat(all, tags[i].basis);
    CHECK(all.cols() == m.dim());
    CHECK(all.rank() == m.dim());
}

TEST_CASE("decompose handles multiplicity") {
    const Sl2Module twice = direct_sum(irreducible_module(1, 2, q2),
                                       irreducible_module(1, 2, q2));
    const auto tags = decompose_irreducibles(twice);
    CHECK(tag_pairs(tags) == std::vector<std::pair<int, unsigned>>{{1, 2}, {1, 2}});
}

TEST_CASE("decompose is a reassembly fixed point") {
    const Sl2Module m = direct_sum(
        direct_sum(irreducible_module(-1, 3, QParam{Rational(3, 2)}),
                   irreducible_module(1, 0, QParam{Rational(3, 2)})),
        irreducible_module(1, 3, QParam{Rational(3, 2)}));
    const auto tags = decompose_irreducibles(m);
    Sl2Module rebuilt = irreducible_module(tags[0].epsilon, tags[0].d, m.q);
    for (std::size_t i = 1; i < tags.size(); ++i)
        rebuilt = direct_sum(rebuilt, irreducible_module(tags[i].epsilon, tags[i].d, m.q));
    CHECK(rebuilt.dim() == m.dim());
    CHECK(tag_pairs(decompose_irreducibles(rebuilt)) == tag_pairs(tags));
}

TEST_CASE("decompose rejects what it cannot certify") {
    SUBCASE("non-diagonalizable k") {
        const Sl2Module m{q2, Matrix{{2, 1}, {0, 2}}, Matrix(2, 2), Matrix(2, 2)};
        CHECK_THROWS_AS(decompose_irreducibles(m), DomainError);
    }
    SUBCASE("eigenvalue outside the signed powers") {
        const Sl2Module m{q2, Matrix{{7, 0}, {0, 2}}, Matrix(2, 2), Matrix(2, 2)};
        CHECK_THROWS_AS(decompose_irreducibles(m), DomainError);
    }
    SUBCASE("negative q") {
        const Sl2Module m{QParam{Rational(-2)}, Matrix{{-2, 0}, {0, Rational(-1, 2)}},
                          Matrix(2, 2), Matrix(2, 2)};
        CHECK_THROWS_AS(decompose_irreducibles(m), DomainError);
    }
    SUBCASE("chains do not close") {
        // right eigenvalues, zero e and f: no chain of length 2 exists
        const Sl2Module m{q2, Matrix{{2, 0}, {0, Rational(1, 2)}}, Matrix(2, 2), Matrix(2, 2)};
        CHECK_THROWS_AS(decompose_irreducibles(m), DomainError);
    }
}

TEST_CASE("commutant dimension counts the summands") {
    // Schur: one irreducible -> scalars only; V+V -> full 2x2 algebra
    CHECK(commutant_dim(irreducible_module(1, 2, q2)) == 1);
    CHECK(commutant_dim(irreducible_module(-1, 4, q2)) == 1);
    CHECK(commutant_dim(direct_sum(irreducible_module(1, 2, q2),
                                   irreducible_module(-1, 2, q2))) == 2);
    CHECK(commutant_dim(direct_sum(irreducible_module(1, 0, q2),
                                   irreducible_module(1, 2, q2))) == 2);
    CHECK(commutant_dim(direct_sum(irreducible_module(1, 1, q2),
                                   irreducible_module(1, 1, q2))) == 4);
}

TEST_CASE("restrict_to_sl2 of a constructed module") {
    const HatModule m = construct_module(gen_evaluation(1, Rational(1), q2)).module;
    const Sl2Module at0 = restrict_to_sl2(m, 0);
    CHECK(at0.k == m.K0);
    CHECK(at0.e == m.e0p);
    CHECK(at0.f == m.e0m);
    const auto tags = decompose_irreducibles(at0);
    REQUIRE(tags.size() == 1);
    CHECK(tags[0].epsilon == 1);
    CHECK(tags[0].d == 1);

    const Sl2Module at1 = restrict_to_sl2(m, 1);
    CHECK(check_sl2_relations(at1).passed());
}

TEST_CASE("ef kernel equivalence, exhaustive over small irreducibles") {
    for (int eps : {1, -1}) {
        for (unsigned d = 0; d <= 6; ++d) {
            const Sl2Module m = irreducible_module(eps, d, q2);
            for (unsigned i = 0; 2 * i <= d; ++i) {
                Matrix v(m.dim(), 1);
                v.at(i, 0) = 1;  // eigenvalue eps q^{d-2i}, nonnegative exponent
                CAPTURE(eps);
                CAPTURE(d);
                CAPTURE(i);
                CHECK(ef_kernel_check(m, v, eps, d - 2 * i));
            }
        }
    }
}

TEST_CASE("ef kernel equivalence sees through mixed eigenspaces") {
    const Sl2Module m = direct_sum(irreducible_module(1, 2, q2),
                                   irreducible_module(1, 4, q2));
    const Subspace at_q2 = eigenspace(m.k, Rational(4));  // u_0 of V(1,2), u_1 of V(1,4)
    REQUIRE(at_q2.dim() == 2);
    for (std::size_t col = 0; col < at_q2.dim(); ++col)
        CHECK(ef_kernel_check(m, at_q2.basis().column(col), 1, 2));
    // a mixture that is killed by neither e nor f^3
    CHECK(ef_kernel_check(m, at_q2.basis().column(0) + at_q2.basis().column(1), 1, 2));
}

TEST_CASE("ef_kernel_check rejects non-eigenvectors") {
    const Sl2Module m = irreducible_module(1, 2, q2);
    Matrix v(3, 1);
    v.at(0, 0) = 1;
    v.at(2, 0) = 1;  // mixes weights q^2 and q^-2
    CHECK_THROWS_AS(ef_kernel_check(m, v, 1, 2), DomainError);
    CHECK_THROWS_AS(ef_kernel_check(m, Matrix(3, 1), 1, 2), DomainError);  // zero vector
}

TEST_CASE("render_tags format") {
    const auto tags = decompose_irreducibles(direct_sum(
        direct_sum(irreducible_module(1, 2, q2), irreducible_module(1, 2, q2)),
        irreducible_module(-1, 0, q2)));
    CHECK(render_tags(tags) == "(+1, 2, 2)\n(-1, 0, 1)\n");
}
