#include <catch_amalgamated.hpp>

#include "relcone/algebra/lattice.hpp"
#include "support/random_matrices.hpp"

using namespace relcone;

TEST_CASE("cokernel presentations", "[cokernel]")
{
    auto two = cokernel_presentation(IntegerMatrix{{2}});
    REQUIRE(two.free_rank == 0);
    REQUIRE(two.torsion == IntegerVector{2});

    auto four = cokernel_presentation(IntegerMatrix{{1, 0}, {0, 4}});
    REQUIRE(four.free_rank == 0);
    REQUIRE(four.torsion == IntegerVector{4});

    auto zero = cokernel_presentation(IntegerMatrix(3, 2));
    REQUIRE(zero.free_rank == 3);
    REQUIRE(zero.torsion.empty());
}

TEST_CASE("cokernel is invariant under unimodular changes of basis", "[cokernel][property]")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = dim(rng), c = dim(rng);
        const auto a = testing::random_matrix(rng, r, c, 5);
        const auto p = testing::random_unimodular(rng, r);
        const auto q = testing::random_unimodular(rng, c);
        REQUIRE(abs(determinant(p)) == 1);
        REQUIRE(cokernel_presentation(a) == cokernel_presentation(p * a * q));
    }
}

TEST_CASE("presentation rendering", "[cokernel]")
{
    REQUIRE(AbelianGroupPresentation{}.to_string() == "0");
    REQUIRE((AbelianGroupPresentation{1, {}}).to_string() == "ℤ");
    REQUIRE((AbelianGroupPresentation{2, {2, 6}}).to_string() == "ℤ^2 ⊕ ℤ/2 ⊕ ℤ/6");
    REQUIRE((AbelianGroupPresentation{0, {2}}).to_ascii() == "Z/2");
    // ℤ/2 ⊕ ℤ/3 ≅ ℤ/6
    REQUIRE(AbelianGroupPresentation::from_orders({2, 3, 1}) == (AbelianGroupPresentation{0, {6}}));
    REQUIRE(direct_sum({1, {2}}, {0, {4}}) == (AbelianGroupPresentation{1, {2, 4}}));
}

TEST_CASE("integer_solve", "[solve]")
{
    REQUIRE(integer_solve(IntegerMatrix{{2}}, {4}) == IntegerVector{2});
    REQUIRE_FALSE(integer_solve(IntegerMatrix{{2}}, {3}).has_value());
    auto x = integer_solve(IntegerMatrix{{1, 0}, {0, 6}}, {5, 12});
    REQUIRE(x == IntegerVector{5, 2});
    REQUIRE_THROWS_AS(integer_solve(IntegerMatrix{{1, 0}}, {1, 2}), DimensionError);
}

TEST_CASE("integer_solve agrees with the rational solve", "[solve][property]")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::uniform_int_distribution<int> entry(-6, 6);
    int solved = 0, obstructed = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = dim(rng), c = dim(rng);
        const auto a = testing::random_matrix(rng, r, c, 3);
        IntegerVector b(r);
        if (trial % 2 == 0) {
            IntegerVector x0(c);
            for (auto& v : x0)
                v = entry(rng);
            b = a.apply(x0);
        } else {
            for (auto& v : b)
                v = entry(rng);
        }
        auto x = integer_solve(a, b);
        auto q = rational_solve(to_rational(a), to_rational(b));
        if (x) {
            ++solved;
            REQUIRE(a.apply(*x) == b);
            REQUIRE(q.has_value());
        } else {
            ++obstructed;
            // No integer solution: either no rational one, or every rational one lies
            // off the lattice. The latter is witnessed by a nontrivial cokernel class.
            if (q) {
                const auto k = rational_kernel(to_rational(a));
                if (k.cols() == 0)
                    REQUIRE_FALSE(is_integral(*q));
                REQUIRE_FALSE(cokernel_presentation(a).torsion.empty());
            }
        }
    }
    REQUIRE(solved > 0);
    REQUIRE(obstructed > 0);
}

TEST_CASE("kernel and image bases", "[lattice]")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = testing::random_matrix(rng, dim(rng), dim(rng), 4);
        const auto k = integer_kernel_basis(a);
        REQUIRE((a * k).is_zero());
        REQUIRE(k.cols() == a.cols() - rank(to_rational(a)));
        // Saturated: the kernel lattice has torsion-free cokernel in ℤ^cols.
        REQUIRE(cokernel_presentation(k).torsion.empty());

        const auto im = image_basis(a);
        REQUIRE(im.cols() == rank(a));
        for (std::size_t j = 0; j < a.cols(); ++j)
            REQUIRE(integer_solve(im, a.column(j)).has_value());
        for (std::size_t j = 0; j < im.cols(); ++j)
            REQUIRE(integer_solve(a, im.column(j)).has_value());
    }
}

TEST_CASE("rational helpers", "[rational]")
{
    const RationalMatrix a{{2, 1}, {1, 1}};
    const auto inv = rational_inverse(a);
    REQUIRE(a * inv == RationalMatrix::identity(2));
    REQUIRE_THROWS_AS(rational_inverse(RationalMatrix{{1, 2}, {2, 4}}), ValidationError);
    REQUIRE(determinant(IntegerMatrix{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}) == -2);
}

TEST_CASE("subquotient of the ×2 relation", "[subquotient]")
{
    // ℤ^2 / ⟨(2,0)⟩ ≅ ℤ/2 ⊕ ℤ
    const Subquotient q(2, IntegerMatrix::identity(2), IntegerMatrix{{2}, {0}});
    REQUIRE(q.presentation() == (AbelianGroupPresentation{1, {2}}));
    REQUIRE(q.is_zero_class({2, 0}));
    REQUIRE_FALSE(q.is_zero_class({1, 0}));
    REQUIRE_FALSE(q.is_zero_class({0, 1}));
    for (std::size_t g = 0; g < q.size(); ++g) {
        IntegerVector expected(q.size());
        expected[g] = 1;
        REQUIRE(q.coordinates(q.generators()[g]) == expected);
    }
}

TEST_CASE("subquotient coordinates are additive", "[subquotient][property]")
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        const auto z = testing::random_matrix(rng, 5, 3, 3);
        const auto b = z * testing::random_matrix(rng, 3, 2, 3);
        const Subquotient q(5, z, b);
        REQUIRE(q.presentation() == cokernel_presentation(
                                        // relations in coordinates of a basis of Z
                                        [&] {
                                            const auto zb = image_basis(z);
                                            IntegerSolver s(zb);
                                            IntegerMatrix rel(zb.cols(), b.cols());
                                            for (std::size_t j = 0; j < b.cols(); ++j) {
                                                auto c = *s.solve(b.column(j));
                                                for (std::size_t i = 0; i < c.size(); ++i)
                                                    rel(i, j) = c[i];
                                            }
                                            return rel;
                                        }()));
        IntegerVector c1(3), c2(3);
        for (auto& v : c1)
            v = entry(rng);
        for (auto& v : c2)
            v = entry(rng);
        const auto v1 = z.apply(c1), v2 = z.apply(c2);
        auto lhs = q.coordinates(add(v1, v2));
        auto rhs = add(q.coordinates(v1), q.coordinates(v2));
        for (std::size_t i = 0; i < rhs.size(); ++i)
            if (q.orders()[i] != 0)
                mpz_fdiv_r(rhs[i].get_mpz_t(), rhs[i].get_mpz_t(), q.orders()[i].get_mpz_t());
        REQUIRE(lhs == rhs);
        REQUIRE(q.is_zero_class(b.column(0)));
    }
}
