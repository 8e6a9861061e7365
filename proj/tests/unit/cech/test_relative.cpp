#include <catch_amalgamated.hpp>

#include "relcone/cech/cohomology.hpp"
#include "support/nerves.hpp"

using namespace relcone;
using namespace relcone::testing;

namespace {

const auto ZZ = Coefficients::integers();
const AbelianGroupPresentation Z{1, {}};
const AbelianGroupPresentation zero{};

} // namespace

TEST_CASE("point into the three-arc circle", "[cech]")
{
    const CoverMap m(point_nerve(), three_arc_circle(), {1});
    REQUIRE(relative_cech_cohomology(m, ZZ, 1).group == Z);
    REQUIRE(relative_cech_cohomology(m, ZZ, 0).group == zero);
    REQUIRE(relative_cech_cohomology(m, ZZ, 2).group == zero);
}

TEST_CASE("identity cover map has vanishing relative cohomology", "[cech]")
{
    for (const auto& n : {three_arc_circle(), rp2_nerve(), s3_nerve()}) {
        const auto m = CoverMap::identity(n);
        for (int q = 0; q <= n.dimension() + 1; ++q)
            for (const auto& coeff : {ZZ, Coefficients::modular(2), Coefficients::rationals()})
                REQUIRE(relative_cech_cohomology(m, coeff, q).is_trivial());
    }
}

TEST_CASE("empty source gives the cohomology of the target", "[cech]")
{
    const CoverMap m(Nerve(), rp2_nerve(), {});
    for (int q = 0; q <= 3; ++q)
        REQUIRE(relative_cech_cohomology(m, ZZ, q) == cech_cohomology(rp2_nerve(), ZZ, q));
}

TEST_CASE("refinement condition is enforced", "[cech]")
{
    // an intersecting pair mapped onto the non-intersecting pair... there is none in the 3-arc
    // circle, so use two disjoint sets instead
    const Nerve disjoint(2, {});
    REQUIRE_THROWS_AS(CoverMap(three_arc_circle(), disjoint, {0, 1, 1}), ValidationError);
    REQUIRE_THROWS_AS(CoverMap(point_nerve(), disjoint, {2}), ValidationError);
    REQUIRE_NOTHROW(CoverMap(three_arc_circle(), point_nerve(), {0, 0, 0}));
}

TEST_CASE("collapse of the projective plane to a point", "[cech]")
{
    // LES: H^{q-1}(pt) -> H^{q-1}(RP²) -> H^q(Φ) -> H^q(pt)
    const CoverMap m(rp2_nerve(), point_nerve(), std::vector<std::size_t>(6, 0));
    REQUIRE(relative_cech_cohomology(m, ZZ, 3).group == (AbelianGroupPresentation{0, {2}}));
    REQUIRE(relative_cech_cohomology(m, ZZ, 2).group == zero);
    REQUIRE(relative_cech_cohomology(m, ZZ, 1).group == zero);
    REQUIRE(relative_cech_cohomology(m, ZZ, 0).group == zero);
}

TEST_CASE("pullback respects orientation", "[cech]")
{
    // reverse the order of the three arcs
    const CoverMap m(three_arc_circle(), three_arc_circle(), {2, 1, 0});
    const auto g = CechCochain::from_entries(three_arc_circle(), ZZ, 1, {{{0, 1}, 5}});
    const auto h = pullback(m, g);
    // (Φ*g)(1, 2) = g(1, 0) = -5
    REQUIRE(h.at(three_arc_circle(), {1, 2}) == -5);
    REQUIRE(h.at(three_arc_circle(), {0, 1}) == 0);
    const auto phi = m.pullback();
    REQUIRE(phi.component(0) == (IntegerMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}
