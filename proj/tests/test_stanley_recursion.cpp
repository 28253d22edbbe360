#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace cdindex;
using namespace testsupport;

TEST_CASE("Stanley recursion on the standard examples")
{
    for (int k = 3; k <= 12; ++k)
        CHECK(cd_index_stanley(build_family(Family::polygon, k)) == cd("c^2 + " + std::to_string(k - 2) + "*d"));
    CHECK(cd_index_stanley(build_family(Family::simplex_fan, 1)) == cd("c"));
    CHECK(cd_index_stanley(square_pyramid()) == cd("c^3 + 3*cd + 3*dc"));
    CHECK(cd_index_stanley(GradedPoset{}) == CdPolynomial::one());
}

TEST_CASE("lower intervals carry their own cd-indices")
{
    const auto P = square_pyramid();
    const auto memo = lower_interval_cd_indices(P);
    for (Element s = 1; s < P.size(); ++s) {
        CHECK(memo[s] == cd_index_flag(ideal(P, s).poset));
        CHECK(memo[s].is_homogeneous(P.deg(s) - 1));
    }
}

TEST_CASE("Stanley recursion matches flags across families")
{
    for (const auto& e : parse_corpus("simplex_fan:1..6,cube_fan:1..5,crosspoly_fan:1..5,polygon:3..5+pyramid+pyramid"))
        CHECK(cd_index_stanley(e.poset) == cd_index_flag(e.poset));
}

TEST_CASE("non-Eulerian input stops the recursion")
{
    CHECK_THROWS_AS(cd_index_stanley(build_family(Family::chain, 2)), NonIntegralCoefficients);
    CHECK_THROWS_AS(cd_index_stanley(polygon_minus_facet(5)), NonIntegralCoefficients);
}
