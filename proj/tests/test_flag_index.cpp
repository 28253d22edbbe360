#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace cdindex;
using namespace testsupport;

namespace {

Subset S(std::initializer_list<int> members)
{
    Subset s = 0;
    for (int i : members) s |= singleton(i);
    return s;
}

// h_T straight from the definition.
Integer h_by_definition(const FlagVector& fv, Subset t)
{
    Integer acc = 0;
    for (Subset s = 0; s <= t; ++s) {
        if ((s & ~t) != 0) continue;
        if (subset_size(t & ~s) % 2 == 0)
            acc += fv.at(s);
        else
            acc -= fv.at(s);
    }
    return acc;
}

} // namespace

TEST_CASE("flag f-vectors")
{
    const auto p4 = flag_f(build_family(Family::polygon, 4));
    CHECK(p4.at(0) == 1);
    CHECK(p4.at(S({1})) == 4);
    CHECK(p4.at(S({2})) == 4);
    CHECK(p4.at(S({1, 2})) == 8);

    const auto pyr = flag_f(square_pyramid());
    CHECK(pyr.at(S({1})) == 5);
    CHECK(pyr.at(S({2})) == 8);
    CHECK(pyr.at(S({3})) == 5);
    CHECK(pyr.at(S({1, 2})) == 16);
    CHECK(pyr.at(S({2, 3})) == 16);
    CHECK(pyr.at(S({1, 3})) == 16);
    CHECK(pyr.at(S({1, 2, 3})) == 32);
}

TEST_CASE("flag f-vector agrees with chain enumeration")
{
    std::mt19937 rng(3);
    for (const auto& P : default_corpus()) CHECK(flag_f(P.poset).f == brute_flag_f(P.poset));
    for (int i = 0; i < 50; ++i) {
        const auto P = random_graded_poset(rng, std::uniform_int_distribution<int>(0, 5)(rng), 3);
        CHECK(flag_f(P).f == brute_flag_f(P));
    }
}

TEST_CASE("flag h-vectors")
{
    for (int k = 3; k <= 10; ++k) {
        const auto h = flag_h(flag_f(build_family(Family::polygon, k)));
        CHECK(h.at(0) == 1);
        CHECK(h.at(S({1})) == k - 1);
        CHECK(h.at(S({2})) == k - 1);
        CHECK(h.at(S({1, 2})) == 1);
    }
    const auto hc = flag_h(flag_f(build_family(Family::chain, 2)));
    CHECK(hc.at(S({1})) == 0);
    CHECK(hc.at(S({2})) == 0);
    CHECK(hc.at(S({1, 2})) == 0);

    const auto fv = flag_f(build_family(Family::cube_fan, 4));
    const auto h = flag_h(fv);
    for (Subset t = 0; t <= full_subset(4); ++t) CHECK(h.at(t) == h_by_definition(fv, t));
    CHECK(flag_f_from_h(h) == fv);
}

TEST_CASE("cd-index by flags")
{
    for (int k = 3; k <= 12; ++k)
        CHECK(cd_index_flag(build_family(Family::polygon, k)) == cd("c^2 + " + std::to_string(k - 2) + "*d"));
    CHECK(cd_index_flag(square_pyramid()) == cd("c^3 + 3*cd + 3*dc"));
    CHECK(cd_index_flag(build_family(Family::simplex_fan, 1)) == cd("c"));
    CHECK_THROWS_AS(cd_index_flag(build_family(Family::chain, 2)), NotACdPolynomial);
}

TEST_CASE("perturbed flag vector is rejected")
{
    std::mt19937 rng(11);
    const auto fv = flag_f(build_family(Family::polygon, 6));
    for (int i = 0; i < 20; ++i) {
        auto g = fv;
        const Subset s = std::uniform_int_distribution<Subset>(1, 3)(rng);
        g.f[s] += std::uniform_int_distribution<int>(1, 5)(rng);
        CHECK_THROWS_AS(to_cd(flag_h(g)), NotACdPolynomial);
    }
}

TEST_CASE("duality")
{
    for (int k = 3; k <= 8; ++k) CHECK(verify_duality(build_family(Family::polygon, k)));
    for (const auto& P : default_corpus()) CHECK(verify_duality(P.poset));
    // chain(2): h_1 = h_2 = 0 but h_{} = 1 while h_{1,2} = 0.
    const auto hc = flag_h(flag_f(build_family(Family::chain, 2)));
    CHECK(hc.at(S({1})) == hc.at(S({2})));
    CHECK(hc.at(0) != hc.at(S({1, 2})));
    CHECK_FALSE(verify_duality(build_family(Family::chain, 2)));

    // Self-dual flag numbers without being Eulerian: a1 lies on three edges.
    PosetBuilder b(2);
    for (const char* a : {"a1", "a2", "a3"}) b.add(a, 1);
    for (const char* x : {"x1", "x2", "x3"}) b.add(x, 2);
    for (const auto& [a, x] : std::vector<std::pair<std::string, std::string>>{
             {"a1", "x1"}, {"a2", "x1"}, {"a1", "x2"}, {"a3", "x2"}, {"a1", "x3"}, {"a3", "x3"}})
        b.cover(a, x);
    const auto lopsided = b.build();
    CHECK_FALSE(is_eulerian(lopsided));
    CHECK(verify_duality(lopsided));
    CHECK_FALSE(verify_duality(polygon_minus_facet(4)));
}

TEST_CASE("skeleton polynomials")
{
    const auto P = square_pyramid();
    const auto p2 = skeleton_poincare(P, 2);
    const auto [f, g] = skeleton_cd_split(p2);
    CHECK(f == cd("c^2 + 3*d"));
    CHECK(g == cd("3*c"));

    CHECK(skeleton_poincare(P, 3) == flag_h(flag_f(P)));
    const auto p0 = skeleton_poincare(P, 0);
    CHECK(p0.terms == std::map<Subset, Integer>{{0, 1}});

    // Truncating the full index agrees with counting chains in the skeleton.
    for (int m = 0; m <= 3; ++m) {
        const auto sk = skeleton(P, m).poset;
        const auto hs = flag_h(flag_f(sk));
        CHECK(skeleton_poincare(P, m) == hs);
    }
    CHECK_THROWS_AS(skeleton_poincare(P, 4), OutOfRange);
}

TEST_CASE("skeleton split reproduces the cd-index")
{
    for (const auto& entry : parse_corpus("simplex_fan:2..5,cube_fan:2..4,crosspoly_fan:3..4,polygon:5+pyramid")) {
        const auto& P = entry.poset;
        const int n = P.rank();
        const auto [f, g] = skeleton_cd_split(skeleton_poincare(P, n - 1));
        CHECK(f * CdPolynomial::c() + g * CdPolynomial::d() == cd_index_flag(P));
    }
}
