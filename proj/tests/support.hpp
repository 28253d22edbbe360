#pragma once

// Independent oracles and generators shared by the test binaries.

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cdindex/cdindex.hpp"

namespace testsupport {

using namespace cdindex;

// Degree-preserving bijection preserving covers, by backtracking.
inline bool isomorphic(const GradedPoset& P, const GradedPoset& Q)
{
    if (P.rank() != Q.rank() || P.size() != Q.size()) return false;
    for (int k = 0; k <= P.rank() + 1; ++k)
        if (P.of_degree(k).size() != Q.of_degree(k).size()) return false;
    if (P.covers().size() != Q.covers().size()) return false;

    const std::size_t N = P.size();
    std::vector<Element> map(N, no_element);
    std::vector<char> used(N, 0);
    const auto consistent = [&](Element x, Element y) {
        if (P.upper_covers(x).size() != Q.upper_covers(y).size()) return false;
        if (P.lower_covers(x).size() != Q.lower_covers(y).size()) return false;
        for (Element lo : P.lower_covers(x)) {
            const auto& qd = Q.lower_covers(y);
            if (std::find(qd.begin(), qd.end(), map[lo]) == qd.end()) return false;
        }
        return true;
    };
    // P's elements are in degree order, so lower covers are mapped first.
    std::function<bool(Element)> go = [&](Element x) {
        if (x == N) return true;
        for (Element y : Q.of_degree(P.deg(x))) {
            if (used[y] || !consistent(x, y)) continue;
            map[x] = y;
            used[y] = 1;
            if (go(x + 1)) return true;
            used[y] = 0;
            map[x] = no_element;
        }
        return false;
    };
    return go(0);
}

// f_S by listing every chain.
inline std::vector<Integer> brute_flag_f(const GradedPoset& P)
{
    std::vector<Integer> f(std::size_t{1} << P.rank(), 0);
    for_each_chain(P, [&](const Chain& c) { f[chain_type(P, c)] += 1; });
    return f;
}

// A graded poset of the given rank with 1..max_width elements per degree;
// every element gets at least one lower and one upper cover.
template <typename Rng>
GradedPoset random_graded_poset(Rng& rng, int rank, int max_width)
{
    std::uniform_int_distribution<int> width(1, max_width);
    std::bernoulli_distribution coin(0.45);
    PosetBuilder b(rank);
    std::vector<std::vector<std::size_t>> level(static_cast<std::size_t>(rank + 2));
    level[0].push_back(b.add("b", 0));
    for (int k = 1; k <= rank; ++k) {
        const int w = width(rng);
        for (int i = 0; i < w; ++i) level[static_cast<std::size_t>(k)].push_back(b.add("e" + std::to_string(k) + "_" + std::to_string(i), k));
    }
    level[static_cast<std::size_t>(rank + 1)].push_back(b.add("t", rank + 1));
    for (int k = 1; k <= rank + 1; ++k) {
        const auto& lo = level[static_cast<std::size_t>(k - 1)];
        const auto& hi = level[static_cast<std::size_t>(k)];
        std::vector<char> lo_has(lo.size(), 0);
        for (std::size_t h : hi) {
            bool any = false;
            for (std::size_t i = 0; i < lo.size(); ++i)
                if (coin(rng)) {
                    b.cover(lo[i], h);
                    lo_has[i] = 1;
                    any = true;
                }
            if (!any) {
                const std::size_t i = std::uniform_int_distribution<std::size_t>(0, lo.size() - 1)(rng);
                b.cover(lo[i], h);
                lo_has[i] = 1;
            }
        }
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (!lo_has[i]) b.cover(lo[i], hi[std::uniform_int_distribution<std::size_t>(0, hi.size() - 1)(rng)]);
    }
    return b.build();
}

// Homogeneous of degree n with coefficients in [-lo, hi].
template <typename Rng>
CdPolynomial random_cd_polynomial(Rng& rng, int n, int lo = 9, int hi = 9)
{
    std::uniform_int_distribution<int> coeff(-lo, hi);
    CdPolynomial p;
    for (const auto& w : enumerate_cd_words(n)) p.add(w, coeff(rng));
    return p;
}

template <typename Rng>
SkeletonFunction random_function(Rng& rng, const GradedPoset& P, int level)
{
    std::uniform_int_distribution<int> v(-20, 20);
    SkeletonFunction f(P, level);
    for (Element x : f.domain()) f.set(x, v(rng));
    return f;
}

inline CdPolynomial cd(const std::string& text) { return parse_cd(text); }

inline GradedPoset polygon_minus_facet(int k)
{
    const auto P = build_family(Family::polygon, k);
    return remove_elements(P, {P.index_of("f" + std::to_string(k - 1))});
}

inline GradedPoset square_pyramid() { return build_pyramid(build_family(Family::polygon, 4)); }

// The pyramid over a square with the star of its apex deleted.
inline GradedPoset pyramid_without_apex_star()
{
    const auto P = square_pyramid();
    Element apex = no_element;
    for (Element x : P.of_degree(1))
        if (P.id(x).rfind("apex", 0) == 0) apex = x;
    return remove_elements(P, star(P, apex));
}

// Rank-1 fan with a single ray.
inline GradedPoset single_ray()
{
    PosetBuilder b(1);
    b.add("_bot", 0);
    b.add("r", 1);
    b.add("_top", 2);
    b.cover("_bot", "r");
    b.cover("r", "_top");
    return b.build();
}

} // namespace testsupport
