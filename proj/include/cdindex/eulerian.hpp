#pragma once

/**
 * @file eulerian.hpp
 * @brief Möbius function and the Eulerian test.
 */

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cdindex/numeric.hpp"
#include "cdindex/poset.hpp"

namespace cdindex {

/// mu(x, y) for every y, zero where x is not below y.
inline std::vector<Integer> mobius_row(const GradedPoset& P, Element x)
{
    std::vector<Integer> mu(P.size(), 0);
    mu[x] = 1;
    // Index order is a linear extension, so every z < y is finished before y.
    P.for_each_above(x, [&](Element y) {
        if (y == x) return;
        Integer s = 0;
        P.for_each_below(y, [&](Element z) {
            if (z != y && P.leq(x, z)) s += mu[z];
        });
        mu[y] = -s;
    });
    return mu;
}

inline Integer mobius(const GradedPoset& P, Element x, Element y)
{
    if (x >= P.size() || y >= P.size()) throw OutOfRange("element index out of range");
    if (!P.leq(x, y)) throw OutOfRange("mobius requires x <= y ('" + P.id(x) + "', '" + P.id(y) + "')");
    return mobius_row(P, x)[y];
}

/// First interval [x, y], x < y, with unequal even and odd counts, if any.
inline std::optional<std::pair<Element, Element>> first_non_eulerian_interval(const GradedPoset& P)
{
    const auto& above = P.above_matrix();
    const auto& below = P.below_matrix();
    const std::size_t W = above.words();
    std::vector<std::uint64_t> even(W, 0);
    for (Element z = 0; z < P.size(); ++z)
        if (P.deg(z) % 2 == 0) even[z / 64] |= std::uint64_t{1} << (z % 64);

    std::optional<std::pair<Element, Element>> bad;
    for (Element x = 0; x < P.size() && !bad; ++x) {
        const auto* ux = above.row(x);
        P.for_each_above(x, [&](Element y) {
            if (bad || y == x) return;
            const auto* dy = below.row(y);
            long evens = 0, total = 0;
            for (std::size_t w = 0; w < W; ++w) {
                const std::uint64_t iv = ux[w] & dy[w];
                total += std::popcount(iv);
                evens += std::popcount(iv & even[w]);
            }
            if (2 * evens != total) bad = std::pair{x, y};
        });
    }
    return bad;
}

/// Every interval [x, y] with x < y has as many elements of even as of odd degree.
inline bool is_eulerian(const GradedPoset& P) { return !first_non_eulerian_interval(P); }

/// mu(x, y) = (-1)^(deg y - deg x) for every x <= y.
inline bool is_eulerian_mobius(const GradedPoset& P)
{
    for (Element x = 0; x < P.size(); ++x) {
        const auto mu = mobius_row(P, x);
        bool ok = true;
        P.for_each_above(x, [&](Element y) {
            if (mu[y] != sign_power(P.deg(y) - P.deg(x))) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

} // namespace cdindex
