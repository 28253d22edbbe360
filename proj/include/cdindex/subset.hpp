#pragma once

/**
 * @file subset.hpp
 * @brief Subsets of {1..n} packed into a machine word.
 *
 * Element i of {1..n} lives in bit i-1. Ranks above 30 are rejected by the
 * modules that enumerate 2^n subsets long before memory would allow them.
 */

#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "cdindex/error.hpp"

namespace cdindex {

using Subset = std::uint32_t;

inline constexpr int max_subset_rank = 30;

constexpr Subset full_subset(int n) { return n <= 0 ? Subset{0} : ((Subset{1} << n) - 1); }

constexpr Subset singleton(int i) { return Subset{1} << (i - 1); }

constexpr bool contains(Subset s, int i) { return (s >> (i - 1)) & 1U; }

constexpr int subset_size(Subset s) { return std::popcount(s); }

constexpr Subset complement(Subset s, int n) { return full_subset(n) & ~s; }

inline std::vector<int> subset_members(Subset s)
{
    std::vector<int> out;
    for (int i = 1; s != 0; ++i, s >>= 1)
        if (s & 1U) out.push_back(i);
    return out;
}

/// Sorted comma-joined members, e.g. {1,3} -> "1,3"; the empty set is "".
inline std::string subset_key(Subset s)
{
    std::ostringstream os;
    bool first = true;
    for (int i : subset_members(s)) {
        if (!first) os << ',';
        os << i;
        first = false;
    }
    return os.str();
}

inline Subset parse_subset_key(const std::string& key, int n)
{
    Subset s = 0;
    if (key.empty()) return s;
    std::istringstream is(key);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        int i = 0;
        try {
            std::size_t used = 0;
            i = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("bad subset key '" + key + "'");
        }
        if (i < 1 || i > n) throw ParseError("subset member " + tok + " outside 1.." + std::to_string(n));
        s |= singleton(i);
    }
    return s;
}

inline void check_subset_rank(int n)
{
    if (n < 0 || n > max_subset_rank)
        throw OutOfRange("rank " + std::to_string(n) + " outside supported range 0.." +
                         std::to_string(max_subset_rank));
}

} // namespace cdindex
