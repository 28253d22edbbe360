#pragma once

/**
 * @file barycentric.hpp
 * @brief Chains of a graded poset and the chain lattice B(P).
 */

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cdindex/error.hpp"
#include "cdindex/poset.hpp"
#include "cdindex/subset.hpp"

namespace cdindex {

using Chain = std::vector<Element>;

/**
 * Calls f(chain) for every chain of P minus {0, 1}, the empty chain included.
 * Chains are visited depth-first with members in increasing index order.
 */
template <typename F>
void for_each_chain(const GradedPoset& P, F&& f)
{
    Chain cur;
    f(static_cast<const Chain&>(cur));
    const auto extend = [&](auto&& self, Element last) -> void {
        P.for_each_above(last, [&](Element y) {
            if (y == last || y == P.top()) return;
            cur.push_back(y);
            f(static_cast<const Chain&>(cur));
            self(self, y);
            cur.pop_back();
        });
    };
    extend(extend, P.bottom());
}

/// Chains sorted by length, then lexicographically.
inline std::vector<Chain> enumerate_chains(const GradedPoset& P, std::size_t limit = 5'000'000)
{
    std::vector<Chain> out;
    for_each_chain(P, [&](const Chain& c) {
        if (out.size() >= limit) throw OutOfRange("chain count exceeds limit " + std::to_string(limit));
        out.push_back(c);
    });
    std::sort(out.begin(), out.end(), [](const Chain& a, const Chain& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

inline Subset chain_type(const GradedPoset& P, const Chain& c)
{
    Subset s = 0;
    for (Element x : c) s |= singleton(P.deg(x));
    return s;
}

/**
 * B(P) with its projection to P and the degree set of each chain.
 * Entry x of `projection` is the largest member of chain x (the bottom for
 * the empty chain); the top of B projects to the top of P and carries the
 * full degree set.
 */
struct BarycentricResult {
    GradedPoset source;
    GradedPoset bposet;
    std::vector<Element> projection;
    std::vector<Subset> typeset;
};

inline std::string chain_id(const GradedPoset& P, const Chain& c)
{
    std::string id = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) id += '<';
        id += P.id(c[i]);
    }
    return id + "]";
}

inline BarycentricResult barycentric(const GradedPoset& P, std::size_t limit = 5'000'000)
{
    check_subset_rank(P.rank());
    const auto chains = enumerate_chains(P, limit);
    std::map<Chain, std::size_t> index;
    PosetBuilder b(P.rank());
    for (std::size_t i = 0; i < chains.size(); ++i) {
        index.emplace(chains[i], i);
        b.add(i == 0 ? std::string("_bot") : chain_id(P, chains[i]), static_cast<int>(chains[i].size()));
    }
    for (std::size_t i = 1; i < chains.size(); ++i) {
        const Chain& c = chains[i];
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            Chain face;
            face.reserve(c.size() - 1);
            for (std::size_t j = 0; j < c.size(); ++j)
                if (j != drop) face.push_back(c[j]);
            b.cover(index.at(face), i);
        }
    }
    BarycentricResult r;
    r.source = P;
    r.bposet = b.build();
    r.projection.resize(r.bposet.size());
    r.typeset.resize(r.bposet.size());
    // Builder order is stable by degree and chains are already sorted by length.
    for (Element x = 0; x + 1 < r.bposet.size(); ++x) {
        const Chain& c = chains[x];
        r.projection[x] = c.empty() ? P.bottom() : c.back();
        r.typeset[x] = chain_type(P, c);
    }
    r.projection[r.bposet.top()] = P.top();
    r.typeset[r.bposet.top()] = full_subset(P.rank());
    return r;
}

} // namespace cdindex
