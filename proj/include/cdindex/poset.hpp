#pragma once

/**
 * @file poset.hpp
 * @brief Finite graded posets with a unique bottom and top.
 *
 * A GradedPoset of rank n has a bottom of degree 0, a top of degree n+1, and
 * every cover raises the degree by one. Elements are addressed by dense
 * indices sorted by degree, so index order is a linear extension: the bottom
 * is element 0 and the top is the last element. The user-facing ids are
 * opaque strings.
 *
 * Posets are immutable once built and share their storage, so copies are
 * cheap and can be handed to concurrent readers.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdindex/detail/bit_matrix.hpp"
#include "cdindex/error.hpp"

namespace cdindex {

using Element = std::uint32_t;

inline constexpr Element no_element = static_cast<Element>(-1);

class PosetBuilder;

class GradedPoset {
public:
    /// The rank-0 poset {0, 1}.
    GradedPoset();

    int rank() const { return d_->rank; }
    std::size_t size() const { return d_->ids.size(); }

    Element bottom() const { return 0; }
    Element top() const { return static_cast<Element>(size() - 1); }

    const std::string& id(Element x) const { return d_->ids[x]; }
    int deg(Element x) const { return d_->degs[x]; }

    std::optional<Element> find(const std::string& id) const
    {
        const auto it = d_->index.find(id);
        if (it == d_->index.end()) return std::nullopt;
        return it->second;
    }

    Element index_of(const std::string& id) const
    {
        if (auto x = find(id)) return *x;
        throw OutOfRange("no element with id '" + id + "'");
    }

    std::span<const Element> upper_covers(Element x) const { return d_->up[x]; }
    std::span<const Element> lower_covers(Element x) const { return d_->down[x]; }

    /// Elements of degree k, in index order. Empty for k outside [0, n+1].
    std::span<const Element> of_degree(int k) const
    {
        if (k < 0 || k > rank() + 1) return {};
        return d_->by_degree[static_cast<std::size_t>(k)];
    }

    bool leq(Element x, Element y) const { return d_->above.test(x, y); }
    bool less(Element x, Element y) const { return x != y && leq(x, y); }

    /// Calls f(y) for every y >= x, in increasing index order.
    template <typename F>
    void for_each_above(Element x, F&& f) const
    {
        d_->above.for_each_in_row(x, [&](std::size_t y) { f(static_cast<Element>(y)); });
    }

    /// Calls f(y) for every y <= x, in increasing index order.
    template <typename F>
    void for_each_below(Element x, F&& f) const
    {
        d_->below.for_each_in_row(x, [&](std::size_t y) { f(static_cast<Element>(y)); });
    }

    /// Cover pairs (low, high) sorted by (low, high).
    std::vector<std::pair<Element, Element>> covers() const
    {
        std::vector<std::pair<Element, Element>> out;
        for (Element x = 0; x < size(); ++x)
            for (Element y : upper_covers(x)) out.emplace_back(x, y);
        return out;
    }

    const detail::BitMatrix& above_matrix() const { return d_->above; }
    const detail::BitMatrix& below_matrix() const { return d_->below; }

private:
    friend class PosetBuilder;

    struct Data {
        int rank = 0;
        std::vector<std::string> ids;
        std::vector<int> degs;
        std::vector<std::vector<Element>> up;
        std::vector<std::vector<Element>> down;
        std::vector<std::vector<Element>> by_degree;
        std::unordered_map<std::string, Element> index;
        detail::BitMatrix above;  // above(x, y) iff x <= y
        detail::BitMatrix below;  // below(y, x) iff x <= y
    };

    explicit GradedPoset(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

    std::shared_ptr<const Data> d_;
};

/**
 * Collects elements and covers, then validates them into a GradedPoset.
 *
 * A missing bottom (top) is adjoined under every element without lower
 * (upper) covers, using the id "_bot" ("_top") unless that id is taken.
 */
class PosetBuilder {
public:
    explicit PosetBuilder(int rank) : rank_(rank)
    {
        if (rank < 0) throw InvalidPoset("rank must be non-negative, got " + std::to_string(rank));
    }

    int rank() const { return rank_; }

    std::size_t add(const std::string& id, int deg)
    {
        if (deg < 0 || deg > rank_ + 1)
            throw InvalidPoset("element '" + id + "' has degree " + std::to_string(deg) + " outside [0, " +
                               std::to_string(rank_ + 1) + "]");
        if (!index_.emplace(id, ids_.size()).second) throw InvalidPoset("duplicate element id '" + id + "'");
        ids_.push_back(id);
        degs_.push_back(deg);
        return ids_.size() - 1;
    }

    bool has(const std::string& id) const { return index_.count(id) != 0; }

    void cover(std::size_t low, std::size_t high)
    {
        if (low >= ids_.size() || high >= ids_.size()) throw InvalidPoset("cover refers to unknown element");
        covers_.emplace_back(low, high);
    }

    void cover(const std::string& low, const std::string& high) { cover(lookup(low), lookup(high)); }

    /// Returns an id not used so far, derived from `stem`.
    std::string fresh_id(std::string stem) const
    {
        while (has(stem)) stem += '\'';
        return stem;
    }

    GradedPoset build(std::vector<std::string>* notices = nullptr) const;

private:
    std::size_t lookup(const std::string& id) const
    {
        const auto it = index_.find(id);
        if (it == index_.end()) throw InvalidPoset("cover refers to unknown element '" + id + "'");
        return it->second;
    }

    int rank_;
    std::vector<std::string> ids_;
    std::vector<int> degs_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

inline GradedPoset PosetBuilder::build(std::vector<std::string>* notices) const
{
    std::vector<std::string> ids = ids_;
    std::vector<int> degs = degs_;
    auto cov = covers_;
    const int n = rank_;

    std::vector<char> has_up(ids.size(), 0), has_down(ids.size(), 0);
    for (auto [lo, hi] : cov) {
        has_up[lo] = 1;
        has_down[hi] = 1;
    }

    const auto count_deg = [&](int k) { return std::count(degs.begin(), degs.end(), k); };
    if (count_deg(0) > 1) throw InvalidPoset("more than one element of degree 0");
    if (count_deg(n + 1) > 1) throw InvalidPoset("more than one element of degree " + std::to_string(n + 1));

    const std::size_t original = ids.size();
    if (count_deg(0) == 0) {
        const std::string bid = fresh_id("_bot");
        ids.push_back(bid);
        degs.push_back(0);
        const std::size_t b = ids.size() - 1;
        for (std::size_t x = 0; x < original; ++x)
            if (!has_down[x]) cov.emplace_back(b, x);
        if (notices) notices->push_back("adjoined bottom element '" + bid + "'");
    }
    if (count_deg(n + 1) == 0) {
        std::string tid = "_top";
        while (std::find(ids.begin(), ids.end(), tid) != ids.end()) tid += '\'';
        const std::size_t before = ids.size();
        ids.push_back(tid);
        degs.push_back(n + 1);
        const std::size_t t = ids.size() - 1;
        std::vector<char> up2(before, 0);
        for (auto [lo, hi] : cov) up2[lo] = 1;
        for (std::size_t x = 0; x < before; ++x)
            if (!up2[x]) cov.emplace_back(x, t);
        if (notices) notices->push_back("adjoined top element '" + tid + "'");
    }

    // Dense indices sorted by degree, stable in insertion order.
    const std::size_t N = ids.size();
    std::vector<std::size_t> order(N);
    for (std::size_t i = 0; i < N; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degs[a] < degs[b]; });
    std::vector<Element> pos(N);
    for (std::size_t i = 0; i < N; ++i) pos[order[i]] = static_cast<Element>(i);

    auto data = std::make_shared<GradedPoset::Data>();
    data->rank = n;
    data->ids.resize(N);
    data->degs.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
        data->ids[i] = ids[order[i]];
        data->degs[i] = degs[order[i]];
        data->index.emplace(data->ids[i], static_cast<Element>(i));
    }
    data->up.resize(N);
    data->down.resize(N);
    for (auto [lo0, hi0] : cov) {
        const Element lo = pos[lo0], hi = pos[hi0];
        if (data->degs[hi] != data->degs[lo] + 1)
            throw InvalidPoset("cover ('" + data->ids[lo] + "', '" + data->ids[hi] +
                               "') does not raise the degree by one");
        data->up[lo].push_back(hi);
        data->down[hi].push_back(lo);
    }
    for (std::size_t x = 0; x < N; ++x) {
        auto& u = data->up[x];
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        auto& d = data->down[x];
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
    }
    if (data->degs.front() != 0 || data->degs.back() != n + 1)
        throw InvalidPoset("poset has no unique bottom/top");
    for (std::size_t x = 0; x < N; ++x) {
        if (x + 1 != N && data->up[x].empty())
            throw InvalidPoset("element '" + data->ids[x] + "' of degree " + std::to_string(data->degs[x]) +
                               " is maximal below the top");
        if (x != 0 && data->down[x].empty())
            throw InvalidPoset("element '" + data->ids[x] + "' of degree " + std::to_string(data->degs[x]) +
                               " is minimal above the bottom");
    }
    data->by_degree.resize(static_cast<std::size_t>(n + 2));
    for (Element x = 0; x < N; ++x) data->by_degree[static_cast<std::size_t>(data->degs[x])].push_back(x);

    data->above = detail::BitMatrix(N);
    for (std::size_t i = N; i-- > 0;) {
        data->above.set(i, i);
        for (Element y : data->up[i]) data->above.or_row(i, y);
    }
    data->below = detail::BitMatrix(N);
    for (std::size_t i = 0; i < N; ++i) {
        data->below.set(i, i);
        for (Element y : data->down[i]) data->below.or_row(i, y);
    }
    return GradedPoset(std::move(data));
}

inline GradedPoset::GradedPoset() : GradedPoset(PosetBuilder(0).build()) {}

/**
 * An induced subposet together with the map back to its parent.
 * `to_parent[x]` is `no_element` for an adjoined bottom or top.
 */
struct ElementSubposet {
    GradedPoset parent;
    GradedPoset poset;
    std::vector<Element> to_parent;
};

/**
 * Induced subposet on `members` (indices into `parent`), re-graded to rank
 * `rank`. Degrees are inherited. A member of degree rank+1 becomes the top;
 * otherwise a fresh top is adjoined. A bottom is adjoined when 0 is not a
 * member. Throws InvalidPoset when the result is not graded.
 */
inline ElementSubposet induced_subposet(const GradedPoset& parent, const std::vector<Element>& members, int rank)
{
    std::vector<char> in(parent.size(), 0);
    for (Element x : members) {
        if (x >= parent.size()) throw OutOfRange("member index out of range");
        in[x] = 1;
    }
    PosetBuilder b(rank);
    std::vector<Element> sorted;
    for (Element x = 0; x < parent.size(); ++x)
        if (in[x]) sorted.push_back(x);
    for (Element x : sorted) {
        if (parent.deg(x) > rank + 1)
            throw InvalidPoset("member '" + parent.id(x) + "' exceeds degree " + std::to_string(rank + 1));
        b.add(parent.id(x), parent.deg(x));
    }
    for (Element x : sorted)
        for (Element y : parent.upper_covers(x))
            if (in[y]) b.cover(parent.id(x), parent.id(y));
    ElementSubposet out;
    out.parent = parent;
    out.poset = b.build();
    out.to_parent.resize(out.poset.size(), no_element);
    for (Element x = 0; x < out.poset.size(); ++x) {
        if (auto p = parent.find(out.poset.id(x)); p && in[*p]) out.to_parent[x] = *p;
    }
    return out;
}

/// Elements of degree at most m, with a top adjoined at degree m+1.
inline ElementSubposet skeleton(const GradedPoset& P, int m)
{
    if (m < 0 || m > P.rank())
        throw OutOfRange("skeleton level " + std::to_string(m) + " outside [0, " + std::to_string(P.rank()) + "]");
    std::vector<Element> members;
    for (Element x = 0; x < P.size(); ++x)
        if (P.deg(x) <= m) members.push_back(x);
    return induced_subposet(P, members, m);
}

/// Star of s: every element >= s other than the top.
inline std::vector<Element> star(const GradedPoset& P, Element s)
{
    if (s >= P.size() || s == P.top()) throw OutOfRange("star is defined for elements below the top");
    std::vector<Element> out;
    P.for_each_above(s, [&](Element y) {
        if (y != P.top()) out.push_back(y);
    });
    return out;
}

/// The principal ideal [s] with s as its top, a poset of rank deg(s) - 1.
inline ElementSubposet ideal(const GradedPoset& P, Element s)
{
    if (s >= P.size() || s == P.bottom()) throw OutOfRange("ideal requires an element above the bottom");
    std::vector<Element> members;
    P.for_each_below(s, [&](Element y) { members.push_back(y); });
    return induced_subposet(P, members, P.deg(s) - 1);
}

} // namespace cdindex
