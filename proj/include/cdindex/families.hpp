#pragma once

/**
 * @file families.hpp
 * @brief Builders for the standard example posets.
 *
 * Fans are represented by their face posets: the zero cone is the bottom,
 * a k-dimensional cone has degree k, and a top is adjoined above the
 * maximal cones.
 */

#include <string>
#include <string_view>
#include <vector>

#include "cdindex/error.hpp"
#include "cdindex/poset.hpp"

namespace cdindex {

enum class Family { polygon, simplex_fan, cube_fan, crosspoly_fan, chain };

inline std::string_view family_name(Family f)
{
    switch (f) {
    case Family::polygon: return "polygon";
    case Family::simplex_fan: return "simplex_fan";
    case Family::cube_fan: return "cube_fan";
    case Family::crosspoly_fan: return "crosspoly_fan";
    case Family::chain: return "chain";
    }
    return "?";
}

inline Family parse_family(std::string_view name)
{
    for (Family f : {Family::polygon, Family::simplex_fan, Family::cube_fan, Family::crosspoly_fan, Family::chain})
        if (family_name(f) == name) return f;
    if (name == "polygons") return Family::polygon;
    throw OutOfRange("unknown family '" + std::string(name) + "'");
}

namespace detail {

inline GradedPoset polygon(int k)
{
    PosetBuilder b(2);
    b.add("_bot", 0);
    for (int i = 0; i < k; ++i) b.add("r" + std::to_string(i), 1);
    for (int i = 0; i < k; ++i) b.add("f" + std::to_string(i), 2);
    for (int i = 0; i < k; ++i) {
        const std::string f = "f" + std::to_string(i);
        b.cover("_bot", "r" + std::to_string(i));
        b.cover("r" + std::to_string(i), f);
        b.cover("r" + std::to_string((i + 1) % k), f);
    }
    return b.build();
}

// Proper nonempty subsets of {0..n}, ordered by inclusion.
inline GradedPoset simplex_fan(int n)
{
    PosetBuilder b(n);
    const unsigned verts = static_cast<unsigned>(n) + 1;
    const unsigned full = (1U << verts) - 1;
    const auto name = [&](unsigned s) {
        std::string id = "{";
        bool first = true;
        for (unsigned v = 0; v < verts; ++v)
            if (s >> v & 1U) {
                if (!first) id += ',';
                id += std::to_string(v);
                first = false;
            }
        return id + "}";
    };
    const auto label = [&](unsigned s) { return s == 0 ? std::string("_bot") : name(s); };
    for (unsigned s = 0; s < full; ++s) b.add(label(s), std::popcount(s));
    for (unsigned s = 0; s < full; ++s)
        for (unsigned v = 0; v < verts; ++v) {
            const unsigned t = s | (1U << v);
            if (t != s && t != full) b.cover(label(s), label(t));
        }
    return b.build();
}

// Faces of the n-cube as words over {0,1,*}; the all-* word is the cube itself.
inline GradedPoset cube_fan(int n)
{
    PosetBuilder b(n);
    std::vector<std::string> faces;
    std::string w(static_cast<std::size_t>(n), '0');
    const auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            faces.push_back(w);
            return;
        }
        for (char ch : {'0', '1', '*'}) {
            w[static_cast<std::size_t>(i)] = ch;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    b.add("_bot", 0);
    const std::string whole(static_cast<std::size_t>(n), '*');
    for (const auto& f : faces)
        if (f != whole) b.add(f, 1 + static_cast<int>(std::count(f.begin(), f.end(), '*')));
    for (const auto& f : faces) {
        if (f == whole) continue;
        if (std::count(f.begin(), f.end(), '*') == 0) b.cover("_bot", f);
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] == '*') continue;
            std::string g = f;
            g[i] = '*';
            if (g != whole) b.cover(f, g);
        }
    }
    return b.build();
}

// Simplices spanned by {+e_i, -e_i} with no antipodal pair.
inline GradedPoset crosspoly_fan(int n)
{
    PosetBuilder b(n);
    std::vector<std::string> faces;
    std::vector<int> signs(static_cast<std::size_t>(n), 0);
    const auto name = [&](const std::vector<int>& s) {
        std::string id;
        for (int i = 0; i < n; ++i)
            if (s[static_cast<std::size_t>(i)] != 0)
                id += (s[static_cast<std::size_t>(i)] > 0 ? "+" : "-") + std::to_string(i + 1);
        return id.empty() ? std::string("_bot") : id;
    };
    std::vector<std::vector<int>> all;
    const auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            all.push_back(signs);
            return;
        }
        for (int s : {0, 1, -1}) {
            signs[static_cast<std::size_t>(i)] = s;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    for (const auto& s : all)
        b.add(name(s), static_cast<int>(std::count_if(s.begin(), s.end(), [](int v) { return v != 0; })));
    for (const auto& s : all)
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] != 0) continue;
            for (int v : {1, -1}) {
                auto t = s;
                t[i] = v;
                b.cover(name(s), name(t));
            }
        }
    return b.build();
}

inline GradedPoset chain(int r)
{
    PosetBuilder b(r);
    std::string prev = "_bot";
    b.add(prev, 0);
    for (int i = 1; i <= r; ++i) {
        const std::string id = "x" + std::to_string(i);
        b.add(id, i);
        b.cover(prev, id);
        prev = id;
    }
    return b.build();
}

} // namespace detail

/**
 * polygon(k): complete 2-dimensional fan with k maximal cones, k >= 3.
 * simplex_fan(n), cube_fan(n), crosspoly_fan(n): face posets of the boundary
 * of the n-simplex, n-cube and n-cross-polytope, n >= 1 (rank n).
 * chain(r): one element per degree, r >= 0; Eulerian only for r = 0.
 */
inline GradedPoset build_family(Family kind, int param)
{
    const auto need = [&](int lo) {
        if (param < lo)
            throw OutOfRange(std::string(family_name(kind)) + " requires parameter >= " + std::to_string(lo) +
                             ", got " + std::to_string(param));
    };
    switch (kind) {
    case Family::polygon: need(3); return detail::polygon(param);
    case Family::simplex_fan:
        need(1);
        if (param > 24) throw OutOfRange("simplex_fan parameter too large");
        return detail::simplex_fan(param);
    case Family::cube_fan:
        need(1);
        if (param > 12) throw OutOfRange("cube_fan parameter too large");
        return detail::cube_fan(param);
    case Family::crosspoly_fan:
        need(1);
        if (param > 12) throw OutOfRange("crosspoly_fan parameter too large");
        return detail::crosspoly_fan(param);
    case Family::chain: need(0); return detail::chain(param);
    }
    throw OutOfRange("unknown family");
}

/**
 * Face poset of the pyramid over a polytope whose boundary face poset is
 * `base`. The old top becomes the base facet; every other element F gains a
 * partner F+apex one degree higher, with F+apex <= G+apex iff F <= G.
 */
inline GradedPoset build_pyramid(const GradedPoset& base)
{
    const int n = base.rank();
    if (n < 1) throw OutOfRange("pyramid base must have rank >= 1");
    PosetBuilder b(n + 1);
    std::vector<std::string> plain(base.size()), lifted(base.size());
    for (Element x = 0; x < base.size(); ++x) {
        if (x == base.top()) continue;
        plain[x] = base.id(x);
        b.add(plain[x], base.deg(x));
    }
    plain[base.top()] = b.fresh_id("_base" + std::to_string(n));
    b.add(plain[base.top()], n + 1);
    for (Element x = 0; x < base.size(); ++x) {
        if (x == base.top()) continue;
        lifted[x] = b.fresh_id(x == base.bottom() ? "apex" + std::to_string(n + 1) : base.id(x) + "^");
        b.add(lifted[x], base.deg(x) + 1);
    }
    for (auto [x, y] : base.covers()) {
        b.cover(plain[x], plain[y]);
        if (y != base.top()) b.cover(lifted[x], lifted[y]);
    }
    for (Element x = 0; x < base.size(); ++x)
        if (x != base.top()) b.cover(plain[x], lifted[x]);
    return b.build();
}

/// Induced subposet on everything except `removed`, at the same rank.
inline GradedPoset remove_elements(const GradedPoset& P, const std::vector<Element>& removed)
{
    std::vector<char> gone(P.size(), 0);
    for (Element x : removed) {
        if (x == P.bottom() || x == P.top()) throw OutOfRange("cannot remove the bottom or top");
        gone[x] = 1;
    }
    std::vector<Element> keep;
    for (Element x = 0; x < P.size(); ++x)
        if (!gone[x] && x != P.top()) keep.push_back(x);
    return induced_subposet(P, keep, P.rank()).poset;
}

} // namespace cdindex
