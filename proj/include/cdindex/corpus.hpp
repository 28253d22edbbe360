#pragma once

/**
 * @file corpus.hpp
 * @brief Named collections of example posets.
 *
 * Grammar, items separated by commas:
 *
 *   item     := "default" | family ":" range modifier*
 *   range    := int | int ".." int
 *   modifier := "+pyramid" | "+barycentric"
 *
 * Modifiers apply left to right, e.g. "polygon:3..6+pyramid,simplex_fan:3".
 */

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "cdindex/barycentric.hpp"
#include "cdindex/error.hpp"
#include "cdindex/families.hpp"
#include "cdindex/poset.hpp"

namespace cdindex {

struct CorpusEntry {
    std::string name;
    GradedPoset poset;
};

namespace detail {

inline int parse_corpus_int(std::string_view s, std::string_view item)
{
    if (s.empty() || s.size() > 6) throw ParseError("bad number in corpus item '" + std::string(item) + "'");
    int v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("bad number in corpus item '" + std::string(item) + "'");
        v = v * 10 + (ch - '0');
    }
    return v;
}

inline void append_family(std::vector<CorpusEntry>& out, Family f, int lo, int hi, bool pyramid, bool bary)
{
    for (int k = lo; k <= hi; ++k) {
        const std::size_t first = out.size();
        out.push_back(CorpusEntry{std::string(family_name(f)) + "(" + std::to_string(k) + ")", build_family(f, k)});
        if (pyramid) out.push_back(CorpusEntry{"pyramid(" + out[first].name + ")", build_pyramid(out[first].poset)});
        const std::size_t last = out.size();
        if (bary)
            for (std::size_t i = first; i < last; ++i)
                if (out[i].poset.rank() <= 3)
                    out.push_back(CorpusEntry{"barycentric(" + out[i].name + ")", barycentric(out[i].poset).bposet});
    }
}

} // namespace detail

/**
 * polygons 3..12, simplex_fan 1..5, cube_fan 1..4, crosspoly_fan 1..4, the
 * pyramid over each, and the chain lattice of every member of rank <= 3.
 */
inline std::vector<CorpusEntry> default_corpus()
{
    std::vector<CorpusEntry> out;
    detail::append_family(out, Family::polygon, 3, 12, true, true);
    detail::append_family(out, Family::simplex_fan, 1, 5, true, true);
    detail::append_family(out, Family::cube_fan, 1, 4, true, true);
    detail::append_family(out, Family::crosspoly_fan, 1, 4, true, true);
    return out;
}

inline std::vector<CorpusEntry> parse_corpus(std::string_view list)
{
    std::vector<CorpusEntry> out;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const std::size_t comma = list.find(',', pos);
        std::string_view item = list.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        if (item.empty()) throw ParseError("empty corpus item");
        if (item == "default") {
            auto d = default_corpus();
            out.insert(out.end(), d.begin(), d.end());
        } else {
            const std::size_t colon = item.find(':');
            if (colon == std::string_view::npos) throw ParseError("corpus item '" + std::string(item) + "' lacks ':'");
            Family f;
            try {
                f = parse_family(item.substr(0, colon));
            } catch (const OutOfRange& e) {
                throw ParseError(e.what());
            }
            const std::string rest(item.substr(colon + 1));
            const std::size_t plus = rest.find('+');
            const std::string range = rest.substr(0, plus);
            std::string mods = plus == std::string::npos ? std::string{} : rest.substr(plus);
            int lo = 0, hi = 0;
            if (const auto dots = range.find(".."); dots != std::string::npos) {
                lo = detail::parse_corpus_int(range.substr(0, dots), item);
                hi = detail::parse_corpus_int(range.substr(dots + 2), item);
            } else {
                lo = hi = detail::parse_corpus_int(range, item);
            }
            if (hi < lo) throw ParseError("empty range in corpus item '" + std::string(item) + "'");
            std::vector<std::string> ops;
            while (!mods.empty()) {
                mods.erase(0, 1);
                const std::size_t next = mods.find('+');
                ops.push_back(mods.substr(0, next));
                mods = next == std::string::npos ? std::string{} : mods.substr(next);
            }
            for (int k = lo; k <= hi; ++k) {
                CorpusEntry e{std::string(family_name(f)) + "(" + std::to_string(k) + ")", build_family(f, k)};
                for (const auto& op : ops) {
                    if (op == "pyramid") {
                        e = {"pyramid(" + e.name + ")", build_pyramid(e.poset)};
                    } else if (op == "barycentric") {
                        e = {"barycentric(" + e.name + ")", barycentric(e.poset).bposet};
                    } else {
                        throw ParseError("unknown corpus modifier '" + op + "'");
                    }
                }
                out.push_back(std::move(e));
            }
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace cdindex
