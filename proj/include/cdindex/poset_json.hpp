#pragma once

/**
 * @file poset_json.hpp
 * @brief JSON reading and writing for posets, flag data and certificates.
 *
 * Poset format:
 *   {"rank": n, "elements": [{"id": "a", "deg": 1}, ...], "covers": [["a", "b"], ...]}
 * Bottom and top may be omitted; they are adjoined as "_bot" / "_top".
 */

#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdindex/error.hpp"
#include "cdindex/flag.hpp"
#include "cdindex/gorenstein.hpp"
#include "cdindex/numeric.hpp"
#include "cdindex/phi.hpp"
#include "cdindex/poset.hpp"
#include "cdindex/subset.hpp"

namespace cdindex {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline Json integer_to_json(const Integer& k)
{
    if (k >= std::numeric_limits<long long>::min() && k <= std::numeric_limits<long long>::max())
        return static_cast<long long>(k);
    return to_string(k);
}

inline Json poset_to_json(const GradedPoset& P)
{
    Json j;
    j["rank"] = P.rank();
    Json elems = Json::array();
    for (Element x = 0; x < P.size(); ++x) elems.push_back({{"id", P.id(x)}, {"deg", P.deg(x)}});
    j["elements"] = std::move(elems);
    Json covers = Json::array();
    for (const auto& [lo, hi] : P.covers()) covers.push_back({P.id(lo), P.id(hi)});
    j["covers"] = std::move(covers);
    return j;
}

/// Throws ParseError on malformed JSON, InvalidPoset on a bad poset.
inline GradedPoset poset_from_json(const Json& j, std::vector<std::string>* notices = nullptr)
{
    try {
        if (!j.is_object()) throw ParseError("poset JSON must be an object");
        if (!j.contains("rank") || !j.at("rank").is_number_integer()) throw ParseError("missing integer \"rank\"");
        PosetBuilder b(j.at("rank").get<int>());
        if (!j.contains("elements") || !j.at("elements").is_array()) throw ParseError("missing array \"elements\"");
        for (const auto& e : j.at("elements")) {
            if (!e.is_object() || !e.contains("id") || !e.contains("deg") || !e.at("id").is_string() ||
                !e.at("deg").is_number_integer())
                throw ParseError("each element needs a string \"id\" and an integer \"deg\"");
            const auto id = e.at("id").get<std::string>();
            if (b.has(id)) throw InvalidPoset("duplicate element id '" + id + "'");
            b.add(id, e.at("deg").get<int>());
        }
        if (j.contains("covers")) {
            if (!j.at("covers").is_array()) throw ParseError("\"covers\" must be an array");
            for (const auto& c : j.at("covers")) {
                if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
                    throw ParseError("each cover must be a pair of ids");
                const auto lo = c[0].get<std::string>(), hi = c[1].get<std::string>();
                if (!b.has(lo) || !b.has(hi)) throw InvalidPoset("cover mentions unknown id");
                b.cover(lo, hi);
            }
        }
        return b.build(notices);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

inline GradedPoset poset_from_json_text(const std::string& text, std::vector<std::string>* notices = nullptr)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    return poset_from_json(j, notices);
}

inline Json flag_vector_to_json(const FlagVector& fv)
{
    Json j = Json::object();
    for (Subset s = 0; s < fv.f.size(); ++s) j[subset_key(s)] = integer_to_json(fv.f[s]);
    return j;
}

inline Json subset_polynomial_to_json(const SubsetPolynomial& p)
{
    Json j = Json::object();
    for (const auto& [s, k] : p.terms) j[subset_key(s)] = integer_to_json(k);
    return j;
}

inline Json betti_to_json(const HomologyProfile& h)
{
    Json j = Json::array();
    for (auto b : h.betti) j.push_back(b);
    return j;
}

inline Json certificate_to_json(const GorensteinCertificate& c)
{
    Json j;
    j["gorenstein_star"] = c.gorenstein_star;
    if (c.failing_face)
        j["failing_face"] = *c.failing_face;
    else
        j["failing_face"] = nullptr;
    j["betti"] = betti_to_json(c.betti);
    if (!c.reason.empty()) j["reason"] = c.reason;
    return j;
}

} // namespace cdindex
