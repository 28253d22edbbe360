#pragma once

/**
 * @file shelling.hpp
 * @brief Quasi-convex cd-data, shelling sums and the Pi decomposition.
 *
 * Facets of a rank n poset are its degree-n elements. A quasi-convex poset
 * is completed by semisuspension: one new facet whose boundary is the
 * boundary of the whole poset.
 */

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "cdindex/cd_polynomial.hpp"
#include "cdindex/error.hpp"
#include "cdindex/flag.hpp"
#include "cdindex/gorenstein.hpp"
#include "cdindex/poset.hpp"

namespace cdindex {

/// Degree n-1 elements under exactly one facet.
inline std::vector<Element> boundary_coatoms(const GradedPoset& P)
{
    const int n = P.rank();
    std::vector<Element> out;
    if (n < 1) return out;
    for (Element x : P.of_degree(n - 1)) {
        std::size_t above = 0;
        for (Element y : P.upper_covers(x))
            if (P.deg(y) == n) ++above;
        if (above == 1) out.push_back(x);
    }
    return out;
}

enum class CompleteInput { reject, unchanged };

/**
 * P plus a facet covering exactly the boundary coatoms. A complete P (no
 * boundary) is returned as is or rejected, per `complete`.
 * Throws NotQuasiConvex unless is_quasi_convex(P).
 */
inline GradedPoset semisuspend(const GradedPoset& P, CompleteInput complete = CompleteInput::unchanged)
{
    const int n = P.rank();
    if (n < 1) throw NotQuasiConvex("semisuspension needs rank >= 1");
    if (!is_quasi_convex(P)) throw NotQuasiConvex("input is not quasi-convex");
    const auto bnd = boundary_coatoms(P);
    if (bnd.empty()) {
        if (complete == CompleteInput::reject) throw NotQuasiConvex("input is complete; nothing to semisuspend");
        return P;
    }
    PosetBuilder b(n);
    for (Element x = 0; x < P.size(); ++x) b.add(P.id(x), P.deg(x));
    for (const auto& [lo, hi] : P.covers()) b.cover(lo, hi);
    const std::size_t s = b.add(b.fresh_id("_susp"), n);
    for (Element x : bnd) b.cover(x, s);
    b.cover(s, P.top());
    return b.build();
}

struct QuasiConvexIndex {
    CdPolynomial interior;  // degree n
    CdPolynomial boundary;  // degree n-1; zero for complete input
};

inline QuasiConvexIndex cd_index_quasiconvex(const GradedPoset& P)
{
    const auto bnd = boundary_of(P);
    if (!bnd) {
        if (!is_gorenstein_star(P)) throw NotQuasiConvex("input is not quasi-convex");
        return {cd_index_flag(P), {}};
    }
    const CdPolynomial full = cd_index_flag(semisuspend(P));
    const CdPolynomial b = cd_index_flag(bnd->poset);
    return {full - b * CdPolynomial::c(), b};
}

struct ShellingStep {
    std::size_t step;  // 1-based position in the order
    std::string facet;
    CdPolynomial f;
    CdPolynomial g;
};

/**
 * Per-step data of a facet order. Step i >= 2 intersects the ideal of the
 * i-th facet with the ideals of the earlier ones, re-grades the result to
 * rank n-1 and splits its quasi-convex index into (f_i, g_i).
 */
inline std::vector<ShellingStep> shelling_steps(const GradedPoset& P, const std::vector<std::string>& order)
{
    const int n = P.rank();
    if (n < 1) throw OutOfRange("shelling needs rank >= 1");
    const auto facets = P.of_degree(n);
    std::vector<Element> seq;
    std::set<Element> seen;
    for (const auto& id : order) {
        const auto x = P.find(id);
        if (!x) throw ShellingInvalid(seq.size() + 1, "no element with id '" + id + "'");
        if (P.deg(*x) != n) throw ShellingInvalid(seq.size() + 1, "'" + id + "' is not a facet");
        if (!seen.insert(*x).second) throw ShellingInvalid(seq.size() + 1, "'" + id + "' repeats");
        seq.push_back(*x);
    }
    if (seq.size() != facets.size())
        throw ShellingInvalid(seq.size() + 1, "order lists " + std::to_string(seq.size()) + " of " +
                                                  std::to_string(facets.size()) + " facets");

    std::vector<ShellingStep> out;
    std::vector<char> earlier(P.size(), 0);  // union of earlier ideals
    P.for_each_below(seq[0], [&](Element z) { earlier[z] = 1; });
    for (std::size_t i = 1; i < seq.size(); ++i) {
        const Element s = seq[i];
        std::vector<Element> members;
        P.for_each_below(s, [&](Element z) {
            if (z != s && earlier[z]) members.push_back(z);
        });
        ElementSubposet minus;
        try {
            minus = induced_subposet(P, members, n - 1);
        } catch (const InvalidPoset& e) {
            throw ShellingInvalid(i + 1, "intersection at '" + P.id(s) + "' is not graded of rank " +
                                             std::to_string(n - 1) + ": " + e.what());
        }
        if (!is_quasi_convex(minus.poset))
            throw ShellingInvalid(i + 1, "intersection at '" + P.id(s) + "' is not quasi-convex");
        auto q = cd_index_quasiconvex(minus.poset);
        out.push_back({i + 1, P.id(s), std::move(q.interior), std::move(q.boundary)});
        P.for_each_below(s, [&](Element z) { earlier[z] = 1; });
    }
    return out;
}

/// Sum of f_i c + g_i d over the steps.
inline CdPolynomial shelling_sum(const std::vector<ShellingStep>& steps)
{
    CdPolynomial total;
    for (const auto& st : steps) total += st.f * CdPolynomial::c() + st.g * CdPolynomial::d();
    return total;
}

inline CdPolynomial shelling_sum(const GradedPoset& P, const std::vector<std::string>& order)
{
    return shelling_sum(shelling_steps(P, order));
}

struct PiDecomposition {
    CdPolynomial pi_index;                 // cd-index of the Pi subposet
    std::vector<std::string> remaining;    // degree n-1 elements outside Pi
    std::vector<CdPolynomial> lower;       // cd-index of each [0, sigma]
    CdPolynomial total;
};

/**
 * Splits P along Pi, a set of degree n-1 elements which together with
 * everything of degree <= n-2 forms a Gorenstein* poset of rank n-1.
 * Throws PiNotComplete otherwise.
 */
inline PiDecomposition pi_decomposition_detail(const GradedPoset& P, const std::vector<std::string>& pi)
{
    const int n = P.rank();
    if (n < 1) throw PiNotComplete("Pi decomposition needs rank >= 1");
    std::vector<char> in_pi(P.size(), 0);
    for (const auto& id : pi) {
        const auto x = P.find(id);
        if (!x) throw PiNotComplete("no element with id '" + id + "'");
        if (P.deg(*x) != n - 1) throw PiNotComplete("'" + id + "' does not have degree " + std::to_string(n - 1));
        in_pi[*x] = 1;
    }
    std::vector<Element> members;
    for (Element x = 0; x < P.size(); ++x)
        if (P.deg(x) <= n - 2 || in_pi[x]) members.push_back(x);
    ElementSubposet sub;
    try {
        sub = induced_subposet(P, members, n - 1);
    } catch (const InvalidPoset& e) {
        throw PiNotComplete(std::string("Pi subposet is not graded: ") + e.what());
    }
    if (!is_gorenstein_star(sub.poset)) throw PiNotComplete("Pi subposet is not Gorenstein*");

    PiDecomposition out;
    out.pi_index = cd_index_flag(sub.poset);
    out.total = out.pi_index * CdPolynomial::c();
    for (Element x : P.of_degree(n - 1)) {
        if (in_pi[x]) continue;
        out.remaining.push_back(P.id(x));
        out.lower.push_back(cd_index_flag(ideal(P, x).poset));
        out.total += out.lower.back() * CdPolynomial::d();
    }
    return out;
}

inline CdPolynomial pi_decomposition(const GradedPoset& P, const std::vector<std::string>& pi)
{
    return pi_decomposition_detail(P, pi).total;
}

} // namespace cdindex
