#pragma once

/**
 * @file gorenstein.hpp
 * @brief Order complexes and the Gorenstein* / quasi-convex certifiers.
 *
 * P of rank n is Gorenstein* when its order complex has the homology of
 * S^{n-1} and the link of every nonempty face F has the homology of
 * S^{n-1-|F|}. The link of a chain x_1 < ... < x_k is the join of the order
 * complexes of the open intervals (0,x_1), (x_1,x_2), ..., (x_k,1). Over a
 * field the reduced homology of a join is the shifted tensor product of the
 * factors, so every link is a sphere of the right dimension exactly when
 * every open interval (x,y) is a homology sphere of dimension
 * deg y - deg x - 2. is_gorenstein_star checks that interval form;
 * gorenstein_star_by_links checks every link literally and is meant for
 * small inputs.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cdindex/barycentric.hpp"
#include "cdindex/error.hpp"
#include "cdindex/poset.hpp"
#include "cdindex/simplicial.hpp"

namespace cdindex {

/// Vertices are P minus {0, 1}; vertex v is element v + 1.
inline SimplicialComplex order_complex(const GradedPoset& P)
{
    std::vector<std::string> labels;
    for (Element x = 1; x < P.top(); ++x) labels.push_back(P.id(x));
    std::vector<Face> faces;
    for_each_chain(P, [&](const Chain& c) {
        Face f;
        f.reserve(c.size());
        for (Element x : c) f.push_back(x - 1);
        faces.push_back(std::move(f));
    });
    return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

/// Order complex of the open interval (x, y); vertices are indexed like order_complex.
inline SimplicialComplex open_interval_complex(const GradedPoset& P, Element x, Element y)
{
    std::vector<std::string> labels;
    for (Element z = 1; z < P.top(); ++z) labels.push_back(P.id(z));
    std::vector<Face> faces;
    Face cur;
    faces.push_back(cur);
    const auto extend = [&](auto&& self, Element last) -> void {
        P.for_each_above(last, [&](Element z) {
            if (z == last || z == y || !P.leq(z, y)) return;
            cur.push_back(z - 1);
            faces.push_back(cur);
            self(self, z);
            cur.pop_back();
        });
    };
    extend(extend, x);
    return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

/**
 * Reduced homology, computed modulo a prime and confirmed over the
 * rationals only when needed. Rational Betti numbers are bounded by the
 * modular ones and share their alternating sum, so when all nonzero modular
 * numbers sit in degrees of one parity the two profiles coincide.
 */
inline HomologyProfile reduced_homology_fast(const SimplicialComplex& K)
{
    auto mod = detail::homology_over<detail::ModP>(K);
    int parity = -1;
    bool one_parity = true;
    for (int i = -1; i + 1 < static_cast<int>(mod.betti.size()); ++i) {
        if (mod.reduced(i) == 0) continue;
        const int pi = (i + 2) % 2;
        if (parity >= 0 && parity != pi) one_parity = false;
        parity = pi;
    }
    if (one_parity) return mod;
    return reduced_homology(K);
}

struct GorensteinCertificate {
    bool gorenstein_star = false;
    /// First face whose link fails (empty for the whole complex); unset on success.
    std::optional<std::vector<std::string>> failing_face;
    /// Reduced Betti numbers of the whole order complex, b~_{-1} first.
    HomologyProfile betti;
    std::string reason;
};

inline GorensteinCertificate gorenstein_star_certificate(const GradedPoset& P)
{
    GorensteinCertificate cert;
    const int n = P.rank();
    cert.betti = reduced_homology_fast(order_complex(P));
    if (!cert.betti.is_sphere(n - 1)) {
        cert.failing_face = std::vector<std::string>{};
        cert.reason = "order complex does not have the homology of S^" + std::to_string(n - 1);
        return cert;
    }
    for (Element x = 0; x < P.size(); ++x) {
        std::optional<GorensteinCertificate> failure;
        P.for_each_above(x, [&](Element y) {
            if (failure || y == x) return;
            const int gap = P.deg(y) - P.deg(x);
            if (gap < 2 || (x == P.bottom() && y == P.top())) return;
            bool sphere = false;
            if (gap == 2) {
                std::size_t between = 0;
                P.for_each_above(x, [&](Element z) {
                    if (z != x && z != y && P.leq(z, y)) ++between;
                });
                sphere = between == 2;
            } else {
                sphere = reduced_homology_fast(open_interval_complex(P, x, y)).is_sphere(gap - 2);
            }
            if (!sphere) {
                GorensteinCertificate c;
                std::vector<std::string> face;
                if (x != P.bottom()) face.push_back(P.id(x));
                if (y != P.top()) face.push_back(P.id(y));
                c.failing_face = std::move(face);
                c.reason = "open interval ('" + P.id(x) + "', '" + P.id(y) +
                           "') does not have the homology of S^" + std::to_string(gap - 2);
                failure = std::move(c);
            }
        });
        if (failure) {
            failure->betti = cert.betti;
            return *failure;
        }
    }
    cert.gorenstein_star = true;
    return cert;
}

inline bool is_gorenstein_star(const GradedPoset& P) { return gorenstein_star_certificate(P).gorenstein_star; }

/// The defining check, link by link, with exact rational homology throughout.
inline bool gorenstein_star_by_links(const GradedPoset& P)
{
    const int n = P.rank();
    const auto K = order_complex(P);
    if (!reduced_homology(K).is_sphere(n - 1)) return false;
    for (int k = 0; k <= K.dimension(); ++k)
        for (const Face& f : K.faces(k))
            if (!reduced_homology(link(K, f)).is_sphere(n - 2 - k)) return false;
    return true;
}

/**
 * Boundary of a fan-like poset of rank n >= 1: the ideal generated by the
 * degree n-1 elements lying under exactly one degree-n element, re-graded to
 * rank n-1 with a fresh top. Unset when there are no such elements.
 */
inline std::optional<ElementSubposet> boundary_of(const GradedPoset& P)
{
    const int n = P.rank();
    if (n < 1 || P.of_degree(n).empty()) throw OutOfRange("boundary_of needs rank >= 1 and a degree-n element");
    std::vector<char> member(P.size(), 0);
    bool any = false;
    for (Element x : P.of_degree(n - 1)) {
        std::size_t above = 0;
        for (Element y : P.upper_covers(x))
            if (P.deg(y) == n) ++above;
        if (above == 1) {
            any = true;
            P.for_each_below(x, [&](Element z) { member[z] = 1; });
        }
    }
    if (!any) return std::nullopt;
    std::vector<Element> members;
    for (Element x = 0; x < P.size(); ++x)
        if (member[x]) members.push_back(x);
    return induced_subposet(P, members, n - 1);
}

/// Gorenstein* boundary; a poset with empty boundary qualifies when it is itself Gorenstein*.
inline bool is_quasi_convex(const GradedPoset& P)
{
    const auto b = boundary_of(P);
    if (!b) return is_gorenstein_star(P);
    return is_gorenstein_star(b->poset);
}

} // namespace cdindex
