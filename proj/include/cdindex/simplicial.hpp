#pragma once

/**
 * @file simplicial.hpp
 * @brief Abstract simplicial complexes, links and reduced homology.
 *
 * Faces are sorted vectors of vertex indices; every complex contains the
 * empty face. Homology ranks come from column reduction of the boundary
 * matrices, top dimension first, with the usual clearing shortcut: when a
 * k-face is the pivot of a reduced (k+1)-column, its own k-column is a
 * combination of earlier columns and is skipped.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdindex/error.hpp"
#include "cdindex/numeric.hpp"

namespace cdindex {

using Vertex = std::uint32_t;
using Face = std::vector<Vertex>;

class SimplicialComplex {
public:
    /// The complex {empty face} on no vertices.
    SimplicialComplex() : faces_(1, std::vector<Face>{Face{}}) {}

    /// Downward closure of `facets`; labels name the vertices by index.
    static SimplicialComplex from_facets(std::vector<std::string> labels, const std::vector<Face>& facets)
    {
        SimplicialComplex k;
        k.labels_ = std::move(labels);
        std::vector<Face> all{Face{}};
        for (Face f : facets) {
            std::sort(f.begin(), f.end());
            if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw OutOfRange("facet repeats a vertex");
            if (f.size() > 31) throw OutOfRange("facet too large");
            for (Vertex v : f)
                if (v >= k.labels_.size()) throw OutOfRange("facet vertex outside label range");
            const std::uint32_t subsets = std::uint32_t{1} << f.size();
            for (std::uint32_t m = 1; m < subsets; ++m) {
                Face g;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (m >> i & 1U) g.push_back(f[i]);
                all.push_back(std::move(g));
            }
        }
        k.assign(std::move(all));
        return k;
    }

    /// `faces` must already be closed under taking subsets.
    static SimplicialComplex from_faces(std::vector<std::string> labels, std::vector<Face> faces)
    {
        SimplicialComplex k;
        k.labels_ = std::move(labels);
        faces.push_back(Face{});
        for (auto& f : faces) std::sort(f.begin(), f.end());
        k.assign(std::move(faces));
        return k;
    }

    const std::vector<std::string>& labels() const { return labels_; }

    /// Dimension of the largest face; -1 for {empty face}.
    int dimension() const { return static_cast<int>(faces_.size()) - 2; }

    /// Faces of dimension k (k = -1 gives the empty face), sorted.
    const std::vector<Face>& faces(int k) const
    {
        static const std::vector<Face> none;
        if (k < -1 || k > dimension()) return none;
        return faces_[static_cast<std::size_t>(k + 1)];
    }

    std::size_t face_count() const
    {
        std::size_t n = 0;
        for (const auto& layer : faces_) n += layer.size();
        return n;
    }

    bool contains(const Face& f) const
    {
        Face g = f;
        std::sort(g.begin(), g.end());
        const auto& layer = faces(static_cast<int>(g.size()) - 1);
        return std::binary_search(layer.begin(), layer.end(), g);
    }

    std::optional<std::size_t> index_of(const Face& sorted_face) const
    {
        const auto& layer = faces(static_cast<int>(sorted_face.size()) - 1);
        const auto it = std::lower_bound(layer.begin(), layer.end(), sorted_face);
        if (it == layer.end() || *it != sorted_face) return std::nullopt;
        return static_cast<std::size_t>(it - layer.begin());
    }

    std::vector<Face> facets() const
    {
        std::vector<Face> out;
        for (int k = dimension(); k >= -1; --k) {
            const auto& layer = faces(k);
            std::vector<char> covered(layer.size(), 0);
            for (const Face& up : faces(k + 1))
                for (std::size_t i = 0; i < up.size(); ++i) {
                    Face down = up;
                    down.erase(down.begin() + static_cast<std::ptrdiff_t>(i));
                    covered[*index_of(down)] = 1;
                }
            for (std::size_t i = 0; i < layer.size(); ++i)
                if (!covered[i]) out.push_back(layer[i]);
        }
        return out;
    }

    /// Number of faces in each dimension, -1 first.
    std::vector<std::size_t> f_vector() const
    {
        std::vector<std::size_t> out;
        for (const auto& layer : faces_) out.push_back(layer.size());
        return out;
    }

private:
    void assign(std::vector<Face> all)
    {
        std::sort(all.begin(), all.end(), [](const Face& a, const Face& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        all.erase(std::unique(all.begin(), all.end()), all.end());
        faces_.clear();
        for (auto& f : all) {
            while (faces_.size() <= f.size()) faces_.emplace_back();
            faces_[f.size()].push_back(std::move(f));
        }
        if (faces_.empty()) faces_.emplace_back(1, Face{});
    }

    std::vector<std::string> labels_;
    std::vector<std::vector<Face>> faces_;  // faces_[k+1] = faces of dimension k
};

/// {G : G and F disjoint, G union F in K}. Throws when F is not a face.
inline SimplicialComplex link(const SimplicialComplex& K, Face face)
{
    std::sort(face.begin(), face.end());
    if (!K.contains(face)) throw OutOfRange("link: face not in complex");
    std::vector<Face> out;
    for (int k = static_cast<int>(face.size()) - 1; k <= K.dimension(); ++k)
        for (const Face& h : K.faces(k))
            if (std::includes(h.begin(), h.end(), face.begin(), face.end())) {
                Face g;
                std::set_difference(h.begin(), h.end(), face.begin(), face.end(), std::back_inserter(g));
                out.push_back(std::move(g));
            }
    return SimplicialComplex::from_faces(K.labels(), std::move(out));
}

/// Reduced Betti numbers b~_i for i = -1 .. dim.
struct HomologyProfile {
    std::vector<std::size_t> betti;  // betti[i + 1] = b~_i

    std::size_t reduced(int i) const
    {
        const auto k = static_cast<std::size_t>(i + 1);
        return (i < -1 || k >= betti.size()) ? 0 : betti[k];
    }

    /// Homology of S^d (d = -1 means the empty complex).
    bool is_sphere(int d) const
    {
        if (d < -1 || d + 1 >= static_cast<int>(betti.size())) return false;
        for (int i = -1; i + 1 < static_cast<int>(betti.size()); ++i)
            if (reduced(i) != (i == d ? 1U : 0U)) return false;
        return true;
    }

    long euler() const
    {
        long chi = 0;
        for (int i = -1; i + 1 < static_cast<int>(betti.size()); ++i)
            chi += sign_power(i) * static_cast<long>(reduced(i));
        return chi;
    }

    bool operator==(const HomologyProfile&) const = default;
};

/// Reduced Euler characteristic from face counts: sum of (-1)^k f_k, k >= -1.
inline long reduced_euler_characteristic(const SimplicialComplex& K)
{
    long chi = 0;
    for (int k = -1; k <= K.dimension(); ++k) chi += sign_power(k) * static_cast<long>(K.faces(k).size());
    return chi;
}

namespace detail {

/// Integers modulo the prime 2^31 - 1.
struct ModP {
    static constexpr std::uint64_t p = 2147483647ULL;
    std::uint64_t v = 0;

    ModP() = default;
    ModP(long x) : v(static_cast<std::uint64_t>(((x % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p))) {}

    friend ModP operator+(ModP a, ModP b) { return raw((a.v + b.v) % p); }
    friend ModP operator-(ModP a, ModP b) { return raw((a.v + p - b.v) % p); }
    friend ModP operator*(ModP a, ModP b) { return raw(a.v * b.v % p); }
    friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
    friend bool operator==(ModP a, ModP b) { return a.v == b.v; }
    friend bool operator!=(ModP a, ModP b) { return a.v != b.v; }
    bool is_zero() const { return v == 0; }

    ModP inverse() const
    {
        std::uint64_t base = v, e = p - 2, r = 1;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return raw(r);
    }

    static ModP raw(std::uint64_t x)
    {
        ModP m;
        m.v = x;
        return m;
    }
};

inline bool is_zero(const ModP& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }

template <typename Field>
using SparseColumn = std::vector<std::pair<std::uint32_t, Field>>;

/// col -= factor * piv, both sorted by row.
template <typename Field>
void axpy(SparseColumn<Field>& col, const Field& factor, const SparseColumn<Field>& piv)
{
    SparseColumn<Field> out;
    out.reserve(col.size() + piv.size());
    std::size_t i = 0, j = 0;
    while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
            out.push_back(std::move(col[i++]));
        } else if (i == col.size() || piv[j].first < col[i].first) {
            out.emplace_back(piv[j].first, Field(0) - factor * piv[j].second);
            ++j;
        } else {
            Field v = col[i].second - factor * piv[j].second;
            if (!is_zero(v)) out.emplace_back(col[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    col = std::move(out);
}

/**
 * Ranks of every boundary map d_k : C_k -> C_{k-1}, k = 0..dim, over Field.
 * Entry k of the result is rank d_k.
 */
template <typename Field>
std::vector<std::size_t> boundary_ranks(const SimplicialComplex& K)
{
    const int dim = K.dimension();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(std::max(dim + 1, 0)), 0);
    std::vector<char> cleared_next;  // faces of dimension k that are pivots of d_{k+1}
    for (int k = dim; k >= 0; --k) {
        const auto& cols = K.faces(k);
        const auto rows = K.faces(k - 1).size();
        std::vector<std::int64_t> pivot_col(rows, -1);
        std::vector<SparseColumn<Field>> reduced(cols.size());
        std::vector<char> cleared_here(rows, 0);
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (!cleared_next.empty() && cleared_next[c]) continue;
            const Face& f = cols[c];
            SparseColumn<Field> col;
            col.reserve(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) {
                Face g = f;
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
                col.emplace_back(static_cast<std::uint32_t>(*K.index_of(g)), Field(i % 2 == 0 ? 1 : -1));
            }
            std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            while (!col.empty()) {
                const auto low = col.back().first;
                const auto pc = pivot_col[low];
                if (pc < 0) break;
                const auto& piv = reduced[static_cast<std::size_t>(pc)];
                const Field factor = col.back().second / piv.back().second;
                axpy(col, factor, piv);
            }
            if (!col.empty()) {
                pivot_col[col.back().first] = static_cast<std::int64_t>(c);
                cleared_here[col.back().first] = 1;
                reduced[c] = std::move(col);
                ++rank;
            }
        }
        ranks[static_cast<std::size_t>(k)] = rank;
        cleared_next = std::move(cleared_here);
    }
    return ranks;
}

template <typename Field>
HomologyProfile homology_over(const SimplicialComplex& K)
{
    const int dim = K.dimension();
    const auto ranks = boundary_ranks<Field>(K);
    const auto rank_of = [&](int k) -> std::size_t {
        return (k < 0 || k > dim) ? 0 : ranks[static_cast<std::size_t>(k)];
    };
    HomologyProfile h;
    for (int i = -1; i <= dim; ++i) h.betti.push_back(K.faces(i).size() - rank_of(i) - rank_of(i + 1));
    return h;
}

} // namespace detail

/// Reduced homology over the rationals, by exact elimination.
inline HomologyProfile reduced_homology(const SimplicialComplex& K) { return detail::homology_over<Rational>(K); }

/**
 * Whether K has the rational homology of S^d.
 *
 * Works modulo a prime first. Rational ranks are at least the modular
 * ones, so rational Betti numbers are bounded by the modular ones; both
 * profiles share the Euler characteristic. If the modular profile is that
 * of S^d, the rational one is forced to equal it. Otherwise the exact
 * rational profile decides.
 */
inline bool has_sphere_homology(const SimplicialComplex& K, int d)
{
    if (detail::homology_over<detail::ModP>(K).is_sphere(d)) return true;
    return reduced_homology(K).is_sphere(d);
}

} // namespace cdindex
