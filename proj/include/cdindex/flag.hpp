#pragma once

/**
 * @file flag.hpp
 * @brief Flag f- and h-vectors and the flag route to the cd-index.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "cdindex/cd_polynomial.hpp"
#include "cdindex/numeric.hpp"
#include "cdindex/phi.hpp"
#include "cdindex/poset.hpp"
#include "cdindex/subset.hpp"

namespace cdindex {

/// f_S for every S subset of {1..n}, stored densely by bitmask.
struct FlagVector {
    int n = 0;
    std::vector<Integer> f;

    const Integer& at(Subset s) const { return f.at(s); }
    bool operator==(const FlagVector&) const = default;
};

/**
 * Counts chains of P minus {0, 1} by degree set. Dynamic programming over
 * elements in degree order: for each x, the number of chains ending at x
 * whose remaining degrees form T, for every T below deg x.
 */
inline FlagVector flag_f(const GradedPoset& P)
{
    const int n = P.rank();
    check_subset_rank(n);
    FlagVector out{n, std::vector<Integer>(std::size_t{1} << n, 0)};
    out.f[0] = 1;
    std::vector<std::vector<Integer>> ending(P.size());
    for (Element x = 1; x < P.top(); ++x) {
        const int k = P.deg(x);
        auto& row = ending[x];
        row.assign(std::size_t{1} << (k - 1), 0);
        row[0] = 1;
        P.for_each_below(x, [&](Element y) {
            if (y == x || y == P.bottom()) return;
            const Subset with_y = singleton(P.deg(y));
            const auto& below = ending[y];
            for (std::size_t t = 0; t < below.size(); ++t)
                if (below[t] != 0) row[t | with_y] += below[t];
        });
        for (std::size_t t = 0; t < row.size(); ++t)
            if (row[t] != 0) out.f[t | singleton(k)] += row[t];
    }
    return out;
}

/// h_T = sum over S subset of T of (-1)^|T \ S| f_S.
inline SubsetPolynomial flag_h(const FlagVector& fv)
{
    std::vector<Integer> h = fv.f;
    for (int i = 0; i < fv.n; ++i) {
        const Subset bit = Subset{1} << i;
        for (Subset t = 0; t < h.size(); ++t)
            if (t & bit) h[t] -= h[t ^ bit];
    }
    SubsetPolynomial out(fv.n);
    for (Subset t = 0; t < h.size(); ++t) out.add(t, h[t]);
    return out;
}

/// Inverse of flag_h: f_S = sum over T subset of S of h_T.
inline FlagVector flag_f_from_h(const SubsetPolynomial& h)
{
    FlagVector out{h.n, std::vector<Integer>(std::size_t{1} << h.n, 0)};
    for (const auto& [s, v] : h.terms) out.f[s] = v;
    for (int i = 0; i < h.n; ++i) {
        const Subset bit = Subset{1} << i;
        for (Subset t = 0; t < out.f.size(); ++t)
            if (t & bit) out.f[t] += out.f[t ^ bit];
    }
    return out;
}

/// Throws NotACdPolynomial for non-Eulerian input.
inline CdPolynomial cd_index_flag(const GradedPoset& P) { return to_cd(flag_h(flag_f(P))); }

/// h_S = h_{complement of S} for all S.
inline bool verify_duality(const GradedPoset& P)
{
    const auto h = flag_h(flag_f(P));
    const Subset full = full_subset(h.n);
    for (Subset s = 0; s <= full; ++s)
        if (h.at(s) != h.at(complement(s, h.n))) return false;
    return true;
}

/// Drops every term involving t_{m+1}..t_n.
inline SubsetPolynomial truncate(const SubsetPolynomial& p, int m)
{
    if (m < 0 || m > p.n) throw OutOfRange("truncation level outside [0, n]");
    SubsetPolynomial out(m);
    for (const auto& [s, k] : p.terms)
        if ((s & ~full_subset(m)) == 0) out.add(s, k);
    return out;
}

/// Poincaré polynomial of the m-skeleton: the cd-index image with t_{m+1} = ... = t_n = 0.
inline SubsetPolynomial skeleton_poincare(const GradedPoset& P, int m)
{
    if (m < 0 || m > P.rank()) throw OutOfRange("skeleton level outside [0, rank]");
    return truncate(phi_expand(cd_index_flag(P), P.rank()), m);
}

/// A + B t_m with A, B free of t_m. B has ambient count m - 1.
inline std::pair<SubsetPolynomial, SubsetPolynomial> split_last(const SubsetPolynomial& p)
{
    if (p.n == 0) return {p, SubsetPolynomial(0)};
    SubsetPolynomial a(p.n), b(p.n - 1);
    const Subset last = singleton(p.n);
    for (const auto& [s, k] : p.terms) {
        if (s & last)
            b.add(s ^ last, k);
        else
            a.add(s, k);
    }
    return {a, b};
}

/**
 * Writes a skeleton polynomial as phi(f) + phi(g) t_m with f, g homogeneous
 * of degrees m and m - 1. Throws NotACdPolynomial when no such pair exists.
 */
inline std::pair<CdPolynomial, CdPolynomial> skeleton_cd_split(const SubsetPolynomial& pm)
{
    const int m = pm.n;
    const auto fw = enumerate_cd_words(m);
    const auto gw = m >= 1 ? enumerate_cd_words(m - 1) : std::vector<CdWord>{};
    std::vector<SubsetPolynomial> cols;
    for (const auto& w : fw) cols.push_back(phi_expand(w));
    for (const auto& w : gw) {
        SubsetPolynomial lifted(m);
        for (const auto& [s, k] : phi_expand(w).terms) lifted.add(s | singleton(m), k);
        cols.push_back(std::move(lifted));
    }
    const auto x = detail::solve_subset_system(cols, pm);
    if (!x) throw NotACdPolynomial("skeleton polynomial is not of the form phi(f) + phi(g) t_m");
    RationalCdPolynomial f, g;
    for (std::size_t j = 0; j < fw.size(); ++j) f.add(fw[j], (*x)[j]);
    for (std::size_t j = 0; j < gw.size(); ++j) g.add(gw[j], (*x)[fw.size() + j]);
    return {to_integral(f), to_integral(g)};
}

} // namespace cdindex
