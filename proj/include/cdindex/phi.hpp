#pragma once

/**
 * @file phi.hpp
 * @brief Subset polynomials and the encoding of cd-polynomials into them.
 *
 * A multilinear polynomial in t_1..t_n is stored as a map from subsets S to
 * the coefficient of t^S. The encoding replaces, left to right, c by
 * (t_{k+1} + 1) and d by (t_{k+1} + t_{k+2}), where k counts the t's used
 * so far.
 */

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cdindex/cd_polynomial.hpp"
#include "cdindex/detail/exact_solve.hpp"
#include "cdindex/error.hpp"
#include "cdindex/numeric.hpp"
#include "cdindex/subset.hpp"

namespace cdindex {

struct SubsetPolynomial {
    int n = 0;
    std::map<Subset, Integer> terms;  // no zero entries

    SubsetPolynomial() = default;
    explicit SubsetPolynomial(int ambient) : n(ambient) { check_subset_rank(ambient); }

    Integer at(Subset s) const
    {
        const auto it = terms.find(s);
        return it == terms.end() ? Integer(0) : it->second;
    }

    void add(Subset s, const Integer& k)
    {
        if (s & ~full_subset(n)) throw OutOfRange("subset " + subset_key(s) + " outside 1.." + std::to_string(n));
        if (k == 0) return;
        auto [it, fresh] = terms.try_emplace(s, k);
        if (!fresh) {
            it->second += k;
            if (it->second == 0) terms.erase(it);
        }
    }

    SubsetPolynomial& operator+=(const SubsetPolynomial& o)
    {
        if (o.n != n) throw OutOfRange("ambient variable counts differ");
        for (const auto& [s, k] : o.terms) add(s, k);
        return *this;
    }

    bool operator==(const SubsetPolynomial&) const = default;
};

/// Image of a single word; its degree fixes the ambient count.
inline SubsetPolynomial phi_expand(const CdWord& w)
{
    SubsetPolynomial out(w.degree());
    std::vector<Subset> cur{0};
    int k = 0;
    for (char ch : w.letters()) {
        std::vector<Subset> next;
        next.reserve(cur.size() * 2);
        if (ch == 'c') {
            for (Subset s : cur) {
                next.push_back(s);
                next.push_back(s | singleton(k + 1));
            }
            k += 1;
        } else {
            for (Subset s : cur) {
                next.push_back(s | singleton(k + 1));
                next.push_back(s | singleton(k + 2));
            }
            k += 2;
        }
        cur = std::move(next);
    }
    for (Subset s : cur) out.add(s, 1);
    return out;
}

/// Image of a polynomial homogeneous of degree n.
inline SubsetPolynomial phi_expand(const CdPolynomial& p, int n)
{
    SubsetPolynomial out(n);
    for (const auto& [w, k] : p.terms()) {
        if (w.degree() != n)
            throw OutOfRange("phi_expand needs a homogeneous polynomial of degree " + std::to_string(n) + "; word " +
                             w.str() + " has degree " + std::to_string(w.degree()));
        for (const auto& [s, v] : phi_expand(w).terms) out.add(s, k * v);
    }
    return out;
}

/// Degree taken from the terms; the zero polynomial maps to {} with n = 0.
inline SubsetPolynomial phi_expand(const CdPolynomial& p)
{
    if (p.is_zero()) return SubsetPolynomial(0);
    return phi_expand(p, p.terms().begin()->first.degree());
}

namespace detail {

/**
 * Solves target = sum_j x_j * columns[j] exactly over all 2^n subsets.
 * Returns nullopt when no solution exists; throws when the columns are
 * dependent, which never happens for images of distinct words.
 */
inline std::optional<std::vector<Rational>> solve_subset_system(const std::vector<SubsetPolynomial>& columns,
                                                                 const SubsetPolynomial& target)
{
    const int n = target.n;
    const std::size_t m = columns.size();
    for (const auto& c : columns)
        if (c.n != n) throw OutOfRange("column ambient count differs from target");
    RowEchelon ech(m);
    const Subset rows = Subset{1} << n;
    // Subsets in the target come first; they pin the solution fastest.
    std::vector<Subset> order;
    order.reserve(rows);
    for (const auto& [s, k] : target.terms) order.push_back(s);
    for (Subset s = 0; s < rows; ++s)
        if (!target.terms.count(s)) order.push_back(s);
    for (Subset s : order) {
        if (ech.full() || ech.inconsistent()) break;
        std::vector<Rational> row(m + 1);
        bool any = false;
        for (std::size_t j = 0; j < m; ++j) {
            row[j] = Rational(columns[j].at(s));
            any = any || row[j] != 0;
        }
        row[m] = Rational(target.at(s));
        if (!any && row[m] == 0) continue;
        ech.feed(std::move(row));
    }
    if (ech.inconsistent()) return std::nullopt;
    auto x = ech.solution();
    if (!x) throw Error("subset system has dependent columns");
    // Residual over every subset, exactly.
    std::map<Subset, Rational> acc;
    for (std::size_t j = 0; j < m; ++j) {
        if ((*x)[j] == 0) continue;
        for (const auto& [s, v] : columns[j].terms) acc[s] += (*x)[j] * Rational(v);
    }
    for (const auto& [s, v] : target.terms) acc[s] -= Rational(v);
    for (const auto& [s, v] : acc)
        if (v != 0) return std::nullopt;
    return x;
}

} // namespace detail

/**
 * The unique homogeneous degree-n cd-polynomial whose image is h.
 * Throws NotACdPolynomial when h is outside the image (the source poset is
 * then not Eulerian) and NonIntegralCoefficients if the solution is not
 * integral.
 */
inline CdPolynomial to_cd(const SubsetPolynomial& h)
{
    const auto words = enumerate_cd_words(h.n);
    std::vector<SubsetPolynomial> cols;
    cols.reserve(words.size());
    for (const auto& w : words) cols.push_back(phi_expand(w));
    const auto x = detail::solve_subset_system(cols, h);
    if (!x) throw NotACdPolynomial("input is not Eulerian: flag h-vector is not a cd-polynomial image");
    RationalCdPolynomial p;
    for (std::size_t j = 0; j < words.size(); ++j) p.add(words[j], (*x)[j]);
    return to_integral(p);
}

} // namespace cdindex
