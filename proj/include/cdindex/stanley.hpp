#pragma once

/**
 * @file stanley.hpp
 * @brief cd-index by recursion over lower intervals.
 *
 * For a rank r interval [0, s],
 *
 *   2 P([0,s]) =   sum_{0 < t < s, r - k even}  P([0,t]) c (c^2 - 2d)^((r-k)/2)
 *                - sum_{0 < t < s, r - k odd }  P([0,t]) (c^2 - 2d)^((r-k+1)/2)
 *                + eps_r,
 *
 * where k = deg t, P([0,t]) is the cd-index of the rank k-1 interval, and
 * eps_r = 2 (c^2 - 2d)^(r/2) for even r, 0 for odd r. Each interval is
 * evaluated once, in degree order.
 */

#include <cstddef>
#include <vector>

#include "cdindex/cd_polynomial.hpp"
#include "cdindex/error.hpp"
#include "cdindex/poset.hpp"

namespace cdindex {

namespace detail {

class PowerTable {
public:
    const CdPolynomial& operator()(int k)
    {
        if (powers_.empty()) powers_.push_back(CdPolynomial::one());
        const CdPolynomial base = CdPolynomial::c() * CdPolynomial::c() - Integer(2) * CdPolynomial::d();
        while (static_cast<int>(powers_.size()) <= k) powers_.push_back(powers_.back() * base);
        return powers_[static_cast<std::size_t>(k)];
    }

private:
    std::vector<CdPolynomial> powers_;
};

inline CdPolynomial halve_exact(const CdPolynomial& twice, const std::string& where)
{
    CdPolynomial out;
    for (const auto& [w, k] : twice.terms()) {
        if (k % 2 != 0)
            throw NonIntegralCoefficients("Stanley recursion produced an odd coefficient for " + w.str() + " at " +
                                          where + " (input is not Eulerian)");
        out.add(w, k / 2);
    }
    return out;
}

} // namespace detail

/**
 * cd-index of every lower interval [0, s]. Entry s is the cd-index of the
 * rank deg(s)-1 interval; the entry for the top is the cd-index of P. The
 * bottom has no interval and its entry is zero.
 */
inline std::vector<CdPolynomial> lower_interval_cd_indices(const GradedPoset& P)
{
    detail::PowerTable pw;
    std::vector<CdPolynomial> memo(P.size());
    const CdPolynomial c = CdPolynomial::c();
    for (Element s = 1; s < P.size(); ++s) {
        const int r = P.deg(s) - 1;
        CdPolynomial sum;
        P.for_each_below(s, [&](Element t) {
            if (t == s || t == P.bottom()) return;
            const int gap = r - P.deg(t);
            if (gap % 2 == 0)
                sum += memo[t] * c * pw(gap / 2);
            else
                sum -= memo[t] * pw((gap + 1) / 2);
        });
        if (r % 2 == 0) sum += Integer(2) * pw(r / 2);
        memo[s] = detail::halve_exact(sum, "'" + P.id(s) + "'");
    }
    return memo;
}

/// Throws NonIntegralCoefficients when a halving step is inexact.
inline CdPolynomial cd_index_stanley(const GradedPoset& P) { return lower_interval_cd_indices(P)[P.top()]; }

} // namespace cdindex
