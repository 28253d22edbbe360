#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cdindex/numeric.hpp"

namespace cdindex::detail {

/**
 * Incremental row echelon form over the rationals for a system A x = b with
 * few unknowns and many equations. Rows are fed one at a time; once the
 * basis reaches full column rank further rows only need a residual check,
 * which the caller does against the original data.
 */
class RowEchelon {
public:
    explicit RowEchelon(std::size_t unknowns) : cols_(unknowns) {}

    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == cols_; }
    bool inconsistent() const { return inconsistent_; }

    /// `row` holds the unknowns' coefficients followed by the right-hand side.
    void feed(std::vector<Rational> row)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (row[p] == 0) continue;
            const Rational f = row[p];
            const auto& basis = rows_[r];
            for (std::size_t j = p; j <= cols_; ++j)
                if (basis[j] != 0) row[j] -= f * basis[j];
        }
        std::size_t p = 0;
        while (p < cols_ && row[p] == 0) ++p;
        if (p == cols_) {
            if (row[cols_] != 0) inconsistent_ = true;
            return;
        }
        const Rational inv = 1 / row[p];
        for (std::size_t j = p; j <= cols_; ++j) row[j] *= inv;
        // Keep earlier rows reduced against the new pivot.
        for (auto& other : rows_) {
            if (other[p] == 0) continue;
            const Rational f = other[p];
            for (std::size_t j = p; j <= cols_; ++j)
                if (row[j] != 0) other[j] -= f * row[j];
        }
        rows_.push_back(std::move(row));
        pivots_.push_back(p);
    }

    /// The unique solution, when the basis has full column rank.
    std::optional<std::vector<Rational>> solution() const
    {
        if (!full() || inconsistent_) return std::nullopt;
        std::vector<Rational> x(cols_);
        for (std::size_t r = 0; r < rows_.size(); ++r) x[pivots_[r]] = rows_[r][cols_];
        return x;
    }

private:
    std::size_t cols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
    bool inconsistent_ = false;
};

} // namespace cdindex::detail
