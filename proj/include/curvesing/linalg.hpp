// Incremental reduced row echelon form over an exact field. Works for any
// coefficient type with field operators and is_zero()/is_one().
#pragma once

#include <cstddef>
#include <vector>

#include "curvesing/errors.hpp"

namespace curvesing {

template <class F>
class Echelon {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit Echelon(std::size_t cols) : cols_(cols), pivot_row_(cols, npos) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    bool pivot_at(std::size_t col) const { return pivot_row_[col] != npos; }
    const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }
    const std::vector<std::vector<F>>& rows() const { return rows_; }

    // eliminate all current pivots from `row`; afterwards row has zeros at
    // every pivot column
    void reduce(std::vector<F>& row) const {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (row[c].is_zero()) continue;
            std::size_t r = pivot_row_[c];
            if (r == npos) continue;
            F factor = row[c];
            const auto& prow = rows_[r];
            for (std::size_t k = c; k < cols_; ++k) {
                if (prow[k].is_zero()) continue;
                row[k] -= factor * prow[k];
            }
        }
    }

    // returns the pivot column when the rank grew, npos when the row was
    // already in the span
    std::size_t insert(std::vector<F> row) {
        if (row.size() != cols_) throw InternalError("echelon row width mismatch");
        reduce(row);
        std::size_t lead = npos;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!row[c].is_zero()) {
                lead = c;
                break;
            }
        }
        if (lead == npos) return npos;
        if (!row[lead].is_one()) {
            F inv = F(1) / row[lead];
            for (std::size_t k = lead; k < cols_; ++k) {
                if (row[k].is_zero()) continue;
                row[k] = row[k] * inv;
            }
        }
        // back-eliminate the new pivot column from existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            F factor = rows_[r][lead];
            if (factor.is_zero()) continue;
            auto& target = rows_[r];
            for (std::size_t k = lead; k < cols_; ++k) {
                if (row[k].is_zero()) continue;
                target[k] -= factor * row[k];
            }
        }
        pivot_row_[lead] = rows_.size();
        pivot_cols_.push_back(lead);
        rows_.push_back(std::move(row));
        return lead;
    }

    // true when the row lies in the current row space
    bool contains(std::vector<F> row) const {
        reduce(row);
        for (const auto& v : row)
            if (!v.is_zero()) return false;
        return true;
    }

private:
    std::size_t cols_;
    std::vector<std::vector<F>> rows_;
    std::vector<std::size_t> pivot_cols_;
    std::vector<std::size_t> pivot_row_;  // column -> row index
};

template <class F>
std::size_t matrix_rank(const std::vector<std::vector<F>>& rows, std::size_t cols) {
    Echelon<F> e(cols);
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

}  // namespace curvesing
