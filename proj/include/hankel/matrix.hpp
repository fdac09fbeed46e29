// Copyright 2026 The hankel-rings Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hankel/polynomial.hpp"

namespace hankel {

inline constexpr std::size_t kDefaultDeterminantCap = 8;

/// Dense matrix of polynomials, all over one ring. Row and column indices in
/// the minor API are 1-based; element access is 0-based.
template <CoefficientField F>
class PolyMatrix {
   public:
    using Poly = Polynomial<F>;

    PolyMatrix(RingPtr<F> ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Poly(ring_)) {}

    PolyMatrix(RingPtr<F> ring, std::vector<std::vector<Poly>> rows) : ring_(std::move(ring)) {
        rows_ = rows.size();
        cols_ = rows.empty() ? 0 : rows.front().size();
        for (auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
            for (auto& e : r) {
                if (!e.ring()->same_as(*ring_)) throw std::invalid_argument("matrix entry from another ring");
                entries_.push_back(std::move(e));
            }
        }
    }

    const RingPtr<F>& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Poly& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
    Poly& operator()(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }

    /// Submatrix on 1-based row and column index lists.
    PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        PolyMatrix m(ring_, rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) {
                if (rows[i] < 1 || rows[i] > rows_ || cols[j] < 1 || cols[j] > cols_)
                    throw std::out_of_range("minor index out of range");
                m(i, j) = (*this)(rows[i] - 1, cols[j] - 1);
            }
        return m;
    }

    /// The minor [rows | cols], indices 1-based.
    Poly minor(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
               std::size_t cap = kDefaultDeterminantCap) const {
        if (rows.size() != cols.size()) throw std::invalid_argument("minor needs as many rows as columns");
        return determinant(submatrix(rows, cols), cap);
    }

    /// All size-k minors, rows and columns enumerated in lexicographic order.
    std::vector<Poly> minors(std::size_t k) const {
        std::vector<Poly> out;
        if (k == 0 || k > rows_ || k > cols_) return out;
        for (const auto& r : subsets(rows_, k))
            for (const auto& c : subsets(cols_, k)) out.push_back(minor(r, c));
        return out;
    }

    /// Increasing k-subsets of {1..n}, lexicographic.
    static std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        if (k > n) return out;
        std::vector<std::size_t> cur(k);
        for (std::size_t i = 0; i < k; ++i) cur[i] = i + 1;
        for (;;) {
            out.push_back(cur);
            std::size_t i = k;
            while (i > 0 && cur[i - 1] == n - k + i) --i;
            if (i == 0) break;
            ++cur[i - 1];
            for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
        }
        return out;
    }

   private:
    RingPtr<F> ring_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Poly> entries_;
};

/// Exact determinant by Laplace expansion along rows, memoised over column
/// subsets: table[S] is the minor on the first |S| rows and the columns in S.
template <CoefficientField F>
Polynomial<F> determinant(const PolyMatrix<F>& m, std::size_t cap = kDefaultDeterminantCap) {
    using Poly = Polynomial<F>;
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (n > cap) throw std::length_error("determinant size over the configured cap");
    if (n == 0) return m.ring()->one();
    std::vector<Poly> table(std::size_t(1) << n, Poly(m.ring()));
    table[0] = m.ring()->one();
    for (std::size_t s = 1; s < table.size(); ++s) {
        const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(s)) - 1;
        Poly acc(m.ring());
        std::size_t position = 0;  // rank of column j inside s
        for (std::size_t j = 0; j < n; ++j) {
            if (!(s & (std::size_t(1) << j))) continue;
            const Poly& rest = table[s & ~(std::size_t(1) << j)];
            if (!rest.is_zero() && !m(row, j).is_zero()) {
                // expansion along the last row: sign (-1)^(row + position)
                Poly term = m(row, j) * rest;
                acc = ((row + position) % 2 == 0) ? acc + term : acc - term;
            }
            ++position;
        }
        table[s] = std::move(acc);
    }
    return table.back();
}

/// r x s Hankel matrix with (i, j) entry the variable of index
/// first + i + j (0-based), i.e. x_{i+j-1} in 1-based notation when first = 0.
template <CoefficientField F>
PolyMatrix<F> hankel_matrix(const RingPtr<F>& ring, std::size_t rows, std::size_t cols, std::size_t first = 0) {
    if (first + rows + cols - 1 > ring->nvars()) throw std::out_of_range("Hankel matrix needs more variables");
    PolyMatrix<F> m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = ring->var(first + i + j);
    return m;
}

/// Matrix of distinct indeterminates, filled row by row from variable `first`.
template <CoefficientField F>
PolyMatrix<F> generic_matrix(const RingPtr<F>& ring, std::size_t rows, std::size_t cols, std::size_t first = 0) {
    if (first + rows * cols > ring->nvars()) throw std::out_of_range("generic matrix needs more variables");
    PolyMatrix<F> m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = ring->var(first + i * cols + j);
    return m;
}

}  // namespace hankel
