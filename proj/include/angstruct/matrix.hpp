/*
angstruct

Copyright 2026 The angstruct Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

/** @file matrix.hpp
 *  @brief Dense exact rational matrices and Gauss-Jordan elimination
 */

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "angstruct/rational.hpp"

namespace angstruct
{

/** @brief Row-major dense matrix over the rationals */
class RationalMatrix
{
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational{0})
    {
    }

    [[nodiscard]] auto rows() const -> std::size_t { return rows_; }
    [[nodiscard]] auto cols() const -> std::size_t { return cols_; }

    auto operator()(std::size_t r, std::size_t c) -> Rational& { return data_[r * cols_ + c]; }
    auto operator()(std::size_t r, std::size_t c) const -> const Rational&
    {
        return data_[r * cols_ + c];
    }

    [[nodiscard]] auto row(std::size_t r) const -> std::vector<Rational>
    {
        return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    /** @brief Append a row; the first row fixes the column count if empty */
    void append_row(std::span<const Rational> values)
    {
        if (rows_ == 0 && cols_ == 0) {
            cols_ = values.size();
        }
        if (values.size() != cols_) {
            throw std::invalid_argument("append_row: column count mismatch");
        }
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    [[nodiscard]] auto transpose() const -> RationalMatrix
    {
        RationalMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                t(c, r) = (*this)(r, c);
            }
        }
        return t;
    }

    friend auto operator==(const RationalMatrix& a, const RationalMatrix& b) -> bool
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_{0};
    std::size_t cols_{0};
    std::vector<Rational> data_;
};

/** @brief M x */
inline auto multiply(const RationalMatrix& m, std::span<const Rational> x) -> std::vector<Rational>
{
    if (x.size() != m.cols()) {
        throw std::invalid_argument("multiply: dimension mismatch");
    }
    std::vector<Rational> out(m.rows(), Rational{0});
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c) != 0 && x[c] != 0) {
                out[r] += m(r, c) * x[c];
            }
        }
    }
    return out;
}

/** @brief M^T y */
inline auto multiply_transpose(const RationalMatrix& m, std::span<const Rational> y)
    -> std::vector<Rational>
{
    if (y.size() != m.rows()) {
        throw std::invalid_argument("multiply_transpose: dimension mismatch");
    }
    std::vector<Rational> out(m.cols(), Rational{0});
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (y[r] == 0) {
            continue;
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c) != 0) {
                out[c] += m(r, c) * y[r];
            }
        }
    }
    return out;
}

/** @brief Reduced row echelon form with the pivot column of each nonzero row */
struct RowReduction {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
};

inline auto row_reduce(RationalMatrix m) -> RowReduction
{
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t p = lead;
        while (p < m.rows() && m(p, c) == 0) {
            ++p;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != lead) {
            for (std::size_t k = 0; k < m.cols(); ++k) {
                std::swap(m(p, k), m(lead, k));
            }
        }
        const Rational inv = 1 / m(lead, c);
        for (std::size_t k = c; k < m.cols(); ++k) {
            m(lead, k) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, c) == 0) {
                continue;
            }
            const Rational f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) {
                if (m(lead, k) != 0) {
                    m(r, k) -= f * m(lead, k);
                }
            }
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

inline auto rank(const RationalMatrix& m) -> std::size_t { return row_reduce(m).pivots.size(); }

/** @brief A basis of {x : M x = 0}, one vector per free column */
inline auto nullspace_basis(const RationalMatrix& m) -> std::vector<std::vector<Rational>>
{
    const auto rr = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) {
        is_pivot[p] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<Rational> v(m.cols(), Rational{0});
        v[f] = 1;
        for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
            v[rr.pivots[r]] = -rr.reduced(r, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/** @brief Some x with M x = b, or nullopt when the system is inconsistent */
inline auto solve_linear(const RationalMatrix& m, std::span<const Rational> b)
    -> std::optional<std::vector<Rational>>
{
    if (b.size() != m.rows()) {
        throw std::invalid_argument("solve_linear: dimension mismatch");
    }
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            aug(r, c) = m(r, c);
        }
        aug(r, m.cols()) = b[r];
    }
    const auto rr = row_reduce(std::move(aug));
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) {
        return std::nullopt;
    }
    std::vector<Rational> x(m.cols(), Rational{0});
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
        x[rr.pivots[r]] = rr.reduced(r, m.cols());
    }
    return x;
}

}  // namespace angstruct
