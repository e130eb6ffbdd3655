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

/** @file lp.hpp
 *  @brief Exact simplex over the rationals with Farkas certificates
 */

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "angstruct/errors.hpp"
#include "angstruct/matrix.hpp"
#include "angstruct/rational.hpp"

namespace angstruct
{

enum class ColumnSign { free, nonneg, positive };

/** @brief A x = b with a sign constraint per column */
struct LinearSystem {
    RationalMatrix coeffs;
    std::vector<Rational> rhs;
    std::vector<ColumnSign> signs;

    /** @throws PreconditionError on inconsistent dimensions */
    void check() const
    {
        if (rhs.size() != coeffs.rows() || signs.size() != coeffs.cols()) {
            throw PreconditionError("linear system dimension mismatch");
        }
    }
};

struct Certificate {
    std::vector<Rational> y;
};

enum class CertificateMode { nonneg, strict };

struct Solution {
    std::vector<Rational> x;
};
struct Infeasible {
    Certificate certificate;
};
struct StrictSolution {
    std::vector<Rational> x;
    /** Smallest entry over the strictly positive columns */
    Rational margin;
};
struct NotStrict {
    Certificate certificate;
};
struct Optimum {
    Rational value;
    std::vector<Rational> x;
    /** Dual multipliers: c - A^T y >= 0 on constrained columns, = 0 on free, y.b = value */
    std::vector<Rational> y;
};
struct Unbounded {
    std::vector<Rational> point;
    std::vector<Rational> ray;
};

using NonnegResult = std::variant<Solution, Infeasible>;
using StrictResult = std::variant<StrictSolution, NotStrict>;
using MinimizeResult = std::variant<Optimum, Unbounded, Infeasible>;

namespace detail
{

/** min c.x subject to A x = b, x >= 0 */
struct StandardForm {
    RationalMatrix a;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

struct SimplexOutcome {
    enum class Status { optimal, unbounded, infeasible } status{Status::optimal};
    std::vector<Rational> x;
    /** Phase II duals when optimal, Phase I duals when infeasible */
    std::vector<Rational> y;
    std::vector<Rational> ray;
    Rational value;
};

/**
 * Dense two-phase tableau simplex with Bland's rule.
 *
 * Artificial columns stay in the tableau so that B^-1 can be read off for
 * the dual multipliers; they never re-enter once they leave.
 */
class Tableau
{
public:
    explicit Tableau(const StandardForm& sf)
        : k_(sf.a.rows()), t_(sf.a.cols()), width_(t_ + k_ + 1), cells_((k_ + 1) * width_),
          basis_(k_), flip_(k_, 1)
    {
        for (std::size_t r = 0; r < k_; ++r) {
            flip_[r] = sf.b[r] < 0 ? -1 : 1;
            for (std::size_t c = 0; c < t_; ++c) {
                at(r, c) = flip_[r] * sf.a(r, c);
            }
            at(r, t_ + r) = 1;
            at(r, rhs()) = flip_[r] * sf.b[r];
            basis_[r] = t_ + r;
        }
    }

    auto run(const std::vector<Rational>& cost) -> SimplexOutcome
    {
        SimplexOutcome out;
        // Phase I: minimise the sum of artificials.
        std::vector<Rational> phase1(t_ + k_, Rational{0});
        std::fill(phase1.begin() + static_cast<std::ptrdiff_t>(t_), phase1.end(), Rational{1});
        set_costs(phase1);
        iterate();
        const Rational infeas = -at(k_, rhs());
        if (infeas > 0) {
            out.status = SimplexOutcome::Status::infeasible;
            out.y = duals(phase1);
            out.value = infeas;
            return out;
        }
        drive_out_artificials();

        std::vector<Rational> phase2(t_ + k_, Rational{0});
        std::copy(cost.begin(), cost.end(), phase2.begin());
        set_costs(phase2);
        const auto blocked = iterate();
        out.x = primal();
        if (blocked) {
            out.status = SimplexOutcome::Status::unbounded;
            out.ray.assign(t_, Rational{0});
            out.ray[*blocked] = 1;
            for (std::size_t r = 0; r < k_; ++r) {
                if (basis_[r] < t_) {
                    out.ray[basis_[r]] = -at(r, *blocked);
                }
            }
            return out;
        }
        out.status = SimplexOutcome::Status::optimal;
        out.y = duals(phase2);
        out.value = -at(k_, rhs());
        return out;
    }

private:
    auto at(std::size_t r, std::size_t c) -> Rational& { return cells_[r * width_ + c]; }
    [[nodiscard]] auto rhs() const -> std::size_t { return width_ - 1; }

    void set_costs(const std::vector<Rational>& cost)
    {
        for (std::size_t c = 0; c < width_; ++c) {
            at(k_, c) = c < t_ + k_ ? cost[c] : Rational{0};
        }
        for (std::size_t r = 0; r < k_; ++r) {
            const Rational& cb = cost[basis_[r]];
            if (cb == 0) {
                continue;
            }
            for (std::size_t c = 0; c < width_; ++c) {
                if (at(r, c) != 0) {
                    at(k_, c) -= cb * at(r, c);
                }
            }
        }
    }

    void pivot(std::size_t pr, std::size_t pc)
    {
        const Rational inv = 1 / at(pr, pc);
        for (std::size_t c = 0; c < width_; ++c) {
            if (at(pr, c) != 0) {
                at(pr, c) *= inv;
            }
        }
        for (std::size_t r = 0; r <= k_; ++r) {
            if (r == pr || at(r, pc) == 0) {
                continue;
            }
            const Rational f = at(r, pc);
            for (std::size_t c = 0; c < width_; ++c) {
                if (at(pr, c) != 0) {
                    at(r, c) -= f * at(pr, c);
                }
            }
        }
        basis_[pr] = pc;
    }

    /** Pivot to optimality; returns the entering column if unbounded */
    auto iterate() -> std::optional<std::size_t>
    {
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t c = 0; c < t_; ++c) {
                if (at(k_, c) < 0) {
                    enter = c;
                    break;
                }
            }
            if (!enter) {
                return std::nullopt;
            }
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t r = 0; r < k_; ++r) {
                if (at(r, *enter) <= 0) {
                    continue;
                }
                Rational ratio = at(r, rhs()) / at(r, *enter);
                if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
                    leave = r;
                    best = std::move(ratio);
                }
            }
            if (!leave) {
                return enter;
            }
            pivot(*leave, *enter);
        }
    }

    void drive_out_artificials()
    {
        for (std::size_t r = 0; r < k_; ++r) {
            if (basis_[r] < t_) {
                continue;
            }
            for (std::size_t c = 0; c < t_; ++c) {
                if (at(r, c) != 0) {
                    pivot(r, c);
                    break;
                }
            }
            // Otherwise the row is redundant and its artificial stays basic at 0.
        }
    }

    [[nodiscard]] auto primal() -> std::vector<Rational>
    {
        std::vector<Rational> x(t_, Rational{0});
        for (std::size_t r = 0; r < k_; ++r) {
            if (basis_[r] < t_) {
                x[basis_[r]] = at(r, rhs());
            }
        }
        return x;
    }

    /** y = c_B^T B^-1, mapped back through the row sign flips */
    [[nodiscard]] auto duals(const std::vector<Rational>& cost) -> std::vector<Rational>
    {
        std::vector<Rational> y(k_, Rational{0});
        for (std::size_t r = 0; r < k_; ++r) {
            const Rational& cb = cost[basis_[r]];
            if (cb == 0) {
                continue;
            }
            for (std::size_t q = 0; q < k_; ++q) {
                if (at(r, t_ + q) != 0) {
                    y[q] += cb * at(r, t_ + q);
                }
            }
        }
        for (std::size_t q = 0; q < k_; ++q) {
            y[q] *= flip_[q];
        }
        return y;
    }

    std::size_t k_;
    std::size_t t_;
    std::size_t width_;
    std::vector<Rational> cells_;
    std::vector<std::size_t> basis_;
    std::vector<int> flip_;
};

inline auto run_simplex(const StandardForm& sf) -> SimplexOutcome
{
    Tableau tab(sf);
    return tab.run(sf.c);
}

/** Column layout of a general system inside a standard form */
struct ColumnMap {
    /** Standard-form column of x_j (or of x_j^+ for free columns) */
    std::vector<std::size_t> pos;
    /** Standard-form column of x_j^- for free columns */
    std::vector<std::optional<std::size_t>> neg;
    std::size_t width{0};
};

inline auto map_columns(const LinearSystem& sys) -> ColumnMap
{
    ColumnMap m;
    for (auto s : sys.signs) {
        m.pos.push_back(m.width++);
        m.neg.push_back(s == ColumnSign::free ? std::optional<std::size_t>(m.width++) : std::nullopt);
    }
    return m;
}

inline auto to_standard(const LinearSystem& sys, const ColumnMap& m, std::size_t extra)
    -> StandardForm
{
    StandardForm sf;
    sf.a = RationalMatrix(sys.coeffs.rows(), m.width + extra);
    for (std::size_t r = 0; r < sys.coeffs.rows(); ++r) {
        for (std::size_t j = 0; j < sys.coeffs.cols(); ++j) {
            sf.a(r, m.pos[j]) = sys.coeffs(r, j);
            if (m.neg[j]) {
                sf.a(r, *m.neg[j]) = -sys.coeffs(r, j);
            }
        }
    }
    sf.b = sys.rhs;
    sf.c.assign(m.width + extra, Rational{0});
    return sf;
}

inline auto from_standard(const std::vector<Rational>& xs, const ColumnMap& m)
    -> std::vector<Rational>
{
    std::vector<Rational> x;
    for (std::size_t j = 0; j < m.pos.size(); ++j) {
        x.push_back(m.neg[j] ? xs[m.pos[j]] - xs[*m.neg[j]] : xs[m.pos[j]]);
    }
    return x;
}

}  // namespace detail

/**
 * @brief Decide A x = b with x >= 0 on constrained columns
 * @throws PreconditionError on dimension mismatch or strictly positive columns
 */
inline auto solve_feasibility_nonneg(const LinearSystem& sys) -> NonnegResult
{
    sys.check();
    if (std::find(sys.signs.begin(), sys.signs.end(), ColumnSign::positive) != sys.signs.end()) {
        throw PreconditionError("nonneg feasibility does not take strictly positive columns");
    }
    const auto m = detail::map_columns(sys);
    const auto out = detail::run_simplex(detail::to_standard(sys, m, 0));
    if (out.status == detail::SimplexOutcome::Status::infeasible) {
        return Infeasible{{out.y}};
    }
    return Solution{detail::from_standard(out.x, m)};
}

/**
 * @brief Decide A x = b with x > 0 on positive columns by maximising a margin
 *
 * Positive columns are written x_j = x'_j + eps with x'_j >= 0, and eps is
 * maximised.
 * @throws PreconditionError on dimension mismatch or when no column is positive
 */
inline auto solve_feasibility_strict(const LinearSystem& sys) -> StrictResult
{
    sys.check();
    if (std::find(sys.signs.begin(), sys.signs.end(), ColumnSign::positive) == sys.signs.end()) {
        throw PreconditionError("strict feasibility needs at least one positive column");
    }
    const auto m = detail::map_columns(sys);
    auto sf = detail::to_standard(sys, m, 1);
    const std::size_t eps = m.width;
    for (std::size_t r = 0; r < sys.coeffs.rows(); ++r) {
        for (std::size_t j = 0; j < sys.coeffs.cols(); ++j) {
            if (sys.signs[j] == ColumnSign::positive) {
                sf.a(r, eps) += sys.coeffs(r, j);
            }
        }
    }
    sf.c[eps] = -1;
    auto out = detail::run_simplex(sf);
    using Status = detail::SimplexOutcome::Status;
    if (out.status == Status::infeasible) {
        return NotStrict{{out.y}};
    }
    if (out.status == Status::optimal && out.value >= 0) {
        return NotStrict{{out.y}};
    }
    auto xs = out.x;
    if (out.status == Status::unbounded) {
        // Walk along the ray until eps has grown by one.
        const Rational step = 1 / out.ray[eps];
        for (std::size_t c = 0; c < xs.size(); ++c) {
            xs[c] += step * out.ray[c];
        }
    }
    auto x = detail::from_standard(xs, m);
    std::optional<Rational> margin;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (sys.signs[j] == ColumnSign::positive) {
            x[j] += xs[eps];
            if (!margin || x[j] < *margin) {
                margin = x[j];
            }
        }
    }
    return StrictSolution{std::move(x), *margin};
}

/**
 * @brief Minimise objective.x over A x = b, x >= 0 on constrained columns
 * @throws PreconditionError on dimension mismatch or strictly positive columns
 */
inline auto minimize_linear(const std::vector<Rational>& objective, const LinearSystem& sys)
    -> MinimizeResult
{
    sys.check();
    if (objective.size() != sys.coeffs.cols()) {
        throw PreconditionError("objective dimension mismatch");
    }
    if (std::find(sys.signs.begin(), sys.signs.end(), ColumnSign::positive) != sys.signs.end()) {
        throw PreconditionError("minimize_linear does not take strictly positive columns");
    }
    const auto m = detail::map_columns(sys);
    auto sf = detail::to_standard(sys, m, 0);
    for (std::size_t j = 0; j < objective.size(); ++j) {
        sf.c[m.pos[j]] = objective[j];
        if (m.neg[j]) {
            sf.c[*m.neg[j]] = -objective[j];
        }
    }
    const auto out = detail::run_simplex(sf);
    using Status = detail::SimplexOutcome::Status;
    if (out.status == Status::infeasible) {
        return Infeasible{{out.y}};
    }
    if (out.status == Status::unbounded) {
        return Unbounded{detail::from_standard(out.x, m), detail::from_standard(out.ray, m)};
    }
    return Optimum{out.value, detail::from_standard(out.x, m), out.y};
}

/**
 * @brief Recheck a Farkas certificate from scratch
 *
 * nonneg: A^T y <= 0 on constrained columns, = 0 on free ones, y.b > 0.
 * strict: the same sign pattern and either y.b > 0, or y.b >= 0 with
 * (A^T y)_j < 0 on some positive column.
 */
inline auto verify_certificate(const LinearSystem& sys, std::span<const Rational> y,
                               CertificateMode mode) -> bool
{
    if (y.size() != sys.coeffs.rows() || sys.rhs.size() != sys.coeffs.rows() ||
        sys.signs.size() != sys.coeffs.cols()) {
        return false;
    }
    const auto aty = multiply_transpose(sys.coeffs, y);
    bool negative_on_positive = false;
    for (std::size_t j = 0; j < aty.size(); ++j) {
        if (sys.signs[j] == ColumnSign::free ? aty[j] != 0 : aty[j] > 0) {
            return false;
        }
        if (sys.signs[j] == ColumnSign::positive && aty[j] < 0) {
            negative_on_positive = true;
        }
    }
    Rational yb{0};
    for (std::size_t r = 0; r < y.size(); ++r) {
        yb += y[r] * sys.rhs[r];
    }
    if (mode == CertificateMode::nonneg) {
        return yb > 0;
    }
    return yb > 0 || (yb == 0 && negative_on_positive);
}

/** @brief A x = b exactly and each entry respects its column sign */
inline auto verify_solution(const LinearSystem& sys, std::span<const Rational> x) -> bool
{
    if (x.size() != sys.coeffs.cols() || sys.rhs.size() != sys.coeffs.rows()) {
        return false;
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        if ((sys.signs[j] == ColumnSign::nonneg && x[j] < 0) ||
            (sys.signs[j] == ColumnSign::positive && x[j] <= 0)) {
            return false;
        }
    }
    return multiply(sys.coeffs, x) == sys.rhs;
}

/**
 * @brief Optimality by weak duality: x feasible, y dual feasible, equal values
 */
inline auto verify_optimum(const std::vector<Rational>& objective, const LinearSystem& sys,
                           const Optimum& opt) -> bool
{
    if (!verify_solution(sys, opt.x) || opt.y.size() != sys.coeffs.rows() ||
        dot(objective, opt.x) != opt.value) {
        return false;
    }
    const auto aty = multiply_transpose(sys.coeffs, opt.y);
    for (std::size_t j = 0; j < aty.size(); ++j) {
        const Rational reduced = objective[j] - aty[j];
        if (sys.signs[j] == ColumnSign::free ? reduced != 0 : reduced < 0) {
            return false;
        }
    }
    return dot(opt.y, sys.rhs) == opt.value;
}

}  // namespace angstruct
