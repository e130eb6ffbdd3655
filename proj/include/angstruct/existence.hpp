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

/** @file existence.hpp
 *  @brief Angle systems B x = (a, b), existence decisions and the
 *  normal-surface condition chi* < chi^(A,kappa)
 */

#include <algorithm>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "angstruct/angles.hpp"
#include "angstruct/errors.hpp"
#include "angstruct/lp.hpp"
#include "angstruct/normal.hpp"

namespace angstruct
{

/**
 * @brief Rows: 4n corner rows (tet-major, vertex 0..3) then m edge rows.
 * Columns: 6n angles (tet-major, tet-edge 0..5). Right side in units of pi.
 */
struct AngleSystem {
    RationalMatrix b;
    std::vector<Rational> ab;
};

inline auto build_angle_system(const NormalSpace& space, const AreaCurvature& ac) -> AngleSystem
{
    const std::size_t n = space.tets();
    const std::size_t m = space.edges().size();
    if (ac.area.size() != 4 * n || ac.curvature.size() != m) {
        throw PreconditionError("area-curvature has " + std::to_string(ac.area.size()) +
                                " areas and " + std::to_string(ac.curvature.size()) +
                                " curvatures, expected " + std::to_string(4 * n) + " and " +
                                std::to_string(m));
    }
    AngleSystem sys{RationalMatrix(4 * n + m, 6 * n), {}};
    for (std::size_t i = 0; i < n; ++i) {
        for (int l = 0; l < 4; ++l) {
            const std::size_t row = 4 * i + static_cast<std::size_t>(l);
            for (int k : triangle_edges(l)) {
                sys.b(row, 6 * i + static_cast<std::size_t>(k)) = 1;
            }
            sys.ab.push_back(ac.area[row].value() + 1);
        }
    }
    for (const auto& e : space.edges()) {
        for (const auto& c : e.corners) {
            sys.b(4 * n + e.index, 6 * c.tet + static_cast<std::size_t>(c.edge)) += 1;
        }
        sys.ab.push_back(Rational(e.is_boundary ? 1 : 2) - ac.curvature[e.index].value());
    }
    return sys;
}

/** @brief Infeasibility witness for an angle system */
struct AngleCertificate {
    /** The system actually solved, including any x <= 1 rows */
    LinearSystem system;
    Certificate certificate;
    CertificateMode mode{CertificateMode::nonneg};
    /** Corner-row part of y (4n) */
    std::vector<Rational> h;
    /** Edge-row part of y (m) */
    std::vector<Rational> z;
};

struct FoundAngles {
    AngleAssignment angles;
    /** Smallest distance to 0 or pi, for strict solves */
    std::optional<Rational> margin;
};

using ExistenceResult = std::variant<FoundAngles, AngleCertificate>;

namespace detail
{
inline auto angle_linear_system(const NormalSpace& space, const AreaCurvature& ac, ColumnSign sign)
    -> LinearSystem
{
    const auto as = build_angle_system(space, ac);
    const std::size_t cols = as.b.cols();
    if (ac.area_nonpositive()) {
        return {as.b, as.ab, std::vector<ColumnSign>(cols, sign)};
    }
    // Corner sums no longer bound the angles by pi; add x + s = 1.
    LinearSystem sys{RationalMatrix(as.b.rows() + cols, 2 * cols), as.ab,
                     std::vector<ColumnSign>(2 * cols, sign)};
    for (std::size_t r = 0; r < as.b.rows(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            sys.coeffs(r, c) = as.b(r, c);
        }
    }
    for (std::size_t c = 0; c < cols; ++c) {
        sys.coeffs(as.b.rows() + c, c) = 1;
        sys.coeffs(as.b.rows() + c, cols + c) = 1;
        sys.rhs.emplace_back(1);
    }
    return sys;
}

inline auto make_certificate(const NormalSpace& space, LinearSystem sys, Certificate y,
                             CertificateMode mode) -> AngleCertificate
{
    if (!verify_certificate(sys, y.y, mode)) {
        throw InternalError("solver emitted a certificate that fails verification");
    }
    const std::size_t n4 = 4 * space.tets();
    const std::size_t m = space.edges().size();
    AngleCertificate c{std::move(sys), std::move(y), mode, {}, {}};
    c.h.assign(c.certificate.y.begin(), c.certificate.y.begin() + static_cast<std::ptrdiff_t>(n4));
    c.z.assign(c.certificate.y.begin() + static_cast<std::ptrdiff_t>(n4),
               c.certificate.y.begin() + static_cast<std::ptrdiff_t>(n4 + m));
    return c;
}

inline auto to_assignment(const std::vector<Rational>& x, std::size_t tets) -> AngleAssignment
{
    std::vector<AnglePi> angles;
    angles.reserve(6 * tets);
    for (std::size_t c = 0; c < 6 * tets; ++c) {
        angles.emplace_back(x[c]);
    }
    return AngleAssignment(std::move(angles));
}

inline void recheck(const NormalSpace& space, const AreaCurvature& ac, const AngleAssignment& a,
                    AngleKind want)
{
    if (realized_area_curvature(a, space) != ac) {
        throw InternalError("solver assignment does not realize the requested area-curvature");
    }
    const auto kind = classify(a);
    if (kind == AngleKind::generalized || (want == AngleKind::strict && kind != want)) {
        throw InternalError("solver assignment has the wrong angle class");
    }
}
}  // namespace detail

/**
 * @brief Semi-angle structure realizing (A, kappa), or a nonneg-mode certificate
 * @throws PreconditionError on dimension mismatch
 */
inline auto find_semi_angle_structure(const NormalSpace& space, const AreaCurvature& ac)
    -> ExistenceResult
{
    auto sys = detail::angle_linear_system(space, ac, ColumnSign::nonneg);
    auto res = solve_feasibility_nonneg(sys);
    if (auto* inf = std::get_if<Infeasible>(&res)) {
        return detail::make_certificate(space, std::move(sys), std::move(inf->certificate),
                                        CertificateMode::nonneg);
    }
    auto a = detail::to_assignment(std::get<Solution>(res).x, space.tets());
    detail::recheck(space, ac, a, AngleKind::semi);
    return FoundAngles{std::move(a), std::nullopt};
}

/**
 * @brief Angle structure (every angle in (0, pi)) realizing (A, kappa), or a
 * strict-mode certificate
 * @throws PreconditionError on dimension mismatch
 */
inline auto find_angle_structure(const NormalSpace& space, const AreaCurvature& ac)
    -> ExistenceResult
{
    auto sys = detail::angle_linear_system(space, ac, ColumnSign::positive);
    auto res = solve_feasibility_strict(sys);
    if (auto* ns = std::get_if<NotStrict>(&res)) {
        return detail::make_certificate(space, std::move(sys), std::move(ns->certificate),
                                        CertificateMode::strict);
    }
    const auto& sol = std::get<StrictSolution>(res);
    auto a = detail::to_assignment(sol.x, space.tets());
    detail::recheck(space, ac, a, AngleKind::strict);
    Rational margin = 1;
    for (const auto& x : a.angles()) {
        const Rational to_pi = 1 - x.value();
        margin = std::min({margin, x.value(), to_pi});
    }
    return FoundAngles{std::move(a), margin};
}

struct QuadBoundHolds {
    /** The quad slice is empty */
    bool vacuous{false};
    /** Half the maximum of sum_q A(q) x_q over the slice, in units where pi = 1 */
    std::optional<Rational> optimum;
    std::optional<NormalCoordinate> maximizer;
    /** Dual multipliers bounding the maximum from above */
    std::vector<Rational> dual;
};

struct QuadBoundFails {
    Rational optimum;
    NormalCoordinate witness;
};

using QuadBoundResult = std::variant<QuadBoundHolds, QuadBoundFails>;

/**
 * @brief The linear program behind the quad-cone bound
 *
 * Variables are the 7n normal coordinates: quads nonneg, triangles free.
 * Rows are the compatibility equations then sum of quads = 1. The objective
 * to minimise is -sum_q A(q) x_q.
 */
struct QuadBoundProgram {
    LinearSystem system;
    std::vector<Rational> objective;
};

inline auto quad_bound_program(const NormalSpace& space, const AngleAssignment& a)
    -> QuadBoundProgram
{
    const std::size_t n = space.tets();
    const auto& cm = space.compatibility().matrix;
    QuadBoundProgram p;
    p.system.coeffs = RationalMatrix(cm.rows() + 1, 7 * n);
    for (std::size_t r = 0; r < cm.rows(); ++r) {
        for (std::size_t c = 0; c < cm.cols(); ++c) {
            p.system.coeffs(r, c) = cm(r, c);
        }
    }
    for (std::size_t c = 0; c < 3 * n; ++c) {
        p.system.coeffs(cm.rows(), c) = 1;
    }
    p.system.rhs.assign(cm.rows(), Rational{0});
    p.system.rhs.emplace_back(1);
    p.system.signs.assign(7 * n, ColumnSign::free);
    std::fill(p.system.signs.begin(), p.system.signs.begin() + static_cast<std::ptrdiff_t>(3 * n),
              ColumnSign::nonneg);
    p.objective.assign(7 * n, Rational{0});
    for (std::size_t i = 0; i < n; ++i) {
        for (int q = 0; q < 3; ++q) {
            p.objective[quad_column(i, q)] = -area_of_quad(a, i, q).value();
        }
    }
    return p;
}

/**
 * @brief Decide whether chi*(s) < chi^(A,kappa)(s) on every s in the
 * solution space with nonnegative, nonzero quads
 *
 * By the quad-area form of chi^ the question is the sign of the maximum of
 * sum_q A(q) x_q over the slice sum_q x_q = 1.
 * @throws PreconditionError if a is not semi
 */
inline auto certify_condition2(const NormalSpace& space, const AngleAssignment& a)
    -> QuadBoundResult
{
    detail::check_tets(a, space.tets());
    require_semi(a);
    const auto prog = quad_bound_program(space, a);
    auto res = minimize_linear(prog.objective, prog.system);
    if (auto* inf = std::get_if<Infeasible>(&res)) {
        if (!verify_certificate(prog.system, inf->certificate.y, CertificateMode::nonneg)) {
            throw InternalError("empty quad slice certificate fails verification");
        }
        return QuadBoundHolds{true, std::nullopt, std::nullopt, inf->certificate.y};
    }
    if (std::holds_alternative<Unbounded>(res)) {
        throw InternalError("quad bound program unbounded over a bounded quad slice");
    }
    const auto& opt = std::get<Optimum>(res);
    if (!verify_optimum(prog.objective, prog.system, opt)) {
        throw InternalError("quad bound optimum fails duality verification");
    }
    const Rational optimum = -opt.value / 2;
    auto s = NormalCoordinate::from_flat(opt.x);
    if (optimum < 0) {
        return QuadBoundHolds{false, optimum, std::move(s), opt.y};
    }
    const auto pred = quad_cone_predicates(s);
    if (!space.contains(s) || !pred.all_quads_nonneg || !pred.some_quad_positive) {
        throw InternalError("quad bound witness fails verification");
    }
    return QuadBoundFails{optimum, std::move(s)};
}

enum class EquivalenceStatus { agree, disagree, hypothesis_unmet };

inline auto to_string(EquivalenceStatus s) -> std::string
{
    switch (s) {
        case EquivalenceStatus::agree:
            return "agree";
        case EquivalenceStatus::disagree:
            return "disagree";
        default:
            return "hypothesis unmet";
    }
}

struct EquivalenceReport {
    EquivalenceStatus status{EquivalenceStatus::hypothesis_unmet};
    std::optional<AngleAssignment> semi;
    std::optional<ExistenceResult> strict;
    std::optional<QuadBoundResult> quad_bound;
    bool strict_exists{false};
    bool quad_bound_holds{false};
    std::string diagnostics;
};

/**
 * @brief Run both sides of the strict-existence / quad bound equivalence
 *
 * Requires A <= 0 and some semi-angle structure realizing (A, kappa);
 * otherwise the report says "hypothesis unmet".
 */
inline auto check_corollary2(const NormalSpace& space, const AreaCurvature& ac) -> EquivalenceReport
{
    EquivalenceReport r;
    if (!ac.area_nonpositive()) {
        r.diagnostics = "some triangle area is positive";
        return r;
    }
    auto semi = find_semi_angle_structure(space, ac);
    if (std::holds_alternative<AngleCertificate>(semi)) {
        r.diagnostics = "no semi-angle structure realizes the area-curvature";
        return r;
    }
    r.semi = std::get<FoundAngles>(semi).angles;
    r.strict = find_angle_structure(space, ac);
    r.quad_bound = certify_condition2(space, *r.semi);
    r.strict_exists = std::holds_alternative<FoundAngles>(*r.strict);
    r.quad_bound_holds = std::holds_alternative<QuadBoundHolds>(*r.quad_bound);
    r.status = r.strict_exists == r.quad_bound_holds ? EquivalenceStatus::agree
                                                     : EquivalenceStatus::disagree;
    if (r.status == EquivalenceStatus::disagree) {
        std::ostringstream d;
        d << "strict structure " << (r.strict_exists ? "found" : "refuted by certificate")
          << " but quad bound " << (r.quad_bound_holds ? "holds" : "fails");
        d << "; semi angles:";
        for (const auto& x : r.semi->angles()) {
            d << " " << to_string(x);
        }
        if (const auto* h = std::get_if<QuadBoundHolds>(&*r.quad_bound); h && h->optimum) {
            d << "; quad bound optimum " << to_string(*h->optimum);
        }
        r.diagnostics = d.str();
    }
    return r;
}

/** @brief Both sides of the bridging identity, in units where pi = 1 */
struct IdentitySides {
    Rational lhs;
    Rational rhs;
};

/** @brief omega_i = sum_l h_i^l, the tetrahedral weights paired with h */
inline auto coupled_tetrahedral_weights(std::span<const Rational> h, std::size_t tets)
    -> std::vector<Rational>
{
    if (h.size() != 4 * tets) {
        throw PreconditionError("h must have 4n entries");
    }
    std::vector<Rational> omega(tets, Rational{0});
    for (std::size_t k = 0; k < h.size(); ++k) {
        omega[k / 4] += h[k];
    }
    return omega;
}

/**
 * @brief Evaluate (h,z).(a,b) against chi*(s) - chi^(s) plus the corner
 * correction, with s = sum omega_i W_sigma_i + sum z_j W_e_j
 *
 * The two sides agree when omega is coupled to h (see
 * coupled_tetrahedral_weights). Neither side is asserted here.
 * @throws BasisError when the triangulation has boundary faces
 */
inline auto identity_4_9(const NormalSpace& space, const AngleAssignment& a,
                         std::span<const Rational> h, std::span<const Rational> z,
                         std::span<const Rational> omega) -> IdentitySides
{
    const std::size_t n = space.tets();
    const std::size_t m = space.edges().size();
    detail::check_tets(a, n);
    require_semi(a);
    if (h.size() != 4 * n || z.size() != m || omega.size() != n) {
        throw PreconditionError("identity: (h, z, omega) dimension mismatch");
    }
    (void)space.basis();
    const auto s = space.compose(omega, z);
    const auto ac = realized_area_curvature(a, space);
    const auto sys = build_angle_system(space, ac);

    IdentitySides out;
    for (std::size_t k = 0; k < 4 * n; ++k) {
        out.lhs += h[k] * sys.ab[k];
    }
    for (std::size_t j = 0; j < m; ++j) {
        out.lhs += z[j] * sys.ab[4 * n + j];
    }

    Rational correction{0};
    for (const auto& e : space.edges()) {
        for (const auto& c : e.corners) {
            const auto [u, v] = kEdgeVertices[static_cast<std::size_t>(c.edge)];
            const auto hu = 4 * c.tet + static_cast<std::size_t>(u);
            const auto hv = 4 * c.tet + static_cast<std::size_t>(v);
            correction += (z[e.index] + h[hu] + h[hv]) * (sys.ab[hu] + sys.ab[hv] - 2);
        }
    }
    out.rhs = space.chi_star(s) - chi_area_curvature(space, s, ac) + correction / 2;
    return out;
}

}  // namespace angstruct
