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

/** @file angles.hpp
 *  @brief Dihedral angle assignments, area-curvature and the chi functionals
 */

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "angstruct/errors.hpp"
#include "angstruct/normal.hpp"
#include "angstruct/rational.hpp"
#include "angstruct/triangulation.hpp"

namespace angstruct
{

/** @brief Six angles per tetrahedron, tet-major, tet-edge 0..5 */
class AngleAssignment
{
public:
    AngleAssignment() = default;
    explicit AngleAssignment(std::size_t tets) : angles_(6 * tets) {}
    explicit AngleAssignment(std::vector<AnglePi> angles) : angles_(std::move(angles))
    {
        if (angles_.size() % 6 != 0) {
            throw std::invalid_argument("angle assignment length must be 6n");
        }
    }
    /** @brief Every angle set to the same value */
    static auto uniform(std::size_t tets, const Rational& value) -> AngleAssignment
    {
        return AngleAssignment(std::vector<AnglePi>(6 * tets, AnglePi{value}));
    }

    [[nodiscard]] auto tets() const -> std::size_t { return angles_.size() / 6; }
    [[nodiscard]] auto angles() const -> const std::vector<AnglePi>& { return angles_; }
    auto at(std::size_t tet, int k) -> AnglePi& { return angles_.at(6 * tet + static_cast<std::size_t>(k)); }
    [[nodiscard]] auto at(std::size_t tet, int k) const -> const AnglePi&
    {
        return angles_.at(6 * tet + static_cast<std::size_t>(k));
    }

    friend auto operator==(const AngleAssignment&, const AngleAssignment&) -> bool = default;

private:
    std::vector<AnglePi> angles_;
};

/** @brief Area per normal triangle type (4n) and curvature per edge class (m) */
struct AreaCurvature {
    std::vector<AnglePi> area;
    std::vector<AnglePi> curvature;

    /** @brief A = 0, kappa = 0 */
    static auto zero(std::size_t tets, std::size_t edges) -> AreaCurvature
    {
        return {std::vector<AnglePi>(4 * tets), std::vector<AnglePi>(edges)};
    }
    [[nodiscard]] auto area_nonpositive() const -> bool
    {
        return std::all_of(area.begin(), area.end(), [](const AnglePi& a) { return a <= AnglePi{}; });
    }
    friend auto operator==(const AreaCurvature&, const AreaCurvature&) -> bool = default;
};

inline auto area_of_triangle(const AngleAssignment& a, std::size_t tet, int corner) -> AnglePi
{
    AnglePi s = -AnglePi::pi();
    for (int k : triangle_edges(corner)) {
        s += a.at(tet, k);
    }
    return s;
}

inline auto area_of_quad(const AngleAssignment& a, std::size_t tet, int quad) -> AnglePi
{
    AnglePi s{-2};
    for (int k : quad_edges(quad)) {
        s += a.at(tet, k);
    }
    return s;
}

/** @brief 2pi (interior) or pi (boundary) minus the angle sum around e */
inline auto curvature(const AngleAssignment& a, const EdgeClass& e) -> AnglePi
{
    AnglePi s{e.is_boundary ? 1 : 2};
    for (const auto& c : e.corners) {
        s -= a.at(c.tet, c.edge);
    }
    return s;
}

namespace detail
{
inline void check_tets(const AngleAssignment& a, std::size_t tets)
{
    if (a.tets() != tets) {
        throw PreconditionError("angle assignment has " + std::to_string(a.tets()) +
                                " tetrahedra, triangulation has " + std::to_string(tets));
    }
}
}  // namespace detail

inline auto realized_area_curvature(const AngleAssignment& a, const NormalSpace& space)
    -> AreaCurvature
{
    detail::check_tets(a, space.tets());
    AreaCurvature ac;
    for (std::size_t i = 0; i < space.tets(); ++i) {
        for (int v = 0; v < 4; ++v) {
            ac.area.push_back(area_of_triangle(a, i, v));
        }
    }
    for (const auto& e : space.edges()) {
        ac.curvature.push_back(curvature(a, e));
    }
    return ac;
}

inline auto realized_area_curvature(const AngleAssignment& a, const Triangulation& t)
    -> AreaCurvature
{
    return realized_area_curvature(a, NormalSpace(t));
}

enum class AngleKind { generalized, semi, strict };

inline auto to_string(AngleKind k) -> std::string
{
    switch (k) {
        case AngleKind::strict:
            return "strict";
        case AngleKind::semi:
            return "semi";
        default:
            return "generalized";
    }
}

inline auto classify(const AngleAssignment& a) -> AngleKind
{
    bool strict = true;
    for (const auto& x : a.angles()) {
        if (x < AnglePi{} || x > AnglePi::pi()) {
            return AngleKind::generalized;
        }
        if (x.is_zero() || x.is_pi()) {
            strict = false;
        }
    }
    return strict ? AngleKind::strict : AngleKind::semi;
}

inline void require_semi(const AngleAssignment& a)
{
    if (classify(a) == AngleKind::generalized) {
        throw PreconditionError("angle assignment is not semi (some angle outside [0, pi])");
    }
}

enum class LinkCondition { equals_pi, below_pi, not_applicable };

struct CornerCheck {
    VertexCorner corner;
    std::size_t vertex_class{0};
    long link_euler{0};
    AnglePi angle_sum;
    LinkCondition condition{LinkCondition::not_applicable};
    bool pass{true};
};

/**
 * @brief Corner angle sums against the vertex link type
 *
 * Closed links with Euler characteristic 0 need sum = pi, negative Euler
 * characteristic needs sum < pi. Other links impose nothing.
 */
inline auto check_vertex_link_conditions(const AngleAssignment& a, const Triangulation& t)
    -> std::vector<CornerCheck>
{
    detail::check_tets(a, t.size());
    std::vector<CornerCheck> out;
    for (const auto& vc : build_vertex_classes(t)) {
        for (const auto& c : vc.corners) {
            CornerCheck r;
            r.corner = c;
            r.vertex_class = vc.index;
            r.link_euler = vc.link_euler;
            r.angle_sum = area_of_triangle(a, c.tet, c.vertex) + AnglePi::pi();
            if (vc.link_closed && vc.link_euler == 0) {
                r.condition = LinkCondition::equals_pi;
                r.pass = r.angle_sum == AnglePi::pi();
            } else if (vc.link_closed && vc.link_euler < 0) {
                r.condition = LinkCondition::below_pi;
                r.pass = r.angle_sum < AnglePi::pi();
            }
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CornerCheck& x, const CornerCheck& y) { return x.corner < y.corner; });
    return out;
}

/** @brief Whether triangle (tet, l) carries the angles {0, 0, pi} */
inline auto is_flat_triangle(const AngleAssignment& a, std::size_t tet, int l) -> bool
{
    int zeros = 0;
    int pis = 0;
    for (int k : triangle_edges(l)) {
        zeros += a.at(tet, k).is_zero() ? 1 : 0;
        pis += a.at(tet, k).is_pi() ? 1 : 0;
    }
    return zeros == 2 && pis == 1;
}

/**
 * @brief Every triangle is either a (0,0,pi) triangle or has negative area
 * @throws PreconditionError if a is not semi
 */
inline auto is_flat_pair(const AngleAssignment& a, const Triangulation& t) -> bool
{
    detail::check_tets(a, t.size());
    require_semi(a);
    for (std::size_t i = 0; i < a.tets(); ++i) {
        for (int l = 0; l < 4; ++l) {
            if (!is_flat_triangle(a, i, l) && area_of_triangle(a, i, l) >= AnglePi{}) {
                return false;
            }
        }
    }
    return true;
}

/**
 * @brief (1/2pi)(sum_t y_t A(t) + 2 sum_j z_j kappa_j); pi cancels
 * @throws NotInSolutionSpace
 */
inline auto chi_area_curvature(const NormalSpace& space, const NormalCoordinate& s,
                               const AreaCurvature& ac) -> Rational
{
    if (ac.area.size() != 4 * space.tets() || ac.curvature.size() != space.edges().size()) {
        throw PreconditionError("area-curvature dimension mismatch");
    }
    const auto z = space.z_all(s);
    Rational total{0};
    for (std::size_t k = 0; k < ac.area.size(); ++k) {
        total += s.tris()[k] * ac.area[k].value();
    }
    for (std::size_t j = 0; j < z.size(); ++j) {
        total += 2 * z[j] * ac.curvature[j].value();
    }
    return total / 2;
}

/**
 * @brief chi*(s) - (1/2pi) sum_q A(q) x_q(s)
 * @throws PreconditionError if a is not semi; NotInSolutionSpace
 */
inline auto chi_via_lemma2(const NormalSpace& space, const NormalCoordinate& s,
                           const AngleAssignment& a) -> Rational
{
    detail::check_tets(a, space.tets());
    require_semi(a);
    if (!space.contains(s)) {
        throw NotInSolutionSpace();
    }
    Rational quad_term{0};
    for (std::size_t i = 0; i < space.tets(); ++i) {
        for (int p = 0; p < 3; ++p) {
            quad_term += area_of_quad(a, i, p).value() * s.quad(i, p);
        }
    }
    return space.chi_star(s) - quad_term / 2;
}

}  // namespace angstruct
