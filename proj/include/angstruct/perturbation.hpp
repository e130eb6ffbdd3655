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

/** @file perturbation.hpp
 *  @brief Upgrading a flat semi-angle structure to an angle structure with
 *  negative triangle areas and unchanged edge curvatures
 */

#include <optional>
#include <string>
#include <vector>

#include "angstruct/angles.hpp"
#include "angstruct/errors.hpp"
#include "angstruct/normal.hpp"

namespace angstruct
{

/** @brief Counts of 0, pi and open-interval angles around one edge class */
struct EdgeCensus {
    std::size_t zeros{0};
    std::size_t pis{0};
    std::size_t interior{0};
};

using EdgeAngleCensus = std::vector<EdgeCensus>;

/**
 * @brief Per edge class (m1, n1, k1)
 * @throws PreconditionError if a is not semi
 */
inline auto edge_angle_census(const AngleAssignment& a, const NormalSpace& space) -> EdgeAngleCensus
{
    detail::check_tets(a, space.tets());
    require_semi(a);
    EdgeAngleCensus out;
    for (const auto& e : space.edges()) {
        EdgeCensus c;
        for (const auto& k : e.corners) {
            const auto& x = a.at(k.tet, k.edge);
            if (x.is_zero()) {
                ++c.zeros;
            } else if (x.is_pi()) {
                ++c.pis;
            } else {
                ++c.interior;
            }
        }
        out.push_back(c);
    }
    return out;
}

/** @brief constant + slope * t > 0 must hold */
struct AffineConstraint {
    std::string what;
    Rational constant;
    Rational slope;
};

/** @brief alpha_t = base + t * slope, per (tet, tet-edge) */
struct PerturbationFamily {
    AngleAssignment base;
    std::vector<Rational> slope;
    EdgeAngleCensus census;
    std::vector<AffineConstraint> constraints;

    [[nodiscard]] auto at(const Rational& t) const -> AngleAssignment
    {
        std::vector<AnglePi> out;
        for (std::size_t c = 0; c < slope.size(); ++c) {
            out.emplace_back(base.angles()[c].value() + t * slope[c]);
        }
        return AngleAssignment(std::move(out));
    }
};

/**
 * @brief The affine family: 0 -> t, pi -> pi - 3t, other angles on an edge
 * with 0 or pi angles shift by -(m1 - 3 n1)/k1 t
 * @throws PreconditionError if a is not a flat pair or some edge has a 0 or
 * pi angle but no angle in (0, pi)
 */
inline auto build_perturbation(const AngleAssignment& a, const NormalSpace& space)
    -> PerturbationFamily
{
    if (!is_flat_pair(a, space.triangulation())) {
        throw PreconditionError("not a flat pair");
    }
    PerturbationFamily fam{a, std::vector<Rational>(6 * space.tets(), Rational{0}),
                           edge_angle_census(a, space), {}};
    for (const auto& e : space.edges()) {
        const auto& c = fam.census[e.index];
        if (c.zeros + c.pis == 0) {
            continue;
        }
        if (c.interior == 0) {
            throw PreconditionError("edge " + std::to_string(e.index) +
                                    " has 0 or pi angles but none in (0, pi)");
        }
        const Rational shift(-(static_cast<long>(c.zeros) - 3 * static_cast<long>(c.pis)),
                             static_cast<long>(c.interior));
        for (const auto& k : e.corners) {
            const auto& x = a.at(k.tet, k.edge);
            fam.slope[6 * k.tet + static_cast<std::size_t>(k.edge)] =
                x.is_zero() ? Rational{1} : x.is_pi() ? Rational{-3} : shift;
        }
    }

    for (std::size_t i = 0; i < space.tets(); ++i) {
        for (int k = 0; k < 6; ++k) {
            const auto& x = a.at(i, k).value();
            const auto& s = fam.slope[6 * i + static_cast<std::size_t>(k)];
            const std::string tag = "angle " + std::to_string(i) + ":" + std::to_string(k);
            fam.constraints.push_back({tag + " > 0", x, s});
            fam.constraints.push_back({tag + " < pi", 1 - x, -s});
        }
        for (int l = 0; l < 4; ++l) {
            Rational ds{0};
            for (int k : triangle_edges(l)) {
                ds += fam.slope[6 * i + static_cast<std::size_t>(k)];
            }
            fam.constraints.push_back({"area " + std::to_string(i) + ":" + std::to_string(l) + " < 0",
                                       -area_of_triangle(a, i, l).value(), -ds});
        }
    }
    return fam;
}

/**
 * @brief Supremum of t for which every constraint holds on (0, t)
 *
 * 1 when no constraint binds.
 * @throws InternalError if some constraint fails for every t > 0
 */
inline auto max_perturbation_parameter(const PerturbationFamily& fam) -> Rational
{
    std::optional<Rational> t_max;
    for (const auto& c : fam.constraints) {
        if (c.constant < 0 || (c.constant == 0 && c.slope <= 0)) {
            throw InternalError("constraint '" + c.what + "' fails for all small t");
        }
        if (c.slope < 0) {
            Rational bound = c.constant / -c.slope;
            if (!t_max || bound < *t_max) {
                t_max = std::move(bound);
            }
        }
    }
    return t_max.value_or(Rational{1});
}

struct PerturbationResult {
    EdgeAngleCensus census;
    Rational t_max;
    Rational t_star;
    AngleAssignment perturbed;
    AreaCurvature before;
    AreaCurvature after;
};

/**
 * @brief Perturb at t* = t_max / 2 and verify the result exactly
 * @throws PreconditionError as build_perturbation
 */
inline auto apply_theorem3(const AngleAssignment& a, const NormalSpace& space) -> PerturbationResult
{
    const auto fam = build_perturbation(a, space);
    PerturbationResult r;
    r.census = fam.census;
    r.t_max = max_perturbation_parameter(fam);
    r.t_star = r.t_max / 2;
    r.perturbed = fam.at(r.t_star);
    r.before = realized_area_curvature(a, space);
    r.after = realized_area_curvature(r.perturbed, space);

    if (classify(r.perturbed) != AngleKind::strict) {
        throw InternalError("perturbed assignment is not strict");
    }
    if (r.after.curvature != r.before.curvature) {
        throw InternalError("perturbation changed an edge curvature");
    }
    for (std::size_t i = 0; i < space.tets(); ++i) {
        for (int l = 0; l < 4; ++l) {
            const auto& area = r.after.area[4 * i + static_cast<std::size_t>(l)];
            if (area >= AnglePi{}) {
                throw InternalError("perturbed triangle area is not negative");
            }
            if (is_flat_triangle(a, i, l) && area != AnglePi{-r.t_star}) {
                throw InternalError("flat triangle did not acquire area -t*");
            }
        }
    }
    return r;
}

}  // namespace angstruct
