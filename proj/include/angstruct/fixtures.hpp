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

/** @file fixtures.hpp
 *  @brief Named triangulations with angle and area-curvature data
 */

#include <optional>
#include <string>
#include <vector>

#include "angstruct/angles.hpp"
#include "angstruct/errors.hpp"
#include "angstruct/normal.hpp"
#include "angstruct/triangulation.hpp"

namespace angstruct
{

struct Fixture {
    std::string name;
    std::string description;
    Triangulation triangulation;
    std::optional<AngleAssignment> angles;
    std::optional<AreaCurvature> area_curvature;
};

namespace fixtures
{

/** Figure-eight knot complement: two tetrahedra, two valence-6 edges, one torus cusp */
inline constexpr const char* kFigureEight = R"(# figure-eight knot complement
tets 2
glue 0 0 1 3 3120
glue 0 1 1 2 0213
glue 0 2 1 0 2103
glue 0 3 1 1 0321
)";

/** Gieseking manifold: one tetrahedron, one edge, Klein bottle cusp */
inline constexpr const char* kGieseking = R"(# Gieseking manifold
tets 1
glue 0 0 0 1 1203
glue 0 2 0 3 0231
)";

/** One tetrahedron with faces 0 and 1 folded together */
inline constexpr const char* kOneFold = R"(# one tetrahedron, one face pair glued
tets 1
glue 0 0 0 1 1023
)";

/** Two tetrahedra glued face-to-face by the identity: four sphere links */
inline constexpr const char* kSphereDouble = R"(# double of a tetrahedron
tets 2
glue 0 0 1 0 0123
glue 0 1 1 1 0123
glue 0 2 1 2 0123
glue 0 3 1 3 0123
)";

inline constexpr const char* kSingleTet = "tets 1\n";

/** Flat tetrahedron: pi on the opposite pair 01/23, 0 on the other four edges */
inline auto flat_tetrahedron_angles() -> std::vector<AnglePi>
{
    return {AnglePi{1}, AnglePi{}, AnglePi{}, AnglePi{}, AnglePi{}, AnglePi{1}};
}

inline auto figure_eight() -> Triangulation { return parse_triangulation(kFigureEight, "fig8"); }

/**
 * Figure-eight with `count` flat tetrahedra stacked into face (0,0). The
 * original tetrahedra carry pi/4 everywhere.
 */
inline auto figure_eight_flat(std::size_t count, const std::string& name) -> Fixture
{
    auto t = figure_eight();
    std::vector<AnglePi> angles(12, AnglePi{Rational(1, 4)});
    for (std::size_t c = 0; c < count; ++c) {
        const FaceRef a{0, 0};
        const auto g = *t.gluing(a);
        auto ins = insert_flat_tetrahedron(t, a, g.target, g.perm);
        t = std::move(ins.triangulation);
        const auto flat = flat_tetrahedron_angles();
        angles.insert(angles.end(), flat.begin(), flat.end());
    }
    t = Triangulation::create(t.size(), t.gluing_list(), name);
    AngleAssignment alpha(std::move(angles));
    auto ac = realized_area_curvature(alpha, t);
    return {name,
            "figure-eight with " + std::to_string(count) +
                " flat tetrahedra inserted at face (0,0); flat semi-angle structure",
            std::move(t), std::move(alpha), std::move(ac)};
}

}  // namespace fixtures

inline auto fixture_names() -> std::vector<std::string>
{
    return {"fig8",        "fig8-flat1",  "fig8-flat2", "fig8-pinched", "fig8-kappa-infeasible",
            "gieseking",   "single-tet",  "flat-tet",   "one-fold",     "sphere-double"};
}

/** @throws PreconditionError for an unknown name */
inline auto make_fixture(const std::string& name) -> Fixture
{
    using namespace fixtures;
    if (name == "fig8") {
        auto t = figure_eight();
        return {name, "figure-eight knot complement, pi/3 everywhere", t,
                AngleAssignment::uniform(2, Rational(1, 3)), AreaCurvature::zero(2, 2)};
    }
    if (name == "fig8-flat1") {
        return figure_eight_flat(1, name);
    }
    if (name == "fig8-flat2") {
        return figure_eight_flat(2, name);
    }
    if (name == "fig8-pinched") {
        // pi on the opposite pair 03/12 of both tetrahedra, 0 elsewhere.
        auto t = figure_eight();
        std::vector<AnglePi> angles(12);
        for (std::size_t i = 0; i < 2; ++i) {
            angles[6 * i + 2] = AnglePi{1};
            angles[6 * i + 3] = AnglePi{1};
        }
        AngleAssignment alpha(std::move(angles));
        auto ac = realized_area_curvature(alpha, t);
        return {name, "figure-eight, semi structure with zero-area quadrilaterals", std::move(t),
                std::move(alpha), std::move(ac)};
    }
    if (name == "fig8-kappa-infeasible") {
        auto t = figure_eight();
        auto ac = AreaCurvature::zero(2, 2);
        ac.curvature[0] = AnglePi{2};
        return {name, "figure-eight, A = 0 with curvature 2pi on edge 0; no semi structure", t,
                std::nullopt, std::move(ac)};
    }
    if (name == "gieseking") {
        auto t = parse_triangulation(kGieseking, name);
        return {name, "Gieseking manifold, pi/3 everywhere", t,
                AngleAssignment::uniform(1, Rational(1, 3)), AreaCurvature::zero(1, 1)};
    }
    if (name == "single-tet") {
        auto t = parse_triangulation(kSingleTet, name);
        AngleAssignment alpha(std::vector<AnglePi>{AnglePi{Rational(1, 3)}, AnglePi{Rational(1, 4)},
                                                   AnglePi{Rational(1, 6)}, AnglePi{Rational(1, 5)},
                                                   AnglePi{Rational(1, 3)}, AnglePi{Rational(1, 2)}});
        auto ac = realized_area_curvature(alpha, t);
        return {name, "one unglued tetrahedron with a strict structure", std::move(t),
                std::move(alpha), std::move(ac)};
    }
    if (name == "flat-tet") {
        auto t = parse_triangulation(kSingleTet, name);
        AngleAssignment alpha(flat_tetrahedron_angles());
        auto ac = realized_area_curvature(alpha, t);
        return {name, "one flat tetrahedron, pi on the opposite pair 01/23", std::move(t),
                std::move(alpha), std::move(ac)};
    }
    if (name == "one-fold") {
        auto t = parse_triangulation(kOneFold, name);
        auto alpha = AngleAssignment::uniform(1, Rational(1, 3));
        auto ac = realized_area_curvature(alpha, t);
        return {name, "one tetrahedron with faces 0 and 1 glued, pi/3 everywhere", std::move(t),
                std::move(alpha), std::move(ac)};
    }
    if (name == "sphere-double") {
        auto t = parse_triangulation(kSphereDouble, name);
        auto alpha = AngleAssignment::uniform(2, Rational(1, 3));
        auto ac = realized_area_curvature(alpha, t);
        return {name, "double of a tetrahedron; vertex links are spheres", std::move(t),
                std::move(alpha), std::move(ac)};
    }
    throw PreconditionError("unknown fixture '" + name + "'");
}

}  // namespace angstruct
