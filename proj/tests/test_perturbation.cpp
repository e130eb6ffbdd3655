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
#include <catch_amalgamated.hpp>

#include "angstruct/fixtures.hpp"
#include "angstruct/perturbation.hpp"
#include "oracles/edges.hpp"
#include "oracles/sampling.hpp"

using namespace angstruct;

namespace
{

// Strict angles and negative areas everywhere.
auto strictly_negative(const AngleAssignment& a) -> bool
{
    if (classify(a) != AngleKind::strict) {
        return false;
    }
    for (std::size_t i = 0; i < a.tets(); ++i) {
        for (int l = 0; l < 4; ++l) {
            if (area_of_triangle(a, i, l) >= AnglePi{}) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("edge census", "[perturbation]")
{
    const NormalSpace fig8(fixtures::figure_eight());
    for (const auto& c : edge_angle_census(AngleAssignment::uniform(2, Rational(1, 3)), fig8)) {
        CHECK(c.zeros == 0);
        CHECK(c.pis == 0);
        CHECK(c.interior == 6);
    }

    for (const auto& name : {"fig8-flat1", "fig8-flat2", "flat-tet", "fig8-pinched"}) {
        const auto f = make_fixture(name);
        const NormalSpace space(f.triangulation);
        const auto census = edge_angle_census(*f.angles, space);
        // Count by enumeration over the union-find classes.
        std::multiset<std::tuple<std::size_t, std::size_t, std::size_t>> want;
        for (const auto& cls : oracle::edge_partition(f.triangulation).classes) {
            std::size_t z = 0;
            std::size_t p = 0;
            std::size_t k = 0;
            for (const auto& [i, e] : cls) {
                const auto& x = f.angles->at(i, e);
                (x.is_zero() ? z : x.is_pi() ? p : k) += 1;
            }
            want.insert({z, p, k});
        }
        std::multiset<std::tuple<std::size_t, std::size_t, std::size_t>> got;
        for (const auto& e : space.edges()) {
            const auto& c = census[e.index];
            CHECK(c.zeros + c.pis + c.interior == e.valence());
            got.insert({c.zeros, c.pis, c.interior});
        }
        INFO(name);
        CHECK(got == want);
    }

    const auto flat = make_fixture("flat-tet");
    const NormalSpace single(flat.triangulation);
    const auto census = edge_angle_census(*flat.angles, single);
    CHECK(census[0].pis == 1);
    CHECK(census[0].interior == 0);
}

TEST_CASE("perturbation rejects unsuitable inputs", "[perturbation]")
{
    const NormalSpace fig8(fixtures::figure_eight());
    CHECK_THROWS_WITH(build_perturbation(AngleAssignment::uniform(2, Rational(1, 3)), fig8),
                      "not a flat pair");
    const auto flat = make_fixture("flat-tet");
    CHECK_THROWS_WITH(build_perturbation(*flat.angles, NormalSpace(flat.triangulation)),
                      Catch::Matchers::ContainsSubstring("edge 0 has 0 or pi angles but none in (0, pi)"));
    CHECK_THROWS_AS(apply_theorem3(*flat.angles, NormalSpace(flat.triangulation)), PreconditionError);
}

TEST_CASE("no flat parts: the family is constant", "[perturbation]")
{
    const NormalSpace fig8(fixtures::figure_eight());
    const auto quarter = AngleAssignment::uniform(2, Rational(1, 4));
    const auto fam = build_perturbation(quarter, fig8);
    for (const auto& s : fam.slope) {
        CHECK(s == 0);
    }
    CHECK(max_perturbation_parameter(fam) == 1);
    const auto r = apply_theorem3(quarter, fig8);
    CHECK(r.perturbed == quarter);
}

TEST_CASE("perturbation rules and zero-sum slopes", "[perturbation]")
{
    for (const auto& name : {"fig8-flat1", "fig8-flat2"}) {
        const auto f = make_fixture(name);
        const NormalSpace space(f.triangulation);
        const auto fam = build_perturbation(*f.angles, space);
        for (const auto& e : space.edges()) {
            Rational sum{0};
            const auto& c = fam.census[e.index];
            const Rational shift(-(static_cast<long>(c.zeros) - 3 * static_cast<long>(c.pis)),
                                 static_cast<long>(c.interior));
            for (const auto& k : e.corners) {
                const auto& s = fam.slope[6 * k.tet + static_cast<std::size_t>(k.edge)];
                const auto& x = f.angles->at(k.tet, k.edge);
                CHECK(s == (x.is_zero() ? Rational{1} : x.is_pi() ? Rational{-3} : shift));
                sum += s;
            }
            CHECK(sum == 0);
        }
        for (std::size_t i = 0; i < space.tets(); ++i) {
            for (int l = 0; l < 4; ++l) {
                if (is_flat_triangle(*f.angles, i, l)) {
                    Rational ds{0};
                    for (int k : triangle_edges(l)) {
                        ds += fam.slope[6 * i + static_cast<std::size_t>(k)];
                    }
                    CHECK(ds == -1);
                }
            }
        }
    }
}

TEST_CASE("t_max on the flat fixtures", "[perturbation]")
{
    const auto one = make_fixture("fig8-flat1");
    const auto two = make_fixture("fig8-flat2");
    CHECK(max_perturbation_parameter(build_perturbation(*one.angles, NormalSpace(one.triangulation))) ==
          Rational(3, 10));
    CHECK(max_perturbation_parameter(build_perturbation(*two.angles, NormalSpace(two.triangulation))) ==
          Rational(3, 20));
}

TEST_CASE("sampling the family around t_max", "[perturbation][property]")
{
    oracle::Sampler rng(51);
    for (const auto& name : {"fig8-flat1", "fig8-flat2"}) {
        const auto f = make_fixture(name);
        const NormalSpace space(f.triangulation);
        const auto fam = build_perturbation(*f.angles, space);
        const auto t_max = max_perturbation_parameter(fam);
        const auto base = realized_area_curvature(*f.angles, space);

        CHECK(strictly_negative(fam.at(t_max / 2)));
        CHECK_FALSE(strictly_negative(fam.at(2 * t_max)));
        CHECK_FALSE(strictly_negative(fam.at(t_max)));

        for (int k = 0; k < 100; ++k) {
            const Rational t = t_max * Rational(rng.integer(1, 999), 1000);
            const auto a = fam.at(t);
            INFO(name << " t = " << to_string(t));
            CHECK(strictly_negative(a));
            CHECK(realized_area_curvature(a, space).curvature == base.curvature);
        }
        // Curvature is preserved for every t, feasible or not.
        for (int k = 0; k < 20; ++k) {
            const auto t = rng.rational(20, 7);
            CHECK(realized_area_curvature(fam.at(t), space).curvature == base.curvature);
        }
    }
}

TEST_CASE("perturbed flat fixtures", "[perturbation]")
{
    for (const auto& name : {"fig8-flat1", "fig8-flat2"}) {
        const auto f = make_fixture(name);
        const NormalSpace space(f.triangulation);
        const auto r = apply_theorem3(*f.angles, space);
        CHECK(r.t_star == r.t_max / 2);
        CHECK(classify(r.perturbed) == AngleKind::strict);
        CHECK(r.after.curvature == r.before.curvature);
        CHECK(r.after == realized_area_curvature(r.perturbed, space));
        for (std::size_t i = 0; i < space.tets(); ++i) {
            for (int l = 0; l < 4; ++l) {
                const auto area = r.after.area[4 * i + static_cast<std::size_t>(l)];
                CHECK(area < AnglePi{});
                if (is_flat_triangle(*f.angles, i, l)) {
                    CHECK(area == AnglePi{-r.t_star});
                }
            }
        }
    }
}
