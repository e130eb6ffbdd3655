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

#include "angstruct/existence.hpp"
#include "angstruct/fixtures.hpp"
#include "angstruct/perturbation.hpp"
#include "oracles/brute_lp.hpp"
#include "oracles/sampling.hpp"

using namespace angstruct;

namespace
{

auto angles(std::initializer_list<Rational> xs) -> AngleAssignment
{
    std::vector<AnglePi> v;
    for (const auto& x : xs) {
        v.emplace_back(x);
    }
    return AngleAssignment(std::move(v));
}

auto quad_area_sum(const AngleAssignment& a, std::size_t tet) -> Rational
{
    Rational s{0};
    for (int p = 0; p < 3; ++p) {
        s += area_of_quad(a, tet, p).value();
    }
    return s;
}

auto all_quads_negative(const AngleAssignment& a) -> bool
{
    for (std::size_t i = 0; i < a.tets(); ++i) {
        for (int p = 0; p < 3; ++p) {
            if (area_of_quad(a, i, p) >= AnglePi{}) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("angle system layout", "[existence]")
{
    const NormalSpace fig8(fixtures::figure_eight());
    const auto sys = build_angle_system(fig8, AreaCurvature::zero(2, 2));
    CHECK(sys.b.rows() == 10);
    CHECK(sys.b.cols() == 12);
    for (std::size_t r = 0; r < 8; ++r) {
        CHECK(sys.ab[r] == 1);
    }
    CHECK(sys.ab[8] == 2);
    CHECK(sys.ab[9] == 2);
    for (std::size_t c = 0; c < 12; ++c) {
        int corner_rows = 0;
        int edge_rows = 0;
        for (std::size_t r = 0; r < 10; ++r) {
            (r < 8 ? corner_rows : edge_rows) += sys.b(r, c) == 1 ? 1 : 0;
        }
        CHECK(corner_rows == 2);
        CHECK(edge_rows == 1);
    }

    const auto f = make_fixture("flat-tet");
    const NormalSpace single(f.triangulation);
    auto ac = *f.area_curvature;
    ac.curvature[2] = AnglePi{Rational(1, 4)};
    const auto s2 = build_angle_system(single, ac);
    for (const auto& e : single.edges()) {
        CHECK(s2.ab[4 + e.index] == 1 - ac.curvature[e.index].value());
    }
    CHECK_THROWS_AS(build_angle_system(fig8, AreaCurvature::zero(2, 3)), PreconditionError);
}

TEST_CASE("figure-eight (0,0) has a strict structure", "[existence][fig8]")
{
    const NormalSpace space(fixtures::figure_eight());
    const auto zero = AreaCurvature::zero(2, 2);
    const auto semi = find_semi_angle_structure(space, zero);
    REQUIRE(std::holds_alternative<FoundAngles>(semi));
    CHECK(realized_area_curvature(std::get<FoundAngles>(semi).angles, space) == zero);

    const auto strict = find_angle_structure(space, zero);
    REQUIRE(std::holds_alternative<FoundAngles>(strict));
    const auto& found = std::get<FoundAngles>(strict);
    CHECK(classify(found.angles) == AngleKind::strict);
    CHECK(realized_area_curvature(found.angles, space) == zero);
    REQUIRE(found.margin);
    CHECK(*found.margin > 0);
    CHECK(all_quads_negative(found.angles));
}

TEST_CASE("excess curvature is refuted with a certificate", "[existence]")
{
    const auto f = make_fixture("fig8-kappa-infeasible");
    const NormalSpace space(f.triangulation);
    const auto r = find_semi_angle_structure(space, *f.area_curvature);
    REQUIRE(std::holds_alternative<AngleCertificate>(r));
    const auto& c = std::get<AngleCertificate>(r);
    CHECK(verify_certificate(c.system, c.certificate.y, CertificateMode::nonneg));
    CHECK(c.h.size() == 8);
    CHECK(c.z.size() == 2);

    const auto s = find_angle_structure(space, *f.area_curvature);
    REQUIRE(std::holds_alternative<AngleCertificate>(s));
    CHECK(verify_certificate(std::get<AngleCertificate>(s).system,
                             std::get<AngleCertificate>(s).certificate.y, CertificateMode::strict));
}

TEST_CASE("positive areas add angle upper bounds", "[existence]")
{
    const NormalSpace space(parse_triangulation(fixtures::kSingleTet));
    auto a = angles({Rational(9, 10), Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(3, 4), Rational(2, 3)});
    const auto ac = realized_area_curvature(a, space);
    REQUIRE_FALSE(ac.area_nonpositive());
    const auto r = find_semi_angle_structure(space, ac);
    REQUIRE(std::holds_alternative<FoundAngles>(r));
    CHECK(realized_area_curvature(std::get<FoundAngles>(r).angles, space) == ac);
    CHECK(classify(std::get<FoundAngles>(r).angles) != AngleKind::generalized);
}

TEST_CASE("flat fixtures: semi found, strict matches the perturbation", "[existence][flat]")
{
    for (const auto& name : {"fig8-flat1", "fig8-flat2"}) {
        const auto f = make_fixture(name);
        const NormalSpace space(f.triangulation);
        const auto semi = find_semi_angle_structure(space, *f.area_curvature);
        REQUIRE(std::holds_alternative<FoundAngles>(semi));
        CHECK(realized_area_curvature(std::get<FoundAngles>(semi).angles, space) == *f.area_curvature);

        const auto p = apply_theorem3(*f.angles, space);
        const auto strict = find_angle_structure(space, p.after);
        REQUIRE(std::holds_alternative<FoundAngles>(strict));
        CHECK(realized_area_curvature(std::get<FoundAngles>(strict).angles, space) == p.after);
        CHECK(all_quads_negative(std::get<FoundAngles>(strict).angles));
    }
}

TEST_CASE("semi and strict outcomes match the brute-force oracle", "[existence][oracle]")
{
    oracle::Sampler rng(41);
    for (const auto& name : {"fig8", "gieseking", "single-tet", "one-fold", "sphere-double"}) {
        const NormalSpace space(make_fixture(name).triangulation);
        for (int k = 0; k < 30; ++k) {
            auto a = rng.semi_angles(space.tets());
            auto ac = realized_area_curvature(a, space);
            if (k % 3 == 0) {
                // Nudge one curvature so some instances become infeasible.
                ac.curvature[0] += AnglePi{rng.rational(2, 3)};
            }
            const auto as = build_angle_system(space, ac);
            if (!ac.area_nonpositive()) {
                continue;
            }
            LinearSystem sys{as.b, as.ab, std::vector<ColumnSign>(as.b.cols(), ColumnSign::positive)};
            INFO(name << " trial " << k);
            const auto semi = find_semi_angle_structure(space, ac);
            CHECK(std::holds_alternative<FoundAngles>(semi) == oracle::nonneg_feasible(sys));
            const auto strict = find_angle_structure(space, ac);
            CHECK(std::holds_alternative<FoundAngles>(strict) == oracle::strict_feasible(sys));
            for (const auto* r : {&semi, &strict}) {
                if (const auto* c = std::get_if<AngleCertificate>(r)) {
                    CHECK(verify_certificate(c->system, c->certificate.y, c->mode));
                } else {
                    CHECK(realized_area_curvature(std::get<FoundAngles>(*r).angles, space) == ac);
                }
            }
        }
    }
}

TEST_CASE("quad-cone bound on the figure-eight", "[existence][bound]")
{
    const NormalSpace space(fixtures::figure_eight());
    const auto r = certify_condition2(space, AngleAssignment::uniform(2, Rational(1, 3)));
    REQUIRE(std::holds_alternative<QuadBoundHolds>(r));
    const auto& h = std::get<QuadBoundHolds>(r);
    CHECK_FALSE(h.vacuous);
    REQUIRE(h.optimum);
    CHECK(*h.optimum == Rational(-1, 3));
    REQUIRE(h.maximizer);
    CHECK(space.contains(*h.maximizer));

    const auto prog = quad_bound_program(space, AngleAssignment::uniform(2, Rational(1, 3)));
    const auto brute = oracle::minimum(prog.objective, prog.system);
    REQUIRE(brute);
    CHECK(-*brute / 2 == *h.optimum);

    CHECK_THROWS_AS(certify_condition2(space, AngleAssignment::uniform(2, Rational(-1, 3))),
                    PreconditionError);
}

TEST_CASE("zero-area quads produce a witness", "[existence][bound]")
{
    const auto f = make_fixture("fig8-pinched");
    const NormalSpace space(f.triangulation);
    const auto r = certify_condition2(space, *f.angles);
    REQUIRE(std::holds_alternative<QuadBoundFails>(r));
    const auto& w = std::get<QuadBoundFails>(r);
    CHECK(w.optimum == 0);
    CHECK(space.contains(w.witness));
    const auto pred = quad_cone_predicates(w.witness);
    CHECK(pred.all_quads_nonneg);
    CHECK(pred.some_quad_positive);
    const auto ac = realized_area_curvature(*f.angles, space);
    CHECK(space.chi_star(w.witness) >= chi_area_curvature(space, w.witness, ac));
}

TEST_CASE("quad-cone bound optimum matches the brute-force oracle", "[existence][bound][oracle]")
{
    oracle::Sampler rng(42);
    for (const auto& name : {"fig8", "gieseking", "single-tet", "one-fold"}) {
        const NormalSpace space(make_fixture(name).triangulation);
        for (int k = 0; k < 15; ++k) {
            const auto a = rng.semi_angles(space.tets());
            const auto prog = quad_bound_program(space, a);
            const auto brute = oracle::minimum(prog.objective, prog.system);
            const auto r = certify_condition2(space, a);
            INFO(name << " trial " << k);
            if (!brute) {
                REQUIRE(std::holds_alternative<QuadBoundHolds>(r));
                CHECK(std::get<QuadBoundHolds>(r).vacuous);
                continue;
            }
            const Rational best = -*brute / 2;
            if (const auto* h = std::get_if<QuadBoundHolds>(&r)) {
                CHECK(*h->optimum == best);
                CHECK(best < 0);
            } else {
                CHECK(std::get<QuadBoundFails>(r).optimum == best);
                CHECK(best >= 0);
            }
        }
    }
}

TEST_CASE("equivalence report on the fixtures", "[existence][equivalence]")
{
    auto status = [](const std::string& name, const AreaCurvature& ac) {
        return check_corollary2(NormalSpace(make_fixture(name).triangulation), ac).status;
    };
    CHECK(status("fig8", AreaCurvature::zero(2, 2)) == EquivalenceStatus::agree);
    CHECK(status("fig8-flat1", *make_fixture("fig8-flat1").area_curvature) == EquivalenceStatus::agree);
    CHECK(status("fig8-pinched", *make_fixture("fig8-pinched").area_curvature) == EquivalenceStatus::agree);
    CHECK(status("fig8-kappa-infeasible", *make_fixture("fig8-kappa-infeasible").area_curvature) ==
          EquivalenceStatus::hypothesis_unmet);
    auto positive = AreaCurvature::zero(2, 2);
    positive.area[0] = AnglePi{Rational(1, 10)};
    CHECK(status("fig8", positive) == EquivalenceStatus::hypothesis_unmet);
}

TEST_CASE("a strict structure with A <= 0 always passes the quad-cone bound", "[existence][equivalence][property]")
{
    oracle::Sampler rng(43);
    for (const auto& name : {"fig8", "fig8-flat1", "gieseking", "single-tet", "one-fold", "sphere-double"}) {
        const NormalSpace space(make_fixture(name).triangulation);
        for (int k = 0; k < 20; ++k) {
            const auto a = rng.semi_angles(space.tets());
            const auto ac = realized_area_curvature(a, space);
            const auto strict = find_angle_structure(space, ac);
            if (const auto* f = std::get_if<FoundAngles>(&strict)) {
                INFO(name << " trial " << k);
                CHECK(all_quads_negative(f->angles));
                CHECK(std::holds_alternative<QuadBoundHolds>(certify_condition2(space, a)));
            }
        }
    }
}

// The bound can hold while no strict structure exists. These are exact
// counterexamples to the claimed equivalence, kept as regression values.
TEST_CASE("quad-cone bound without a strict structure", "[existence][equivalence]")
{
    SECTION("figure-eight")
    {
        const NormalSpace space(fixtures::figure_eight());
        const auto a = angles({Rational(1, 4), Rational(1, 4), Rational(1, 6), 0, Rational(1, 3), 0,
                               Rational(1, 6), Rational(1, 4), 0, Rational(1, 3), Rational(1, 4), 0});
        const auto ac = realized_area_curvature(a, space);
        for (const auto& x : ac.area) {
            CHECK(x < AnglePi{});
        }
        CHECK(ac.curvature[0] == AnglePi{Rational(5, 4)});
        CHECK(ac.curvature[1] == AnglePi{Rational(3, 4)});

        const std::vector<Rational> y{Rational(1, 6), 0, Rational(-1, 6), 0, Rational(-1, 12),
                                      Rational(1, 12), Rational(1, 12), Rational(-1, 12), Rational(-1, 6), 0};
        const auto as = build_angle_system(space, ac);
        const LinearSystem sys{as.b, as.ab, std::vector<ColumnSign>(12, ColumnSign::positive)};
        CHECK(verify_certificate(sys, y, CertificateMode::strict));
        CHECK_FALSE(oracle::strict_feasible(sys));

        const auto r = check_corollary2(space, ac);
        CHECK(r.status == EquivalenceStatus::disagree);
        CHECK_FALSE(r.strict_exists);
        REQUIRE(r.quad_bound_holds);
        CHECK(*std::get<QuadBoundHolds>(*r.quad_bound).optimum == Rational(-89, 144));
    }
    SECTION("one tetrahedron")
    {
        const NormalSpace space(parse_triangulation(fixtures::kSingleTet));
        const auto a = angles({0, Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4), 0});
        const auto ac = realized_area_curvature(a, space);
        const auto r = check_corollary2(space, ac);
        CHECK(r.status == EquivalenceStatus::disagree);
        REQUIRE(r.quad_bound_holds);
        CHECK(*std::get<QuadBoundHolds>(*r.quad_bound).optimum == Rational(-1, 2));
        const auto& cert = std::get<AngleCertificate>(*r.strict);
        CHECK(verify_certificate(cert.system, cert.certificate.y, CertificateMode::strict));
    }
}

TEST_CASE("bridging identity with coupled tetrahedral weights", "[existence][identity]")
{
    oracle::Sampler rng(44);
    for (const auto& name : {"fig8", "fig8-flat1", "fig8-flat2", "gieseking"}) {
        const auto f = make_fixture(name);
        const NormalSpace space(f.triangulation);
        const std::size_t n = space.tets();
        const std::size_t m = space.edges().size();
        for (int k = 0; k < 100; ++k) {
            const auto a = k % 2 == 0 ? *f.angles : rng.semi_angles(n);
            std::vector<Rational> h(4 * n);
            std::vector<Rational> z(m);
            for (auto& x : h) {
                x = rng.rational(6, 5);
            }
            for (auto& x : z) {
                x = rng.rational(6, 5);
            }
            const auto omega = coupled_tetrahedral_weights(h, n);
            const auto sides = identity_4_9(space, a, h, z, omega);
            INFO(name << " trial " << k);
            CHECK(sides.lhs == sides.rhs);
        }
    }
    const NormalSpace fig8(fixtures::figure_eight());
    const auto third = AngleAssignment::uniform(2, Rational(1, 3));
    const std::vector<Rational> zero4(8);
    const std::vector<Rational> zero2(2);
    const auto s = identity_4_9(fig8, third, zero4, zero2, zero2);
    CHECK(s.lhs == 0);
    CHECK(s.rhs == 0);
    CHECK_THROWS_AS(identity_4_9(NormalSpace(make_fixture("one-fold").triangulation),
                                 AngleAssignment::uniform(1, Rational(1, 3)), std::vector<Rational>(4),
                                 std::vector<Rational>(4), std::vector<Rational>(1)),
                    BasisError);
}

TEST_CASE("bridging identity residual for free tetrahedral weights", "[existence][identity]")
{
    // rhs - lhs = (1/2) sum_i (omega_i - sum_l h_i^l)(-sum_q A(q)), in units of pi.
    oracle::Sampler rng(45);
    for (const auto& name : {"fig8", "fig8-flat1", "gieseking"}) {
        const auto f = make_fixture(name);
        const NormalSpace space(f.triangulation);
        const std::size_t n = space.tets();
        for (int k = 0; k < 100; ++k) {
            const auto a = rng.semi_angles(n);
            std::vector<Rational> h(4 * n);
            std::vector<Rational> z(space.edges().size());
            std::vector<Rational> omega(n);
            for (auto* v : {&h, &z, &omega}) {
                for (auto& x : *v) {
                    x = rng.rational(6, 5);
                }
            }
            const auto coupled = coupled_tetrahedral_weights(h, n);
            Rational residual{0};
            for (std::size_t i = 0; i < n; ++i) {
                residual += (omega[i] - coupled[i]) * -quad_area_sum(a, i);
            }
            residual /= 2;
            const auto sides = identity_4_9(space, a, h, z, omega);
            CHECK(sides.rhs - sides.lhs == residual);
        }
    }

    // Unit weight on one tetrahedron, h = z = 0: lhs 0, rhs 1.
    const NormalSpace fig8(fixtures::figure_eight());
    const auto s = identity_4_9(fig8, AngleAssignment::uniform(2, Rational(1, 3)), std::vector<Rational>(8),
                                std::vector<Rational>(2), std::vector<Rational>{1, 0});
    CHECK(s.lhs == 0);
    CHECK(s.rhs == 1);
}
