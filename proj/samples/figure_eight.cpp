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
// Angle structures on the figure-eight knot complement, end to end.

#include <iostream>
#include <variant>

#include "angstruct/existence.hpp"
#include "angstruct/fixtures.hpp"
#include "angstruct/perturbation.hpp"

using namespace angstruct;

int main()
{
    const auto t = fixtures::figure_eight();
    const NormalSpace space(t);
    std::cout << t.size() << " tetrahedra, " << space.edges().size() << " edges\n";

    // Complete hyperbolic structure: A = 0, kappa = 0.
    const auto res = find_angle_structure(space, AreaCurvature::zero(2, 2));
    if (const auto* f = std::get_if<FoundAngles>(&res)) {
        std::cout << "strict angles:";
        for (const auto& x : f->angles.angles()) {
            std::cout << " " << to_string(x);
        }
        std::cout << " (pi)\n";
    }

    // The regular ideal tetrahedron is pi/3 everywhere.
    const auto third = AngleAssignment::uniform(2, Rational(1, 3));
    const auto bound = certify_condition2(space, third);
    if (const auto* h = std::get_if<QuadBoundHolds>(&bound); h && h->optimum) {
        std::cout << "quad-cone bound holds, optimum " << to_string(*h->optimum) << "\n";
    }

    // Curvature 2pi on one edge: no semi structure, and a checkable certificate says so.
    auto ac = AreaCurvature::zero(2, 2);
    ac.curvature[0] = AnglePi{2};
    const auto semi = find_semi_angle_structure(space, ac);
    if (const auto* c = std::get_if<AngleCertificate>(&semi)) {
        std::cout << "infeasible, certificate verifies: " << std::boolalpha
                  << verify_certificate(c->system, c->certificate.y, c->mode) << "\n";
    }

    // A flat tetrahedron stacked into the triangulation, then perturbed away.
    const auto flat = make_fixture("fig8-flat1");
    const auto p = apply_theorem3(*flat.angles, NormalSpace(flat.triangulation));
    std::cout << "flat pair perturbed at t* = " << to_string(p.t_star) << " to a "
              << to_string(classify(p.perturbed)) << " structure\n";
}
