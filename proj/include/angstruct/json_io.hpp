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

/** @file json_io.hpp
 *  @brief JSON forms of exact data; rationals are "p/q" strings, angles in units of pi
 */

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "angstruct/angles.hpp"
#include "angstruct/existence.hpp"
#include "angstruct/lp.hpp"
#include "angstruct/normal.hpp"
#include "angstruct/perturbation.hpp"

namespace angstruct
{

using Json = nlohmann::ordered_json;

/** @brief Malformed JSON input (as opposed to a precondition failure) */
class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline auto to_json(const Rational& r) -> Json { return to_string(r); }

/** @throws InputError unless j is a "p/q" string or an integer */
inline auto rational_from_json(const Json& j) -> Rational
{
    try {
        if (j.is_string()) {
            return parse_rational(j.get<std::string>());
        }
        if (j.is_number_integer()) {
            return Rational(j.get<long long>());
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    throw InputError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

inline auto to_json(const std::vector<Rational>& v) -> Json
{
    Json out = Json::array();
    for (const auto& r : v) {
        out.push_back(to_string(r));
    }
    return out;
}

inline auto rationals_from_json(const Json& j) -> std::vector<Rational>
{
    if (!j.is_array()) {
        throw InputError("expected an array of rationals");
    }
    std::vector<Rational> out;
    for (const auto& x : j) {
        out.push_back(rational_from_json(x));
    }
    return out;
}

inline auto to_json(const std::vector<AnglePi>& v) -> Json
{
    Json out = Json::array();
    for (const auto& a : v) {
        out.push_back(to_string(a));
    }
    return out;
}

/** @brief {"units": "pi", "angles": [[6 per tet], ...]} */
inline auto to_json(const AngleAssignment& a) -> Json
{
    Json tets = Json::array();
    for (std::size_t i = 0; i < a.tets(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < 6; ++k) {
            row.push_back(to_string(a.at(i, k)));
        }
        tets.push_back(std::move(row));
    }
    return Json{{"units", "pi"}, {"angles", std::move(tets)}};
}

inline auto angles_from_json(const Json& j) -> AngleAssignment
{
    if (!j.is_object() || !j.contains("angles") || !j["angles"].is_array()) {
        throw InputError("angle file needs an \"angles\" array");
    }
    std::vector<AnglePi> out;
    for (const auto& row : j["angles"]) {
        const auto vals = rationals_from_json(row);
        if (vals.size() != 6) {
            throw InputError("each tetrahedron needs 6 angles");
        }
        for (const auto& v : vals) {
            out.emplace_back(v);
        }
    }
    return AngleAssignment(std::move(out));
}

/** @brief {"units": "pi", "area": [[4 per tet], ...], "curvature": [m]} */
inline auto to_json(const AreaCurvature& ac) -> Json
{
    Json area = Json::array();
    for (std::size_t i = 0; i < ac.area.size(); i += 4) {
        Json row = Json::array();
        for (std::size_t l = 0; l < 4 && i + l < ac.area.size(); ++l) {
            row.push_back(to_string(ac.area[i + l]));
        }
        area.push_back(std::move(row));
    }
    return Json{{"units", "pi"}, {"area", std::move(area)}, {"curvature", to_json(ac.curvature)}};
}

inline auto area_curvature_from_json(const Json& j) -> AreaCurvature
{
    if (!j.is_object() || !j.contains("area") || !j.contains("curvature") ||
        !j["area"].is_array()) {
        throw InputError("area-curvature file needs \"area\" and \"curvature\" arrays");
    }
    AreaCurvature ac;
    for (const auto& row : j["area"]) {
        const auto vals = rationals_from_json(row);
        if (vals.size() != 4) {
            throw InputError("each tetrahedron needs 4 triangle areas");
        }
        for (const auto& v : vals) {
            ac.area.emplace_back(v);
        }
    }
    for (const auto& v : rationals_from_json(j["curvature"])) {
        ac.curvature.emplace_back(v);
    }
    return ac;
}

/** @brief Flat array of 7n rationals, quads then triangles */
inline auto to_json(const NormalCoordinate& s) -> Json { return to_json(s.flat()); }

inline auto normal_from_json(const Json& j) -> NormalCoordinate
{
    const auto v = rationals_from_json(j);
    if (v.size() % 7 != 0) {
        throw InputError("normal coordinate length must be a multiple of 7");
    }
    return NormalCoordinate::from_flat(v);
}

inline auto to_json(const LinearSystem& sys) -> Json
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < sys.coeffs.rows(); ++r) {
        rows.push_back(to_json(sys.coeffs.row(r)));
    }
    Json signs = Json::array();
    for (auto s : sys.signs) {
        signs.push_back(s == ColumnSign::free ? "free" : s == ColumnSign::nonneg ? "nonneg" : "positive");
    }
    return Json{{"coeffs", std::move(rows)}, {"rhs", to_json(sys.rhs)}, {"signs", std::move(signs)}};
}

inline auto to_json(const AngleCertificate& c) -> Json
{
    return Json{{"mode", c.mode == CertificateMode::nonneg ? "nonneg" : "strict"},
                {"h", to_json(c.h)},
                {"z", to_json(c.z)},
                {"y", to_json(c.certificate.y)},
                {"verified", verify_certificate(c.system, c.certificate.y, c.mode)}};
}

inline auto to_json(const QuadBoundResult& r) -> Json
{
    if (const auto* h = std::get_if<QuadBoundHolds>(&r)) {
        Json out{{"verdict", "holds"}, {"vacuous", h->vacuous}};
        if (h->optimum) {
            out["optimum"] = to_string(*h->optimum);
            out["maximizer"] = to_json(*h->maximizer);
        }
        out["dual"] = to_json(h->dual);
        return out;
    }
    const auto& f = std::get<QuadBoundFails>(r);
    return Json{{"verdict", "fails"}, {"optimum", to_string(f.optimum)}, {"witness", to_json(f.witness)}};
}

inline auto to_json(const EdgeAngleCensus& census) -> Json
{
    Json out = Json::array();
    for (std::size_t e = 0; e < census.size(); ++e) {
        out.push_back(Json{{"edge", e},
                           {"zeros", census[e].zeros},
                           {"pis", census[e].pis},
                           {"interior", census[e].interior}});
    }
    return out;
}

}  // namespace angstruct
