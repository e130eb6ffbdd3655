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

/** @file commands.hpp
 *  @brief CLI commands as functions returning a JSON run report
 */

#include <array>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "angstruct/angstruct.hpp"
#include "angstruct/json_io.hpp"

namespace angstruct::cli
{

inline constexpr const char* kSchema = "v1";

enum ExitCode : int { kDecided = 0, kInvalidInput = 1, kPrecondition = 2, kInternal = 3 };

struct RunReport {
    int exit_code{kDecided};
    Json body;
};

inline auto sha256_hex(const std::string& data) -> std::string
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw InternalError("sha256 failed");
    }
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) {
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    }
    return out.str();
}

inline auto read_file(const std::string& path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline auto parse_json_text(const std::string& text, const std::string& path) -> Json
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

/** Files read by a command, in argument order */
class Inputs
{
public:
    auto read(const std::string& path) -> std::string
    {
        auto text = read_file(path);
        digests_.push_back(Json{{"path", path}, {"sha256", sha256_hex(text)}});
        return text;
    }
    [[nodiscard]] auto json() const -> Json { return digests_; }

private:
    Json digests_ = Json::array();
};

/**
 * Run a command body, mapping exceptions to exit codes: malformed input 1,
 * precondition failures 2, failed self-checks 3.
 */
inline auto guarded(const std::string& command, const std::function<Json(Inputs&)>& body)
    -> RunReport
{
    Inputs inputs;
    RunReport r;
    Json result;
    Json error;
    try {
        result = body(inputs);
    } catch (const ParseError& e) {
        r.exit_code = kInvalidInput;
        error = Json{{"kind", "invalid input"}, {"line", e.line()}, {"message", e.message()}};
    } catch (const InputError& e) {
        r.exit_code = kInvalidInput;
        error = Json{{"kind", "invalid input"}, {"message", e.what()}};
    } catch (const Json::exception& e) {
        r.exit_code = kInvalidInput;
        error = Json{{"kind", "invalid input"}, {"message", e.what()}};
    } catch (const std::filesystem::filesystem_error& e) {
        r.exit_code = kInvalidInput;
        error = Json{{"kind", "invalid input"}, {"message", e.what()}};
    } catch (const std::invalid_argument& e) {
        r.exit_code = kPrecondition;
        error = Json{{"kind", "precondition"}, {"message", e.what()}};
    } catch (const std::exception& e) {
        r.exit_code = kInternal;
        error = Json{{"kind", "internal"}, {"message", e.what()}};
    }
    r.body = Json{{"schema", kSchema}, {"command", command}, {"inputs", inputs.json()}};
    if (r.exit_code == kDecided) {
        r.body["result"] = std::move(result);
    } else {
        r.body["error"] = std::move(error);
    }
    r.body["exit_code"] = r.exit_code;
    return r;
}

inline auto load_triangulation(Inputs& in, const std::string& path) -> Triangulation
{
    return parse_triangulation(in.read(path), std::filesystem::path(path).stem().string());
}

inline auto load_angles(Inputs& in, const std::string& path) -> AngleAssignment
{
    return angles_from_json(parse_json_text(in.read(path), path));
}

inline auto load_area_curvature(Inputs& in, const std::string& path) -> AreaCurvature
{
    return area_curvature_from_json(parse_json_text(in.read(path), path));
}

inline auto describe(const Triangulation& t) -> Json
{
    Json boundary = Json::array();
    for (const auto& f : t.boundary_faces()) {
        boundary.push_back(Json::array({f.tet, f.face}));
    }
    Json edges = Json::array();
    for (const auto& e : build_edge_classes(t)) {
        Json corners = Json::array();
        for (const auto& c : e.corners) {
            corners.push_back(Json::array({c.tet, c.edge}));
        }
        edges.push_back(Json{{"index", e.index},
                             {"valence", e.valence()},
                             {"boundary", e.is_boundary},
                             {"corners", std::move(corners)}});
    }
    Json vertices = Json::array();
    for (const auto& v : build_vertex_classes(t)) {
        vertices.push_back(Json{{"index", v.index},
                                {"corners", v.corners.size()},
                                {"link_euler", v.link_euler},
                                {"link_orientable", v.link_orientable},
                                {"link_closed", v.link_closed}});
    }
    return Json{{"name", t.name()},
                {"tets", t.size()},
                {"boundary_faces", std::move(boundary)},
                {"orientable", is_orientable(t)},
                {"ideal", is_ideal_triangulation(t).ideal},
                {"edges", std::move(edges)},
                {"vertices", std::move(vertices)}};
}

inline auto cmd_validate(const std::string& path) -> RunReport
{
    return guarded("validate", [&](Inputs& in) {
        const auto t = load_triangulation(in, path);
        Json out{{"valid", t.is_valid()}};
        out.update(describe(t));
        return out;
    });
}

inline auto cmd_analyze(const std::string& path, const std::optional<std::string>& angles_path)
    -> RunReport
{
    return guarded("analyze", [&](Inputs& in) {
        const auto t = load_triangulation(in, path);
        const NormalSpace space(t);
        Json out = describe(t);

        const auto& w = space.chi_star_weights();
        const std::size_t n = t.size();
        Json normal{{"compatibility_rows", space.compatibility().matrix.rows()},
                    {"dimension", 7 * n - rank(space.compatibility().matrix)}};
        try {
            (void)space.basis();
            normal["basis"] = "verified";
        } catch (const BasisError& e) {
            normal["basis"] = e.what();
        }
        normal["chi_star"] = Json{
            {"quads", to_json(std::vector<Rational>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(3 * n)))},
            {"triangles", to_json(std::vector<Rational>(w.begin() + static_cast<std::ptrdiff_t>(3 * n), w.end()))}};
        Json links = Json::array();
        for (const auto& v : build_vertex_classes(t)) {
            links.push_back(Json{{"vertex", v.index},
                                 {"link_euler", v.link_euler},
                                 {"chi_star", to_string(space.chi_star(vertex_linking_class(n, v)))}});
        }
        normal["vertex_links"] = std::move(links);
        out["normal"] = std::move(normal);

        if (angles_path) {
            const auto a = load_angles(in, *angles_path);
            detail::check_tets(a, n);
            const auto kind = classify(a);
            Json ang{{"classification", to_string(kind)},
                     {"realized", to_json(realized_area_curvature(a, space))}};
            Json checks = Json::array();
            for (const auto& c : check_vertex_link_conditions(a, t)) {
                checks.push_back(Json{
                    {"corner", Json::array({c.corner.tet, c.corner.vertex})},
                    {"angle_sum", to_string(c.angle_sum)},
                    {"condition", c.condition == LinkCondition::equals_pi   ? "= pi"
                                  : c.condition == LinkCondition::below_pi ? "< pi"
                                                                           : "none"},
                    {"pass", c.pass}});
            }
            ang["vertex_link_conditions"] = std::move(checks);
            if (kind != AngleKind::generalized) {
                ang["flat_pair"] = is_flat_pair(a, t);
                ang["census"] = to_json(edge_angle_census(a, space));
            }
            out["angles"] = std::move(ang);
        }
        return out;
    });
}

inline auto cmd_solve(const std::string& path, const std::string& ac_path, const std::string& mode)
    -> RunReport
{
    return guarded("solve", [&](Inputs& in) {
        if (mode != "semi" && mode != "strict") {
            throw PreconditionError("mode must be semi or strict");
        }
        const auto t = load_triangulation(in, path);
        const auto ac = load_area_curvature(in, ac_path);
        const NormalSpace space(t);
        const auto res = mode == "semi" ? find_semi_angle_structure(space, ac)
                                        : find_angle_structure(space, ac);
        Json out{{"mode", mode}};
        if (const auto* f = std::get_if<FoundAngles>(&res)) {
            out["decision"] = "assignment";
            out["assignment"] = to_json(f->angles);
            out["classification"] = to_string(classify(f->angles));
            out["realized"] = to_json(realized_area_curvature(f->angles, space));
            if (f->margin) {
                out["margin"] = to_string(*f->margin);
            }
        } else {
            out["decision"] = "certificate";
            out["certificate"] = to_json(std::get<AngleCertificate>(res));
        }
        return out;
    });
}

inline auto cmd_certify(const std::string& path, const std::string& angles_path) -> RunReport
{
    return guarded("certify", [&](Inputs& in) {
        const auto t = load_triangulation(in, path);
        const auto a = load_angles(in, angles_path);
        const NormalSpace space(t);
        const auto res = certify_condition2(space, a);
        Json out{{"classification", to_string(classify(a))}};
        out["condition2"] = to_json(res);
        if (const auto* f = std::get_if<QuadBoundFails>(&res)) {
            const auto ac = realized_area_curvature(a, space);
            out["condition2"]["chi_star"] = to_string(space.chi_star(f->witness));
            out["condition2"]["chi_area_curvature"] =
                to_string(chi_area_curvature(space, f->witness, ac));
        }
        return out;
    });
}

inline auto cmd_perturb(const std::string& path, const std::string& angles_path) -> RunReport
{
    return guarded("perturb", [&](Inputs& in) {
        const auto t = load_triangulation(in, path);
        const auto a = load_angles(in, angles_path);
        const NormalSpace space(t);
        detail::check_tets(a, t.size());
        const auto r = apply_theorem3(a, space);
        return Json{{"census", to_json(r.census)},
                    {"t_max", to_string(r.t_max)},
                    {"t_star", to_string(r.t_star)},
                    {"perturbed", to_json(r.perturbed)},
                    {"classification", to_string(classify(r.perturbed))},
                    {"before", to_json(r.before)},
                    {"after", to_json(r.after)}};
    });
}

/** Serialized files for one fixture: (file name, contents) */
inline auto fixture_files(const Fixture& f) -> std::vector<std::pair<std::string, std::string>>
{
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back(f.name + ".tri", "# " + f.description + "\n" + format_triangulation(f.triangulation));
    if (f.angles) {
        out.emplace_back(f.name + ".angles.json", to_json(*f.angles).dump(2) + "\n");
    }
    if (f.area_curvature) {
        out.emplace_back(f.name + ".ac.json", to_json(*f.area_curvature).dump(2) + "\n");
    }
    return out;
}

/** Write a named fixture, or every fixture for "all", into `dir` */
inline auto cmd_fixtures(const std::string& name, const std::string& dir) -> RunReport
{
    return guarded("fixtures", [&](Inputs&) {
        std::vector<std::string> names = name == "all" ? fixture_names() : std::vector{name};
        std::vector<Fixture> fixtures;
        for (const auto& nm : names) {
            fixtures.push_back(make_fixture(nm));
        }
        std::filesystem::create_directories(dir);
        Json written = Json::array();
        for (const auto& f : fixtures) {
            for (const auto& [file, text] : fixture_files(f)) {
                const auto p = (std::filesystem::path(dir) / file).string();
                std::ofstream out(p, std::ios::binary);
                out << text;
                if (!out) {
                    throw InputError("cannot write '" + p + "'");
                }
                written.push_back(Json{{"path", p}, {"sha256", sha256_hex(text)}});
            }
        }
        return Json{{"written", std::move(written)}};
    });
}

}  // namespace angstruct::cli
