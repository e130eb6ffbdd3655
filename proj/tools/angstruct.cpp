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
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace
{

void print_summary(const angstruct::Json& body)
{
    std::cout << body["command"].get<std::string>() << ": ";
    if (body.contains("error")) {
        const auto& e = body["error"];
        std::cout << e["kind"].get<std::string>();
        if (e.contains("line")) {
            std::cout << " (line " << e["line"].get<std::size_t>() << ")";
        }
        std::cout << ": " << e["message"].get<std::string>() << "\n";
        return;
    }
    const auto& r = body["result"];
    if (r.contains("decision")) {
        std::cout << r["decision"].get<std::string>() << " (" << r["mode"].get<std::string>() << ")\n";
    } else if (r.contains("condition2")) {
        std::cout << "quad bound " << r["condition2"]["verdict"].get<std::string>() << "\n";
    } else if (r.contains("t_star")) {
        std::cout << "strict assignment at t* = " << r["t_star"].get<std::string>() << "\n";
    } else if (r.contains("written")) {
        std::cout << r["written"].size() << " files written\n";
    } else {
        std::cout << r["tets"].get<std::size_t>() << " tetrahedra, " << r["edges"].size()
                  << " edges, " << r["vertices"].size() << " vertices, "
                  << (r["ideal"].get<bool>() ? "ideal" : "not ideal") << "\n";
    }
}

}  // namespace

auto main(int argc, char** argv) -> int
{
    namespace cli = angstruct::cli;
    CLI::App app{"Exact angle structures on triangulated pseudo 3-manifolds"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    bool timing = false;
    std::string out_path;
    app.add_flag("--json", as_json, "Print the JSON report");
    app.add_flag("--timing", timing, "Print elapsed time to stderr");
    app.add_option("--out", out_path, "Write the JSON report here (fixtures: output directory)");

    std::string tri;
    std::string second;
    std::optional<std::string> angles;
    std::string mode = "strict";
    std::string fixture;

    auto* validate = app.add_subcommand("validate", "Check a gluing table");
    validate->add_option("triangulation", tri)->required();

    auto* analyze = app.add_subcommand("analyze", "Edge/vertex classes, chi*, angle checks");
    analyze->add_option("triangulation", tri)->required();
    analyze->add_option("--angles", angles, "Angle assignment JSON");

    auto* solve = app.add_subcommand("solve", "Find an angle structure or a certificate");
    solve->add_option("triangulation", tri)->required();
    solve->add_option("area_curvature", second)->required();
    solve->add_option("--mode", mode)->check(CLI::IsMember({"semi", "strict"}));

    auto* certify = app.add_subcommand("certify", "Decide chi* < chi^(A,kappa) on the quad cone");
    certify->add_option("triangulation", tri)->required();
    certify->add_option("angles", second)->required();

    auto* perturb = app.add_subcommand("perturb", "Perturb a flat semi-angle structure");
    perturb->add_option("triangulation", tri)->required();
    perturb->add_option("angles", second)->required();

    auto* fixtures = app.add_subcommand("fixtures", "Write a named fixture (or \"all\")");
    fixtures->add_option("name", fixture)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kPrecondition;
    }

    const auto start = std::chrono::steady_clock::now();
    cli::RunReport report;
    if (*validate) {
        report = cli::cmd_validate(tri);
    } else if (*analyze) {
        report = cli::cmd_analyze(tri, angles);
    } else if (*solve) {
        report = cli::cmd_solve(tri, second, mode);
    } else if (*certify) {
        report = cli::cmd_certify(tri, second);
    } else if (*perturb) {
        report = cli::cmd_perturb(tri, second);
    } else {
        report = cli::cmd_fixtures(fixture, out_path.empty() ? "." : out_path);
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;

    const auto text = report.body.dump(2) + "\n";
    if (as_json) {
        std::cout << text;
    } else {
        print_summary(report.body);
    }
    if (!out_path.empty() && !*fixtures) {
        std::ofstream(out_path, std::ios::binary) << text;
    }
    if (timing) {
        std::cerr << "elapsed "
                  << std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count()
                  << " us\n";
    }
    return report.exit_code;
}
