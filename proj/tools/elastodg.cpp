/*
 * Copyright 2026 The elastodg Authors. All rights reserved.
 * This file is licensed to you under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License. You may obtain a copy
 * of the License at http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software distributed under
 * the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
 * OF ANY KIND, either express or implied. See the License for the specific language
 * governing permissions and limitations under the License.
 */
#include <elastodg/elastodg.h>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

// "5", "1,5,10" or "a:b[:step]" (inclusive).
std::vector<double> parse_omegas(const std::vector<std::string>& items)
{
    std::vector<double> out;
    for (const auto& item : items) {
        std::vector<double> parts;
        size_t start = 0;
        while (true) {
            const size_t colon = item.find(':', start);
            parts.push_back(std::stod(item.substr(start, colon - start)));
            if (colon == std::string::npos) break;
            start = colon + 1;
        }
        if (parts.size() == 1) {
            out.push_back(parts[0]);
            continue;
        }
        if (parts.size() > 3) throw std::invalid_argument("bad frequency range '" + item + "'");
        const double step = parts.size() == 3 ? parts[2] : 1.0;
        if (!(step > 0.0) || parts[1] < parts[0]) throw std::invalid_argument("bad frequency range '" + item + "'");
        const long count = std::lround(std::floor((parts[1] - parts[0]) / step + 1e-9)) + 1;
        for (long k = 0; k < count; ++k) out.push_back(parts[0] + k * step);
    }
    return out;
}

struct Defaults
{
    std::vector<std::string> omegas;
    std::vector<int> ns;
    std::vector<std::string> rules;
};

const std::map<std::string, std::pair<edg_study, Defaults>>& studies()
{
    static const std::map<std::string, std::pair<edg_study, Defaults>> table{
        {"stability", {EDG_STUDY_STABILITY, {{"1:200"}, {20, 100}, {}}}},
        {"convergence", {EDG_STUDY_CONVERGENCE, {{"5"}, {8, 16, 32, 64}, {}}}},
        {"pollution", {EDG_STUDY_POLLUTION, {{"10", "20", "40"}, {}, {"wh=1", "wh=0.5", "w3h2=1"}}}},
        {"compare", {EDG_STUDY_COMPARE, {{"100"}, {50, 120, 200}, {}}}},
        {"single", {EDG_STUDY_SINGLE, {{"50"}, {70}, {}}}},
    };
    return table;
}

std::string sibling(const std::string& path, const std::string& suffix)
{
    std::filesystem::path p(path);
    return (p.parent_path() / (p.stem().string() + suffix)).string();
}

int check(edg_status status)
{
    if (status == EDG_OK) return 0;
    std::cerr << "elastodg: " << edg_status_string(status) << ": " << edg_last_error() << '\n';
    return 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"IP-DG and P1 finite element solver for the 2D elastic Helmholtz equations"};
    app.set_version_flag("--version", std::string(edg_version()));

    std::string study;
    std::vector<std::string> omega_items;
    std::vector<int> ns;
    std::vector<std::string> rules;
    edg_params params;
    edg_params_default(&params);
    int quad = 10;
    double tol = 1e-10;
    std::string method = "both";
    std::string solver = "auto";
    std::string out;
    std::string samples_out;
    bool svg = false;
    int points = 1000;
    int threads = 0;
    std::uint64_t seed = 0;

    std::vector<std::string> names;
    for (const auto& [name, entry] : studies()) names.push_back(name);
    app.add_option("study", study, "stability | convergence | pollution | compare | single")
        ->required()
        ->check(CLI::IsMember(names));
    app.add_option("--omega", omega_items, "Frequencies: values, comma lists, or ranges a:b[:step]")->delimiter(',');
    app.add_option("--n", ns, "Mesh sizes n (h = 1/n)")->delimiter(',')->check(CLI::PositiveNumber);
    app.add_option("--rule", rules, "Refinement rules for the pollution study: wh=<c> or w3h2=<c>");
    app.add_option("--gamma0", params.gamma0, "Jump penalty")->capture_default_str();
    app.add_option("--gamma1", params.gamma1, "Normal-stress jump penalty")->capture_default_str();
    app.add_option("--rho", params.rho, "Density")->capture_default_str();
    app.add_option("--lambda", params.lambda, "First Lame constant")->capture_default_str();
    app.add_option("--mu", params.mu, "Shear modulus")->capture_default_str();
    app.add_option("--quad", quad, "Quadrature degree for loads and errors")->capture_default_str()->check(CLI::Range(4, 12));
    app.add_option("--tol", tol, "Relative residual tolerance")->capture_default_str();
    app.add_option("--method", method, "dg | fem | both")->capture_default_str()->check(CLI::IsMember({"dg", "fem", "both"}));
    app.add_option("--solver", solver, "auto | direct | iterative")
        ->capture_default_str()
        ->check(CLI::IsMember({"auto", "direct", "iterative"}));
    app.add_option("--out", out, "CSV output path (stdout when omitted)");
    app.add_option("--samples-out", samples_out, "Cross-section (compare) or centroid field (single) CSV path");
    app.add_flag("--svg", svg, "Also write an SVG plot next to --out");
    app.add_option("--points", points, "Cross-section sample count")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--threads", threads, "Worker cap (default: ELASTODG_THREADS or hardware)")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", seed, "Seed recorded with the run")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    const auto& [kind, defaults] = studies().at(study);
    if (omega_items.empty()) omega_items = defaults.omegas;
    if (ns.empty()) ns = defaults.ns;
    if (rules.empty()) rules = defaults.rules;
    if (svg && out.empty()) {
        std::cerr << "elastodg: --svg needs --out\n";
        return 2;
    }

    std::vector<double> omegas;
    try {
        omegas = parse_omegas(omega_items);
    } catch (const std::exception& e) {
        std::cerr << "elastodg: bad --omega value: " << e.what() << '\n';
        return 2;
    }
    std::vector<const char*> rule_ptrs;
    for (const auto& r : rules) rule_ptrs.push_back(r.c_str());

    edg_study_config config;
    edg_study_config_default(&config);
    config.study = kind;
    config.omegas = omegas.data();
    config.num_omegas = omegas.size();
    config.ns = ns.data();
    config.num_ns = ns.size();
    config.rules = rule_ptrs.data();
    config.num_rules = rule_ptrs.size();
    config.params = params;
    config.quad_degree = quad;
    config.solve.tol = tol;
    config.solve.method = solver == "direct" ? EDG_SOLVER_DIRECT : solver == "iterative" ? EDG_SOLVER_ITERATIVE : EDG_SOLVER_AUTOMATIC;
    config.methods = method == "dg" ? EDG_METHODS_DG : method == "fem" ? EDG_METHODS_FEM : EDG_METHODS_BOTH;
    config.seed = seed;
    config.compare_points = points;
    config.threads = threads;

    edg_study_result* result = nullptr;
    if (int rc = check(edg_run_study(&config, &result))) return rc;
    std::unique_ptr<edg_study_result, decltype(&edg_study_result_destroy)> guard(result, edg_study_result_destroy);

    const std::string csv_path = out.empty() ? "/dev/stdout" : out;
    int rc = check(edg_study_result_write_csv(result, csv_path.c_str()));
    if (rc == 0 && !out.empty()) std::cerr << "wrote " << out << '\n';
    if (rc) return rc;

    const bool has_samples = kind == EDG_STUDY_COMPARE || kind == EDG_STUDY_SINGLE;
    if (samples_out.empty() && kind == EDG_STUDY_COMPARE && !out.empty()) samples_out = sibling(out, "_xsec.csv");
    if (!samples_out.empty()) {
        if (!has_samples) {
            std::cerr << "elastodg: --samples-out applies to the compare and single studies\n";
            return 2;
        }
        if ((rc = check(edg_study_result_write_samples(result, samples_out.c_str())))) return rc;
        std::cerr << "wrote " << samples_out << '\n';
    }
    if (svg) {
        const std::string path = sibling(out, ".svg");
        if ((rc = check(edg_study_result_write_svg(result, path.c_str())))) return rc;
        std::cerr << "wrote " << path << '\n';
    }

    for (size_t i = 0; i < edg_study_result_num_fits(result); ++i) {
        edg_fit fit;
        if ((rc = check(edg_study_result_fit(result, i, &fit)))) return rc;
        std::fprintf(stderr, "fit %s omega=%g: h1-seminorm slope %.3f, L2 slope %.3f\n", fit.method, fit.omega,
                     fit.slope_h1semi, fit.slope_l2);
    }
    return 0;
}
