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
#include "experiments.hpp"

#include "assembly.hpp"
#include "manufactured.hpp"
#include "mesh.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace elastodg {

namespace {

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string method_tag(SpaceKind kind)
{
    return kind == SpaceKind::Dg ? "dg" : "fem";
}

std::vector<SpaceKind> kinds_of(MethodSelection m)
{
    switch (m) {
    case MethodSelection::Dg: return {SpaceKind::Dg};
    case MethodSelection::Fem: return {SpaceKind::Fem};
    case MethodSelection::Both: break;
    }
    return {SpaceKind::Dg, SpaceKind::Fem};
}

double real_magnitude(const CVec2& u)
{
    return std::hypot(u[0].real(), u[1].real());
}

// Runs jobs[0..count) on up to `threads` workers; the first exception is rethrown.
void parallel_for(int count, int threads, const std::function<void(int)>& job)
{
    const int workers = std::max(1, std::min(threads, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = count;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

struct Job
{
    std::string study;
    SpaceKind kind;
    double omega;
    int n;
};

ProblemParams with_omega(const ProblemParams& base, double omega)
{
    ProblemParams p = base;
    p.omega = omega;
    return p;
}

std::vector<SingleRun> run_jobs(const ExperimentConfig& config, const std::vector<Job>& jobs,
                                std::vector<std::optional<Field>>* fields = nullptr)
{
    std::vector<SingleRun> runs(jobs.size());
    if (fields) fields->assign(jobs.size(), std::nullopt);
    parallel_for(static_cast<int>(jobs.size()), resolve_threads(config.threads), [&](int i) {
        const Job& j = jobs[i];
        runs[i] = run_case(j.study, j.kind, with_omega(config.params, j.omega), j.n, config.quad_degree, config.solve,
                           fields ? &(*fields)[i] : nullptr);
    });
    return runs;
}

std::vector<ExperimentRecord> records_of(const std::vector<SingleRun>& runs)
{
    std::vector<ExperimentRecord> out;
    for (const auto& r : runs) out.push_back(r.record);
    sort_records(out);
    return out;
}

} // namespace

Study parse_study(const std::string& name)
{
    static const std::map<std::string, Study> table{{"stability", Study::Stability},
                                                    {"convergence", Study::Convergence},
                                                    {"pollution", Study::Pollution},
                                                    {"compare", Study::Compare},
                                                    {"single", Study::Single}};
    const auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown study '" + name + "'");
    return it->second;
}

std::string study_name(Study study)
{
    switch (study) {
    case Study::Stability: return "stability";
    case Study::Convergence: return "convergence";
    case Study::Pollution: return "pollution";
    case Study::Compare: return "compare";
    case Study::Single: return "single";
    }
    return "unknown";
}

MethodSelection parse_method(const std::string& name)
{
    if (name == "dg") return MethodSelection::Dg;
    if (name == "fem") return MethodSelection::Fem;
    if (name == "both") return MethodSelection::Both;
    throw std::invalid_argument("unknown method '" + name + "' (expected dg, fem or both)");
}

int PollutionRule::mesh_size(double omega) const
{
    if (!(omega > 0.0) || !(c > 0.0)) throw std::invalid_argument("pollution rule needs omega > 0 and c > 0");
    const double exact = kind == Kind::OmegaH ? omega / c : std::pow(omega, 1.5) / std::sqrt(c);
    // Values within rounding of an integer are not pushed up to the next one.
    const double n = std::ceil(exact * (1.0 - 1e-12));
    if (n > std::numeric_limits<int>::max() / 2) throw std::invalid_argument("pollution rule yields an oversized mesh");
    return std::max(1, static_cast<int>(n));
}

std::string PollutionRule::label() const
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s=%g", kind == Kind::OmegaH ? "wh" : "w3h2", c);
    return buf;
}

PollutionRule PollutionRule::parse(const std::string& text)
{
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("pollution rule '" + text + "' lacks '='");
    std::string lhs;
    for (char ch : text.substr(0, eq))
        if (ch != ' ' && ch != '*') lhs += ch;
    PollutionRule rule;
    if (lhs == "wh" || lhs == "omegah")
        rule.kind = Kind::OmegaH;
    else if (lhs == "w3h2" || lhs == "w^3h^2" || lhs == "omega^3h^2")
        rule.kind = Kind::Omega3H2;
    else
        throw std::invalid_argument("unknown pollution rule '" + text + "'");
    const std::string rhs = text.substr(eq + 1);
    char* end = nullptr;
    rule.c = std::strtod(rhs.c_str(), &end);
    if (rhs.empty() || *end != '\0' || !(rule.c > 0.0) || !std::isfinite(rule.c))
        throw std::invalid_argument("pollution rule '" + text + "' needs a positive constant");
    return rule;
}

void ExperimentConfig::validate() const
{
    params.validate();
    if (omegas.empty()) throw std::invalid_argument("no frequencies given");
    for (double w : omegas)
        if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("frequencies must be positive");
    if (study == Study::Pollution) {
        if (rules.empty()) throw std::invalid_argument("the pollution study needs at least one rule");
    } else {
        if (ns.empty()) throw std::invalid_argument("no mesh sizes given");
        for (int n : ns)
            if (n < 1) throw std::invalid_argument("mesh sizes must be >= 1");
    }
    if (quad_degree < 4 || quad_degree > 12) throw std::invalid_argument("quadrature degree must lie in 4..12");
    if (compare_points < 1) throw std::invalid_argument("the cross-section needs at least one point");
}

int resolve_threads(int requested)
{
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ELASTODG_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SingleRun run_case(const std::string& study, SpaceKind kind, const ProblemParams& p, int n, int quad_degree,
                   const SolveOptions& options, std::optional<Field>* field_out)
{
    auto mesh = std::make_shared<const Mesh>(Mesh::build_uniform(n));
    const Space space = kind == SpaceKind::Dg ? Space::dg(mesh) : Space::fem(mesh);
    const ManufacturedSolution exact(p);

    SingleRun run;
    ExperimentRecord& rec = run.record;
    rec.study = study;
    rec.method = method_tag(kind);
    rec.omega = p.omega;
    rec.n = n;
    rec.h = mesh->h;
    rec.dofs = space.num_dofs();
    rec.c_sta = p.c_sta(mesh->h);

    std::vector<Complex> coefficients;
    {
        System sys = assemble_system(space, p, exact, quad_degree);
        rec.assemble_ms = sys.stats.assemble_ms;
        SolveReport report = solve(sys.matrix, sys.rhs, options);
        rec.residual = report.relative_residual;
        rec.solve_ms = report.solve_ms;
        run.iterations = report.iterations;
        run.solver = report.method;
        coefficients = std::move(report.solution);
    }
    Field uh(space, std::move(coefficients));

    run.error = error_vs_exact(uh, p, exact, quad_degree);
    run.solution = norms_of(uh, p);
    const NormReport ref = exact_norms(*mesh, p, exact, quad_degree);
    rec.rel_err_h1semi = run.error.seminorm_1h / ref.seminorm_1h;
    rec.rel_err_l2 = run.error.l2_domain / ref.l2_domain;
    rec.norm_1h = run.solution.norm_1h;
    rec.j0 = run.solution.j0;
    rec.j1 = run.solution.j1;
    if (field_out) field_out->emplace(std::move(uh));
    return run;
}

StudyResult run_stability(const ExperimentConfig& config)
{
    config.validate();
    std::vector<Job> jobs;
    for (double w : config.omegas)
        for (int n : config.ns)
            for (SpaceKind k : kinds_of(config.methods)) jobs.push_back({"stability", k, w, n});
    StudyResult result;
    result.records = records_of(run_jobs(config, jobs));
    return result;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("slope fit needs two or more points");
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw std::invalid_argument("slope fit needs positive data");
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= x.size();
    my /= y.size();
    double sxy = 0.0, sxx = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0) throw std::invalid_argument("slope fit needs distinct abscissae");
    return sxy / sxx;
}

StudyResult run_convergence(const ExperimentConfig& config)
{
    config.validate();
    const std::set<int> distinct(config.ns.begin(), config.ns.end());
    if (distinct.size() < 3) throw std::invalid_argument("insufficient mesh sizes");
    std::vector<Job> jobs;
    for (double w : config.omegas)
        for (int n : distinct)
            for (SpaceKind k : kinds_of(config.methods)) jobs.push_back({"convergence", k, w, n});
    StudyResult result;
    result.records = records_of(run_jobs(config, jobs));

    std::map<std::pair<std::string, double>, std::vector<const ExperimentRecord*>> groups;
    for (const auto& r : result.records) groups[{r.method, r.omega}].push_back(&r);
    for (const auto& [key, rows] : groups) {
        std::vector<double> h, semi, l2;
        for (const auto* r : rows) {
            h.push_back(r->h);
            semi.push_back(r->rel_err_h1semi);
            l2.push_back(r->rel_err_l2);
        }
        result.fits.push_back({key.first, key.second, log_log_slope(h, semi), log_log_slope(h, l2)});
    }
    return result;
}

StudyResult run_pollution(const ExperimentConfig& config)
{
    config.validate();
    std::vector<Job> jobs;
    for (const auto& rule : config.rules)
        for (double w : config.omegas)
            for (SpaceKind k : kinds_of(config.methods)) jobs.push_back({"pollution:" + rule.label(), k, w, rule.mesh_size(w)});
    StudyResult result;
    result.records = records_of(run_jobs(config, jobs));
    return result;
}

StudyResult run_compare(const ExperimentConfig& config)
{
    config.validate();
    std::vector<Job> jobs;
    for (double w : config.omegas)
        for (int n : config.ns)
            for (SpaceKind k : kinds_of(config.methods)) jobs.push_back({"compare", k, w, n});
    std::vector<std::optional<Field>> fields;
    const auto runs = run_jobs(config, jobs, &fields);

    StudyResult result;
    result.records = records_of(runs);
    const int m = config.compare_points;
    for (double w : config.omegas) {
        const ProblemParams p = with_omega(config.params, w);
        for (int n : config.ns) {
            const Field* dg = nullptr;
            const Field* fem = nullptr;
            for (size_t i = 0; i < jobs.size(); ++i) {
                if (jobs[i].omega != w || jobs[i].n != n) continue;
                (jobs[i].kind == SpaceKind::Dg ? dg : fem) = &*fields[i];
            }
            const Mesh& mesh = (dg ? dg : fem)->space().mesh();
            for (int k = 0; k < m; ++k) {
                const double s = m == 1 ? 0.0 : -0.5 + static_cast<double>(k) / (m - 1);
                CrossSectionRow row;
                row.omega = w;
                row.n = n;
                row.x = s;
                row.y = s;
                row.exact = real_magnitude(exact_u({s, s}, p));
                const auto [element, bary] = mesh.locate({s, s});
                if (dg) row.dg = real_magnitude(dg->eval(element, bary));
                if (fem) row.fem = real_magnitude(fem->eval(element, bary));
                result.cross_section.push_back(row);
            }
        }
    }
    return result;
}

StudyResult run_single(const ExperimentConfig& config)
{
    config.validate();
    std::vector<Job> jobs;
    for (double w : config.omegas)
        for (int n : config.ns)
            for (SpaceKind k : kinds_of(config.methods)) jobs.push_back({"single", k, w, n});
    std::vector<std::optional<Field>> fields;
    StudyResult result;
    result.singles = run_jobs(config, jobs, &fields);
    result.records = records_of(result.singles);
    for (size_t i = 0; i < jobs.size(); ++i) {
        const Field& f = *fields[i];
        const Mesh& mesh = f.space().mesh();
        for (int k = 0; k < mesh.num_elements(); ++k) {
            constexpr double third = 1.0 / 3.0;
            const std::array<double, 3> centroid{third, third, third};
            const Vec2 x = mesh.geometry(k).point(centroid);
            result.centroids.push_back({method_tag(jobs[i].kind), x.x, x.y, f.eval(k, centroid)});
        }
    }
    return result;
}

StudyResult run_study(const ExperimentConfig& config)
{
    switch (config.study) {
    case Study::Stability: return run_stability(config);
    case Study::Convergence: return run_convergence(config);
    case Study::Pollution: return run_pollution(config);
    case Study::Compare: return run_compare(config);
    case Study::Single: return run_single(config);
    }
    throw std::invalid_argument("unknown study");
}

void sort_records(std::vector<ExperimentRecord>& records)
{
    std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        return std::tie(a.study, a.method, a.omega, a.n) < std::tie(b.study, b.method, b.omega, b.n);
    });
}

void write_records_csv(std::ostream& os, const std::vector<ExperimentRecord>& records)
{
    os << kCsvHeader << '\n';
    for (const auto& r : records) {
        os << r.study << ',' << r.method << ',' << fmt(r.omega) << ',' << r.n << ',' << fmt(r.h) << ',' << r.dofs << ','
           << fmt(r.rel_err_h1semi) << ',' << fmt(r.rel_err_l2) << ',' << fmt(r.norm_1h) << ',' << fmt(r.j0) << ','
           << fmt(r.j1) << ',' << fmt(r.c_sta) << ',' << fmt(r.residual) << ',' << fmt(r.assemble_ms) << ','
           << fmt(r.solve_ms) << '\n';
    }
}

void write_cross_section_csv(std::ostream& os, const std::vector<CrossSectionRow>& rows)
{
    os << "omega,n,x,y,exact_re_mag,dg_re_mag,fem_re_mag\n";
    for (const auto& r : rows) {
        os << fmt(r.omega) << ',' << r.n << ',' << fmt(r.x) << ',' << fmt(r.y) << ',' << fmt(r.exact) << ','
           << (r.dg ? fmt(*r.dg) : "") << ',' << (r.fem ? fmt(*r.fem) : "") << '\n';
    }
}

void write_centroids_csv(std::ostream& os, const std::vector<CentroidSample>& samples)
{
    os << "method,x,y,re_u1,im_u1,re_u2,im_u2\n";
    for (const auto& s : samples) {
        os << s.method << ',' << fmt(s.x) << ',' << fmt(s.y) << ',' << fmt(s.u[0].real()) << ',' << fmt(s.u[0].imag())
           << ',' << fmt(s.u[1].real()) << ',' << fmt(s.u[1].imag()) << '\n';
    }
}

namespace {

struct Series
{
    std::string name;
    std::vector<std::pair<double, double>> points;
};

void plot(std::ostream& os, const std::string& title, const std::string& xlabel, const std::string& ylabel,
          const std::vector<Series>& series, bool logx, bool logy)
{
    constexpr double W = 720, H = 480, L = 80, R = 180, T = 40, B = 60;
    const auto tx = [&](double v) { return logx ? std::log10(v) : v; };
    const auto ty = [&](double v) { return logy ? std::log10(v) : v; };
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const auto& s : series)
        for (auto [x, y] : s.points) {
            if ((logx && !(x > 0)) || (logy && !(y > 0)) || !std::isfinite(x) || !std::isfinite(y)) continue;
            x0 = std::min(x0, tx(x));
            x1 = std::max(x1, tx(x));
            y0 = std::min(y0, ty(y));
            y1 = std::max(y1, ty(y));
        }
    if (x0 > x1) x0 = 0, x1 = 1;
    if (y0 > y1) y0 = 0, y1 = 1;
    if (x1 == x0) x1 = x0 + 1;
    if (y1 == y0) y1 = y0 + 1;
    const auto px = [&](double x) { return L + (tx(x) - x0) / (x1 - x0) * (W - L - R); };
    const auto py = [&](double y) { return H - B - (ty(y) - y0) / (y1 - y0) * (H - T - B); };

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << title << "</text>\n"
       << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\"" << H - T - B
       << "\" fill=\"none\" stroke=\"black\"/>\n"
       << "<text x=\"" << (W - R + L) / 2 << "\" y=\"" << H - 20 << "\" text-anchor=\"middle\">" << xlabel << "</text>\n"
       << "<text x=\"20\" y=\"" << (H - B + T) / 2 << "\" transform=\"rotate(-90 20 " << (H - B + T) / 2
       << ")\" text-anchor=\"middle\">" << ylabel << "</text>\n";
    const auto tick = [&](double v, bool log) { return fmt(log ? std::pow(10.0, v) : v); };
    for (int i = 0; i <= 4; ++i) {
        const double fx = x0 + (x1 - x0) * i / 4;
        const double fy = y0 + (y1 - y0) * i / 4;
        const double sx = L + (W - L - R) * i / 4;
        const double sy = H - B - (H - T - B) * i / 4;
        os << "<text x=\"" << sx << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\" font-size=\"11\">"
           << tick(fx, logx) << "</text>\n"
           << "<text x=\"" << L - 6 << "\" y=\"" << sy + 4 << "\" text-anchor=\"end\" font-size=\"11\">" << tick(fy, logy)
           << "</text>\n";
    }
    for (size_t i = 0; i < series.size(); ++i) {
        const char* color = colors[i % 7];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (auto [x, y] : series[i].points) {
            if ((logx && !(x > 0)) || (logy && !(y > 0)) || !std::isfinite(x) || !std::isfinite(y)) continue;
            os << px(x) << ',' << py(y) << ' ';
        }
        os << "\"/>\n<text x=\"" << W - R + 10 << "\" y=\"" << T + 16 * (i + 1) << "\" fill=\"" << color
           << "\" font-size=\"12\">" << series[i].name << "</text>\n";
    }
    os << "</svg>\n";
}

std::vector<Series> group_records(const std::vector<ExperimentRecord>& records,
                                  const std::function<std::string(const ExperimentRecord&)>& key,
                                  const std::function<std::pair<double, double>(const ExperimentRecord&)>& point)
{
    std::map<std::string, Series> groups;
    for (const auto& r : records) {
        auto& s = groups[key(r)];
        s.name = key(r);
        s.points.push_back(point(r));
    }
    std::vector<Series> out;
    for (auto& [name, s] : groups) {
        std::sort(s.points.begin(), s.points.end());
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

void write_svg(std::ostream& os, Study study, const StudyResult& result)
{
    const auto& recs = result.records;
    switch (study) {
    case Study::Stability:
        plot(os, "Discrete solution norm", "omega", "||u_h||_{1,h}",
             group_records(recs, [](const auto& r) { return r.method + " n=" + std::to_string(r.n); },
                           [](const auto& r) { return std::pair{r.omega, r.norm_1h}; }),
             false, false);
        return;
    case Study::Convergence:
        plot(os, "Relative H1-seminorm error", "h", "relative error",
             group_records(recs, [](const auto& r) { return r.method + " w=" + fmt(r.omega); },
                           [](const auto& r) { return std::pair{r.h, r.rel_err_h1semi}; }),
             true, true);
        return;
    case Study::Pollution:
        plot(os, "Relative H1-seminorm error along refinement rules", "omega", "relative error",
             group_records(recs, [](const auto& r) { return r.method + " " + r.study.substr(r.study.find(':') + 1); },
                           [](const auto& r) { return std::pair{r.omega, r.rel_err_h1semi}; }),
             true, true);
        return;
    case Study::Compare: {
        std::map<std::string, Series> groups;
        for (const auto& row : result.cross_section) {
            const std::string tag = " w=" + fmt(row.omega) + " n=" + std::to_string(row.n);
            const auto add = [&](const std::string& name, double v) {
                auto& s = groups[name + tag];
                s.name = name + tag;
                s.points.push_back({row.x, v});
            };
            add("exact", row.exact);
            if (row.dg) add("dg", *row.dg);
            if (row.fem) add("fem", *row.fem);
        }
        std::vector<Series> series;
        for (auto& [name, s] : groups) series.push_back(std::move(s));
        plot(os, "|Re u| along y = x", "x", "|Re u|", series, false, false);
        return;
    }
    case Study::Single:
        plot(os, "Relative H1-seminorm error", "n", "relative error",
             group_records(recs, [](const auto& r) { return r.method + " w=" + fmt(r.omega); },
                           [](const auto& r) { return std::pair{static_cast<double>(r.n), r.rel_err_h1semi}; }),
             false, false);
        return;
    }
}

} // namespace elastodg
