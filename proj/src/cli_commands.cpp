#include "wavebreak/cli_commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <thread>

#include "wavebreak/cgn.hpp"
#include "wavebreak/diagnostics.hpp"
#include "wavebreak/io.hpp"
#include "wavebreak/kernels.hpp"
#include "wavebreak/special.hpp"
#include "wavebreak/spectral.hpp"
#include "wavebreak/version.hpp"

namespace fs = std::filesystem;

namespace wavebreak {

namespace {

const std::set<std::string> kModelKeys = {
    "model.kind", "model.alpha", "model.s", "model.tau", "model.sign_convention",
    "model.kernel_file"};
const std::set<std::string> kGridKeys = {"grid.half_width", "grid.points"};
const std::set<std::string> kDataKeys = {
    "data.kind", "data.amplitude", "data.width", "data.amplitude_rule",
    "data.threshold_factor", "data.file"};
const std::set<std::string> kCriterionKeys = {"criterion.theta", "criterion.c_gn",
                                              "criterion.route"};
const std::set<std::string> kRunKeys = {
    "run.cfl", "run.m_cap_factor", "run.tail_stop", "run.fit_window", "run.max_time",
    "run.max_refinements", "run.integrating_factor", "run.characteristic_seeds"};
const std::set<std::string> kSweepKeys = {
    "sweep.parameter", "sweep.values", "sweep.parameter2", "sweep.values2", "sweep.workers"};
const std::set<std::string> kKernelKeys = {
    "kernels.whitham_x_min", "kernels.whitham_x_max", "kernels.whitham_points",
    "kernels.bessel_s", "kernels.bessel_x_min", "kernels.bessel_x_max",
    "kernels.bessel_points", "kernels.gamma_s_min", "kernels.gamma_s_max",
    "kernels.gamma_points"};

std::set<std::string> merge(std::initializer_list<const std::set<std::string>*> sets) {
    std::set<std::string> out;
    for (const auto* s : sets) out.insert(s->begin(), s->end());
    return out;
}

SignConvention sign_from_config(const Config& cfg) {
    const std::string s = cfg.get_string("model.sign_convention", "section3");
    if (s == "section3") return SignConvention::section3;
    if (s == "section1") return SignConvention::section1;
    throw ConfigError("model.sign_convention must be section1 or section3, got '" + s + "'");
}

TabulatedOddKernel load_kernel_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open kernel file: " + path);
    TabulatedOddKernel k;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || std::isalpha(static_cast<unsigned char>(line[0])))
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ConfigError("kernel file: expected 'x,K' rows");
        k.x.push_back(std::stod(line.substr(0, comma)));
        k.k.push_back(std::stod(line.substr(comma + 1)));
    }
    if (k.x.empty()) throw ConfigError("kernel file: no samples in " + path);
    return k;
}

InitialData data_from_config(const Config& cfg) {
    const std::string kind = cfg.get_string("data.kind", "gaussian_slope");
    if (kind == "gaussian_slope") {
        GaussianSlopeData d;
        d.amplitude = cfg.get_double("data.amplitude", 1.0);
        d.width = cfg.get_double("data.width", 1.0);
        return d;
    }
    if (kind == "sine") {
        SineData d;
        d.amplitude = cfg.get_double("data.amplitude", 1.0);
        return d;
    }
    if (kind == "tabulated") {
        std::ifstream in(cfg.get_string("data.file"));
        if (!in) throw ConfigError("cannot open data file: " + cfg.get_string("data.file"));
        TabulatedData d;
        double v;
        while (in >> v) d.values.push_back(v);
        return d;
    }
    throw ConfigError("data.kind must be gaussian_slope, sine or tabulated, got '" + kind + "'");
}

struct ResolvedCase {
    ModelSpec model;
    SimConfig sim;
    double theta;
    double c_gn;
    std::string route;
};

ResolvedCase resolve_case(const Config& cfg) {
    ResolvedCase rc{model_from_config(cfg), sim_config_from_config(cfg),
                    cfg.get_double("criterion.theta", 0.05), resolve_cgn(cfg),
                    cfg.get_string("criterion.route", "auto")};
    rc.sim.model = rc.model;
    if (cfg.get_string("data.amplitude_rule", "fixed") == "threshold_factor") {
        auto* g = std::get_if<GaussianSlopeData>(&rc.sim.data);
        if (!g) throw ConfigError("data.amplitude_rule=threshold_factor needs gaussian_slope data");
        const double factor = cfg.get_double("data.threshold_factor", 2.0);
        g->amplitude = amplitude_for_margin(rc.model, rc.sim.grid, g->width, rc.theta, rc.c_gn,
                                            factor, rc.route);
    }
    return rc;
}

Json manifest_json(const std::string& command, const Config& cfg,
                   const std::vector<std::string>& outputs, double duration_s,
                   const CliOptions& opt) {
    Json j;
    j["command"] = command;
    j["version"] = kVersion;
    j["seed"] = opt.seed;
    Json echo;
    for (const auto& [k, v] : cfg.entries()) echo[k] = v;
    j["config"] = echo;
    j["outputs"] = outputs;
    j["duration_seconds"] = duration_s;
    return j;
}

void write_outputs(const std::string& command, const Config& cfg, const CliOptions& opt,
                   const std::vector<std::pair<std::string, std::string>>& files,
                   double duration_s) {
    fs::create_directories(opt.out_dir);
    std::vector<std::string> paths;
    for (const auto& [name, content] : files) {
        const std::string path = (fs::path(opt.out_dir) / name).string();
        write_text_file(path, content);
        paths.push_back(path);
    }
    const std::string manifest_path = (fs::path(opt.out_dir) / "manifest.json").string();
    write_text_file(manifest_path, manifest_json(command, cfg, paths, duration_s, opt).dump(2) + "\n");
}

std::vector<double> grid_values(const Config& cfg, const std::string& prefix, double lo_def,
                                double hi_def, int n_def, bool log_scale) {
    const double lo = cfg.get_double(prefix + "_min", lo_def);
    const double hi = cfg.get_double(prefix + "_max", hi_def);
    const int n = cfg.get_int(prefix.substr(0, prefix.rfind('_')) + "_points", n_def);
    if (!(hi > lo) || n < 2) throw ConfigError(prefix + ": invalid range");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        const double f = double(i) / (n - 1);
        out[i] = log_scale ? lo * std::pow(hi / lo, f) : lo + f * (hi - lo);
    }
    return out;
}

int usage_error(const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
}

}  // namespace

ModelSpec model_from_config(const Config& cfg) {
    const std::string kind = cfg.get_string("model.kind");
    if (kind == "burgers") return ModelSpec::burgers();
    if (kind == "fkdv") return ModelSpec::fkdv(cfg.get_double("model.alpha"));
    if (kind == "whitham") return ModelSpec::whitham(sign_from_config(cfg));
    if (kind == "fornberg_whitham") {
        std::optional<double> tau;
        if (cfg.has("model.tau")) tau = cfg.get_double("model.tau");
        return ModelSpec::fornberg_whitham(cfg.get_double("model.s"), tau, sign_from_config(cfg));
    }
    if (kind == "tabulated") return ModelSpec::tabulated(load_kernel_csv(cfg.get_string("model.kernel_file")));
    throw ConfigError("model.kind must be burgers, fkdv, whitham, fornberg_whitham or tabulated");
}

GridSpec grid_from_config(const Config& cfg) {
    return GridSpec(cfg.get_double("grid.half_width", 40.0), cfg.get_int("grid.points", 1024));
}

SimConfig sim_config_from_config(const Config& cfg) {
    SimConfig sc;
    sc.model = model_from_config(cfg);
    sc.grid = grid_from_config(cfg);
    sc.data = data_from_config(cfg);
    sc.cfl = cfg.get_double("run.cfl", 0.4);
    sc.m_cap_factor = cfg.get_double("run.m_cap_factor", 50.0);
    sc.tail_stop = cfg.get_double("run.tail_stop", 1e-4);
    sc.fit_window = cfg.get_int("run.fit_window", 20);
    sc.max_time = cfg.get_double("run.max_time", 10.0);
    sc.max_refinements = cfg.get_int("run.max_refinements", 2);
    sc.integrating_factor = cfg.get_bool("run.integrating_factor", true);
    if (!(sc.cfl > 0.0 && sc.cfl < 1.0)) throw ConfigError("run.cfl must lie in (0, 1)");
    if (!(sc.m_cap_factor > 1.0)) throw ConfigError("run.m_cap_factor must exceed 1");
    if (sc.fit_window < 5) throw ConfigError("run.fit_window must be at least 5");
    return sc;
}

double resolve_cgn(const Config& cfg) {
    const std::string v = cfg.get_string("criterion.c_gn", "auto");
    if (v == "auto") {
        static std::mutex mtx;
        static double cached = 0.0;
        std::lock_guard<std::mutex> lock(mtx);
        if (cached == 0.0) cached = estimate_cgn().value;
        return cached;
    }
    try {
        return std::stod(v);
    } catch (const std::exception&) {
        throw ConfigError("criterion.c_gn must be 'auto' or a number, got '" + v + "'");
    }
}

CriterionReport evaluate_criterion(const ModelSpec& model, const Field& u0, double theta,
                                   double c_gn, const std::string& route) {
    if (route == "general") return general_criterion(u0, theta, operator_params(model), c_gn);
    if (route == "l1") {
        const OperatorParams p = operator_params(model);
        if (!p.l1_route)
            throw CriterionError("route l1: model does not carry an integrable-kernel bound");
        return l1_criterion(u0, theta, p.lambda1);
    }
    if (route != "auto" && route != "closed_form")
        throw ConfigError("criterion.route must be auto, closed_form, general or l1");
    switch (model.kind()) {
        case ModelSpec::Kind::burgers: {
            CriterionReport r = l1_criterion(u0, theta, 0.0);
            r.case_label = "burgers";
            return r;
        }
        case ModelSpec::Kind::fkdv:
            return fkdv_criterion(u0, theta, model.alpha(), c_gn);
        case ModelSpec::Kind::whitham:
            return whitham_criterion(u0, theta, c_gn);
        case ModelSpec::Kind::fornberg_whitham:
            return fw_criterion(u0, theta, model.s(), model.tau(), c_gn);
        case ModelSpec::Kind::tabulated: {
            CriterionReport r = l1_criterion(u0, theta, model.kernel().l1_norm());
            r.case_label = "odd-kernel-l1";
            return r;
        }
    }
    throw std::logic_error("evaluate_criterion: unreachable");
}

double amplitude_for_margin(const ModelSpec& model, const GridSpec& grid, double width,
                            double theta, double c_gn, double factor, const std::string& route) {
    double a = 1.0;
    for (int iter = 0; iter < 60; ++iter) {
        const Field u0 = make_initial_data(grid, GaussianSlopeData{a, width});
        const CriterionReport r = evaluate_criterion(model, u0, theta, c_gn, route);
        const double target = factor * r.rhs;
        if (target <= 0.0) return a;  // threshold 0: any amplitude works
        if (std::abs(target - a) <= 1e-12 * a) return target;
        a = target;
    }
    return a;
}

int cmd_criteria(const CliOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const Config cfg = Config::parse_file(opt.config_path);
        cfg.require_known(merge({&kModelKeys, &kGridKeys, &kDataKeys, &kCriterionKeys}));
        const ResolvedCase rc = resolve_case(cfg);
        const Field u0 = make_initial_data(rc.sim.grid, rc.sim.data);
        const CriterionReport report = evaluate_criterion(rc.model, u0, rc.theta, rc.c_gn, rc.route);
        const Json j = criterion_to_json(report);
        std::cout << j.dump(2) << "\n";
        const double dur = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        write_outputs("criteria", cfg, opt, {{"criteria.json", j.dump(2) + "\n"}}, dur);
        return 0;
    } catch (const std::exception& e) {
        return usage_error(e);
    }
}

int cmd_simulate(const CliOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    Config cfg;
    ResolvedCase rc{ModelSpec::burgers(), SimConfig{}, 0.0, 0.0, "auto"};
    CriterionReport criterion;
    bool have_criterion = false;
    try {
        cfg = Config::parse_file(opt.config_path);
        cfg.require_known(
            merge({&kModelKeys, &kGridKeys, &kDataKeys, &kCriterionKeys, &kRunKeys}));
        rc = resolve_case(cfg);
        const Field u0 = make_initial_data(rc.sim.grid, rc.sim.data);
        try {
            criterion = evaluate_criterion(rc.model, u0, rc.theta, rc.c_gn, rc.route);
            have_criterion = true;
        } catch (const CriterionError& e) {
            std::cerr << "note: criterion not evaluated: " << e.what() << "\n";
        }
    } catch (const std::exception& e) {
        return usage_error(e);
    }

    try {
        std::vector<double> seeds;
        if (cfg.has("run.characteristic_seeds")) seeds = cfg.get_double_list("run.characteristic_seeds");
        const RunResult result = run(rc.sim, seeds);
        const VerificationReport rec =
            have_criterion ? reconcile(criterion, result.estimate) : VerificationReport{};
        const Json est = estimate_to_json(result.estimate, have_criterion ? &criterion : nullptr,
                                          have_criterion ? &rec : nullptr);
        std::cout << est.dump(2) << "\n";
        if (result.estimate.stop_reason == StopReason::resolution_loss)
            std::cerr << "warning: " << result.estimate.note << "\n";

        std::vector<std::pair<std::string, std::string>> files;
        files.emplace_back("trace.csv", trace_to_csv(result.trace));
        files.emplace_back("estimate.json", est.dump(2) + "\n");
        if (have_criterion) files.emplace_back("criteria.json", criterion_to_json(criterion).dump(2) + "\n");
        if (!result.characteristics.empty()) {
            std::string csv = "t";
            for (size_t s = 0; s < result.characteristics.size(); ++s)
                csv += ",xi" + std::to_string(s) + ",v" + std::to_string(s);
            csv += '\n';
            const size_t rows = result.characteristics.front().samples.size();
            for (size_t i = 0; i < rows; ++i) {
                csv += format_double(result.characteristics.front().samples[i].t);
                for (const CharacteristicTrack& tr : result.characteristics) {
                    csv += ',';
                    csv += format_double(tr.samples[i].xi);
                    csv += ',';
                    csv += format_double(tr.samples[i].v);
                }
                csv += '\n';
            }
            files.emplace_back("characteristics.csv", csv);
        }
        const double dur = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        write_outputs("simulate", cfg, opt, files, dur);
        return rec.any_fail() ? 1 : 0;
    } catch (const std::exception& e) {
        return usage_error(e);
    }
}

int cmd_sweep(const CliOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const Config cfg = Config::parse_file(opt.config_path);
        cfg.require_known(merge(
            {&kModelKeys, &kGridKeys, &kDataKeys, &kCriterionKeys, &kRunKeys, &kSweepKeys}));
        const std::string param = cfg.get_string("sweep.parameter");
        std::vector<double> values = cfg.get_double_list("sweep.values");
        std::sort(values.begin(), values.end());
        const std::string param2 = cfg.get_string("sweep.parameter2", "");
        std::vector<double> values2;
        if (!param2.empty()) {
            values2 = cfg.get_double_list("sweep.values2");
            std::sort(values2.begin(), values2.end());
        } else {
            values2.push_back(0.0);  // single pass
        }

        struct Row {
            double v1 = 0.0, v2 = 0.0;
            CriterionReport criterion;
            bool have_criterion = false;
            BreakingEstimate estimate;
            bool have_estimate = false;
            std::string status = "ok";
        };
        std::vector<Row> rows;
        for (double v1 : values)
            for (double v2 : values2) rows.push_back({v1, v2, {}, false, {}, false, "ok"});

        auto apply_param = [](ResolvedCase& rc, const std::string& p, double v) {
            if (p == "amplitude") {
                if (auto* g = std::get_if<GaussianSlopeData>(&rc.sim.data)) g->amplitude = v;
                else if (auto* s = std::get_if<SineData>(&rc.sim.data)) s->amplitude = v;
                else throw ConfigError("sweep parameter amplitude needs analytic data");
            } else if (p == "width") {
                auto* g = std::get_if<GaussianSlopeData>(&rc.sim.data);
                if (!g) throw ConfigError("sweep parameter width needs gaussian_slope data");
                g->width = v;
            } else if (p == "theta") {
                rc.theta = v;
            } else if (p == "s") {
                rc.model = ModelSpec::fornberg_whitham(v, rc.model.tau(), rc.model.sign_convention());
                rc.sim.model = rc.model;
            } else if (p == "alpha") {
                rc.model = ModelSpec::fkdv(v);
                rc.sim.model = rc.model;
            } else {
                throw ConfigError("sweep.parameter must be amplitude, width, theta, s or alpha");
            }
        };

        int workers = opt.workers > 0 ? opt.workers : cfg.get_int("sweep.workers", 0);
        if (workers <= 0) workers = std::max(1u, std::thread::hardware_concurrency());
        workers = std::min<int>(workers, std::max<size_t>(rows.size(), 1));

        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1)) {
                Row& row = rows[i];
                try {
                    ResolvedCase rc = resolve_case(cfg);
                    apply_param(rc, param, row.v1);
                    if (!param2.empty()) apply_param(rc, param2, row.v2);
                    const Field u0 = make_initial_data(rc.sim.grid, rc.sim.data);
                    try {
                        row.criterion = evaluate_criterion(rc.model, u0, rc.theta, rc.c_gn, rc.route);
                        row.have_criterion = true;
                    } catch (const CriterionError&) {
                        row.status = "criterion_error";
                    }
                    const RunResult rr = run(rc.sim);
                    row.estimate = rr.estimate;
                    row.have_estimate = true;
                } catch (const std::exception&) {
                    if (row.status == "ok") row.status = "run_error";
                }
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();

        std::string csv = "value,value2,lhs,rhs,holds,t_star_est,t_lo,t_hi,within_bounds,status\n";
        for (const Row& row : rows) {
            csv += format_double(row.v1);
            csv += ',';
            if (!param2.empty()) csv += format_double(row.v2);
            csv += ',';
            if (row.have_criterion) {
                csv += format_double(row.criterion.lhs);
                csv += ',';
                csv += format_double(row.criterion.rhs);
                csv += ',';
                csv += row.criterion.holds ? "true" : "false";
            } else {
                csv += ",,";
            }
            csv += ',';
            if (row.have_estimate && row.estimate.valid) csv += format_double(row.estimate.t_star_est);
            csv += ',';
            if (row.have_criterion && row.criterion.t_lo) csv += format_double(*row.criterion.t_lo);
            csv += ',';
            if (row.have_criterion && row.criterion.t_hi) csv += format_double(*row.criterion.t_hi);
            csv += ',';
            if (row.have_criterion && row.have_estimate) {
                const VerificationReport rec = reconcile(row.criterion, row.estimate);
                if (!rec.checks.empty() && !rec.checks.front().inconclusive)
                    csv += rec.checks.front().pass ? "true" : "false";
            }
            csv += ',';
            csv += row.status;
            csv += '\n';
        }
        std::cout << csv;
        const double dur = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        write_outputs("sweep", cfg, opt, {{"sweep.csv", csv}}, dur);
        return 0;
    } catch (const std::exception& e) {
        return usage_error(e);
    }
}

int cmd_kernels(const CliOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const Config cfg = Config::parse_file(opt.config_path);
        cfg.require_known(kKernelKeys);

        std::string wh = "x,K,bound,margin\n";
        for (double x : grid_values(cfg, "kernels.whitham_x", 0.01, 10.0, 40, true)) {
            const double k = whitham_kernel(x);
            const double bound = 1.0 / std::sqrt(2.0 * M_PI * x);
            wh += format_double(x);
            wh += ',';
            wh += format_double(k);
            wh += ',';
            wh += format_double(bound);
            wh += ',';
            wh += format_double(bound - k);
            wh += '\n';
        }

        std::vector<double> s_values = {0.3, 0.5, 0.9, 1.0, 1.5, 3.0};
        if (cfg.has("kernels.bessel_s")) s_values = cfg.get_double_list("kernels.bessel_s");
        std::string bs = "x,s,G,bound,margin\n";
        for (double s : s_values) {
            if (s == 1.0) {
                std::cerr << "note: s = 1 skipped in the Bessel table (gamma pole)\n";
                continue;
            }
            for (double x : grid_values(cfg, "kernels.bessel_x", 0.01, 8.0, 25, true)) {
                const double gval = bessel_kernel(s, x);
                const double bound = s > 1.0 ? gamma_ratio(s) / 2.0
                                             : gamma_ratio(s) / std::pow(2.0, s) * std::pow(x, s - 1.0);
                bs += format_double(x);
                bs += ',';
                bs += format_double(s);
                bs += ',';
                bs += format_double(gval);
                bs += ',';
                bs += format_double(bound);
                bs += ',';
                bs += format_double(bound - gval);
                bs += '\n';
            }
        }

        std::string gm = "s,gamma,one_minus_s_gamma\n";
        for (double s : grid_values(cfg, "kernels.gamma_s", 0.05, 30.0, 60, true)) {
            if (s == 1.0) continue;  // pole
            const double g = gamma_ratio(s);
            gm += format_double(s);
            gm += ',';
            gm += format_double(g);
            gm += ',';
            gm += format_double((1.0 - s) * g);
            gm += '\n';
        }

        const double dur = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        write_outputs("kernels", cfg, opt,
                      {{"whitham_kernel.csv", wh}, {"bessel_kernel.csv", bs}, {"gamma.csv", gm}}, dur);
        return 0;
    } catch (const std::exception& e) {
        return usage_error(e);
    }
}

int cmd_verify(const CliOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        Config cfg;
        if (!opt.config_path.empty()) {
            cfg = Config::parse_file(opt.config_path);
            cfg.require_known({});
        }
        const VerificationReport rep = verify_corpus(opt.seed);
        int failed = 0, inconclusive = 0;
        for (const CheckResult& c : rep.checks) {
            if (c.inconclusive) ++inconclusive;
            else if (!c.pass) ++failed;
        }
        std::printf("%-44s %14s %14s %12s %s\n", "check", "value", "bound", "margin", "pass");
        for (const CheckResult& c : rep.checks) {
            std::printf("%-44s %14.6g %14.6g %12.3g %s\n", c.check.c_str(), c.value, c.bound,
                        c.margin, c.inconclusive ? "inconclusive" : (c.pass ? "yes" : "NO"));
        }
        std::printf("%zu checks, %d failed, %d inconclusive\n", rep.checks.size(), failed,
                    inconclusive);
        const double dur = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        write_outputs("verify", cfg, opt, {{"verify.json", verification_to_json(rep).dump(2) + "\n"}},
                      dur);
        return failed > 0 ? 1 : 0;
    } catch (const std::exception& e) {
        return usage_error(e);
    }
}

}  // namespace wavebreak
