// Acceptance suite: every release gate runs here, one PASS/FAIL line per
// criterion. Returns the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "wavebreak/cgn.hpp"
#include "wavebreak/criteria.hpp"
#include "wavebreak/diagnostics.hpp"
#include "wavebreak/evolution.hpp"
#include "wavebreak/kernels.hpp"
#include "wavebreak/special.hpp"
#include "wavebreak/spectral.hpp"

using namespace wavebreak;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] %2d %-38s %s\n", ok ? "PASS" : "FAIL", idx, name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

double lagrange_derivative5(const double* t, const double* y) {
    const int c = 2;
    double acc = 0.0;
    for (int j = 0; j < 5; ++j) {
        if (j == c) {
            double s = 0.0;
            for (int k = 0; k < 5; ++k)
                if (k != c) s += 1.0 / (t[c] - t[k]);
            acc += y[c] * s;
        } else {
            double num = 1.0, den = 1.0;
            for (int k = 0; k < 5; ++k) {
                if (k == j) continue;
                if (k != c) num *= t[c] - t[k];
                den *= t[j] - t[k];
            }
            acc += y[j] * num / den;
        }
    }
    return acc;
}

struct ModelRun {
    std::string name;
    double theta;
    CriterionReport criterion;
    RunResult result;
    double seconds;
};

// one item-2 case: amplitude solved so the initial slope is exactly
// `factor` times the criterion threshold, then simulated to blow-up
ModelRun breaking_run(const std::string& name, const ModelSpec& model, double theta,
                      const std::function<CriterionReport(const Field&, double)>& criterion) {
    const GridSpec grid(12.0, 4096);
    double a = 1.0;
    for (int i = 0; i < 80; ++i) {
        const Field u0 = make_initial_data(grid, GaussianSlopeData{a, 1.0});
        const double target = 2.0 * criterion(u0, theta).rhs;
        if (std::abs(target - a) <= 1e-12 * a) break;
        a = target;
    }
    SimConfig cfg;
    cfg.model = model;
    cfg.grid = grid;
    cfg.data = GaussianSlopeData{a, 1.0};
    cfg.cfl = 0.3;
    // the u_x dip narrows like m^{-3/2}; this cap keeps it resolved through
    // the whole fit window so the grid inf of u_x stays faithful
    cfg.m_cap_factor = 8.0;
    cfg.tail_stop = 1e-4;
    cfg.max_refinements = 0;  // the gate pins n <= 4096
    cfg.max_time = 10.0;

    ModelRun mr;
    mr.name = name;
    mr.theta = theta;
    const Field u0 = make_initial_data(grid, GaussianSlopeData{a, 1.0});
    mr.criterion = criterion(u0, theta);
    const auto t0 = std::chrono::steady_clock::now();
    mr.result = run(cfg);
    mr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return mr;
}

double cgn_value = 0.55;  // replaced by the estimator in main()

}  // namespace

int main() {
    std::printf("acceptance suite\n");

    // ---- 12. interpolation-constant estimator --------------------------------
    // (runs first; later criteria reuse the estimated constant)
    {
        const GridSpec g(20.0, 512);
        Field f = Field::from_function(g, [](double x) { return std::exp(-x * x) * (1.0 + 0.3 * x); });
        std::vector<double> scaled(g.n);
        for (int j = 0; j < g.n; ++j) scaled[j] = 2.7 * f.values()[j];
        const Field fs = Field::from_values(GridSpec(20.0 * 1.6, 512), std::move(scaled));
        const double inv_err = std::abs(rayleigh_quotient(fs) / rayleigh_quotient(f) - 1.0);

        Field sech = Field::from_function(g, [](double x) { return 1.0 / std::cosh(x); });
        const double sech_closed = 0.5 * std::pow(15.0 / 14.0, 1.0 / 3.0);
        const double sech_err = std::abs(rayleigh_quotient(sech) - sech_closed);

        const CgnEstimate est = estimate_cgn();
        bool dominates = true;
        for (const auto& [seed, value] : est.seed_values) dominates = dominates && est.value >= value;
        cgn_value = est.value;

        report(12, "interpolation-constant estimator",
               inv_err < 1e-10 && sech_err < 1e-6 && dominates,
               fmt("C=%.6f (%s), scale-inv err %.1e, sech err %.1e", est.value,
                   est.maximizer.c_str(), inv_err, sech_err));
    }

    // ---- 1. unperturbed Burgers oracle ---------------------------------------
    {
        SimConfig cfg;
        cfg.model = ModelSpec::burgers();
        cfg.grid = GridSpec(M_PI, 1024);
        cfg.data = SineData{1.0};
        cfg.m_cap_factor = 10.0;
        cfg.tail_stop = 1e-4;
        cfg.max_refinements = 0;
        const auto t0 = std::chrono::steady_clock::now();
        const RunResult r = run(cfg);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = r.estimate.valid && std::abs(r.estimate.t_star_est - 1.0) <= 0.02 && secs < 10.0;
        report(1, "unperturbed burgers oracle", ok,
               fmt("t*=%.4f (target 1.00 +- 0.02), stop=%s, %.1fs", r.estimate.t_star_est,
                   to_string(r.estimate.stop_reason).c_str(), secs));
    }

    // ---- 2/3/10/11. model runs against the predicted interval ------------------
    {
        std::vector<ModelRun> runs;
        runs.push_back(breaking_run("fkdv a=-0.6", ModelSpec::fkdv(-0.6), 0.25,
                                    [](const Field& u0, double th) {
                                        return fkdv_criterion(u0, th, -0.6, cgn_value);
                                    }));
        runs.push_back(breaking_run("whitham", ModelSpec::whitham(), 0.1,
                                    [](const Field& u0, double th) {
                                        return whitham_criterion(u0, th, cgn_value);
                                    }));
        runs.push_back(breaking_run("fw s=0.8 (i)", ModelSpec::fornberg_whitham(0.8), 0.3,
                                    [](const Field& u0, double th) {
                                        return general_criterion(u0, th, fw_operator_params(0.8, FwCase::i),
                                                                 cgn_value);
                                    }));
        runs.push_back(breaking_run("fw s=0.9 (ii)", ModelSpec::fornberg_whitham(0.9), 0.3,
                                    [](const Field& u0, double th) {
                                        return general_criterion(u0, th, fw_operator_params(0.9, FwCase::ii),
                                                                 cgn_value);
                                    }));
        runs.push_back(breaking_run("fw s=1 tau=0.8", ModelSpec::fornberg_whitham(1.0, 0.8), 0.2,
                                    [](const Field& u0, double th) {
                                        return fw_criterion(u0, th, 1.0, 0.8, cgn_value);
                                    }));
        runs.push_back(breaking_run("fw s=2 (iv)", ModelSpec::fornberg_whitham(2.0), 0.5,
                                    [](const Field& u0, double th) {
                                        return fw_criterion(u0, th, 2.0, std::nullopt, cgn_value);
                                    }));

        bool ok2 = true, ok3 = true, ok10 = true, ok11 = true;
        std::string d2, d3, d10, d11;
        for (const ModelRun& mr : runs) {
            const VerificationReport rec = reconcile(mr.criterion, mr.result.estimate);
            const bool in_bounds = !rec.checks.empty() && rec.checks.front().pass &&
                                   !rec.checks.front().inconclusive;
            const bool within_time = mr.seconds < 60.0;
            if (!(mr.criterion.holds && in_bounds && within_time)) ok2 = false;
            d2 += fmt("%s t*=%.4g in [%.4g, %.4g] %s (%.1fs); ", mr.name.c_str(),
                      mr.result.estimate.t_star_est, *mr.criterion.t_lo * 0.95,
                      *mr.criterion.t_hi * 1.05, in_bounds ? "yes" : "NO", mr.seconds);

            // 3: conservation over the resolved interval
            const auto& rows = mr.result.trace.rows;
            double drift = 0.0;
            for (const TraceRow& row : rows)
                if (row.tail_ratio < 1e-6) drift = std::max(drift, std::abs(row.z0 - rows[0].z0) / rows[0].z0);
            if (drift > 1e-8) ok3 = false;
            d3 += fmt("%s %.1e; ", mr.name.c_str(), drift);

            // 10: energy-identity residuals over the first half
            double worst = 0.0;
            const size_t half = rows.size() / 2;
            for (size_t i = 2; i + 2 < half; i += 5) {
                double ts[5], z1s[5], z2s[5], z3s[5];
                for (int o = 0; o < 5; ++o) {
                    ts[o] = rows[i - 2 + o].t;
                    z1s[o] = rows[i - 2 + o].z1;
                    z2s[o] = rows[i - 2 + o].z2;
                    z3s[o] = rows[i - 2 + o].z3;
                }
                worst = std::max(worst, std::abs(lagrange_derivative5(ts, z1s) + rows[i].i1) /
                                            std::abs(lagrange_derivative5(ts, z1s)));
                worst = std::max(worst, std::abs(lagrange_derivative5(ts, z2s) + 5.0 * rows[i].i2) /
                                            std::abs(lagrange_derivative5(ts, z2s)));
                worst = std::max(worst, std::abs(lagrange_derivative5(ts, z3s) + 7.0 * rows[i].i3) /
                                            std::abs(lagrange_derivative5(ts, z3s)));
            }
            if (worst > 1e-4) ok10 = false;
            d10 += fmt("%s %.1e; ", mr.name.c_str(), worst);

            // 11: fitted 1/m slope inside the two-sided Riccati band
            const double slope = mr.result.estimate.fit_slope;
            const bool in_band = slope >= -(1.0 + mr.theta) - 0.05 && slope <= -(1.0 - mr.theta) + 0.05;
            if (!in_band) ok11 = false;
            d11 += fmt("%s %.3f in [%.3f, %.3f]; ", mr.name.c_str(), slope,
                       -(1.0 + mr.theta) - 0.05, -(1.0 - mr.theta) + 0.05);
        }
        report(2, "theorem-interval reconciliation", ok2, d2);
        report(3, "L2 conservation", ok3, d3);
        report(10, "energy-identity residuals", ok10, d10);
        report(11, "riccati sandwich slope", ok11, d11);
    }

    // ---- 4. operator structure on a random corpus ------------------------------
    {
        const GridSpec grid(40.0, 512);
        const auto corpus = random_field_corpus(grid, 20, 20240801);
        const std::vector<ModelSpec> models = {ModelSpec::burgers(), ModelSpec::fkdv(-0.6),
                                               ModelSpec::whitham(), ModelSpec::fornberg_whitham(0.8)};
        double worst_commute = 0.0, worst_orth = 0.0;
        bool ok = true;
        for (const ModelSpec& m : models) {
            double sigma_max = 0.0;
            for (int k = 0; k < grid.spectrum_size(); ++k)
                sigma_max = std::max(sigma_max, std::abs(m.multiplier(grid.wavenumber(k))));
            for (const Field& g : corpus) {
                const auto err = operator_identities(m, g);
                worst_commute = std::max(worst_commute, err.commute_error);
                const double rel = err.orthogonality_error /
                                   (norms(g).l2_norm_squared * std::max(sigma_max, 1.0));
                worst_orth = std::max(worst_orth, rel);
                ok = ok && err.commute_error <= 1e-10 && rel <= 1e-12;
            }
        }
        report(4, "operator identities corpus", ok,
               fmt("worst commute %.1e (<=1e-10), worst orth %.1e (<=1e-12 rel)", worst_commute,
                   worst_orth));
    }

    // ---- 5. envelope-bound sweep ------------------------------------------------
    {
        const GridSpec grid(40.0, 512);
        const auto corpus = random_field_corpus(grid, 20, 20240802);
        struct Case {
            std::string name;
            ModelSpec model;
            OperatorParams params;
        };
        std::vector<Case> cases = {
            {"fkdv", ModelSpec::fkdv(-0.6), operator_params(ModelSpec::fkdv(-0.6))},
            {"whitham", ModelSpec::whitham(), operator_params(ModelSpec::whitham())},
            {"fw-i", ModelSpec::fornberg_whitham(0.8), fw_operator_params(0.8, FwCase::i)},
            {"fw-ii", ModelSpec::fornberg_whitham(0.9), fw_operator_params(0.9, FwCase::ii)},
            {"fw-iii", ModelSpec::fornberg_whitham(1.0, 0.8), fw_operator_params(1.0, FwCase::iii, 0.8)},
        };
        bool ok = true;
        double worst = 1e300;
        std::string worst_case;
        for (const Case& c : cases) {
            std::vector<double> etas;
            const double hi = std::isfinite(c.params.eta0) ? 0.99 * c.params.eta0 : 1e2;
            for (int i = 0; i < 9; ++i) etas.push_back(1e-2 * std::pow(hi / 1e-2, i / 8.0));
            for (const Field& g : corpus) {
                const VerificationReport rep = check_envelope_bound(c.model, c.params, g, etas);
                for (const CheckResult& r : rep.checks) {
                    if (r.inconclusive) continue;
                    if (r.margin < worst) {
                        worst = r.margin;
                        worst_case = c.name;
                    }
                    ok = ok && r.pass;
                }
            }
        }
        report(5, "envelope bound sweep corpus", ok,
               fmt("worst margin %.3g (%s), all >= 0: %s", worst, worst_case.c_str(),
                   ok ? "yes" : "no"));
    }

    // ---- 6. kernel bounds --------------------------------------------------------
    {
        const VerificationReport rep = kernel_bound_sweep();
        bool ok = true;
        double g11 = 0.0;
        for (const CheckResult& c : rep.checks) {
            if (c.check == "bessel G_1(1) < 1/pi") g11 = c.value;
            ok = ok && (c.pass || c.inconclusive);
        }
        report(6, "kernel bounds", ok, fmt("%zu checks, G_1(1)=%.6f < 1/pi=%.6f", rep.checks.size(),
                                           g11, 1.0 / M_PI));
    }

    // ---- 7. gamma ratio ------------------------------------------------------------
    {
        const double e2 = std::abs(gamma_ratio(2.0) - 1.0);
        const double e3 = std::abs(gamma_ratio(3.0) - 2.0 / M_PI);
        const double s = 1.0 - 1e-4;
        const double elim = std::abs((1.0 - s) * gamma_ratio(s) - 2.0 / M_PI);
        bool mono = true;
        double prev = gamma_ratio(0.02);
        for (double t = 0.07; t < 1.0; t += 0.05) {
            mono = mono && gamma_ratio(t) > prev;
            prev = gamma_ratio(t);
        }
        prev = gamma_ratio(1.02);
        for (double t = 1.52; t <= 30.0; t += 0.5) {
            mono = mono && gamma_ratio(t) < prev;
            prev = gamma_ratio(t);
        }
        const bool ok = e2 < 1e-12 && e3 < 1e-12 && elim < 1e-3 && mono;
        report(7, "gamma ratio", ok,
               fmt("|g(2)-1|=%.1e, |g(3)-2/pi|=%.1e, pole limit err %.1e, monotone %s", e2, e3,
                   elim, mono ? "yes" : "no"));
    }

    // ---- 8. critical-limit of beta2 -------------------------------------------------
    {
        const double v = std::sqrt(1.0 - 0.999) * fw_beta2(0.999);
        const double err = std::abs(v - std::sqrt(12.0 / M_PI));
        report(8, "beta2 critical limit", err < 2e-2,
               fmt("sqrt(1-s) beta2 = %.4f vs sqrt(12/pi) = %.4f (err %.1e)", v,
                   std::sqrt(12.0 / M_PI), err));
    }

    // ---- 9. specialization identities ------------------------------------------------
    {
        const GridSpec grid(40.0, 512);
        const auto corpus = random_field_corpus(grid, 10, 20240803);
        double worst = 0.0;
        auto rel = [&](double a, double b) { return std::abs(a - b) / std::abs(b); };
        for (const Field& u0 : corpus) {
            const double th = 0.05;
            worst = std::max(worst, rel(fkdv_criterion(u0, th, -0.6, cgn_value).rhs,
                                        general_criterion(u0, th, operator_params(ModelSpec::fkdv(-0.6)), cgn_value).rhs));
            worst = std::max(worst, rel(whitham_criterion(u0, th, cgn_value).rhs,
                                        general_criterion(u0, th, operator_params(ModelSpec::whitham()), cgn_value).rhs));
            const CriterionReport f1 = fw_criterion(u0, th, 0.8, std::nullopt, cgn_value);
            const double rhs_i = f1.case_label == "fw-case-i" ? f1.rhs : f1.alternatives.front().second;
            worst = std::max(worst, rel(rhs_i, general_criterion(u0, th, fw_operator_params(0.8, FwCase::i), cgn_value).rhs));
            const CriterionReport f2 = fw_criterion(u0, th, 0.9, std::nullopt, cgn_value);
            const double rhs_ii = f2.case_label == "fw-case-ii" ? f2.rhs : f2.alternatives.front().second;
            worst = std::max(worst, rel(rhs_ii, general_criterion(u0, th, fw_operator_params(0.9, FwCase::ii), cgn_value).rhs));
            worst = std::max(worst, rel(fw_criterion(u0, th, 1.0, 0.8, cgn_value).rhs,
                                        general_criterion(u0, th, fw_operator_params(1.0, FwCase::iii, 0.8), cgn_value).rhs));
        }
        report(9, "specialization identities", worst < 1e-10, fmt("worst relative gap %.2e", worst));
    }

    // ---- 13. characteristics ------------------------------------------------------------
    {
        SimConfig cfg;
        cfg.model = ModelSpec::burgers();
        cfg.grid = GridSpec(M_PI, 2048);
        cfg.data = SineData{1.0};
        cfg.m_cap_factor = 8.0;
        cfg.tail_stop = 1e-4;
        cfg.max_refinements = 0;
        std::vector<double> seeds;
        for (int k = 0; k < 16; ++k) seeds.push_back((k - 8) * 0.19);
        const RunResult r = run(cfg, seeds);

        double riccati_err = 0.0;
        for (const CharacteristicTrack& tr : r.characteristics) {
            const double v0 = tr.samples.front().v;
            for (const CharacteristicSample& s : tr.samples) {
                const double denom = 1.0 - s.t * v0;
                if (denom < 0.15) break;
                riccati_err = std::max(riccati_err, std::abs(s.v - v0 / denom));
            }
        }
        double track_err = 0.0;
        for (size_t i = 0; i < r.trace.rows.size(); ++i) {
            double vmax = -1e300;
            for (const CharacteristicTrack& tr : r.characteristics)
                vmax = std::max(vmax, tr.samples[i].v);
            track_err = std::max(track_err, std::abs(vmax - r.trace.rows[i].m) / r.trace.rows[i].m);
        }
        const bool ok = riccati_err < 1e-4 && track_err < 1e-3;
        report(13, "characteristics", ok,
               fmt("riccati err %.2e (<1e-4), extremal-slope err %.2e (<1e-3)", riccati_err, track_err));
    }

    std::printf("%d criteria failed\n", g_failures);
    return g_failures;
}
