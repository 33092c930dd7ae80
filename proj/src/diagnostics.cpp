#include "wavebreak/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "wavebreak/kernels.hpp"
#include "wavebreak/special.hpp"
#include "wavebreak/spectral.hpp"

namespace wavebreak {

namespace {

std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i)
        g[i] = lo * std::pow(hi / lo, double(i) / (count - 1));
    return g;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass || c.inconclusive; });
}

bool VerificationReport::any_fail() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return !c.pass && !c.inconclusive; });
}

void VerificationReport::append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

const Tolerances& tolerances() {
    static const Tolerances t;
    return t;
}

VerificationReport check_envelope_bound(const ModelSpec& model, const OperatorParams& params,
                                        const Field& g, const std::vector<double>& eta_grid) {
    VerificationReport rep;
    const Field ng = apply_operator(model, g);
    const Field dg = derivative(g, 1);
    const double ng_sup = norms(ng).sup_norm;
    const double g_sup = norms(g).sup_norm;
    const double dg_sup = norms(dg).sup_norm;
    const double dg_l2 = l2_norm(dg);
    for (double eta : eta_grid) {
        CheckResult c;
        c.check = "envelope " + params.case_label + " eta=" + fmt(eta);
        if (!(eta > 0.0) || eta >= params.eta0) {
            c.inconclusive = true;
            rep.checks.push_back(c);
            continue;
        }
        double bound = params.lambda1 * std::pow(eta, -params.alpha1) * g_sup;
        if (params.has_branch2()) bound += params.lambda2 * std::pow(eta, params.alpha2) * dg_l2;
        if (params.has_branch3()) bound += params.lambda3 * std::pow(eta, params.alpha3) * dg_sup;
        c.value = ng_sup;
        c.bound = bound;
        c.margin = bound - ng_sup;
        c.pass = c.margin >= 0.0;
        rep.checks.push_back(c);
    }
    return rep;
}

VerificationReport check_operator_identities(const ModelSpec& model, const Field& g) {
    const Tolerances& tol = tolerances();
    const OperatorIdentityErrors err = operator_identities(model, g);
    double sigma_max = 0.0;
    for (int k = 0; k < g.grid().spectrum_size(); ++k)
        sigma_max = std::max(sigma_max, std::abs(model.multiplier(g.grid().wavenumber(k))));
    const double scale = norms(g).l2_norm_squared * std::max(sigma_max, 1.0);

    VerificationReport rep;
    CheckResult commute;
    commute.check = "commute " + model.name();
    commute.value = err.commute_error;
    commute.bound = tol.identity_commute;
    commute.margin = commute.bound - commute.value;
    commute.pass = commute.margin >= 0.0;
    rep.checks.push_back(commute);

    CheckResult orth;
    orth.check = "orthogonality " + model.name();
    orth.value = err.orthogonality_error;
    orth.bound = tol.identity_orth_rel * scale;
    orth.margin = orth.bound - orth.value;
    orth.pass = orth.margin >= 0.0;
    rep.checks.push_back(orth);
    return rep;
}

VerificationReport reconcile(const CriterionReport& criterion, const BreakingEstimate& estimate) {
    const Tolerances& tol = tolerances();
    VerificationReport rep;
    CheckResult c;
    c.check = "t_star within bounds";
    if (!criterion.holds || !criterion.t_lo || !criterion.t_hi) {
        // one-directional theorem: nothing is predicted when the criterion fails
        c.inconclusive = true;
        rep.checks.push_back(c);
        return rep;
    }
    if (!estimate.valid) {
        c.inconclusive = true;
        rep.checks.push_back(c);
        return rep;
    }
    const double lo = *criterion.t_lo * (1.0 - tol.reconcile_slack);
    const double hi = *criterion.t_hi * (1.0 + tol.reconcile_slack);
    c.value = estimate.t_star_est;
    c.bound = hi;
    c.margin = std::min(estimate.t_star_est - lo, hi - estimate.t_star_est);
    c.pass = c.margin >= 0.0;
    rep.checks.push_back(c);
    return rep;
}

VerificationReport kernel_bound_sweep(const KernelSweepConfig& config) {
    const Tolerances& tol = tolerances();
    VerificationReport rep;
    const std::vector<double> xw =
        config.whitham_x.empty() ? log_grid(0.01, 10.0, 25) : config.whitham_x;

    double prev = 0.0;
    for (size_t i = 0; i < xw.size(); ++i) {
        const double x = xw[i];
        double k;
        try {
            k = whitham_kernel(x);
        } catch (const std::exception&) {
            CheckResult c;
            c.check = "whitham kernel x=" + fmt(x);
            c.inconclusive = true;
            rep.checks.push_back(c);
            continue;
        }
        CheckResult c;
        c.check = "whitham bound x=" + fmt(x);
        c.value = std::sqrt(2.0 * M_PI * x) * k;
        c.bound = 1.0 + tol.kernel_bound_slack;
        c.margin = c.bound - c.value;
        c.pass = c.margin >= 0.0 && k > 0.0;
        rep.checks.push_back(c);
        if (i > 0) {
            CheckResult mono;
            mono.check = "whitham decreasing x=" + fmt(x);
            mono.value = k;
            mono.bound = prev;
            mono.margin = prev - k;
            mono.pass = mono.margin > 0.0;
            rep.checks.push_back(mono);
        }
        prev = k;
    }

    const std::vector<double> xb =
        config.bessel_x.empty() ? log_grid(0.01, 8.0, 17) : config.bessel_x;
    for (double s : config.bessel_s) {
        for (double x : xb) {
            CheckResult c;
            c.check = "bessel bound s=" + fmt(s) + " x=" + fmt(x);
            double gs;
            try {
                gs = bessel_kernel(s, x);
            } catch (const std::exception&) {
                c.inconclusive = true;
                rep.checks.push_back(c);
                continue;
            }
            double bound;
            if (s > 1.0) {
                bound = gamma_ratio(s) / 2.0;
            } else if (s == 1.0) {
                if (x > 1.0) continue;  // the s = 1 bound is stated for 0 < |x| <= 1
                bound = bessel_kernel(1.0, 1.0) + std::abs(std::log(x)) / M_PI;
            } else {
                bound = gamma_ratio(s) / std::pow(2.0, s) * std::pow(x, s - 1.0);
            }
            c.value = gs;
            c.bound = bound * (1.0 + tol.kernel_bound_slack);
            c.margin = c.bound - gs;
            c.pass = c.margin >= 0.0 && gs > 0.0;
            rep.checks.push_back(c);
        }
    }

    CheckResult g11;
    g11.check = "bessel G_1(1) < 1/pi";
    g11.value = bessel_kernel(1.0, 1.0);
    g11.bound = 1.0 / M_PI;
    g11.margin = g11.bound - g11.value;
    g11.pass = g11.margin > 0.0;
    rep.checks.push_back(g11);
    return rep;
}

std::vector<Field> random_field_corpus(const GridSpec& grid, int count, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Field> fields;
    fields.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::vector<std::complex<double>> spec(grid.spectrum_size(), 0.0);
        const int kmax = grid.dealias_cutoff() / 2;
        for (int k = 1; k <= kmax; ++k) {
            const double decay = std::exp(-3.0 * k / double(kmax));
            spec[k] = std::complex<double>(gauss(rng), gauss(rng)) * (decay * grid.n / kmax);
        }
        fields.push_back(Field::from_spectrum(grid, std::move(spec)));
    }
    return fields;
}

VerificationReport verify_corpus(unsigned long long seed) {
    const GridSpec grid(40.0, 512);
    const auto corpus = random_field_corpus(grid, 20, seed);
    const std::vector<ModelSpec> models = {
        ModelSpec::burgers(), ModelSpec::fkdv(-0.5), ModelSpec::whitham(),
        ModelSpec::fornberg_whitham(0.8)};

    VerificationReport rep;
    for (const ModelSpec& model : models) {
        const OperatorParams params = operator_params(model);
        const std::vector<double> etas =
            params.l1_route ? std::vector<double>{}
                            : log_grid(1e-2, std::isfinite(params.eta0) ? 0.99 * params.eta0 : 1e2, 9);
        for (const Field& g : corpus) {
            rep.append(check_operator_identities(model, g));
            if (!etas.empty()) rep.append(check_envelope_bound(model, params, g, etas));
        }
    }
    rep.append(kernel_bound_sweep());
    return rep;
}

}  // namespace wavebreak
