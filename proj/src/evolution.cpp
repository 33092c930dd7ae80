#include "wavebreak/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wavebreak/fft.hpp"
#include "wavebreak/spectral.hpp"

namespace wavebreak {

namespace {

using Spectrum = std::vector<std::complex<double>>;

/// Shared per-run state: cached multiplier and scratch-free spectral stepping.
struct Workspace {
    GridSpec grid;
    Spectrum sigma;  // source-operator multiplier per r2c bin

    Workspace(const GridSpec& g, const ModelSpec& model) : grid(g), sigma(g.spectrum_size()) {
        for (int k = 0; k < g.spectrum_size(); ++k) sigma[k] = model.multiplier(g.wavenumber(k));
        sigma[g.n / 2] = 0.0;  // keep real fields real
    }

    Spectrum dealiased(Spectrum spec) const {
        for (int k = grid.dealias_cutoff() + 1; k < grid.spectrum_size(); ++k) spec[k] = 0.0;
        return spec;
    }

    /// -( (u~)^2 / 2 )_x with u~ the 2/3-truncated field, product in physical space.
    Spectrum nonlinear(const Spectrum& spec) const {
        Spectrum trunc = dealiased(spec);
        std::vector<double> w(grid.n);
        inverse_c2r(grid, trunc.data(), w.data());
        for (double& v : w) v = v * v;
        Spectrum prod(grid.spectrum_size());
        forward_r2c(grid, w.data(), prod.data());
        prod = dealiased(std::move(prod));
        for (int k = 0; k < grid.spectrum_size(); ++k)
            prod[k] *= std::complex<double>(0.0, -0.5 * grid.wavenumber(k));
        prod[grid.n / 2] = 0.0;
        return prod;
    }

    Spectrum advance(const Spectrum& spec, double dt, bool integrating_factor) const {
        const int ns = grid.spectrum_size();
        Spectrum out(ns);
        if (integrating_factor) {
            // classical RK4 in integrating-factor variables; exact when the
            // nonlinearity vanishes
            Spectrum e_half(ns), e_full(ns);
            for (int k = 0; k < ns; ++k) {
                e_half[k] = std::exp(sigma[k] * (0.5 * dt));
                e_full[k] = e_half[k] * e_half[k];
            }
            Spectrum a = nonlinear(spec);
            Spectrum stage(ns);
            for (int k = 0; k < ns; ++k) stage[k] = e_half[k] * (spec[k] + 0.5 * dt * a[k]);
            Spectrum b = nonlinear(stage);
            for (int k = 0; k < ns; ++k) stage[k] = e_half[k] * spec[k] + 0.5 * dt * b[k];
            Spectrum c = nonlinear(stage);
            for (int k = 0; k < ns; ++k) stage[k] = e_full[k] * spec[k] + dt * e_half[k] * c[k];
            Spectrum d = nonlinear(stage);
            for (int k = 0; k < ns; ++k)
                out[k] = e_full[k] * spec[k] +
                         dt / 6.0 *
                             (e_full[k] * a[k] + 2.0 * e_half[k] * (b[k] + c[k]) + d[k]);
        } else {
            auto f = [&](const Spectrum& v) {
                Spectrum r = nonlinear(v);
                for (int k = 0; k < ns; ++k) r[k] += sigma[k] * v[k];
                return r;
            };
            Spectrum k1 = f(spec), stage(ns);
            for (int k = 0; k < ns; ++k) stage[k] = spec[k] + 0.5 * dt * k1[k];
            Spectrum k2 = f(stage);
            for (int k = 0; k < ns; ++k) stage[k] = spec[k] + 0.5 * dt * k2[k];
            Spectrum k3 = f(stage);
            for (int k = 0; k < ns; ++k) stage[k] = spec[k] + dt * k3[k];
            Spectrum k4 = f(stage);
            for (int k = 0; k < ns; ++k)
                out[k] = spec[k] + dt / 6.0 * (k1[k] + 2.0 * (k2[k] + k3[k]) + k4[k]);
        }
        return out;
    }
};

TraceRow measure(const Field& u, double t) {
    const Field d1 = derivative(u, 1);
    const Field d2 = derivative(u, 2);
    const Field d3 = derivative(u, 3);
    const FieldNorms n0 = norms(u), n1 = norms(d1), n2 = norms(d2), n3 = norms(d3);
    TraceRow row;
    row.t = t;
    row.m = -n1.inf_value;
    row.M = n1.sup_norm;
    row.z0 = n0.l2_norm_squared;
    row.z1 = n1.l2_norm_squared;
    row.z2 = n2.l2_norm_squared;
    row.z3 = n3.l2_norm_squared;
    row.tail_ratio = tail_ratio(u);
    double i1 = 0.0, i2 = 0.0, i3 = 0.0;
    for (int j = 0; j < u.grid().n; ++j) {
        const double ux = d1.values()[j];
        i1 += ux * ux * ux;
        i2 += ux * d2.values()[j] * d2.values()[j];
        i3 += ux * d3.values()[j] * d3.values()[j];
    }
    row.i1 = i1 * u.grid().dx();
    row.i2 = i2 * u.grid().dx();
    row.i3 = i3 * u.grid().dx();
    return row;
}

struct CharState {
    double xi, v;
    bool frozen;
};

/// RK4 for (xi' = u(t, xi), v' = v^2 - N[u_x](t, xi)) over one field step,
/// with the fields interpolated linearly in time between the endpoints.
void advance_characteristics(std::vector<CharState>& states, double t0, double dt,
                             const Field& u_old, const Field& u_new, const Field& nx_old,
                             const Field& nx_new, double trust_radius) {
    (void)t0;
    auto u_at = [&](double lam, double x) {
        return (1.0 - lam) * u_old.eval(x) + lam * u_new.eval(x);
    };
    auto nx_at = [&](double lam, double x) {
        return (1.0 - lam) * nx_old.eval(x) + lam * nx_new.eval(x);
    };
    for (CharState& cs : states) {
        if (cs.frozen) continue;
        const double k1x = u_at(0.0, cs.xi);
        const double k1v = cs.v * cs.v - nx_at(0.0, cs.xi);
        const double k2x = u_at(0.5, cs.xi + 0.5 * dt * k1x);
        const double k2v = std::pow(cs.v + 0.5 * dt * k1v, 2) - nx_at(0.5, cs.xi + 0.5 * dt * k1x);
        const double k3x = u_at(0.5, cs.xi + 0.5 * dt * k2x);
        const double k3v = std::pow(cs.v + 0.5 * dt * k2v, 2) - nx_at(0.5, cs.xi + 0.5 * dt * k2x);
        const double k4x = u_at(1.0, cs.xi + dt * k3x);
        const double k4v = std::pow(cs.v + dt * k3v, 2) - nx_at(1.0, cs.xi + dt * k3x);
        cs.xi += dt / 6.0 * (k1x + 2.0 * (k2x + k3x) + k4x);
        cs.v += dt / 6.0 * (k1v + 2.0 * (k2v + k3v) + k4v);
        if (std::abs(cs.xi) > trust_radius) cs.frozen = true;
    }
}

}  // namespace

Field make_initial_data(const GridSpec& grid, const InitialData& data) {
    if (const auto* g = std::get_if<GaussianSlopeData>(&data)) {
        const double a = g->amplitude, w = g->width;
        return Field::from_function(grid, [a, w](double x) {
            return -a * x * std::exp(-x * x / (2.0 * w * w));
        });
    }
    if (const auto* s = std::get_if<SineData>(&data)) {
        const double a = s->amplitude;
        return Field::from_function(grid, [a](double x) { return -a * std::sin(x); });
    }
    const auto& tab = std::get<TabulatedData>(data);
    return Field::from_values(grid, tab.values);
}

std::string to_string(StopReason r) {
    switch (r) {
        case StopReason::m_cap: return "m_cap";
        case StopReason::resolution_loss: return "resolution_loss";
        case StopReason::max_time: return "max_time";
    }
    return "?";
}

Field rhs(const Field& u, const ModelSpec& model) {
    Workspace ws(u.grid(), model);
    Spectrum r = ws.nonlinear(u.spectrum());
    for (int k = 0; k < u.grid().spectrum_size(); ++k) r[k] += ws.sigma[k] * u.spectrum()[k];
    return Field::from_spectrum(u.grid(), std::move(r));
}

Field step(const Field& u, double dt, const ModelSpec& model, bool integrating_factor) {
    Workspace ws(u.grid(), model);
    return Field::from_spectrum(u.grid(), ws.advance(u.spectrum(), dt, integrating_factor));
}

BreakingEstimate estimate_tstar(const SimulationTrace& trace, int window) {
    BreakingEstimate est;
    const auto& rows = trace.rows;
    if (window < 2 || static_cast<int>(rows.size()) < window) {
        est.note = "not enough samples for the extrapolation window";
        return est;
    }
    const size_t first = rows.size() - window;
    for (size_t i = first + 1; i < rows.size(); ++i) {
        if (!(rows[i].m > rows[i - 1].m)) {
            est.note = "m is not increasing over the fit window";
            return est;
        }
    }
    if (!(rows[first].m > 0.0)) {
        est.note = "m is not positive over the fit window";
        return est;
    }
    double st = 0.0, sy = 0.0;
    for (size_t i = first; i < rows.size(); ++i) {
        st += rows[i].t;
        sy += 1.0 / rows[i].m;
    }
    const double tbar = st / window, ybar = sy / window;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (size_t i = first; i < rows.size(); ++i) {
        const double dt = rows[i].t - tbar, dy = 1.0 / rows[i].m - ybar;
        sxx += dt * dt;
        sxy += dt * dy;
        syy += dy * dy;
    }
    const double slope = sxy / sxx;
    if (!(slope < 0.0)) {
        est.note = "1/m is not decreasing over the fit window";
        return est;
    }
    const double intercept = ybar - slope * tbar;
    double ss_res = 0.0;
    for (size_t i = first; i < rows.size(); ++i) {
        const double r = 1.0 / rows[i].m - (intercept + slope * rows[i].t);
        ss_res += r * r;
    }
    est.t_star_est = -intercept / slope;
    est.fit_slope = slope;
    est.fit_quality = syy > 0.0 ? 1.0 - ss_res / syy : 0.0;
    est.valid = true;
    return est;
}

RunResult run(const SimConfig& config, const std::vector<double>& characteristic_seeds) {
    if (!(config.cfl > 0.0 && config.cfl < 1.0))
        throw std::invalid_argument("run: cfl must lie in (0, 1)");
    if (!(config.m_cap_factor > 1.0))
        throw std::invalid_argument("run: m_cap_factor must exceed 1");
    if (config.fit_window < 5) throw std::invalid_argument("run: fit_window must be at least 5");
    GridSpec grid = config.grid;
    for (int attempt = 0;; ++attempt) {
        const Field u0 = make_initial_data(grid, config.data);
        if (std::abs(u0.values()[0]) > config.boundary_tol)
            throw std::invalid_argument("run: initial data does not decay at the box edge");
        if (tail_ratio(u0) > config.tail_stop) {
            if (attempt < config.max_refinements) {
                grid = GridSpec(grid.half_width, grid.n * 2);
                continue;
            }
            throw std::invalid_argument("run: initial data unresolved at the maximum grid size");
        }

        Workspace ws(grid, config.model);
        Spectrum spec = u0.spectrum();
        Field u = u0;

        RunResult result;
        result.grid_used = grid;
        result.refinements = attempt;
        for (double beta : characteristic_seeds) {
            CharacteristicTrack tr;
            tr.beta = beta;
            result.characteristics.push_back(tr);
        }
        std::vector<CharState> cstates;
        const Field d1_0 = derivative(u0, 1);
        for (double beta : characteristic_seeds) cstates.push_back({beta, -d1_0.eval(beta), false});

        const double trust_radius = 0.9 * grid.half_width;
        double t = 0.0;
        bool resolution_lost = false;
        TraceRow row = measure(u, t);
        const double m0 = row.m;
        result.trace.rows.push_back(row);
        for (size_t s = 0; s < cstates.size(); ++s)
            result.characteristics[s].samples.push_back({t, cstates[s].xi, cstates[s].v});

        while (true) {
            if (m0 > 0.0 && row.m >= config.m_cap_factor * m0) {
                result.estimate = estimate_tstar(result.trace, config.fit_window);
                result.estimate.stop_reason = StopReason::m_cap;
                break;
            }
            if (row.tail_ratio > config.tail_stop) {
                resolution_lost = true;
                break;
            }
            if (t >= config.max_time) {
                result.estimate = estimate_tstar(result.trace, config.fit_window);
                result.estimate.stop_reason = StopReason::max_time;
                result.estimate.valid = false;
                if (result.estimate.note.empty()) result.estimate.note = "max_time reached before breaking";
                break;
            }

            const FieldNorms nu = norms(u);
            double dt = config.cfl * grid.dx() / std::max(nu.sup_norm, 1e-12);
            // keep the Riccati growth resolved and the RK4 energy drift (which
            // scales like (dt*m)^6 per step) inside the conservation budget
            if (row.m > 0.0) dt = std::min(dt, 0.04 / row.m);
            dt = std::min(dt, config.max_time - t);

            Spectrum next = ws.advance(spec, dt, config.integrating_factor);
            Field u_next = Field::from_spectrum(grid, next);
            if (!cstates.empty()) {
                const Field nx_old = apply_operator(config.model, derivative(u, 1));
                const Field nx_new = apply_operator(config.model, derivative(u_next, 1));
                advance_characteristics(cstates, t, dt, u, u_next, nx_old, nx_new, trust_radius);
            }
            spec = std::move(next);
            u = std::move(u_next);
            t += dt;
            row = measure(u, t);
            result.trace.rows.push_back(row);
            for (size_t s = 0; s < cstates.size(); ++s) {
                result.characteristics[s].samples.push_back({t, cstates[s].xi, cstates[s].v});
                result.characteristics[s].frozen = cstates[s].frozen;
            }
        }

        if (resolution_lost) {
            if (attempt < config.max_refinements) {
                grid = GridSpec(grid.half_width, grid.n * 2);
                continue;  // retry the whole run on the finer grid
            }
            result.estimate = estimate_tstar(result.trace, config.fit_window);
            result.estimate.stop_reason = StopReason::resolution_loss;
            result.estimate.valid = false;
            result.estimate.note = "resolution lost at the grid-size ceiling";
        }
        return result;
    }
}

}  // namespace wavebreak
