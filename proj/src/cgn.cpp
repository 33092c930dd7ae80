#include "wavebreak/cgn.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wavebreak/spectral.hpp"

namespace wavebreak {

namespace {

/// Sup of |f| refined past grid resolution: golden-section search on the
/// trigonometric interpolant around the best sample.
double refined_sup_abs(const Field& f) {
    const auto& v = f.values();
    int j0 = 0;
    for (int j = 1; j < f.grid().n; ++j)
        if (std::abs(v[j]) > std::abs(v[j0])) j0 = j;
    const double dx = f.grid().dx();
    double a = f.grid().x(j0) - dx, b = f.grid().x(j0) + dx;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = std::abs(f.eval(c)), fd = std::abs(f.eval(d));
    for (int it = 0; it < 70; ++it) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = std::abs(f.eval(d));
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = std::abs(f.eval(c));
        }
    }
    return std::max({std::abs(v[j0]), fc, fd});
}

Field band_project(const Field& f, int keep) {
    std::vector<std::complex<double>> spec = f.spectrum();
    for (int k = keep + 1; k < f.grid().spectrum_size(); ++k) spec[k] = 0.0;
    return Field::from_spectrum(f.grid(), std::move(spec));
}

struct Smoothed {
    double log_j;
    std::vector<double> grad;  // d log_j / d f_j
};

// Smoothed objective with p-norm surrogates for the sup norms:
//   log J = (1/p) log A - 1/(3p) log B - (1/3) log C,
//   A = dx sum |f'|^p, B = dx sum |f|^p, C = dx sum (f'')^2.
Smoothed smoothed_objective(const Field& f, int p) {
    const int n = f.grid().n;
    const double dx = f.grid().dx();
    const Field d1 = derivative(f, 1);
    const Field d2 = derivative(f, 2);
    const Field d4 = derivative(d2, 2);

    double A = 0.0, B = 0.0, C = 0.0;
    std::vector<double> ppow(n), qpow(n);
    for (int j = 0; j < n; ++j) {
        ppow[j] = std::pow(std::abs(d1.values()[j]), p - 2) * d1.values()[j];
        qpow[j] = std::pow(std::abs(f.values()[j]), p - 2) * f.values()[j];
        A += ppow[j] * d1.values()[j];
        B += qpow[j] * f.values()[j];
        C += d2.values()[j] * d2.values()[j];
    }
    A *= dx;
    B *= dx;
    C *= dx;

    const Field dppow = derivative(Field::from_values(f.grid(), ppow), 1);
    Smoothed s;
    s.log_j = std::log(A) / p - std::log(B) / (3.0 * p) - std::log(C) / 3.0;
    s.grad.resize(n);
    for (int j = 0; j < n; ++j) {
        s.grad[j] = -dx * dppow.values()[j] / A - dx * qpow[j] / (3.0 * B) -
                    2.0 * dx * d4.values()[j] / (3.0 * C);
    }
    return s;
}

}  // namespace

double rayleigh_quotient(const Field& f) {
    const double sup_f = refined_sup_abs(f);
    const double sup_df = refined_sup_abs(derivative(f, 1));
    const double h2 = l2_norm(derivative(f, 2));
    return sup_df / (std::cbrt(sup_f) * std::pow(h2, 2.0 / 3.0));
}

CgnEstimate estimate_cgn(const CgnSearchConfig& config) {
    const GridSpec grid(config.half_width, config.points);
    std::vector<std::pair<std::string, Field>> seeds;
    seeds.emplace_back("gaussian", Field::from_function(grid, [](double x) { return std::exp(-x * x); }));
    seeds.emplace_back("sech", Field::from_function(grid, [](double x) { return 1.0 / std::cosh(x); }));
    seeds.emplace_back("sech2", Field::from_function(grid, [](double x) {
        const double c = 1.0 / std::cosh(x);
        return c * c;
    }));
    // odd cubic ramp meeting its plateau with two vanishing derivatives, then
    // smoothly tapered; this shape is near-extremal for the quotient
    // (quotient (9/8)^{1/3} before the taper)
    seeds.emplace_back("ramp", Field::from_function(grid, [](double x) {
        const double a = std::abs(x);
        const double ramp = a < 3.0 ? a - a * a / 3.0 + a * a * a / 27.0 : 1.0;
        return std::copysign(ramp, x) * std::exp(-std::pow(x / 12.0, 8.0));
    }));
    std::mt19937_64 rng(config.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int r = 0; r < config.random_seeds; ++r) {
        std::vector<std::complex<double>> spec(grid.spectrum_size(), 0.0);
        for (int k = 1; k <= 12; ++k)
            spec[k] = std::complex<double>(gauss(rng), gauss(rng)) * std::exp(-k / 6.0) * double(grid.n);
        seeds.emplace_back("random" + std::to_string(r), Field::from_spectrum(grid, std::move(spec)));
    }

    CgnEstimate est;
    const int band = grid.n / 4;
    for (auto& [name, seed] : seeds) {
        Field f = band_project(seed, band);
        double r0 = rayleigh_quotient(f);
        est.seed_values.emplace_back(name, r0);
        if (r0 > est.value) {
            est.value = r0;
            est.maximizer = name;
        }

        double h = 0.05;
        Smoothed cur = smoothed_objective(f, 32);
        int it = 0;
        for (; it < config.max_iterations; ++it) {
            double gsup = 0.0;
            for (double gj : cur.grad) gsup = std::max(gsup, std::abs(gj));
            if (gsup == 0.0) break;
            bool accepted = false;
            for (int tries = 0; tries < 40; ++tries) {
                std::vector<double> vals(grid.n);
                for (int j = 0; j < grid.n; ++j)
                    vals[j] = f.values()[j] + h / gsup * cur.grad[j];
                Field cand = band_project(Field::from_values(grid, vals), band);
                Smoothed next = smoothed_objective(cand, 32);
                if (next.log_j > cur.log_j) {
                    f = std::move(cand);
                    cur = std::move(next);
                    h *= 1.3;
                    accepted = true;
                    break;
                }
                h *= 0.5;
            }
            const double r = rayleigh_quotient(f);
            if (r > est.value) {
                est.value = r;
                est.maximizer = name;
            }
            if (!accepted || h < 1e-14) break;
        }
        if (it == config.max_iterations) est.converged = false;
    }
    return est;
}

}  // namespace wavebreak
