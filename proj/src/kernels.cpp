#include "wavebreak/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "wavebreak/quadrature.hpp"
#include "wavebreak/special.hpp"
#include "wavebreak/spectral.hpp"

namespace wavebreak {

double whitham_kernel(double x) {
    if (!(x > 0.0)) throw std::domain_error("whitham_kernel: requires x > 0");
    // substitute xi = tau^2: integrand 2 cos(x tau^2) (1 - sqrt(tanh tau^2)),
    // smooth at 0 and decaying like e^{-2 tau^2}
    auto f = [x](double tau) {
        const double xi = tau * tau;
        return 2.0 * std::cos(x * xi) * (1.0 - std::sqrt(std::tanh(xi)));
    };
    const double correction = integrate_or_throw(f, 0.0, 6.5, 1e-11, 1e-11, 60000);
    return 1.0 / std::sqrt(2.0 * M_PI * x) - correction / M_PI;
}

double bessel_kernel(double s, double x) {
    if (!(s > 0.0)) throw std::domain_error("bessel_kernel: requires s > 0");
    const double b = x * x / 4.0;
    if (b == 0.0 && s <= 1.0)
        throw std::domain_error("bessel_kernel: diverges at x = 0 for s <= 1");
    const double a = (s - 1.0) / 2.0;

    // integrand after t = e^tau: h(tau) = exp(a tau - b e^{-tau} - e^{tau});
    // peak where e^{2 tau} - a e^{tau} - b = 0
    auto log_h = [a, b](double tau) { return a * tau - b * std::exp(-tau) - std::exp(tau); };
    const double tau_peak = std::log(0.5 * (a + std::sqrt(a * a + 4.0 * b)) + 1e-300);
    const double log_peak = log_h(tau_peak);

    // expand to where the integrand is negligible relative to the peak
    double lo = tau_peak, hi = tau_peak;
    while (log_h(lo) > log_peak - 45.0) lo -= 0.5;
    while (log_h(hi) > log_peak - 45.0) hi += 0.5;

    // trapezoid refinement; double-exponential decay makes this spectrally accurate
    auto trapezoid = [&](int m) {
        const double h = (hi - lo) / m;
        double acc = 0.5 * (std::exp(log_h(lo) - log_peak) + std::exp(log_h(hi) - log_peak));
        for (int i = 1; i < m; ++i) acc += std::exp(log_h(lo + i * h) - log_peak);
        return acc * h;
    };
    int m = 64;
    double prev = trapezoid(m), curr = trapezoid(2 * m);
    while (std::abs(curr - prev) > 1e-12 * std::abs(curr) && m < 65536) {
        m *= 2;
        prev = curr;
        curr = trapezoid(2 * m);
    }
    return curr * std::exp(log_peak) / (2.0 * std::sqrt(M_PI) * gamma_fn(s / 2.0));
}

double fractional_normalization(double alpha) {
    if (!(alpha > -1.0 && alpha < 0.0))
        throw std::domain_error("fractional_normalization: requires alpha in (-1, 0)");
    // int_0^inf sin(t) t^{mu-1} dt = Gamma(mu) sin(pi mu / 2), mu = -1-alpha in (-1, 0)
    const double mu = -1.0 - alpha;
    const double s = gamma_fn(mu) * std::sin(M_PI * mu / 2.0);
    return 1.0 / (2.0 * s);
}

double fractional_pv(const Field& g, double x, double alpha, double eta) {
    if (!(alpha > -1.0 && alpha < 0.0))
        throw std::domain_error("fractional_pv: requires alpha in (-1, 0)");
    const double L = g.grid().half_width;
    if (!(eta > 0.0 && eta < L)) throw std::domain_error("fractional_pv: requires 0 < eta < L");

    const Field gp = derivative(g, 1);
    const double gpx = gp.eval(x);
    auto odd_diff = [&](double y) { return g.eval(x + y) - g.eval(x - y); };

    // inner part: subtract the 2 y g'(x) Taylor term and add it back in closed form
    auto inner = [&](double y) {
        if (y == 0.0) return 0.0;
        return (odd_diff(y) - 2.0 * y * gpx) * std::pow(y, -2.0 - alpha);
    };
    const double inner_reg = integrate_or_throw(inner, 0.0, eta, 1e-11, 1e-9, 40000);
    const double inner_taylor = 2.0 * gpx * std::pow(eta, -alpha) / (-alpha);

    auto outer = [&](double y) { return odd_diff(y) * std::pow(y, -2.0 - alpha); };
    const double outer_part = integrate_or_throw(outer, eta, L, 1e-11, 1e-9, 40000);

    // periodic images of the kernel: the grid field is 2L-periodic, so the
    // multiplier route realizes the periodized kernel
    auto image_weight = [&](double y) {
        double w = 0.0;
        for (int j = 1; j <= 64; ++j) {
            const double d = 2.0 * L * j;
            w += std::pow(d + y, -2.0 - alpha) - std::pow(d - y, -2.0 - alpha);
        }
        return w;
    };
    auto image = [&](double y) { return odd_diff(y) * image_weight(y); };
    const double image_part = integrate_or_throw(image, 0.0, L, 1e-11, 1e-9, 40000);

    return fractional_normalization(alpha) * (inner_reg + inner_taylor + outer_part + image_part);
}

}  // namespace wavebreak
