#include "wavebreak/special.hpp"

#include <cmath>
#include <stdexcept>

namespace wavebreak {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double x) {
    // valid for x >= 0.5
    double a = kLanczos[0];
    const double t = x + kLanczosG - 0.5;
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i - 1.0);
    return std::sqrt(2.0 * M_PI) * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

}  // namespace

double gamma_fn(double x) {
    if (x == 0.0 || (x < 0.0 && x == std::floor(x)))
        throw std::domain_error("gamma_fn: pole at nonpositive integer");
    if (x < 0.5) return M_PI / (std::sin(M_PI * x) * lanczos_gamma(1.0 - x));
    return lanczos_gamma(x);
}

double gamma_ratio(double s) {
    if (s <= 0.0) throw std::domain_error("gamma_ratio: requires s > 0");
    if (s == 1.0) throw std::domain_error("gamma_ratio: pole at s = 1");
    return gamma_fn(std::abs(s - 1.0) / 2.0) / (std::sqrt(M_PI) * gamma_fn(s / 2.0));
}

}  // namespace wavebreak
