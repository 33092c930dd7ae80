#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wavebreak/field.hpp"

namespace wavebreak {

/// Rayleigh quotient of the interpolation inequality:
///   R(f) = ||f'||_inf / (||f||_inf^{1/3} ||f''||_L2^{2/3}),
/// invariant under f -> A f(x/lambda). Evaluated spectrally on f's grid.
double rayleigh_quotient(const Field& f);

struct CgnSearchConfig {
    double half_width = 20.0;
    int points = 512;
    int max_iterations = 400;
    int random_seeds = 2;
    unsigned long long seed = 1;
};

struct CgnEstimate {
    double value = 0.0;          // best quotient found: a lower bound on the optimal constant
    std::string maximizer;       // seed family of the best iterate
    bool converged = true;       // false when the iteration budget ran out while still improving
    std::vector<std::pair<std::string, double>> seed_values;  // quotient of each raw seed
};

/// Estimates the optimal interpolation constant by projected gradient ascent
/// on a smoothed quotient, from Gaussian, sech, sech^2 and random
/// band-limited seeds. Seeds are independent; the result is their maximum.
CgnEstimate estimate_cgn(const CgnSearchConfig& config = {});

}  // namespace wavebreak
