#pragma once

#include <string>

#include "wavebreak/config.hpp"
#include "wavebreak/criteria.hpp"
#include "wavebreak/evolution.hpp"

namespace wavebreak {

struct CliOptions {
    std::string config_path;
    std::string out_dir = ".";
    int workers = 0;  // 0: use the config key / logical core count
    unsigned long long seed = 12345;
};

// Exit-code contract: 0 pass/inconclusive, 1 theorem-check failure,
// 2 usage/config error.
int cmd_criteria(const CliOptions& opt);
int cmd_simulate(const CliOptions& opt);
int cmd_sweep(const CliOptions& opt);
int cmd_kernels(const CliOptions& opt);
int cmd_verify(const CliOptions& opt);

// Config-to-domain helpers, shared by the commands and exercised directly in
// tests.
ModelSpec model_from_config(const Config& cfg);
GridSpec grid_from_config(const Config& cfg);
SimConfig sim_config_from_config(const Config& cfg);
double resolve_cgn(const Config& cfg);

/// Evaluate the configured criterion route ("auto"/"closed_form" dispatch
/// to the per-model closed form; "general" forces the envelope-based
/// evaluator; "l1" forces the square-root criterion).
CriterionReport evaluate_criterion(const ModelSpec& model, const Field& u0, double theta,
                                   double c_gn, const std::string& route = "auto");

/// Amplitude of the gaussian-slope family for which the initial slope equals
/// `factor` times the criterion threshold (fixed point of a = factor*rhs(a);
/// the threshold is sub-homogeneous in a, so the iteration contracts).
double amplitude_for_margin(const ModelSpec& model, const GridSpec& grid, double width,
                            double theta, double c_gn, double factor,
                            const std::string& route = "auto");

}  // namespace wavebreak
