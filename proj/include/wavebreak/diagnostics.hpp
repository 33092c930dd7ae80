#pragma once

#include <string>
#include <vector>

#include "wavebreak/criteria.hpp"
#include "wavebreak/evolution.hpp"
#include "wavebreak/field.hpp"
#include "wavebreak/operators.hpp"

namespace wavebreak {

struct CheckResult {
    std::string check;
    double value = 0.0;
    double bound = 0.0;
    double margin = 0.0;  // bound - value (>= 0 passes)
    bool pass = false;
    bool inconclusive = false;  // numerical failure, not a theorem violation
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    bool any_fail() const;  // failed and conclusive
    void append(const VerificationReport& other);
};

/// Central tolerance table. One source of truth for every acceptance-style
/// check; names match the check labels in the reports.
struct Tolerances {
    double kernel_bound_slack = 1e-6;     // pointwise kernel bounds
    double identity_commute = 1e-10;      // sup |(Ng)' - N(g')|
    double identity_orth_rel = 1e-12;     // |int Ng g| / (||g||^2 max|sigma|)
    double reconcile_slack = 0.05;        // widening of [T_lo, T_hi]
    double conservation_drift = 1e-8;     // relative drift of z0
    double energy_identity_rel = 1e-4;    // energy-balance residuals
    double sandwich_slack = 0.05;         // fitted 1/m slope vs -(1 -+ theta)
};

const Tolerances& tolerances();

/// Envelope-bound sweep: for each eta in the grid, compares the measured
/// ||N[g]||_inf against l1 eta^{-a1}||g||_inf + l2 eta^{a2}||g'||_2
/// + l3 eta^{a3}||g'||_inf.
VerificationReport check_envelope_bound(const ModelSpec& model, const OperatorParams& params,
                                        const Field& g, const std::vector<double>& eta_grid);

/// Differentiation-commutation and orthogonality identities for a model on a
/// field, measured against the tolerance table.
VerificationReport check_operator_identities(const ModelSpec& model, const Field& g);

/// Criterion vs simulation: passes iff the estimated breaking time lies in
/// [T_lo * (1-slack), T_hi * (1+slack)]. Skipped (inconclusive) when the
/// criterion does not hold or the estimate is invalid.
VerificationReport reconcile(const CriterionReport& criterion, const BreakingEstimate& estimate);

struct KernelSweepConfig {
    std::vector<double> whitham_x;   // defaults to a log grid in (0.01, 10)
    std::vector<double> bessel_s = {0.3, 0.5, 0.9, 1.0, 1.5, 3.0};
    std::vector<double> bessel_x;    // defaults to a log grid in (0.01, 8)
};

/// Pointwise kernel bounds and monotonicity margins: sqrt(2 pi x) K(x) <= 1,
/// K decreasing; the three Bessel-bound branches; G_1(1) < 1/pi.
VerificationReport kernel_bound_sweep(const KernelSweepConfig& config = {});

/// Random band-limited field corpus for the structural checks (deterministic
/// for a fixed seed).
std::vector<Field> random_field_corpus(const GridSpec& grid, int count, unsigned long long seed);

/// The full verification suite: operator identities and envelope bounds for
/// the standard models on a random corpus, plus the kernel sweeps.
VerificationReport verify_corpus(unsigned long long seed = 12345);

}  // namespace wavebreak
