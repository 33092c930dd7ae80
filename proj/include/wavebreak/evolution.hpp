#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wavebreak/field.hpp"
#include "wavebreak/operators.hpp"

namespace wavebreak {

/// Two-parameter slope family u0(x) = -a x e^{-x^2/(2 w^2)}; its steepest
/// slope is -a at x = 0 and its shape ratio gamma is exactly 1.
struct GaussianSlopeData {
    double amplitude = 1.0;
    double width = 1.0;
};

/// u0(x) = -a sin(x); the classical breaking benchmark on [-pi, pi).
struct SineData {
    double amplitude = 1.0;
};

struct TabulatedData {
    std::vector<double> values;  // one sample per grid point
};

using InitialData = std::variant<GaussianSlopeData, SineData, TabulatedData>;

Field make_initial_data(const GridSpec& grid, const InitialData& data);

struct SimConfig {
    ModelSpec model = ModelSpec::burgers();
    GridSpec grid{40.0, 1024};
    InitialData data = GaussianSlopeData{};
    double cfl = 0.4;               // dt <= cfl * dx / ||u||_inf
    double m_cap_factor = 50.0;     // stop once m >= m_cap_factor * m(0)
    double tail_stop = 1e-4;        // resolution-loss threshold on the tail ratio
    int fit_window = 20;            // samples for the 1/m extrapolation
    double max_time = 10.0;
    int max_refinements = 2;        // automatic grid doublings on resolution loss
    bool integrating_factor = true;
    double boundary_tol = 1e-10;    // required data decay at the box edges
};

struct TraceRow {
    double t;
    double m;   // -inf u_x
    double M;   // ||u_x||_inf
    double z0;  // ||u||_L2^2
    double z1;  // ||u_x||_L2^2
    double z2;  // ||u_xx||_L2^2
    double z3;  // ||u_xxx||_L2^2
    double tail_ratio;
    // cubic integrals entering the energy identities (diagnostics only,
    // not part of the trace CSV contract)
    double i1;  // int u_x^3
    double i2;  // int u_x u_xx^2
    double i3;  // int u_x u_xxx^2
};

struct SimulationTrace {
    std::vector<TraceRow> rows;
};

enum class StopReason { m_cap, resolution_loss, max_time };

std::string to_string(StopReason r);

struct BreakingEstimate {
    double t_star_est = 0.0;
    StopReason stop_reason = StopReason::max_time;
    double fit_slope = 0.0;
    double fit_quality = 0.0;  // coefficient of determination of the 1/m fit
    bool valid = false;
    std::string note;
};

struct CharacteristicSample {
    double t;
    double xi;  // position
    double v;   // -u_x along the curve
};

struct CharacteristicTrack {
    double beta = 0.0;  // seed position
    bool frozen = false;
    std::vector<CharacteristicSample> samples;
};

struct RunResult {
    SimulationTrace trace;
    BreakingEstimate estimate;
    GridSpec grid_used{40.0, 1024};
    int refinements = 0;
    std::vector<CharacteristicTrack> characteristics;
};

/// Right side of u_t = -(u^2/2)_x + N[u]: the product is formed in physical
/// space after 2/3 truncation, then truncated again.
Field rhs(const Field& u, const ModelSpec& model);

/// One classical RK4 step; with integrating_factor the linear multiplier part
/// is advanced by its exact exponential (exact for pure multiplier flows).
Field step(const Field& u, double dt, const ModelSpec& model, bool integrating_factor = true);

/// Integrate until m reaches m_cap_factor * m(0), the spectral tail passes
/// tail_stop (retried on a doubled grid up to max_refinements), or max_time.
/// The blow-up time estimate comes from a linear fit to 1/m over the final
/// fit_window samples. Optional characteristic seeds are advanced alongside.
RunResult run(const SimConfig& config, const std::vector<double>& characteristic_seeds = {});

/// Least-squares line through (t, 1/m) over the last `window` rows; the root
/// is the blow-up estimate. m must be increasing over the window.
BreakingEstimate estimate_tstar(const SimulationTrace& trace, int window);

}  // namespace wavebreak
