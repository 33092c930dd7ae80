#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wavebreak/criteria.hpp"
#include "wavebreak/diagnostics.hpp"
#include "wavebreak/evolution.hpp"

namespace wavebreak {

using Json = nlohmann::ordered_json;

/// Shortest round-trip decimal representation (17 significant digits).
std::string format_double(double v);

Json criterion_to_json(const CriterionReport& r);
Json estimate_to_json(const BreakingEstimate& e, const CriterionReport* criterion,
                      const VerificationReport* reconciliation);
Json verification_to_json(const VerificationReport& rep);

/// Trace CSV columns: t,m,M,z0,z1,z2,z3,tail_ratio.
std::string trace_to_csv(const SimulationTrace& trace);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace wavebreak
