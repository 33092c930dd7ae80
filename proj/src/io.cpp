#include "wavebreak/io.hpp"

#include <cstdio>
#include <fstream>

namespace wavebreak {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Json criterion_to_json(const CriterionReport& r) {
    Json j;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["gamma_u"] = r.gamma_u;
    j["theta"] = r.theta;
    j["theta0"] = r.theta0;
    j["holds"] = r.holds;
    j["t_lo"] = r.t_lo ? Json(*r.t_lo) : Json(nullptr);
    j["t_hi"] = r.t_hi ? Json(*r.t_hi) : Json(nullptr);
    j["case_label"] = r.case_label;
    j["c_gn"] = r.c_gn;
    if (!r.alternatives.empty()) {
        Json alts = Json::array();
        for (const auto& [label, rhs] : r.alternatives) alts.push_back({{"case_label", label}, {"rhs", rhs}});
        j["alternatives"] = alts;
    }
    return j;
}

Json estimate_to_json(const BreakingEstimate& e, const CriterionReport* criterion,
                      const VerificationReport* reconciliation) {
    Json j;
    j["t_star_est"] = e.valid || e.t_star_est > 0.0 ? Json(e.t_star_est) : Json(nullptr);
    j["stop_reason"] = to_string(e.stop_reason);
    j["fit_slope"] = e.fit_slope;
    j["fit_quality"] = e.fit_quality;
    j["valid"] = e.valid;
    if (!e.note.empty()) j["note"] = e.note;
    j["t_lo"] = criterion && criterion->t_lo ? Json(*criterion->t_lo) : Json(nullptr);
    j["t_hi"] = criterion && criterion->t_hi ? Json(*criterion->t_hi) : Json(nullptr);
    Json within = nullptr;
    if (reconciliation && !reconciliation->checks.empty()) {
        const CheckResult& c = reconciliation->checks.front();
        if (!c.inconclusive) within = c.pass;
    }
    j["within_bounds"] = within;
    return j;
}

Json verification_to_json(const VerificationReport& rep) {
    Json arr = Json::array();
    for (const CheckResult& c : rep.checks) {
        Json j;
        j["check"] = c.check;
        j["value"] = c.value;
        j["bound"] = c.bound;
        j["margin"] = c.margin;
        j["pass"] = c.pass;
        j["inconclusive"] = c.inconclusive;
        arr.push_back(j);
    }
    return arr;
}

std::string trace_to_csv(const SimulationTrace& trace) {
    std::string out = "t,m,M,z0,z1,z2,z3,tail_ratio\n";
    for (const TraceRow& r : trace.rows) {
        out += format_double(r.t);
        for (double v : {r.m, r.M, r.z0, r.z1, r.z2, r.z3, r.tail_ratio}) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace wavebreak
