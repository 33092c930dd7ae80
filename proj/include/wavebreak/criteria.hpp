#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wavebreak/field.hpp"
#include "wavebreak/operators.hpp"

namespace wavebreak {

/// Raised when a criterion is asked outside its admissible parameter range
/// or for data it does not apply to. The message names the violated range.
struct CriterionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exponents derived from the envelope parameters:
///   abar2 = a1/(2 a1 + a2),  abar3 = 2 a1/(5 a1 + 3 a3),
///   theta0 = min{(2 a2 - a1)/(4 a1 + 2 a2), (3 a3 - 2 a1)/(5 a1 + 3 a3)}
/// over the branches that are present (absent branches contribute +inf).
struct Exponents {
    double alpha2_bar = 0.0;
    double alpha3_bar = 0.0;
    double theta0 = 1.0;
    bool has_branch2 = false;
    bool has_branch3 = false;
};

Exponents derived_exponents(const OperatorParams& p);

/// Criterion coefficients
///   C2 = 3^{1-abar2} l1^{1-2 abar2} l2^{abar2},
///   C3 = 3^{1-abar3} l1^{(2-5 abar3)/2} (C_GN l3)^{3 abar3 / 2},
/// zero for absent branches.
struct CriterionConstants {
    double c2 = 0.0;
    double c3 = 0.0;
    double c_gn = 0.0;
};

CriterionConstants criterion_constants(const OperatorParams& p, const Exponents& e, double c_gn);

/// Outcome of a wave-breaking criterion evaluated on initial data. rhs is the
/// explicit threshold on -inf u0': the criterion holds iff lhs > rhs. For the
/// general theorem form, whose displayed right side involves the shape ratio
/// gamma_u (itself a function of lhs), rhs is the equivalent resolved
/// threshold, which coincides with the per-model closed forms.
struct CriterionReport {
    double lhs = 0.0;      // -inf u0'
    double rhs = 0.0;      // threshold
    double gamma_u = 0.0;  // -inf u0' / ||u0'||_inf
    double theta = 0.0;
    double theta0 = 0.0;
    bool holds = false;
    std::optional<double> t_lo, t_hi;  // predicted breaking interval (lhs > 0)
    std::string case_label;
    double c_gn = 0.0;
    // secondary evaluations (e.g. the overlapping Fornberg-Whitham cases)
    std::vector<std::pair<std::string, double>> alternatives;
};

/// Predicted breaking interval (1/((1+theta) m0), 1/((1-theta) m0)).
std::pair<double, double> breaking_interval(double m0, double theta);

/// The general criterion for an operator with envelope parameters p:
/// holds iff
///   -inf u0' > max{ 3 l1/(theta gamma eta0^{a1}),
///                   C2/(theta^{1-abar2} gamma^{1-2 abar2}) ||u0''||^{abar2}
///                 + C3/(theta^{1-abar3} gamma^{1-2 abar3}) ||u0'''||^{abar3} }.
/// Requires 0 < theta <= theta0 and a somewhere-negative initial slope.
CriterionReport general_criterion(const Field& u0, double theta, const OperatorParams& p,
                                  double c_gn);

/// Square-root criterion for operators with an integrable-kernel bound:
/// holds iff -inf u0' > sqrt(3 l1/theta) ||u0'||_inf^{1/2}, theta in (0,1).
CriterionReport l1_criterion(const Field& u0, double theta, double lambda1);

/// Fractional KdV criterion, alpha in (-1, -2/5), theta in (0, (-2-5a)/(5+2a)):
/// threshold C(alpha)/sqrt(theta) ||u0'||^{1/6 - a/3} ||u0'''||^{1/3 + a/3}.
CriterionReport fkdv_criterion(const Field& u0, double theta, double alpha, double c_gn);

/// C(alpha) = sqrt(3) ((1+a)/4)^{a/2} (2 C_GN/|a|)^{(1+a)/2}.
double fkdv_coefficient(double alpha, double c_gn);

/// Whitham criterion, theta in (0, 1/8):
/// threshold 3^{3/4} 2^{1/4} C_GN^{1/4} / (pi^{1/4} sqrt(theta))
///           * ||u0'||^{1/3} ||u0'''||^{1/6}.
CriterionReport whitham_criterion(const Field& u0, double theta, double c_gn);

/// beta1/beta2 coefficients of the Fornberg-Whitham criteria, s in (0,1).
double fw_beta1(double s, double c_gn);
double fw_beta2(double s);

/// Fornberg-Whitham criterion. Case by s: (i) s in (2/5,1); (ii) s in (2/3,1)
/// (both are evaluated on the overlap and the smaller threshold reported);
/// (iii) s = 1 with auxiliary tau in (2/3,1); (iv) s > 1 via the square-root
/// criterion with l1 = gamma(s). s <= 2/5 is unsupported.
CriterionReport fw_criterion(const Field& u0, double theta, double s,
                             std::optional<double> tau, double c_gn);

/// Convenience: sweep theta over a log grid in (0, theta0] and return the
/// value minimizing the threshold, together with that threshold.
std::pair<double, double> best_theta(const Field& u0, const OperatorParams& p, double c_gn,
                                     int grid_points = 60);

}  // namespace wavebreak
