#include "wavebreak/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wavebreak/special.hpp"
#include "wavebreak/spectral.hpp"

namespace wavebreak {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct DataNorms {
    double lhs;      // -inf u0'
    double mprime;   // ||u0'||_inf
    double gamma_u;  // lhs / mprime
    double norm2;    // ||u0''||_L2
    double norm3;    // ||u0'''||_L2
};

DataNorms data_norms(const Field& u0) {
    const Field d1 = derivative(u0, 1);
    const FieldNorms n1 = norms(d1);
    const double lhs = -n1.inf_value;
    if (!(lhs > 0.0))
        throw CriterionError("criterion not applicable: initial slope is nowhere negative");
    DataNorms d;
    d.lhs = lhs;
    d.mprime = n1.sup_norm;
    d.gamma_u = lhs / n1.sup_norm;
    d.norm2 = l2_norm(derivative(u0, 2));
    d.norm3 = l2_norm(derivative(u0, 3));
    return d;
}

void require_theta(double theta, double theta0, const char* what) {
    if (!(theta > 0.0) || theta > theta0) {
        std::ostringstream os;
        os << what << ": theta must lie in (0, " << theta0 << "], got " << theta;
        throw CriterionError(os.str());
    }
}

CriterionReport make_report(const DataNorms& d, double theta, double theta0, double rhs,
                            const std::string& label, double c_gn) {
    CriterionReport r;
    r.lhs = d.lhs;
    r.rhs = rhs;
    r.gamma_u = d.gamma_u;
    r.theta = theta;
    r.theta0 = theta0;
    r.holds = d.lhs > rhs;
    auto [lo, hi] = breaking_interval(d.lhs, theta);
    r.t_lo = lo;
    r.t_hi = hi;
    r.case_label = label;
    r.c_gn = c_gn;
    return r;
}

/// Right side of the displayed criterion as a function of a hypothetical
/// slope scale r (entering through gamma = r / mprime). Decreasing in r.
double rhs_at(const OperatorParams& p, const Exponents& e, const CriterionConstants& c,
              const DataNorms& d, double theta, double r) {
    const double gamma = r / d.mprime;
    double branch1 = 0.0;
    if (p.lambda1 > 0.0 && std::isfinite(p.eta0))
        branch1 = 3.0 * p.lambda1 / (theta * gamma * std::pow(p.eta0, p.alpha1));
    double branch2 = 0.0;
    if (c.c2 > 0.0)
        branch2 = c.c2 / (std::pow(theta, 1.0 - e.alpha2_bar) * std::pow(gamma, 1.0 - 2.0 * e.alpha2_bar)) *
                  std::pow(d.norm2, e.alpha2_bar);
    double branch3 = 0.0;
    if (c.c3 > 0.0)
        branch3 = c.c3 / (std::pow(theta, 1.0 - e.alpha3_bar) * std::pow(gamma, 1.0 - 2.0 * e.alpha3_bar)) *
                  std::pow(d.norm3, e.alpha3_bar);
    return std::max(branch1, branch2 + branch3);
}

/// Solves r = rhs_at(r). The right side is strictly decreasing in r, so the
/// fixed point is unique; bisection in log r converges to roundoff.
double resolved_threshold(const OperatorParams& p, const Exponents& e, const CriterionConstants& c,
                          const DataNorms& d, double theta) {
    if (rhs_at(p, e, c, d, theta, 1.0) == 0.0) return 0.0;
    double lo = 1.0, hi = 1.0;
    while (rhs_at(p, e, c, d, theta, lo) <= lo) lo *= 0.5;
    while (rhs_at(p, e, c, d, theta, hi) >= hi) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = std::sqrt(lo * hi);
        if (rhs_at(p, e, c, d, theta, mid) > mid)
            lo = mid;
        else
            hi = mid;
    }
    return std::sqrt(lo * hi);
}

}  // namespace

Exponents derived_exponents(const OperatorParams& p) {
    Exponents e;
    e.has_branch2 = p.has_branch2();
    e.has_branch3 = p.has_branch3();
    double theta0 = kInf;
    if (e.has_branch2) {
        e.alpha2_bar = p.alpha1 / (2.0 * p.alpha1 + p.alpha2);
        theta0 = std::min(theta0, (2.0 * p.alpha2 - p.alpha1) / (4.0 * p.alpha1 + 2.0 * p.alpha2));
    }
    if (e.has_branch3) {
        e.alpha3_bar = 2.0 * p.alpha1 / (5.0 * p.alpha1 + 3.0 * p.alpha3);
        theta0 = std::min(theta0, (3.0 * p.alpha3 - 2.0 * p.alpha1) / (5.0 * p.alpha1 + 3.0 * p.alpha3));
    }
    // no dispersive branch: the square-root route applies, any theta in (0,1)
    e.theta0 = std::isfinite(theta0) ? theta0 : 1.0;
    return e;
}

CriterionConstants criterion_constants(const OperatorParams& p, const Exponents& e, double c_gn) {
    if (!(c_gn > 0.0)) throw CriterionError("criterion_constants: requires c_gn > 0");
    CriterionConstants c;
    c.c_gn = c_gn;
    if (e.has_branch2)
        c.c2 = std::pow(3.0, 1.0 - e.alpha2_bar) * std::pow(p.lambda1, 1.0 - 2.0 * e.alpha2_bar) *
               std::pow(p.lambda2, e.alpha2_bar);
    if (e.has_branch3)
        c.c3 = std::pow(3.0, 1.0 - e.alpha3_bar) * std::pow(p.lambda1, (2.0 - 5.0 * e.alpha3_bar) / 2.0) *
               std::pow(c_gn * p.lambda3, 1.5 * e.alpha3_bar);
    return c;
}

std::pair<double, double> breaking_interval(double m0, double theta) {
    if (!(m0 > 0.0)) throw CriterionError("breaking_interval: requires m0 > 0");
    if (!(theta > 0.0 && theta < 1.0)) throw CriterionError("breaking_interval: requires theta in (0, 1)");
    return {1.0 / ((1.0 + theta) * m0), 1.0 / ((1.0 - theta) * m0)};
}

CriterionReport general_criterion(const Field& u0, double theta, const OperatorParams& p,
                                  double c_gn) {
    const DataNorms d = data_norms(u0);

    if (p.l1_route || (!p.has_branch2() && !p.has_branch3())) {
        // No dispersive branch: defer to the square-root criterion, with the
        // eta0-optimized lambda1 when the envelope has a finite eta0.
        double l1 = p.lambda1;
        if (!p.l1_route) l1 = std::isfinite(p.eta0) ? p.lambda1 * std::pow(p.eta0, -p.alpha1) : 0.0;
        CriterionReport r = l1_criterion(u0, theta, l1);
        r.case_label = p.case_label == "theorem" ? "l1" : p.case_label;
        r.c_gn = c_gn;
        return r;
    }

    if (!p.theorem_applicable())
        throw CriterionError("general_criterion: envelope exponents violate alpha1 < min{2 alpha2, 3 alpha3/2}");

    const Exponents e = derived_exponents(p);
    require_theta(theta, e.theta0, "general_criterion");
    const CriterionConstants c = criterion_constants(p, e, c_gn);
    const double rhs = resolved_threshold(p, e, c, d, theta);
    return make_report(d, theta, e.theta0, rhs, p.case_label, c_gn);
}

CriterionReport l1_criterion(const Field& u0, double theta, double lambda1) {
    if (lambda1 < 0.0) throw CriterionError("l1_criterion: requires lambda1 >= 0");
    if (!(theta > 0.0 && theta < 1.0)) {
        std::ostringstream os;
        os << "l1_criterion: theta must lie in (0, 1), got " << theta;
        throw CriterionError(os.str());
    }
    const DataNorms d = data_norms(u0);
    const double rhs = std::sqrt(3.0 * lambda1 / theta) * std::sqrt(d.mprime);
    CriterionReport r = make_report(d, theta, 1.0, rhs, "l1", 0.0);
    return r;
}

double fkdv_coefficient(double alpha, double c_gn) {
    return std::sqrt(3.0) * std::pow((1.0 + alpha) / 4.0, alpha / 2.0) *
           std::pow(2.0 * c_gn / std::abs(alpha), (1.0 + alpha) / 2.0);
}

CriterionReport fkdv_criterion(const Field& u0, double theta, double alpha, double c_gn) {
    if (!(alpha > -1.0 && alpha < -0.4)) {
        std::ostringstream os;
        os << "fkdv_criterion: alpha must lie in (-1, -2/5), got " << alpha;
        throw CriterionError(os.str());
    }
    const double theta0 = (-2.0 - 5.0 * alpha) / (5.0 + 2.0 * alpha);
    if (!(theta > 0.0 && theta < theta0)) {
        std::ostringstream os;
        os << "fkdv_criterion: theta must lie in (0, " << theta0 << "), got " << theta;
        throw CriterionError(os.str());
    }
    const DataNorms d = data_norms(u0);
    const double rhs = fkdv_coefficient(alpha, c_gn) / std::sqrt(theta) *
                       std::pow(d.mprime, 1.0 / 6.0 - alpha / 3.0) *
                       std::pow(d.norm3, (1.0 + alpha) / 3.0);
    return make_report(d, theta, theta0, rhs, "fkdv", c_gn);
}

CriterionReport whitham_criterion(const Field& u0, double theta, double c_gn) {
    const double theta0 = 0.125;
    if (!(theta > 0.0 && theta < theta0)) {
        std::ostringstream os;
        os << "whitham_criterion: theta must lie in (0, 1/8), got " << theta;
        throw CriterionError(os.str());
    }
    const DataNorms d = data_norms(u0);
    const double coef = std::pow(3.0, 0.75) * std::pow(2.0, 0.25) * std::pow(c_gn, 0.25) /
                        (std::pow(M_PI, 0.25) * std::sqrt(theta));
    const double rhs = coef * std::cbrt(d.mprime) * std::pow(d.norm3, 1.0 / 6.0);
    return make_report(d, theta, theta0, rhs, "whitham", c_gn);
}

double fw_beta1(double s, double c_gn) {
    return std::sqrt(3.0 * gamma_ratio(s)) *
           std::pow((2.0 + 2.0 * s) / s * c_gn, (1.0 - s) / 2.0);
}

double fw_beta2(double s) {
    return std::sqrt(3.0 * gamma_ratio(s)) *
           std::sqrt(std::pow(2.0, 2.0 * s - 1.0) / std::pow(2.0 * s - 1.0, 1.0 - s));
}

CriterionReport fw_criterion(const Field& u0, double theta, double s,
                             std::optional<double> tau, double c_gn) {
    if (s > 1.0) {
        // supercritical: integrable kernel, square-root criterion
        CriterionReport r = l1_criterion(u0, theta, gamma_ratio(s));
        r.case_label = "fw-case-iv";
        r.c_gn = c_gn;
        return r;
    }
    if (s == 1.0) {
        if (!tau) throw CriterionError("fw_criterion: s = 1 requires the auxiliary exponent tau");
        const double t = *tau;
        if (!(t > 2.0 / 3.0 && t < 1.0))
            throw CriterionError("fw_criterion: tau must lie in (2/3, 1)");
        const double theta0 = (3.0 * t - 2.0) / (3.0 - 2.0 * t);
        if (!(theta > 0.0 && theta < theta0)) {
            std::ostringstream os;
            os << "fw_criterion (s=1): theta must lie in (0, " << theta0 << "), got " << theta;
            throw CriterionError(os.str());
        }
        const DataNorms d = data_norms(u0);
        const double coef = std::sqrt(12.0 / (M_PI * (1.0 - t) * theta));
        const double r1 = coef * std::sqrt(d.mprime);
        const double r2 = coef * std::pow(d.mprime, t - 0.5) * std::pow(d.norm2, 1.0 - t);
        return make_report(d, theta, theta0, std::max(r1, r2), "fw-case-iii", c_gn);
    }
    if (!(s > 0.4)) {
        std::ostringstream os;
        os << "fw_criterion: no proved criterion for s <= 2/5, got s = " << s;
        throw CriterionError(os.str());
    }

    const DataNorms d = data_norms(u0);
    const double theta0_i = (5.0 * s - 2.0) / (5.0 - 2.0 * s);
    const double theta0_ii = s > 2.0 / 3.0 ? (3.0 * s - 2.0) / (3.0 - 2.0 * s) : 0.0;

    std::optional<double> rhs_i, rhs_ii;
    if (theta < theta0_i)
        rhs_i = fw_beta1(s, c_gn) / std::sqrt(theta) *
                std::pow(d.mprime, 1.0 / 6.0 + s / 3.0) * std::pow(d.norm3, (1.0 - s) / 3.0);
    if (s > 2.0 / 3.0 && theta < theta0_ii)
        rhs_ii = fw_beta2(s) / std::sqrt(theta) *
                 std::pow(d.mprime, s - 0.5) * std::pow(d.norm2, 1.0 - s);

    if (!rhs_i && !rhs_ii) {
        std::ostringstream os;
        os << "fw_criterion: theta = " << theta << " inadmissible for s = " << s
           << " (case (i) needs theta < " << theta0_i;
        if (s > 2.0 / 3.0) os << ", case (ii) theta < " << theta0_ii;
        os << ")";
        throw CriterionError(os.str());
    }

    // overlap: report the weaker (smaller) threshold, keep the other on record
    std::string label;
    double rhs, theta0;
    std::vector<std::pair<std::string, double>> alts;
    if (rhs_i && (!rhs_ii || *rhs_i <= *rhs_ii)) {
        label = "fw-case-i";
        rhs = *rhs_i;
        theta0 = theta0_i;
        if (rhs_ii) alts.emplace_back("fw-case-ii", *rhs_ii);
    } else {
        label = "fw-case-ii";
        rhs = *rhs_ii;
        theta0 = theta0_ii;
        if (rhs_i) alts.emplace_back("fw-case-i", *rhs_i);
    }
    CriterionReport r = make_report(d, theta, theta0, rhs, label, c_gn);
    r.alternatives = std::move(alts);
    return r;
}

std::pair<double, double> best_theta(const Field& u0, const OperatorParams& p, double c_gn,
                                     int grid_points) {
    grid_points = std::max(grid_points, 2);
    const Exponents e = derived_exponents(p);
    double best_t = 0.0, best_rhs = kInf;
    for (int i = 0; i < grid_points; ++i) {
        // log grid in (theta0/1000, theta0]
        const double t = e.theta0 * std::pow(10.0, -3.0 * (grid_points - 1 - i) / double(grid_points - 1));
        try {
            const CriterionReport r = general_criterion(u0, std::min(t, e.theta0), p, c_gn);
            if (r.rhs < best_rhs) {
                best_rhs = r.rhs;
                best_t = r.theta;
            }
        } catch (const CriterionError&) {
            continue;
        }
    }
    if (best_t == 0.0) throw CriterionError("best_theta: no admissible theta found");
    return {best_t, best_rhs};
}

}  // namespace wavebreak
