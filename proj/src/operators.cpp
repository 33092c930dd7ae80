#include "wavebreak/operators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "wavebreak/special.hpp"
#include "wavebreak/spectral.hpp"

namespace wavebreak {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double whitham_symbol(double xi) {
    // sqrt(tanh(xi)/xi), even, -> 1 as xi -> 0
    const double a = std::abs(xi);
    if (a < 1e-8) return 1.0 - a * a / 6.0;
    return std::sqrt(std::tanh(a) / a);
}

}  // namespace

double TabulatedOddKernel::l1_norm() const {
    // implicit K(0) = 0 anchor; odd extension doubles the half-line integral
    double acc = 0.0, px = 0.0, pk = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        acc += 0.5 * (std::abs(pk) + std::abs(k[i])) * (x[i] - px);
        px = x[i];
        pk = k[i];
    }
    return 2.0 * acc;
}

std::complex<double> TabulatedOddKernel::transform(double xi) const {
    double acc = 0.0, px = 0.0, pv = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double v = k[i] * std::sin(xi * x[i]);
        acc += 0.5 * (pv + v) * (x[i] - px);
        px = x[i];
        pv = v;
    }
    return std::complex<double>(0.0, -2.0 * acc);
}

ModelSpec ModelSpec::burgers() {
    return ModelSpec();
}

ModelSpec ModelSpec::fkdv(double alpha) {
    if (!(alpha > -1.0 && alpha < 0.0))
        throw std::domain_error("fkdv: requires alpha in (-1, 0)");
    ModelSpec m;
    m.kind_ = Kind::fkdv;
    m.alpha_ = alpha;
    return m;
}

ModelSpec ModelSpec::whitham(SignConvention sc) {
    ModelSpec m;
    m.kind_ = Kind::whitham;
    m.sign_ = sc;
    return m;
}

ModelSpec ModelSpec::fornberg_whitham(double s, std::optional<double> tau, SignConvention sc) {
    if (!(s > 0.0)) throw std::domain_error("fornberg_whitham: requires s > 0");
    ModelSpec m;
    m.kind_ = Kind::fornberg_whitham;
    m.s_ = s;
    m.tau_ = tau;
    m.sign_ = sc;
    return m;
}

ModelSpec ModelSpec::tabulated(TabulatedOddKernel kernel) {
    if (kernel.x.size() != kernel.k.size() || kernel.x.empty())
        throw std::invalid_argument("tabulated: mismatched or empty samples");
    for (size_t i = 0; i < kernel.x.size(); ++i) {
        if (kernel.x[i] <= (i ? kernel.x[i - 1] : 0.0))
            throw std::invalid_argument("tabulated: sample points must be positive increasing");
    }
    ModelSpec m;
    m.kind_ = Kind::tabulated;
    m.kernel_ = std::move(kernel);
    return m;
}

std::string ModelSpec::name() const {
    switch (kind_) {
        case Kind::burgers: return "burgers";
        case Kind::fkdv: return "fkdv";
        case Kind::whitham: return "whitham";
        case Kind::fornberg_whitham: return "fornberg_whitham";
        case Kind::tabulated: return "tabulated";
    }
    return "?";
}

std::complex<double> ModelSpec::multiplier(double xi) const {
    const std::complex<double> ixi(0.0, xi);
    switch (kind_) {
        case Kind::burgers:
            return 0.0;
        case Kind::fkdv:
            if (xi == 0.0) return 0.0;
            return ixi * std::pow(std::abs(xi), alpha_);
        case Kind::whitham: {
            const double sigma = (sign_ == SignConvention::section3) ? -1.0 : 1.0;
            return sigma * ixi * whitham_symbol(xi);
        }
        case Kind::fornberg_whitham: {
            const double sigma = (sign_ == SignConvention::section3) ? 1.0 : -1.0;
            return sigma * ixi * std::pow(1.0 + xi * xi, -s_ / 2.0);
        }
        case Kind::tabulated:
            return kernel_.transform(xi);
    }
    return 0.0;
}

Field apply_operator(const ModelSpec& model, const Field& g) {
    const GridSpec& grid = g.grid();
    std::vector<std::complex<double>> spec = g.spectrum();
    for (int k = 0; k < grid.spectrum_size(); ++k) spec[k] *= model.multiplier(grid.wavenumber(k));
    spec[grid.n / 2] = {spec[grid.n / 2].real(), 0.0};  // keep the result real
    return Field::from_spectrum(grid, std::move(spec));
}

OperatorIdentityErrors operator_identities(const ModelSpec& model, const Field& g) {
    const Field ng = apply_operator(model, g);
    const Field d_ng = derivative(ng, 1);
    const Field n_dg = apply_operator(model, derivative(g, 1));
    double commute = 0.0;
    for (int j = 0; j < g.grid().n; ++j)
        commute = std::max(commute, std::abs(d_ng.values()[j] - n_dg.values()[j]));
    return {commute, std::abs(inner_product(ng, g))};
}

bool OperatorParams::theorem_applicable() const {
    if (l1_route) return false;
    double cap = kInf;
    if (has_branch2()) cap = std::min(cap, 2.0 * alpha2);
    if (has_branch3()) cap = std::min(cap, 1.5 * alpha3);
    return alpha1 < cap;
}

OperatorParams fw_operator_params(double s, FwCase c, std::optional<double> tau) {
    OperatorParams p;
    switch (c) {
        case FwCase::i:
            if (!(s > 0.4 && s < 1.0))
                throw std::domain_error("fw case (i): requires s in (2/5, 1)");
            p.lambda1 = std::pow(2.0, 1.0 - s) * gamma_ratio(s);
            p.lambda3 = std::pow(2.0, 1.0 - s) * (1.0 + s) * gamma_ratio(s) / s;
            p.alpha1 = 1.0 - s;
            p.alpha3 = s;
            p.case_label = "fw-case-i";
            return p;
        case FwCase::ii:
            if (!(s > 2.0 / 3.0 && s < 1.0))
                throw std::domain_error("fw case (ii): requires s in (2/3, 1)");
            p.lambda1 = std::pow(2.0, 2.0 - s) * gamma_ratio(s);
            p.lambda2 = std::pow(2.0, 0.5 - s) * gamma_ratio(s) / std::sqrt(2.0 * s - 1.0);
            p.alpha1 = 1.0 - s;
            p.alpha2 = s - 0.5;
            p.case_label = "fw-case-ii";
            return p;
        case FwCase::iii: {
            if (s != 1.0) throw std::domain_error("fw case (iii): requires s = 1");
            if (!tau) throw std::domain_error("fw case (iii): requires the auxiliary exponent tau");
            const double t = *tau;
            if (!(t > 2.0 / 3.0 && t < 1.0))
                throw std::domain_error("fw case (iii): requires tau in (2/3, 1)");
            p.lambda1 = p.lambda2 = 4.0 / (M_PI * (1.0 - t));
            p.alpha1 = 1.0 - t;
            p.alpha2 = t - 0.5;
            p.eta0 = 1.0;
            p.case_label = "fw-case-iii";
            return p;
        }
        case FwCase::iv:
            if (!(s > 1.0)) throw std::domain_error("fw case (iv): requires s > 1");
            p.lambda1 = gamma_ratio(s);
            p.l1_route = true;
            p.case_label = "fw-case-iv";
            return p;
    }
    throw std::logic_error("fw_operator_params: unreachable");
}

OperatorParams operator_params(const ModelSpec& model) {
    OperatorParams p;
    switch (model.kind()) {
        case ModelSpec::Kind::burgers:
            p.l1_route = true;
            p.case_label = "burgers";
            return p;
        case ModelSpec::Kind::fkdv: {
            const double a = model.alpha();
            p.lambda1 = 4.0 / (1.0 + a);
            p.lambda3 = 2.0 / std::abs(a);
            p.alpha1 = 1.0 + a;
            p.alpha3 = -a;
            p.case_label = "fkdv";
            return p;
        }
        case ModelSpec::Kind::whitham:
            p.lambda1 = std::sqrt(2.0 / M_PI);
            p.lambda3 = 3.0 * std::sqrt(2.0 / M_PI);
            p.alpha1 = 0.5;
            p.alpha3 = 0.5;
            p.case_label = "whitham";
            return p;
        case ModelSpec::Kind::fornberg_whitham: {
            const double s = model.s();
            if (s > 0.4 && s < 1.0) return fw_operator_params(s, FwCase::i);
            if (s == 1.0) return fw_operator_params(s, FwCase::iii, model.tau());
            if (s > 1.0) return fw_operator_params(s, FwCase::iv);
            throw std::domain_error("fornberg_whitham: no proved parameter table for s <= 2/5");
        }
        case ModelSpec::Kind::tabulated:
            p.lambda1 = model.kernel().l1_norm();
            p.l1_route = true;
            p.case_label = "odd-kernel-l1";
            return p;
    }
    throw std::logic_error("operator_params: unreachable");
}

}  // namespace wavebreak
