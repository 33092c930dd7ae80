#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wavebreak/cgn.hpp"
#include "wavebreak/cli_commands.hpp"
#include "wavebreak/criteria.hpp"
#include "wavebreak/diagnostics.hpp"
#include "wavebreak/evolution.hpp"
#include "wavebreak/kernels.hpp"
#include "wavebreak/operators.hpp"
#include "wavebreak/special.hpp"
#include "wavebreak/spectral.hpp"
#include "wavebreak/version.hpp"

namespace py = pybind11;
using namespace wavebreak;

namespace {

Field field_from_array(const GridSpec& grid, const py::array_t<double>& values) {
    if (values.ndim() != 1 || values.shape(0) != grid.n)
        throw std::invalid_argument("values must be a 1-d array of length grid.n");
    std::vector<double> v(values.data(), values.data() + grid.n);
    return Field::from_values(grid, std::move(v));
}

py::array_t<double> to_array(const std::vector<double>& v) {
    py::array_t<double> out(v.size());
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

py::dict report_to_dict(const CriterionReport& r) {
    py::dict d;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["gamma_u"] = r.gamma_u;
    d["theta"] = r.theta;
    d["theta0"] = r.theta0;
    d["holds"] = r.holds;
    d["t_lo"] = r.t_lo ? py::object(py::float_(*r.t_lo)) : py::object(py::none());
    d["t_hi"] = r.t_hi ? py::object(py::float_(*r.t_hi)) : py::object(py::none());
    d["case_label"] = r.case_label;
    d["c_gn"] = r.c_gn;
    return d;
}

py::dict estimate_to_dict(const BreakingEstimate& e) {
    py::dict d;
    d["t_star_est"] = e.t_star_est;
    d["stop_reason"] = to_string(e.stop_reason);
    d["fit_slope"] = e.fit_slope;
    d["fit_quality"] = e.fit_quality;
    d["valid"] = e.valid;
    d["note"] = e.note;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "wave-breaking criteria and pseudospectral simulation";
    m.attr("__version__") = kVersion;

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<double, int>(), py::arg("half_width"), py::arg("n"))
        .def_readonly("half_width", &GridSpec::half_width)
        .def_readonly("n", &GridSpec::n)
        .def("dx", &GridSpec::dx)
        .def("wavenumber", &GridSpec::wavenumber);

    py::class_<Field>(m, "Field")
        .def(py::init(&field_from_array), py::arg("grid"), py::arg("values"))
        .def_property_readonly("grid", [](const Field& f) { return f.grid(); })
        .def_property_readonly("values", [](const Field& f) { return to_array(f.values()); })
        .def("eval", &Field::eval);

    m.def("from_function", [](const GridSpec& g, const std::function<double(double)>& f) {
        return Field::from_function(g, f);
    });

    m.def("derivative", &derivative, py::arg("field"), py::arg("order"));
    m.def("norms", [](const Field& f) {
        const FieldNorms n = norms(f);
        py::dict d;
        d["sup_norm"] = n.sup_norm;
        d["inf_value"] = n.inf_value;
        d["l2_norm_squared"] = n.l2_norm_squared;
        return d;
    });
    m.def("dealias", &dealias);
    m.def("tail_ratio", &tail_ratio);

    py::class_<ModelSpec>(m, "ModelSpec")
        .def_static("burgers", &ModelSpec::burgers)
        .def_static("fkdv", &ModelSpec::fkdv, py::arg("alpha"))
        .def_static("whitham", [](const std::string& sign) {
            return ModelSpec::whitham(sign == "section1" ? SignConvention::section1
                                                         : SignConvention::section3);
        }, py::arg("sign_convention") = "section3")
        .def_static("fornberg_whitham", [](double s, py::object tau, const std::string& sign) {
            std::optional<double> t;
            if (!tau.is_none()) t = tau.cast<double>();
            return ModelSpec::fornberg_whitham(s, t, sign == "section1" ? SignConvention::section1
                                                                        : SignConvention::section3);
        }, py::arg("s"), py::arg("tau") = py::none(), py::arg("sign_convention") = "section3")
        .def("multiplier", [](const ModelSpec& m_, double xi) { return m_.multiplier(xi); })
        .def("name", &ModelSpec::name);

    m.def("apply_operator", &apply_operator, py::arg("model"), py::arg("field"));
    m.def("operator_identities", [](const ModelSpec& model, const Field& g) {
        const auto e = operator_identities(model, g);
        return py::make_tuple(e.commute_error, e.orthogonality_error);
    });

    m.def("whitham_kernel", &whitham_kernel, py::arg("x"));
    m.def("bessel_kernel", &bessel_kernel, py::arg("s"), py::arg("x"));
    m.def("fractional_pv", &fractional_pv, py::arg("field"), py::arg("x"), py::arg("alpha"),
          py::arg("eta") = 0.5);
    m.def("gamma_fn", &gamma_fn, py::arg("x"));
    m.def("gamma_ratio", &gamma_ratio, py::arg("s"));

    m.def("rayleigh_quotient", &rayleigh_quotient);
    m.def("estimate_cgn", [](int max_iterations) {
        CgnSearchConfig cfg;
        cfg.max_iterations = max_iterations;
        const CgnEstimate e = estimate_cgn(cfg);
        py::dict d;
        d["value"] = e.value;
        d["maximizer"] = e.maximizer;
        d["converged"] = e.converged;
        return d;
    }, py::arg("max_iterations") = 400);

    m.def("general_criterion", [](const Field& u0, double theta, const ModelSpec& model, double c_gn) {
        return report_to_dict(general_criterion(u0, theta, operator_params(model), c_gn));
    }, py::arg("u0"), py::arg("theta"), py::arg("model"), py::arg("c_gn"));
    m.def("l1_criterion", [](const Field& u0, double theta, double lambda1) {
        return report_to_dict(l1_criterion(u0, theta, lambda1));
    });
    m.def("fkdv_criterion", [](const Field& u0, double theta, double alpha, double c_gn) {
        return report_to_dict(fkdv_criterion(u0, theta, alpha, c_gn));
    });
    m.def("whitham_criterion", [](const Field& u0, double theta, double c_gn) {
        return report_to_dict(whitham_criterion(u0, theta, c_gn));
    });
    m.def("fw_criterion", [](const Field& u0, double theta, double s, py::object tau, double c_gn) {
        std::optional<double> t;
        if (!tau.is_none()) t = tau.cast<double>();
        return report_to_dict(fw_criterion(u0, theta, s, t, c_gn));
    }, py::arg("u0"), py::arg("theta"), py::arg("s"), py::arg("tau") = py::none(), py::arg("c_gn") = 0.55);

    m.def("rhs", &rhs, py::arg("field"), py::arg("model"));
    m.def("step", &step, py::arg("field"), py::arg("dt"), py::arg("model"),
          py::arg("integrating_factor") = true);

    m.def("simulate", [](const ModelSpec& model, const GridSpec& grid, double amplitude,
                         double width, double cfl, double m_cap_factor, double tail_stop,
                         int fit_window, double max_time, int max_refinements) {
        SimConfig cfg;
        cfg.model = model;
        cfg.grid = grid;
        cfg.data = GaussianSlopeData{amplitude, width};
        cfg.cfl = cfl;
        cfg.m_cap_factor = m_cap_factor;
        cfg.tail_stop = tail_stop;
        cfg.fit_window = fit_window;
        cfg.max_time = max_time;
        cfg.max_refinements = max_refinements;
        const RunResult r = run(cfg);
        py::dict d;
        d["estimate"] = estimate_to_dict(r.estimate);
        const size_t rows = r.trace.rows.size();
        py::array_t<double> t(rows), mm(rows), z0(rows);
        for (size_t i = 0; i < rows; ++i) {
            t.mutable_data()[i] = r.trace.rows[i].t;
            mm.mutable_data()[i] = r.trace.rows[i].m;
            z0.mutable_data()[i] = r.trace.rows[i].z0;
        }
        d["t"] = t;
        d["m"] = mm;
        d["z0"] = z0;
        d["n_used"] = r.grid_used.n;
        return d;
    }, py::arg("model"), py::arg("grid"), py::arg("amplitude"), py::arg("width") = 1.0,
       py::arg("cfl") = 0.4, py::arg("m_cap_factor") = 50.0, py::arg("tail_stop") = 1e-4,
       py::arg("fit_window") = 20, py::arg("max_time") = 10.0, py::arg("max_refinements") = 2);

    m.def("simulate_sine", [](double amplitude, int n, double m_cap_factor) {
        SimConfig cfg;
        cfg.model = ModelSpec::burgers();
        cfg.grid = GridSpec(M_PI, n);
        cfg.data = SineData{amplitude};
        cfg.m_cap_factor = m_cap_factor;
        const RunResult r = run(cfg);
        return estimate_to_dict(r.estimate);
    }, py::arg("amplitude") = 1.0, py::arg("n") = 512, py::arg("m_cap_factor") = 10.0);

    m.def("amplitude_for_margin", &amplitude_for_margin, py::arg("model"), py::arg("grid"),
          py::arg("width"), py::arg("theta"), py::arg("c_gn"), py::arg("factor"),
          py::arg("route") = "auto");
}
