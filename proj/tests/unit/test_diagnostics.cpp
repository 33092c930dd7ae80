#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wavebreak/diagnostics.hpp"
#include "wavebreak/spectral.hpp"

using namespace wavebreak;

TEST_CASE("envelope bound on the zero field is tight") {
    GridSpec g(20.0, 128);
    Field zero = Field::zero(g);
    const ModelSpec model = ModelSpec::whitham();
    VerificationReport rep = check_envelope_bound(model, operator_params(model), zero, {0.5, 1.0});
    CHECK(rep.checks.size() == 2);
    for (const auto& c : rep.checks) {
        CHECK(c.value == 0.0);
        CHECK(c.bound == 0.0);
        CHECK(c.pass);
    }
}

TEST_CASE("envelope bound for fkdv on a gaussian") {
    GridSpec g(40.0, 512);
    Field f = Field::from_function(g, [](double x) { return std::exp(-x * x); });
    const ModelSpec model = ModelSpec::fkdv(-0.5);
    VerificationReport rep =
        check_envelope_bound(model, operator_params(model), f, {0.1, 1.0, 10.0});
    CHECK(rep.all_pass());
    for (const auto& c : rep.checks) CHECK(c.margin > 0.0);
}

TEST_CASE("envelope bound sweep for whitham on random fields") {
    GridSpec g(40.0, 512);
    const ModelSpec model = ModelSpec::whitham();
    const OperatorParams params = operator_params(model);
    std::vector<double> etas;
    for (double e = 1e-2; e <= 1e2; e *= 3.0) etas.push_back(e);
    for (const Field& f : random_field_corpus(g, 6, 31337)) {
        VerificationReport rep = check_envelope_bound(model, params, f, etas);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("eta outside the admissible range is inconclusive") {
    GridSpec g(20.0, 128);
    Field f = Field::from_function(g, [](double x) { return std::exp(-x * x); });
    OperatorParams p = fw_operator_params(1.0, FwCase::iii, 0.8);  // eta0 = 1
    VerificationReport rep = check_envelope_bound(ModelSpec::fornberg_whitham(1.0, 0.8), p, f, {0.5, 2.0});
    CHECK(rep.checks[0].pass);
    CHECK(rep.checks[1].inconclusive);
}

TEST_CASE("reconcile verdicts") {
    CriterionReport crit;
    crit.holds = true;
    crit.lhs = 2.0;
    crit.theta = 0.1;
    crit.t_lo = 1.0 / (1.1 * 2.0);
    crit.t_hi = 1.0 / (0.9 * 2.0);

    BreakingEstimate est;
    est.valid = true;
    est.t_star_est = 0.5;
    CHECK(reconcile(crit, est).checks.front().pass);

    est.t_star_est = 0.43;  // just below T_lo * 0.95 = 0.4318...
    CHECK(!reconcile(crit, est).checks.front().pass);
    CHECK(!reconcile(crit, est).checks.front().inconclusive);

    est.t_star_est = 0.44;  // inside the widened interval
    CHECK(reconcile(crit, est).checks.front().pass);

    // estimate invalid: inconclusive, not a failure
    est.valid = false;
    CHECK(reconcile(crit, est).checks.front().inconclusive);

    // criterion not holding: nothing predicted, check skipped
    crit.holds = false;
    est.valid = true;
    VerificationReport rep = reconcile(crit, est);
    CHECK(rep.checks.front().inconclusive);
    CHECK(rep.all_pass());
    CHECK(!rep.any_fail());
}

TEST_CASE("kernel bound sweep passes") {
    VerificationReport rep = kernel_bound_sweep();
    CHECK(!rep.checks.empty());
    CHECK(rep.all_pass());

    bool found_g11 = false;
    for (const auto& c : rep.checks) {
        if (c.check == "bessel G_1(1) < 1/pi") {
            found_g11 = true;
            CHECK(c.pass);
            CHECK(c.value < 1.0 / M_PI);
            CHECK(c.value > 0.1);  // sanity: K_0(1)/pi ~ 0.134
        }
    }
    CHECK(found_g11);
}

TEST_CASE("verification corpus is deterministic and passes") {
    VerificationReport a = verify_corpus(12345);
    CHECK(a.all_pass());
    VerificationReport b = verify_corpus(12345);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].check == b.checks[i].check);
        CHECK(a.checks[i].value == b.checks[i].value);
        CHECK(a.checks[i].pass == b.checks[i].pass);
    }
}
