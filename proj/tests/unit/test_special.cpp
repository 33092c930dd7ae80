#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wavebreak/special.hpp"

using namespace wavebreak;

TEST_CASE("gamma function against the standard library on (0, 30)") {
    for (double x = 0.01; x <= 30.0; x += 0.173) {
        const double mine = gamma_fn(x);
        const double ref = std::tgamma(x);
        CHECK(std::abs(mine - ref) <= 1e-13 * std::abs(ref));
    }
}

TEST_CASE("gamma function small and negative arguments") {
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(gamma_fn(-0.5) == doctest::Approx(-2.0 * std::sqrt(M_PI)).epsilon(1e-13));
    CHECK_THROWS(gamma_fn(0.0));
    CHECK_THROWS(gamma_fn(-2.0));
}

TEST_CASE("gamma ratio special values") {
    CHECK(std::abs(gamma_ratio(2.0) - 1.0) < 1e-12);
    CHECK(std::abs(gamma_ratio(3.0) - 2.0 / M_PI) < 1e-12);
    CHECK_THROWS(gamma_ratio(1.0));
    CHECK_THROWS(gamma_ratio(0.0));
    CHECK_THROWS(gamma_ratio(-1.0));
}

TEST_CASE("gamma ratio pole behaviour near s = 1") {
    const double s = 1.0 - 1e-4;
    CHECK(std::abs((1.0 - s) * gamma_ratio(s) - 2.0 / M_PI) < 1e-3);
    const double sp = 1.0 + 1e-4;
    CHECK(std::abs((sp - 1.0) * gamma_ratio(sp) - 2.0 / M_PI) < 1e-3);
}

TEST_CASE("gamma ratio monotonicity") {
    double prev = gamma_ratio(0.05);
    for (double s = 0.10; s <= 0.951; s += 0.05) {
        const double g = gamma_ratio(s);
        CHECK(g > prev);
        prev = g;
    }
    prev = gamma_ratio(1.05);
    for (double s = 1.35; s <= 30.01; s += 0.30) {
        const double g = gamma_ratio(s);
        CHECK(g < prev);
        prev = g;
    }
}

TEST_CASE("gamma ratio vanishes at both ends") {
    // gamma(s) ~ s/2 * Gamma(1/2)/... -> 0 as s -> 0+, and ~ sqrt(2/(pi s)) as s -> inf
    CHECK(gamma_ratio(0.01) < 0.1);
    CHECK(gamma_ratio(200.0) < 0.06);
    CHECK(gamma_ratio(200.0) < gamma_ratio(30.0));
}
