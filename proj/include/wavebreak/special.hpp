#pragma once

namespace wavebreak {

/// Gamma function via a Lanczos approximation (g = 7, 9 terms), accurate to
/// better than 1e-13 relative on (0, 30). Arguments below 0.5 go through the
/// reflection formula, which also covers the negative non-integer axis.
double gamma_fn(double x);

/// gamma(s) = Gamma(|s-1|/2) / (sqrt(pi) * Gamma(s/2)) for s > 0, s != 1.
/// Strictly increasing on (0,1), strictly decreasing on (1,inf),
/// with |1-s|*gamma(s) -> 2/pi as s -> 1. Throws std::domain_error at the
/// pole s = 1 and for s <= 0.
double gamma_ratio(double s);

}  // namespace wavebreak
