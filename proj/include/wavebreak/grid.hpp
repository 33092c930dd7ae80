#pragma once

#include <cmath>
#include <stdexcept>

namespace wavebreak {

/// Periodic computational domain [-L, L) sampled at n equispaced points,
/// n a power of two. Wavenumbers are xi_k = pi*k/L for k = -n/2 .. n/2-1;
/// spectra are stored in real-to-complex layout (k = 0 .. n/2).
struct GridSpec {
    double half_width;
    int n;

    GridSpec(double half_width_, int n_) : half_width(half_width_), n(n_) {
        if (!(half_width > 0.0)) throw std::invalid_argument("GridSpec: half_width must be positive");
        if (n < 16 || (n & (n - 1)) != 0) throw std::invalid_argument("GridSpec: n must be a power of two, n >= 16");
    }

    double dx() const { return 2.0 * half_width / n; }
    double x(int j) const { return -half_width + j * dx(); }
    /// Wavenumber of r2c bin k, k in [0, n/2].
    double wavenumber(int k) const { return M_PI * k / half_width; }
    int spectrum_size() const { return n / 2 + 1; }
    /// Highest mode kept by the 2/3 rule.
    int dealias_cutoff() const { return n / 3; }

    bool operator==(const GridSpec& o) const { return half_width == o.half_width && n == o.n; }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

}  // namespace wavebreak
