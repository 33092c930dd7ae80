#pragma once

#include <complex>

#include "wavebreak/grid.hpp"

namespace wavebreak {

// Thin wrappers over FFTW's 1d r2c/c2r transforms. Plans are cached per n
// behind a mutex; execution on caller-provided arrays is thread-safe.

/// Unnormalized forward transform: out_k = sum_j in_j e^{-2 pi i jk/n}, k = 0..n/2.
void forward_r2c(const GridSpec& g, const double* in, std::complex<double>* out);

/// Inverse transform including the 1/n factor, so inverse(forward(u)) == u.
void inverse_c2r(const GridSpec& g, const std::complex<double>* in, double* out);

}  // namespace wavebreak
