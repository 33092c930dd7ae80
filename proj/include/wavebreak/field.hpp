#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "wavebreak/grid.hpp"

namespace wavebreak {

/// A real-valued function sampled on a periodic grid, kept consistent with
/// its discrete spectrum. Spectrum layout is FFTW r2c: bin k holds
/// sum_j u_j e^{-2 pi i jk/n} for k = 0..n/2; negative modes are implied by
/// Hermitian symmetry.
class Field {
  public:
    Field(GridSpec grid, std::vector<double> values);

    static Field from_values(GridSpec grid, std::vector<double> values);
    static Field from_spectrum(GridSpec grid, std::vector<std::complex<double>> spectrum);
    static Field from_function(GridSpec grid, const std::function<double(double)>& f);
    static Field zero(GridSpec grid);

    const GridSpec& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<std::complex<double>>& spectrum() const { return spectrum_; }

    /// Trigonometric interpolation at an arbitrary point (periodic extension).
    double eval(double x) const;

  private:
    Field(GridSpec grid, std::vector<double> values, std::vector<std::complex<double>> spectrum)
        : grid_(grid), values_(std::move(values)), spectrum_(std::move(spectrum)) {}

    GridSpec grid_;
    std::vector<double> values_;
    std::vector<std::complex<double>> spectrum_;
};

}  // namespace wavebreak
