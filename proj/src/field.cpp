#include "wavebreak/field.hpp"

#include <stdexcept>

#include "wavebreak/fft.hpp"

namespace wavebreak {

Field::Field(GridSpec grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_.n)
        throw std::invalid_argument("Field: values size does not match grid");
    spectrum_.resize(grid_.spectrum_size());
    forward_r2c(grid_, values_.data(), spectrum_.data());
}

Field Field::from_values(GridSpec grid, std::vector<double> values) {
    return Field(grid, std::move(values));
}

Field Field::from_spectrum(GridSpec grid, std::vector<std::complex<double>> spectrum) {
    if (static_cast<int>(spectrum.size()) != grid.spectrum_size())
        throw std::invalid_argument("Field: spectrum size does not match grid");
    // The k=0 and Nyquist bins of a real field are real; drop roundoff residue.
    spectrum[0] = {spectrum[0].real(), 0.0};
    spectrum[grid.n / 2] = {spectrum[grid.n / 2].real(), 0.0};
    std::vector<double> values(grid.n);
    inverse_c2r(grid, spectrum.data(), values.data());
    return Field(grid, std::move(values), std::move(spectrum));
}

Field Field::from_function(GridSpec grid, const std::function<double(double)>& f) {
    std::vector<double> values(grid.n);
    for (int j = 0; j < grid.n; ++j) values[j] = f(grid.x(j));
    return Field(grid, std::move(values));
}

Field Field::zero(GridSpec grid) {
    return Field(grid, std::vector<double>(grid.n, 0.0));
}

double Field::eval(double x) const {
    const int n = grid_.n;
    // Phase per unit bin at this point: e^{i xi_1 (x+L)}.
    const double phi = M_PI * (x + grid_.half_width) / grid_.half_width;
    const std::complex<double> w(std::cos(phi), std::sin(phi));
    std::complex<double> wk = w;
    double acc = spectrum_[0].real();
    for (int k = 1; k < n / 2; ++k) {
        acc += 2.0 * (spectrum_[k] * wk).real();
        wk *= w;
    }
    acc += spectrum_[n / 2].real() * wk.real();  // Nyquist: cos term only
    return acc / n;
}

}  // namespace wavebreak
