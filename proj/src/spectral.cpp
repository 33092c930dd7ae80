#include "wavebreak/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace wavebreak {

Field derivative(const Field& f, int order) {
    if (order < 1 || order > 3) throw std::invalid_argument("derivative: order must be 1, 2 or 3");
    const GridSpec& g = f.grid();
    std::vector<std::complex<double>> spec = f.spectrum();
    // one multiplication by i xi per order, so that composing first
    // derivatives reproduces higher orders bit for bit
    for (int p = 0; p < order; ++p) {
        for (int k = 0; k < g.spectrum_size(); ++k)
            spec[k] *= std::complex<double>(0.0, g.wavenumber(k));
    }
    if (order % 2 == 1) spec[g.n / 2] = 0.0;
    return Field::from_spectrum(g, std::move(spec));
}

FieldNorms norms(const Field& f) {
    double sup = 0.0, inf = f.values().empty() ? 0.0 : f.values()[0], l2sq = 0.0;
    for (double v : f.values()) {
        sup = std::max(sup, std::abs(v));
        inf = std::min(inf, v);
        l2sq += v * v;
    }
    l2sq *= f.grid().dx();
    return {sup, inf, l2sq};
}

Field dealias(const Field& f) {
    const GridSpec& g = f.grid();
    const int cutoff = g.dealias_cutoff();
    std::vector<std::complex<double>> spec = f.spectrum();
    for (int k = cutoff + 1; k < g.spectrum_size(); ++k) spec[k] = 0.0;
    return Field::from_spectrum(g, std::move(spec));
}

double tail_ratio(const Field& f) {
    const GridSpec& g = f.grid();
    const int cutoff = g.dealias_cutoff();
    const int band_start = cutoff - cutoff / 8 + 1;
    double total = 0.0, band = 0.0;
    for (int k = 0; k < g.spectrum_size(); ++k) {
        // weight 2 for bins that stand for a +/- pair
        const double w = (k == 0 || k == g.n / 2) ? 1.0 : 2.0;
        const double e = w * std::norm(f.spectrum()[k]);
        total += e;
        if (k >= band_start && k <= cutoff) band += e;
    }
    return total > 0.0 ? band / total : 0.0;
}

double inner_product(const Field& f, const Field& g) {
    if (f.grid() != g.grid()) throw std::invalid_argument("inner_product: grid mismatch");
    double acc = 0.0;
    for (int j = 0; j < f.grid().n; ++j) acc += f.values()[j] * g.values()[j];
    return acc * f.grid().dx();
}

}  // namespace wavebreak
