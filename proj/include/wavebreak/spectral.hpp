#pragma once

#include "wavebreak/field.hpp"

namespace wavebreak {

struct FieldNorms {
    double sup_norm;         // ||f||_inf over grid samples
    double inf_value;        // min_j f(x_j)
    double l2_norm_squared;  // dx * sum f^2 (rectangle rule, spectrally accurate)
};

/// Spectral derivative of the given order (1..3). The Nyquist mode is zeroed
/// for odd orders.
Field derivative(const Field& f, int order);

FieldNorms norms(const Field& f);

inline double l2_norm(const Field& f) { return std::sqrt(norms(f).l2_norm_squared); }

/// 2/3-rule truncation: zero all modes with |k| > n/3. Idempotent.
Field dealias(const Field& f);

/// Fraction of spectral energy carried by the top eighth of the retained
/// (|k| <= n/3) wavenumbers. Resolution-loss monitor; 0 for band-limited data.
double tail_ratio(const Field& f);

/// dx * sum f_j g_j  (periodic rectangle rule for integrals of products).
double inner_product(const Field& f, const Field& g);

}  // namespace wavebreak
