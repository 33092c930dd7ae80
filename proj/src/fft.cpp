#include "wavebreak/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace wavebreak {

namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan inv = nullptr;
};

// FFTW planning mutates global state; creation is serialized. Plans are made
// with FFTW_UNALIGNED so they can execute on any caller buffer.
PlanPair& plans_for(int n) {
    static std::mutex mtx;
    static std::map<int, PlanPair> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<double> real(n);
    std::vector<std::complex<double>> cplx(n / 2 + 1);
    PlanPair p;
    p.fwd = fftw_plan_dft_r2c_1d(n, real.data(), reinterpret_cast<fftw_complex*>(cplx.data()),
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.inv = fftw_plan_dft_c2r_1d(n, reinterpret_cast<fftw_complex*>(cplx.data()), real.data(),
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
    return cache.emplace(n, p).first->second;
}

}  // namespace

void forward_r2c(const GridSpec& g, const double* in, std::complex<double>* out) {
    PlanPair& p = plans_for(g.n);
    // r2c destroys its input for some FFTW algorithms; copy to be safe.
    std::vector<double> tmp(in, in + g.n);
    fftw_execute_dft_r2c(p.fwd, tmp.data(), reinterpret_cast<fftw_complex*>(out));
}

void inverse_c2r(const GridSpec& g, const std::complex<double>* in, double* out) {
    PlanPair& p = plans_for(g.n);
    std::vector<std::complex<double>> tmp(in, in + g.spectrum_size());
    fftw_execute_dft_c2r(p.inv, reinterpret_cast<fftw_complex*>(tmp.data()), out);
    const double ninv = 1.0 / g.n;
    for (int j = 0; j < g.n; ++j) out[j] *= ninv;
}

}  // namespace wavebreak
