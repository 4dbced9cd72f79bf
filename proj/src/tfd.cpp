#include "tfkit/tfd.hpp"

#include <cmath>
#include <stdexcept>

#include "tfkit/ambiguity.hpp"
#include "tfkit/wigner.hpp"

namespace tfkit {

CrossTFGrid compute_tfd_complex(const SampledSignal& a, const Kernel& g) {
    TFGrid W = wvd(a);
    AmbGrid A = ambiguity_from_wvd(W);
    A = apply_kernel(A, g);
    return wvd_from_ambiguity_complex(A);
}

TFGrid compute_tfd(const SampledSignal& a, const Kernel& g) {
    CrossTFGrid c = compute_tfd_complex(a, g);

    double peak = 0.0, max_imag = 0.0;
    for (const auto& z : c.values) {
        peak = std::max(peak, std::abs(z));
        max_imag = std::max(max_imag, std::abs(z.imag()));
    }
    if (g.real_valued && peak > 0.0 && max_imag > 1e-8 * peak)
        throw std::domain_error("compute_tfd: imaginary residue exceeds 1e-8 of peak for kernel '" +
                                g.name + "'");

    TFGrid rho;
    rho.n = c.n;
    rho.t_axis = std::move(c.t_axis);
    rho.f_axis = std::move(c.f_axis);
    rho.values.resize(c.values.size());
    for (std::size_t i = 0; i < c.values.size(); ++i) rho.values[i] = c.values[i].real();
    return rho;
}

std::vector<double> time_marginal(const TFGrid& rho) {
    validate(rho);
    const double df = rho.df();
    std::vector<double> out(rho.n);
    for (std::size_t i = 0; i < rho.n; ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < rho.n; ++k) acc += rho.values[i * rho.n + k];
        out[i] = acc * df;
    }
    return out;
}

std::vector<double> freq_marginal(const TFGrid& rho) {
    validate(rho);
    const double dt = rho.dt();
    std::vector<double> out(rho.n, 0.0);
    for (std::size_t i = 0; i < rho.n; ++i)
        for (std::size_t k = 0; k < rho.n; ++k) out[k] += rho.values[i * rho.n + k];
    for (auto& v : out) v *= dt;
    return out;
}

MinScan min_scan(const TFGrid& rho) {
    validate(rho);
    MinScan best;
    best.value = rho.values[0];
    for (std::size_t i = 0; i < rho.n; ++i) {
        for (std::size_t k = 0; k < rho.n; ++k) {
            const double v = rho.values[i * rho.n + k];
            if (v < best.value) {
                best.value = v;
                best.time_index = i;
                best.freq_index = k;
            }
        }
    }
    best.t = rho.t_axis[best.time_index];
    best.f = rho.f_axis[best.freq_index];
    return best;
}

}  // namespace tfkit
