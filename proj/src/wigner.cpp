#include "tfkit/wigner.hpp"

#include <cmath>
#include <stdexcept>

#include "tfkit/ambiguity.hpp"
#include "tfkit/fft.hpp"
#include "tfkit/kernels.hpp"

namespace tfkit {

namespace {

// half-lag product row for time index i: r[m mod N] = u[i+m] conj(v[i-m]),
// zero where either index falls outside the record
void lag_row(const std::vector<cplx>& u, const std::vector<cplx>& v, std::size_t i,
             std::vector<cplx>& row) {
    const auto n = static_cast<std::ptrdiff_t>(row.size());
    const auto si = static_cast<std::ptrdiff_t>(i);
    for (std::ptrdiff_t m = -n / 2; m < n / 2; ++m) {
        const std::ptrdiff_t ip = si + m, im = si - m;
        const std::size_t mm = static_cast<std::size_t>(m >= 0 ? m : m + n);
        row[mm] = (ip >= 0 && ip < n && im >= 0 && im < n)
                      ? u[ip] * std::conj(v[im])
                      : cplx(0.0);
    }
}

CrossTFGrid cross_wvd_impl(const SampledSignal& u, const SampledSignal& v) {
    const std::size_t n = u.size();
    const double two_dt = 2.0 / u.sample_rate;

    CrossTFGrid W;
    W.n = n;
    W.values.resize(n * n);
    W.t_axis = u.time_axis();
    W.f_axis = axes::wvd_freq_axis(n, u.sample_rate);

    std::vector<cplx> row(n);
    for (std::size_t i = 0; i < n; ++i) {
        lag_row(u.samples, v.samples, i, row);
        fft::forward(row);
        // DFT bin k holds f = k fs/2N; rotate so column j is f_axis[j]
        for (std::size_t j = 0; j < n; ++j)
            W.values[i * n + j] = two_dt * row[(j + n / 2) % n];
    }
    return W;
}

}  // namespace

CrossTFGrid cross_wvd(const SampledSignal& u, const SampledSignal& v) {
    validate(u);
    validate(v);
    if (u.size() != v.size())
        throw std::invalid_argument("cross_wvd: length mismatch");
    if (u.sample_rate != v.sample_rate)
        throw std::invalid_argument("cross_wvd: sample rate mismatch");
    if (u.t0 != v.t0)
        throw std::invalid_argument("cross_wvd: time origin mismatch");
    return cross_wvd_impl(u, v);
}

TFGrid wvd(const SampledSignal& a) {
    validate(a);
    CrossTFGrid c = cross_wvd_impl(a, a);

    double peak = 0.0, max_imag = 0.0;
    for (const auto& z : c.values) {
        peak = std::max(peak, std::abs(z));
        max_imag = std::max(max_imag, std::abs(z.imag()));
    }
    if (peak > 0.0 && max_imag > 1e-10 * peak)
        throw std::domain_error("wvd: imaginary residue exceeds 1e-10 of peak");

    TFGrid W;
    W.n = c.n;
    W.t_axis = std::move(c.t_axis);
    W.f_axis = std::move(c.f_axis);
    W.values.resize(c.values.size());
    for (std::size_t i = 0; i < c.values.size(); ++i) W.values[i] = c.values[i].real();
    return W;
}

TFGrid gaussian_smooth(const TFGrid& W, double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("gaussian_smooth: alpha and beta must be positive");
    AmbGrid A = ambiguity_from_wvd(W);
    A = apply_kernel(A, make_gaussian_kernel(alpha, beta));
    return wvd_from_ambiguity(A);
}

}  // namespace tfkit
