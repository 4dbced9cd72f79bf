#include "tfkit/ambiguity.hpp"

#include <cmath>
#include <stdexcept>

#include "tfkit/detail/ctft.hpp"

namespace tfkit {

namespace {

// gathers column `col` of a row-major n*n matrix into buf
void gather_col(const std::vector<cplx>& m, std::size_t n, std::size_t col, std::vector<cplx>& buf) {
    for (std::size_t r = 0; r < n; ++r) buf[r] = m[r * n + col];
}

void scatter_col(std::vector<cplx>& m, std::size_t n, std::size_t col, const std::vector<cplx>& buf) {
    for (std::size_t r = 0; r < n; ++r) m[r * n + col] = buf[r];
}

}  // namespace

AmbGrid ambiguity_from_wvd(const TFGrid& W) {
    validate(W);
    const std::size_t n = W.n;
    const double dt = W.dt();
    const double df = W.df();
    const double t0 = W.t_axis[0];
    const double f0 = W.f_axis[0];
    const double fs = 1.0 / dt;

    std::vector<cplx> m(W.values.begin(), W.values.end());

    // t -> nu along columns
    std::vector<cplx> buf(n);
    for (std::size_t k = 0; k < n; ++k) {
        gather_col(m, n, k, buf);
        detail::to_dual_plus(buf, dt, t0);
        scatter_col(m, n, k, buf);
    }

    // f -> tau along rows; output row index is tau, column index nu
    AmbGrid A;
    A.n = n;
    A.values.resize(n * n);
    A.t_origin = t0;
    A.f_origin = f0;
    A.sample_rate = fs;

    // dual lattices: nu from the t axis, tau from the f axis. For the Wigner
    // frequency axis (spacing fs/2N) tau lands exactly on the even lags 2m/fs.
    const double dnu = 1.0 / (dt * static_cast<double>(n));
    const double dtau = 1.0 / (df * static_cast<double>(n));
    A.nu_axis.resize(n);
    A.tau_axis.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double centered = static_cast<double>(i) - static_cast<double>(n) / 2.0;
        A.nu_axis[i] = centered * dnu;
        A.tau_axis[i] = centered * dtau;
    }

    for (std::size_t inu = 0; inu < n; ++inu) {
        for (std::size_t k = 0; k < n; ++k) buf[k] = m[inu * n + k];
        detail::to_dual_plus(buf, df, f0);
        for (std::size_t itau = 0; itau < n; ++itau) A.values[itau * n + inu] = buf[itau];
    }
    return A;
}

CrossTFGrid wvd_from_ambiguity_complex(const AmbGrid& A) {
    validate(A);
    const std::size_t n = A.n;
    const double dtau = A.dtau();
    const double dnu = A.dnu();
    const double df = 1.0 / (dtau * static_cast<double>(n));
    const double dt = 1.0 / (dnu * static_cast<double>(n));

    // tau -> f along columns of the [tau][nu] layout, writing back into a
    // [nu][f] intermediate, then nu -> t.
    std::vector<cplx> m(n * n);
    std::vector<cplx> buf(n);
    for (std::size_t inu = 0; inu < n; ++inu) {
        for (std::size_t itau = 0; itau < n; ++itau) buf[itau] = A.values[itau * n + inu];
        detail::from_dual_plus(buf, df, A.f_origin);
        for (std::size_t k = 0; k < n; ++k) m[inu * n + k] = buf[k];
    }

    CrossTFGrid W;
    W.n = n;
    W.values.resize(n * n);
    W.t_axis = axes::time_axis(n, 1.0 / dt, A.t_origin);
    W.f_axis.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        W.f_axis[k] = A.f_origin + static_cast<double>(k) * df;

    for (std::size_t k = 0; k < n; ++k) {
        gather_col(m, n, k, buf);
        detail::from_dual_plus(buf, dt, A.t_origin);
        scatter_col(W.values, n, k, buf);
    }
    return W;
}

TFGrid wvd_from_ambiguity(const AmbGrid& A) {
    CrossTFGrid c = wvd_from_ambiguity_complex(A);
    TFGrid W;
    W.n = c.n;
    W.t_axis = std::move(c.t_axis);
    W.f_axis = std::move(c.f_axis);
    W.values.resize(c.values.size());
    for (std::size_t i = 0; i < c.values.size(); ++i) W.values[i] = c.values[i].real();
    return W;
}

AmbGrid direct_ambiguity(const SampledSignal& a) {
    validate(a);
    const std::size_t n = a.size();
    const auto half = static_cast<std::ptrdiff_t>(n / 2);
    const double dt = a.dt();

    AmbGrid A;
    A.n = n;
    A.values.resize(n * n);
    A.tau_axis = axes::tau_axis(n, a.sample_rate);
    A.nu_axis = axes::nu_axis(n, a.sample_rate);
    A.t_origin = a.t0;
    A.f_origin = axes::wvd_freq_axis(n, a.sample_rate)[0];
    A.sample_rate = a.sample_rate;

    std::vector<cplx> row(n);
    for (std::ptrdiff_t m = -half; m < half; ++m) {
        const auto sn = static_cast<std::ptrdiff_t>(n);
        for (std::ptrdiff_t i = 0; i < sn; ++i) {
            const std::ptrdiff_t ip = i + m, im = i - m;
            row[i] = (ip >= 0 && ip < sn && im >= 0 && im < sn)
                         ? a.samples[ip] * std::conj(a.samples[im])
                         : cplx(0.0);
        }
        detail::to_dual_plus(row, dt, a.t0);
        const std::size_t itau = static_cast<std::size_t>(m + half);
        for (std::size_t inu = 0; inu < n; ++inu) A.values[itau * n + inu] = row[inu];
    }
    return A;
}

AmbGrid apply_kernel(const AmbGrid& A, const Kernel& g) {
    validate(A);
    if (!g.evaluate) throw std::invalid_argument("apply_kernel: kernel has no evaluate function");
    AmbGrid out = A;
    for (std::size_t itau = 0; itau < A.n; ++itau) {
        const double tau = A.tau_axis[itau];
        for (std::size_t inu = 0; inu < A.n; ++inu) {
            const cplx gv = g.evaluate(tau, A.nu_axis[inu]);
            if (!std::isfinite(gv.real()) || !std::isfinite(gv.imag()))
                throw std::domain_error("apply_kernel: kernel '" + g.name +
                                        "' is not finite at a grid point");
            out.values[itau * A.n + inu] *= gv;
        }
    }
    return out;
}

}  // namespace tfkit
