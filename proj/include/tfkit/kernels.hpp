#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tfkit/signal.hpp"

namespace tfkit {

/// Ambiguity-domain filter g(tau, nu). Immutable value object; evaluation is
/// pure. When `separable` is set, evaluate(tau, nu) == g1_nu(nu) * g2_tau(tau).
struct Kernel {
    std::string name;
    std::map<std::string, double> params;
    std::function<cplx(double tau, double nu)> evaluate;

    struct Separable {
        std::function<cplx(double nu)> g1_nu;
        std::function<cplx(double tau)> g2_tau;
    };
    std::optional<Separable> separable;

    bool real_valued = false;
};

Kernel make_wigner_kernel();

/// Separable Gaussian pair e^{-pi alpha nu^2} e^{-pi beta tau^2}; the
/// time/frequency smoothing widths are alpha and beta with unit-integral
/// normalization, so g(0,0) = 1 and energy is preserved.
Kernel make_gaussian_kernel(double alpha, double beta);

Kernel make_rihaczek_kernel();  // e^{+j pi tau nu}
Kernel make_levin_kernel();     // e^{-j pi |tau| nu}
Kernel make_page_kernel();      // e^{+j pi |tau| nu}, conjugate of levin
Kernel make_born_jordan_kernel();  // sin(pi tau nu)/(pi tau nu), 1 at tau nu = 0

/// Kernel whose filtered distribution is the spectrogram with the given
/// window: g(tau, nu) = A_w(-tau, -nu), the window's self-ambiguity reflected
/// through the origin. The window is normalized to unit energy so g(0,0) = 1.
Kernel make_spectrogram_kernel(const SampledSignal& window);

struct KernelSpec {
    std::string name;
    std::map<std::string, double> params;
};

/// Parses CLI syntax "name[:key=val,...]", e.g. "gaussian:alpha=0.6,beta=0.5".
KernelSpec parse_kernel_spec(const std::string& text);

/// Builds a kernel from a parsed spec. The spectrogram kernel needs a grid
/// to synthesize its window on; pass the signal it will be applied to.
Kernel make_kernel(const KernelSpec& spec, const SampledSignal* grid_context = nullptr);

/// g(0, nu) == 1 over every nu in the grid, to 1e-10.
bool is_time_marginal(const Kernel& g, const std::vector<double>& nu_axis);

/// g(tau, 0) == 1 over every tau in the grid, to 1e-10.
bool is_freq_marginal(const Kernel& g, const std::vector<double>& tau_axis);

}  // namespace tfkit
