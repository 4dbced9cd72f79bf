#pragma once

#include "tfkit/grid.hpp"
#include "tfkit/kernels.hpp"
#include "tfkit/signal.hpp"

namespace tfkit {

/// Quadratic TFD: Wigner-Ville filtered by the kernel in the ambiguity
/// domain (wvd -> ambiguity -> pointwise product -> back). Returns the full
/// complex grid; complex-valued kernels (rihaczek, levin, page) produce
/// genuinely complex distributions.
CrossTFGrid compute_tfd_complex(const SampledSignal& a, const Kernel& g);

/// Real part of the above. For real-valued kernels the imaginary residue is
/// required to stay below 1e-8 of the peak.
TFGrid compute_tfd(const SampledSignal& a, const Kernel& g);

/// Riemann sums along the frequency axis: marginal[n] = sum_k rho[n,k] df.
std::vector<double> time_marginal(const TFGrid& rho);

/// marginal[k] = sum_n rho[n,k] dt.
std::vector<double> freq_marginal(const TFGrid& rho);

struct MinScan {
    double value = 0.0;
    double t = 0.0;
    double f = 0.0;
    std::size_t time_index = 0;
    std::size_t freq_index = 0;
};

/// Exact grid minimum with its location.
MinScan min_scan(const TFGrid& rho);

}  // namespace tfkit
