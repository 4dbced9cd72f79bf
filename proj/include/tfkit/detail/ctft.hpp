#pragma once

#include <complex>
#include <vector>

namespace tfkit::detail {

using cplx = std::complex<double>;

// Discrete approximations of the continuous Fourier pair on centered lattices.
// Input samples g[n] live at x_n = x0 + n*dx; the dual lattice is
// xi_i = (i - N/2) / (N*dx). Each *_dual call is the exact inverse of its
// partner, including the x0 phase bookkeeping.

/// G[i] = dx * sum_n g[n] e^{+j 2 pi xi_i x_n}
void to_dual_plus(std::vector<cplx>& v, double dx, double x0);

/// g[n] = dxi * sum_i G[i] e^{-j 2 pi xi_i x_n}  — inverse of to_dual_plus
void from_dual_plus(std::vector<cplx>& v, double dx, double x0);

/// G[i] = dx * sum_n g[n] e^{-j 2 pi xi_i x_n}
void to_dual_minus(std::vector<cplx>& v, double dx, double x0);

/// g[n] = dxi * sum_i G[i] e^{+j 2 pi xi_i x_n}  — inverse of to_dual_minus
void from_dual_minus(std::vector<cplx>& v, double dx, double x0);

}  // namespace tfkit::detail
