#pragma once

#include "tfkit/grid.hpp"
#include "tfkit/kernels.hpp"
#include "tfkit/signal.hpp"

namespace tfkit {

/// Exact discrete transform of a (t,f) grid onto its (delay, Doppler) dual:
/// A(tau, nu) = sum_t sum_f W(t,f) e^{+j2 pi nu t} dt e^{+j2 pi f tau} df.
/// wvd_from_ambiguity inverts it to round-off.
AmbGrid ambiguity_from_wvd(const TFGrid& W);

/// Inverse of ambiguity_from_wvd; returns the real part.
TFGrid wvd_from_ambiguity(const AmbGrid& A);

/// Full complex inverse (needed for complex-valued kernels).
CrossTFGrid wvd_from_ambiguity_complex(const AmbGrid& A);

/// Lag-product estimator A(2m dt, nu) = dt * sum_n a[n+m] conj(a[n-m]) e^{j2 pi nu t_n}.
/// Independent of the transform path; kept as its cross-check oracle.
AmbGrid direct_ambiguity(const SampledSignal& a);

/// Pointwise product with the kernel evaluated on the grid's axes.
AmbGrid apply_kernel(const AmbGrid& A, const Kernel& g);

}  // namespace tfkit
