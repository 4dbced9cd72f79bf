#pragma once

#include "tfkit/grid.hpp"
#include "tfkit/signal.hpp"

namespace tfkit {

/// Discrete Wigner-Ville distribution, half-lag convention:
/// W[n,k] = 2 dt * sum_m a[n+m] conj(a[n-m]) e^{-j2 pi m k / N}
/// on the centered frequency lattice f_k = (k - N/2) fs / 2N, with
/// zero-padding outside the record. Both marginals are exact sums.
TFGrid wvd(const SampledSignal& a);

/// Cross form, u != v allowed; cross_wvd(u,u) equals wvd(u) and
/// cross_wvd(u,v) = conj(cross_wvd(v,u)).
CrossTFGrid cross_wvd(const SampledSignal& u, const SampledSignal& v);

/// Separable Gaussian smoothing, executed in the ambiguity domain
/// (multiply by e^{-pi(alpha nu^2 + beta tau^2)}, transform back).
/// Smoothing twice with (alpha, beta) then (alpha', beta') equals one pass
/// with the summed parameters.
TFGrid gaussian_smooth(const TFGrid& W, double alpha, double beta);

}  // namespace tfkit
