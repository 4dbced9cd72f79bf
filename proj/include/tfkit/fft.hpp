#pragma once

#include <complex>
#include <vector>

namespace tfkit::fft {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

/// In-place unnormalized DFT, kernel e^{-j2*pi*nk/N}. Any length >= 1.
void forward(cvec& x);

/// In-place unnormalized inverse-kernel DFT, e^{+j2*pi*nk/N} (no 1/N).
void backward(cvec& x);

cvec forward_copy(const cvec& x);
cvec backward_copy(const cvec& x);

}  // namespace tfkit::fft
