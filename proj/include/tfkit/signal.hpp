#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace tfkit {

using cplx = std::complex<double>;

/// Uniformly sampled complex signal. Sample n lives at t0 + n/sample_rate.
/// Length must be even and >= 2 (the half-lag Wigner path needs it).
struct SampledSignal {
    std::vector<cplx> samples;
    double sample_rate = 0.0;  // Hz
    double t0 = 0.0;           // seconds, time of sample 0

    std::size_t size() const { return samples.size(); }
    double dt() const { return 1.0 / sample_rate; }
    double duration() const { return static_cast<double>(samples.size()) * dt(); }
    double time_at(std::size_t n) const { return t0 + static_cast<double>(n) * dt(); }
    std::vector<double> time_axis() const;
};

/// Throws std::invalid_argument if the signal violates its invariants.
void validate(const SampledSignal& x);

/// Validating constructor.
SampledSignal make_signal(std::vector<cplx> samples, double sample_rate, double t0);

enum class SignalKind { gaussian, lfm_chirp, tone, two_tone, two_component, from_file };

SignalKind signal_kind_from_string(const std::string& s);
std::string to_string(SignalKind k);

/// Recipe for the test-signal factory. Parameter keys (seconds/Hz):
///   center_time, center_frequency, width, chirp_rate, separation, t0.
/// Each kind rejects construction when a key it requires is missing.
struct SignalSpec {
    SignalKind kind = SignalKind::gaussian;
    std::map<std::string, double> parameters;
    std::size_t n = 0;
    double sample_rate = 0.0;
    std::string path;  // from_file only
};

/// Synthesize a signal. The gaussian kind is the minimum-uncertainty
/// waveform 2^{1/4} e^{-pi (t-tc)^2 / w^2} / sqrt(w), modulated to the
/// center frequency; lfm_chirp multiplies that envelope by e^{j pi k (t-tc)^2}.
SampledSignal generate(const SignalSpec& spec);

/// Raw ring DFT, kernel e^{-j2 pi nk/N}, unnormalized. idft applies 1/N so
/// idft(dft(x)) == x. Continuous-transform approximations (Delta-t scaling,
/// centered axes) live in spectrum().
std::vector<cplx> dft(const std::vector<cplx>& x);
std::vector<cplx> idft(const std::vector<cplx>& x);

struct Spectrum {
    std::vector<cplx> values;    // Delta-t * sum a[n] e^{-j2 pi f t_n}
    std::vector<double> f_axis;  // centered, spacing fs/N
};

/// Unitary-convention spectrum on the centered frequency grid f_k = (k - N/2) fs / N.
Spectrum spectrum(const SampledSignal& x);

/// Same quantity evaluated by direct summation at arbitrary frequencies.
std::vector<cplx> spectrum_on_axis(const SampledSignal& x, const std::vector<double>& f_axis);

/// Analytic signal: spectrum zeroed on negative bins, doubled on positive,
/// DC and Nyquist untouched. Input must be real-valued.
SampledSignal analytic(const SampledSignal& x);

/// sqrt( sum |x|^2 * Delta-t )
double norm2(const SampledSignal& x);

/// Scales to unit norm2. Throws std::domain_error on an all-zero signal.
SampledSignal normalize(const SampledSignal& x);

}  // namespace tfkit
