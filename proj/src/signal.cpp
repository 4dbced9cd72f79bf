#include "tfkit/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tfkit/detail/ctft.hpp"
#include "tfkit/fft.hpp"
#include "tfkit/io.hpp"

namespace tfkit {

namespace {

constexpr double pi = std::numbers::pi;

double param(const SignalSpec& spec, const std::string& key) {
    auto it = spec.parameters.find(key);
    if (it == spec.parameters.end())
        throw std::invalid_argument("generate: missing parameter '" + key + "' for kind " +
                                    to_string(spec.kind));
    return it->second;
}

double param_or(const SignalSpec& spec, const std::string& key, double fallback) {
    auto it = spec.parameters.find(key);
    return it == spec.parameters.end() ? fallback : it->second;
}

// unit-energy gaussian centered at (tc, fc): 2^{1/4} e^{-pi(t-tc)^2/w^2}/sqrt(w)
cplx gaussian_sample(double t, double tc, double fc, double w) {
    const double x = (t - tc) / w;
    const double env = std::pow(2.0, 0.25) / std::sqrt(w) * std::exp(-pi * x * x);
    const double ph = 2.0 * pi * fc * (t - tc);
    return env * cplx(std::cos(ph), std::sin(ph));
}

}  // namespace

std::vector<double> SampledSignal::time_axis() const {
    std::vector<double> t(samples.size());
    for (std::size_t n = 0; n < samples.size(); ++n) t[n] = time_at(n);
    return t;
}

void validate(const SampledSignal& x) {
    if (x.samples.size() < 2 || x.samples.size() % 2 != 0)
        throw std::invalid_argument("signal length must be even and >= 2, got " +
                                    std::to_string(x.samples.size()));
    if (!(x.sample_rate > 0.0) || !std::isfinite(x.sample_rate))
        throw std::invalid_argument("sample_rate must be positive and finite");
    if (!std::isfinite(x.t0)) throw std::invalid_argument("t0 must be finite");
    for (const auto& s : x.samples)
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
            throw std::invalid_argument("signal contains non-finite samples");
}

SampledSignal make_signal(std::vector<cplx> samples, double sample_rate, double t0) {
    SampledSignal x{std::move(samples), sample_rate, t0};
    validate(x);
    return x;
}

SignalKind signal_kind_from_string(const std::string& s) {
    if (s == "gaussian") return SignalKind::gaussian;
    if (s == "lfm_chirp") return SignalKind::lfm_chirp;
    if (s == "tone") return SignalKind::tone;
    if (s == "two_tone") return SignalKind::two_tone;
    if (s == "two_component") return SignalKind::two_component;
    if (s == "from_file") return SignalKind::from_file;
    throw std::invalid_argument("unknown signal kind: " + s);
}

std::string to_string(SignalKind k) {
    switch (k) {
        case SignalKind::gaussian: return "gaussian";
        case SignalKind::lfm_chirp: return "lfm_chirp";
        case SignalKind::tone: return "tone";
        case SignalKind::two_tone: return "two_tone";
        case SignalKind::two_component: return "two_component";
        case SignalKind::from_file: return "from_file";
    }
    return "?";
}

SampledSignal generate(const SignalSpec& spec) {
    if (spec.kind == SignalKind::from_file) {
        if (spec.path.empty()) throw std::invalid_argument("generate: from_file needs a path");
        return io::read_signal(spec.path);
    }

    if (spec.n < 2 || spec.n % 2 != 0)
        throw std::invalid_argument("generate: n must be even and >= 2");
    if (!(spec.sample_rate > 0.0))
        throw std::invalid_argument("generate: sample_rate must be positive");

    const std::size_t n = spec.n;
    const double fs = spec.sample_rate;
    const double dt = 1.0 / fs;
    const double T = static_cast<double>(n) * dt;
    const double t0 = param_or(spec, "t0", -0.5 * T);

    std::vector<cplx> s(n);
    switch (spec.kind) {
        case SignalKind::gaussian: {
            const double w = param(spec, "width");
            const double tc = param_or(spec, "center_time", 0.0);
            const double fc = param_or(spec, "center_frequency", 0.0);
            if (!(w > 0.0)) throw std::invalid_argument("generate: width must be positive");
            for (std::size_t i = 0; i < n; ++i)
                s[i] = gaussian_sample(t0 + i * dt, tc, fc, w);
            break;
        }
        case SignalKind::lfm_chirp: {
            const double w = param(spec, "width");
            const double k = param(spec, "chirp_rate");
            const double tc = param_or(spec, "center_time", 0.0);
            const double fc = param_or(spec, "center_frequency", 0.0);
            if (!(w > 0.0)) throw std::invalid_argument("generate: width must be positive");
            for (std::size_t i = 0; i < n; ++i) {
                const double t = t0 + i * dt;
                const double ph = pi * k * (t - tc) * (t - tc);
                s[i] = gaussian_sample(t, tc, fc, w) * cplx(std::cos(ph), std::sin(ph));
            }
            break;
        }
        case SignalKind::tone: {
            const double fc = param(spec, "center_frequency");
            const double amp = 1.0 / std::sqrt(T);
            for (std::size_t i = 0; i < n; ++i) {
                const double ph = 2.0 * pi * fc * (t0 + i * dt);
                s[i] = amp * cplx(std::cos(ph), std::sin(ph));
            }
            break;
        }
        case SignalKind::two_tone: {
            const double fc = param(spec, "center_frequency");
            const double sep = param(spec, "separation");
            const double amp = 1.0 / std::sqrt(2.0 * T);
            for (std::size_t i = 0; i < n; ++i) {
                const double t = t0 + i * dt;
                const double p1 = 2.0 * pi * (fc - 0.5 * sep) * t;
                const double p2 = 2.0 * pi * (fc + 0.5 * sep) * t;
                s[i] = amp * (cplx(std::cos(p1), std::sin(p1)) + cplx(std::cos(p2), std::sin(p2)));
            }
            break;
        }
        case SignalKind::two_component: {
            const double w = param(spec, "width");
            const double sep = param(spec, "separation");
            const double tc = param_or(spec, "center_time", 0.0);
            const double fc = param_or(spec, "center_frequency", 0.0);
            if (!(w > 0.0)) throw std::invalid_argument("generate: width must be positive");
            const double inv = 1.0 / std::sqrt(2.0);
            for (std::size_t i = 0; i < n; ++i) {
                const double t = t0 + i * dt;
                s[i] = inv * (gaussian_sample(t, tc - 0.5 * sep, fc, w) +
                              gaussian_sample(t, tc + 0.5 * sep, fc, w));
            }
            break;
        }
        case SignalKind::from_file:
            break;  // handled above
    }
    return make_signal(std::move(s), fs, t0);
}

std::vector<cplx> dft(const std::vector<cplx>& x) {
    if (x.empty()) throw std::invalid_argument("dft: empty input");
    return fft::forward_copy(x);
}

std::vector<cplx> idft(const std::vector<cplx>& x) {
    if (x.empty()) throw std::invalid_argument("idft: empty input");
    auto y = fft::backward_copy(x);
    const double scale = 1.0 / static_cast<double>(x.size());
    for (auto& v : y) v *= scale;
    return y;
}

Spectrum spectrum(const SampledSignal& x) {
    validate(x);
    const std::size_t n = x.size();
    const double dnu = x.sample_rate / static_cast<double>(n);

    Spectrum out;
    out.values = x.samples;
    detail::to_dual_minus(out.values, x.dt(), x.t0);
    out.f_axis.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        out.f_axis[k] = (static_cast<double>(k) - static_cast<double>(n) / 2.0) * dnu;
    return out;
}

std::vector<cplx> spectrum_on_axis(const SampledSignal& x, const std::vector<double>& f_axis) {
    validate(x);
    const double dt = x.dt();
    std::vector<cplx> out(f_axis.size());
    for (std::size_t k = 0; k < f_axis.size(); ++k) {
        cplx acc = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double ph = -2.0 * pi * f_axis[k] * x.time_at(i);
            acc += x.samples[i] * cplx(std::cos(ph), std::sin(ph));
        }
        out[k] = dt * acc;
    }
    return out;
}

SampledSignal analytic(const SampledSignal& x) {
    validate(x);
    double peak = 0.0, max_imag = 0.0;
    for (const auto& s : x.samples) {
        peak = std::max(peak, std::abs(s));
        max_imag = std::max(max_imag, std::abs(s.imag()));
    }
    if (peak > 0.0 && max_imag > 1e-12 * peak)
        throw std::invalid_argument("analytic: input is not real-valued");

    const std::size_t n = x.size();
    auto X = fft::forward_copy(x.samples);
    // one-sided spectrum: DC and Nyquist kept, positive bins doubled,
    // negative bins dropped
    for (std::size_t k = 1; k < n / 2; ++k) X[k] *= 2.0;
    for (std::size_t k = n / 2 + 1; k < n; ++k) X[k] = 0.0;
    fft::backward(X);
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : X) v *= scale;
    return SampledSignal{std::move(X), x.sample_rate, x.t0};
}

double norm2(const SampledSignal& x) {
    double acc = 0.0;
    for (const auto& s : x.samples) acc += std::norm(s);
    return std::sqrt(acc / x.sample_rate);
}

SampledSignal normalize(const SampledSignal& x) {
    const double nrm = norm2(x);
    if (nrm <= 0.0 || !std::isfinite(nrm))
        throw std::domain_error("normalize: signal has zero norm");
    SampledSignal y = x;
    for (auto& s : y.samples) s /= nrm;
    return y;
}

}  // namespace tfkit
