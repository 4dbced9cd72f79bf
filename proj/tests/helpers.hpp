#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "tfkit/grid.hpp"
#include "tfkit/signal.hpp"
#include "tfkit/symplectic.hpp"

// Shared fixtures and independent oracles. Everything here must stay
// implementation-free: closed forms and direct Riemann sums only, so the
// library paths they check remain honestly cross-validated.
namespace th {

constexpr double pi = std::numbers::pi;

// desk-scale grid used throughout: 1024 samples at 32 Hz, centered window,
// which also makes the time/frequency lattices self-dual
constexpr std::size_t kN = 1024;
constexpr double kFs = 32.0;

inline tfkit::SampledSignal gaussian_signal(double width = 1.0, double tc = 0.0, double fc = 0.0,
                                            std::size_t n = kN, double fs = kFs) {
    tfkit::SignalSpec s;
    s.kind = tfkit::SignalKind::gaussian;
    s.n = n;
    s.sample_rate = fs;
    s.parameters = {{"width", width}, {"center_time", tc}, {"center_frequency", fc}};
    return tfkit::generate(s);
}

inline tfkit::SampledSignal chirp_signal(double rate, double width = 1.0, std::size_t n = kN,
                                         double fs = kFs) {
    tfkit::SignalSpec s;
    s.kind = tfkit::SignalKind::lfm_chirp;
    s.n = n;
    s.sample_rate = fs;
    s.parameters = {{"width", width}, {"chirp_rate", rate}};
    return tfkit::generate(s);
}

inline tfkit::SampledSignal two_component_signal(double sep = 2.0, double width = 1.0,
                                                 std::size_t n = kN, double fs = kFs) {
    tfkit::SignalSpec s;
    s.kind = tfkit::SignalKind::two_component;
    s.n = n;
    s.sample_rate = fs;
    s.parameters = {{"width", width}, {"separation", sep}};
    return tfkit::generate(s);
}

inline tfkit::SampledSignal tone_signal(double fc, std::size_t n = kN, double fs = kFs) {
    tfkit::SignalSpec s;
    s.kind = tfkit::SignalKind::tone;
    s.n = n;
    s.sample_rate = fs;
    s.parameters = {{"center_frequency", fc}};
    return tfkit::generate(s);
}

inline tfkit::SampledSignal random_signal(std::size_t n, double fs, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<tfkit::cplx> v(n);
    for (auto& z : v) z = tfkit::cplx(gauss(rng), gauss(rng));
    return tfkit::make_signal(std::move(v), fs, -0.5 * static_cast<double>(n) / fs);
}

// closed-form oracles for the unit gaussian 2^{1/4} e^{-pi t^2}
inline double gauss_wvd(double t, double f) { return 2.0 * std::exp(-2.0 * pi * (t * t + f * f)); }
inline double gauss_amb_abs(double tau, double nu) {
    return std::exp(-0.5 * pi * (tau * tau + nu * nu));
}
inline double gauss_spectrum(double f) { return std::pow(2.0, 0.25) * std::exp(-pi * f * f); }

inline double grid_peak(const std::vector<double>& v) {
    double p = 0.0;
    for (double x : v) p = std::max(p, std::abs(x));
    return p;
}

inline double grid_peak(const std::vector<tfkit::cplx>& v) {
    double p = 0.0;
    for (const auto& x : v) p = std::max(p, std::abs(x));
    return p;
}

// sum |got - want| / sum |want|
inline double rel_energy_err(const std::vector<double>& got, const std::vector<double>& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num += std::abs(got[i] - want[i]);
        den += std::abs(want[i]);
    }
    return den > 0.0 ? num / den : num;
}

// direct Riemann moments of |a(t)|^2 — the marginal-side oracle
struct SignalMoments {
    double mass, mean, var;
};
inline SignalMoments time_moments(const tfkit::SampledSignal& a) {
    const double dt = a.dt();
    double m = 0.0, s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double p = std::norm(a.samples[i]) * dt;
        const double t = a.time_at(i);
        m += p;
        s1 += t * p;
        s2 += t * t * p;
    }
    const double mean = s1 / m;
    return {m, mean, s2 / m - mean * mean};
}

// random det-1 matrix, entries uniform in [-3,3] with rejection
inline tfkit::SL2Matrix random_sl2(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (;;) {
        const double a = u(rng), b = u(rng), c = u(rng);
        if (std::abs(a) < 1e-2) continue;
        const double d = (1.0 + b * c) / a;
        if (std::abs(d) > 3.0) continue;
        return {a, b, c, d};
    }
}

}  // namespace th
