#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace tfkit {

using cplx = std::complex<double>;

/// Real-valued matrix over a (time, frequency) lattice. Row-major,
/// rows indexed by time. A Riemann sum of the values with cell
/// dt*df approximates the signal energy.
struct TFGrid {
    std::size_t n = 0;
    std::vector<double> values;  // values[it * n + ifr]
    std::vector<double> t_axis;  // seconds, strictly increasing, uniform
    std::vector<double> f_axis;  // Hz, strictly increasing, uniform

    double at(std::size_t it, std::size_t ifr) const { return values[it * n + ifr]; }
    double& at(std::size_t it, std::size_t ifr) { return values[it * n + ifr]; }
    double dt() const { return t_axis[1] - t_axis[0]; }
    double df() const { return f_axis[1] - f_axis[0]; }
};

/// Complex variant (cross-Wigner grids, complex-kernel TFDs).
struct CrossTFGrid {
    std::size_t n = 0;
    std::vector<cplx> values;
    std::vector<double> t_axis;
    std::vector<double> f_axis;

    cplx at(std::size_t it, std::size_t ifr) const { return values[it * n + ifr]; }
    cplx& at(std::size_t it, std::size_t ifr) { return values[it * n + ifr]; }
    double dt() const { return t_axis[1] - t_axis[0]; }
    double df() const { return f_axis[1] - f_axis[0]; }
};

/// Complex matrix over the (delay, Doppler) lattice dual to a TFGrid.
/// Rows indexed by delay. t_origin/f_origin record the first points of the
/// (t, f) axes this grid corresponds to; the exact inverse transform needs
/// them to land back on the same lattice.
struct AmbGrid {
    std::size_t n = 0;
    std::vector<cplx> values;      // values[itau * n + inu]
    std::vector<double> tau_axis;  // seconds
    std::vector<double> nu_axis;   // Hz
    double t_origin = 0.0;
    double f_origin = 0.0;
    double sample_rate = 0.0;

    cplx at(std::size_t itau, std::size_t inu) const { return values[itau * n + inu]; }
    cplx& at(std::size_t itau, std::size_t inu) { return values[itau * n + inu]; }
    double dtau() const { return tau_axis[1] - tau_axis[0]; }
    double dnu() const { return nu_axis[1] - nu_axis[0]; }
};

namespace axes {

/// t[n] = t0 + n / fs
std::vector<double> time_axis(std::size_t n, double fs, double t0);

/// Wigner frequency lattice: (k - N/2) * fs / (2N). Spans half the sampled
/// band; the half-lag discretization renders only this band.
std::vector<double> wvd_freq_axis(std::size_t n, double fs);

/// Delay lattice dual to the Wigner frequency axis: (i - N/2) * 2 / fs.
std::vector<double> tau_axis(std::size_t n, double fs);

/// Doppler lattice dual to the time axis: (i - N/2) * fs / N.
std::vector<double> nu_axis(std::size_t n, double fs);

/// Uniform spacing of a strictly increasing axis; throws std::invalid_argument
/// if the axis is not uniform to 1e-9 relative.
double uniform_spacing(const std::vector<double>& axis);

}  // namespace axes

void validate(const TFGrid& g);
void validate(const CrossTFGrid& g);
void validate(const AmbGrid& g);

}  // namespace tfkit
