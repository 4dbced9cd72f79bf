#include "tfkit/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tfkit {

namespace axes {

std::vector<double> time_axis(std::size_t n, double fs, double t0) {
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = t0 + static_cast<double>(i) / fs;
    return t;
}

std::vector<double> wvd_freq_axis(std::size_t n, double fs) {
    std::vector<double> f(n);
    const double df = fs / (2.0 * static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        f[i] = (static_cast<double>(i) - static_cast<double>(n) / 2.0) * df;
    return f;
}

std::vector<double> tau_axis(std::size_t n, double fs) {
    std::vector<double> tau(n);
    const double dtau = 2.0 / fs;
    for (std::size_t i = 0; i < n; ++i)
        tau[i] = (static_cast<double>(i) - static_cast<double>(n) / 2.0) * dtau;
    return tau;
}

std::vector<double> nu_axis(std::size_t n, double fs) {
    std::vector<double> nu(n);
    const double dnu = fs / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        nu[i] = (static_cast<double>(i) - static_cast<double>(n) / 2.0) * dnu;
    return nu;
}

double uniform_spacing(const std::vector<double>& axis) {
    if (axis.size() < 2) throw std::invalid_argument("axis needs at least 2 points");
    const double d = axis[1] - axis[0];
    if (!(d > 0.0)) throw std::invalid_argument("axis must be strictly increasing");
    for (std::size_t i = 1; i < axis.size(); ++i) {
        const double di = axis[i] - axis[i - 1];
        if (std::abs(di - d) > 1e-9 * std::abs(d))
            throw std::invalid_argument("axis spacing is not uniform at index " + std::to_string(i));
    }
    return d;
}

}  // namespace axes

namespace {

template <typename G>
void validate_common(const G& g, const char* what) {
    const std::string name(what);
    if (g.n < 2) throw std::invalid_argument(name + ": n must be >= 2");
    if (g.values.size() != g.n * g.n)
        throw std::invalid_argument(name + ": values size does not match n*n");
}

template <typename T>
void check_finite(const std::vector<T>& v, const char* what) {
    for (const auto& x : v) {
        if constexpr (std::is_same_v<T, double>) {
            if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite value");
        } else {
            if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
                throw std::invalid_argument(std::string(what) + ": non-finite value");
        }
    }
}

}  // namespace

void validate(const TFGrid& g) {
    validate_common(g, "TFGrid");
    if (g.t_axis.size() != g.n || g.f_axis.size() != g.n)
        throw std::invalid_argument("TFGrid: axis length does not match n");
    axes::uniform_spacing(g.t_axis);
    axes::uniform_spacing(g.f_axis);
    check_finite(g.values, "TFGrid");
}

void validate(const CrossTFGrid& g) {
    validate_common(g, "CrossTFGrid");
    if (g.t_axis.size() != g.n || g.f_axis.size() != g.n)
        throw std::invalid_argument("CrossTFGrid: axis length does not match n");
    axes::uniform_spacing(g.t_axis);
    axes::uniform_spacing(g.f_axis);
    check_finite(g.values, "CrossTFGrid");
}

void validate(const AmbGrid& g) {
    validate_common(g, "AmbGrid");
    if (g.tau_axis.size() != g.n || g.nu_axis.size() != g.n)
        throw std::invalid_argument("AmbGrid: axis length does not match n");
    axes::uniform_spacing(g.tau_axis);
    axes::uniform_spacing(g.nu_axis);
    check_finite(g.values, "AmbGrid");
}

}  // namespace tfkit
