#include "tfkit/detail/ctft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tfkit/fft.hpp"

namespace tfkit::detail {

namespace {

constexpr double pi = std::numbers::pi;

void check(const std::vector<cplx>& v, double dx) {
    if (v.size() < 2 || v.size() % 2 != 0)
        throw std::invalid_argument("ctft: length must be even and >= 2");
    if (!(dx > 0.0)) throw std::invalid_argument("ctft: spacing must be positive");
}

void twist_alternate(std::vector<cplx>& v) {
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
}

// multiply element i by scale * e^{j * sign * 2 pi xi_i x0}
void apply_origin_phase(std::vector<cplx>& v, double dxi, double x0, double scale, int sign) {
    const double half = static_cast<double>(v.size()) / 2.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double xi = (static_cast<double>(i) - half) * dxi;
        const double ph = sign * 2.0 * pi * xi * x0;
        v[i] *= scale * cplx(std::cos(ph), std::sin(ph));
    }
}

}  // namespace

void to_dual_plus(std::vector<cplx>& v, double dx, double x0) {
    check(v, dx);
    const double dxi = 1.0 / (dx * static_cast<double>(v.size()));
    twist_alternate(v);
    fft::backward(v);
    apply_origin_phase(v, dxi, x0, dx, +1);
}

void from_dual_plus(std::vector<cplx>& v, double dx, double x0) {
    check(v, dx);
    const double dxi = 1.0 / (dx * static_cast<double>(v.size()));
    apply_origin_phase(v, dxi, x0, 1.0, -1);
    fft::forward(v);
    twist_alternate(v);
    for (auto& z : v) z *= dxi;
}

void to_dual_minus(std::vector<cplx>& v, double dx, double x0) {
    check(v, dx);
    const double dxi = 1.0 / (dx * static_cast<double>(v.size()));
    twist_alternate(v);
    fft::forward(v);
    apply_origin_phase(v, dxi, x0, dx, -1);
}

void from_dual_minus(std::vector<cplx>& v, double dx, double x0) {
    check(v, dx);
    const double dxi = 1.0 / (dx * static_cast<double>(v.size()));
    apply_origin_phase(v, dxi, x0, 1.0, +1);
    fft::backward(v);
    twist_alternate(v);
    for (auto& z : v) z *= dxi;
}

}  // namespace tfkit::detail
