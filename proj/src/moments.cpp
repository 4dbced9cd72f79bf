#include "tfkit/moments.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "tfkit/grid.hpp"

namespace tfkit {

namespace {

constexpr double pi = std::numbers::pi;

double clip_tiny_negative(double var, double scale, const char* what) {
    if (var >= 0.0) return var;
    if (var >= -1e-10 * std::max(scale, 1.0)) {
        std::cerr << "tfkit: clipping tiny negative " << what << " (" << var << ") to 0\n";
        return 0.0;
    }
    return var;
}

}  // namespace

CovarianceMatrix covariance(const TFGrid& rho) {
    validate(rho);
    const std::size_t n = rho.n;
    const double cell = rho.dt() * rho.df();

    double mass = 0.0, abs_mass = 0.0;
    double st = 0.0, sf = 0.0, stt = 0.0, sff = 0.0, stf = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = rho.t_axis[i];
        double row = 0.0, row_f = 0.0, row_ff = 0.0, row_abs = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double v = rho.values[i * n + k];
            const double f = rho.f_axis[k];
            row += v;
            row_f += v * f;
            row_ff += v * f * f;
            row_abs += std::abs(v);
        }
        mass += row;
        abs_mass += row_abs;
        st += t * row;
        stt += t * t * row;
        sf += row_f;
        sff += row_ff;
        stf += t * row_f;
    }
    mass *= cell;
    abs_mass *= cell;
    st *= cell;
    sf *= cell;
    stt *= cell;
    sff *= cell;
    stf *= cell;

    if (!(mass > 0.0)) throw std::domain_error("covariance: non-positive total mass");
    if (mass < 1e-6 * abs_mass)
        throw std::domain_error("covariance: total mass below 1e-6 of grid energy");

    CovarianceMatrix C;
    C.total_mass = mass;
    C.mean_t = st / mass;
    C.mean_f = sf / mass;
    C.var_t = clip_tiny_negative(stt / mass - C.mean_t * C.mean_t, std::abs(stt / mass), "var_t");
    C.var_f = clip_tiny_negative(sff / mass - C.mean_f * C.mean_f, std::abs(sff / mass), "var_f");
    C.cov_tf = stf / mass - C.mean_t * C.mean_f;
    return C;
}

HeisenbergResult heisenberg_check(const SampledSignal& a, double tolerance) {
    validate(a);
    const double energy = norm2(a) * norm2(a);
    if (energy < 1e-30) throw std::domain_error("heisenberg_check: signal is degenerate");

    const double dt = a.dt();
    double mt = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        mt += a.time_at(i) * std::norm(a.samples[i]) * dt;
    mt /= energy;
    double spread_t = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a.time_at(i) - mt;
        spread_t += d * d * std::norm(a.samples[i]) * dt;
    }

    const Spectrum sp = spectrum(a);
    const double dnu = sp.f_axis[1] - sp.f_axis[0];
    double fmass = 0.0, mf = 0.0;
    for (std::size_t k = 0; k < sp.values.size(); ++k) {
        const double p = std::norm(sp.values[k]) * dnu;
        fmass += p;
        mf += sp.f_axis[k] * p;
    }
    mf /= fmass;
    double spread_f = 0.0;
    for (std::size_t k = 0; k < sp.values.size(); ++k) {
        const double d = sp.f_axis[k] - mf;
        spread_f += d * d * std::norm(sp.values[k]) * dnu;
    }

    HeisenbergResult r;
    r.lhs = spread_t * spread_f;
    r.rhs = energy * energy / (16.0 * pi * pi);
    r.ratio = r.lhs / r.rhs;
    r.pass = r.lhs >= r.rhs * (1.0 - tolerance);
    return r;
}

Relation1Result relation1_check(const TFGrid& rho, const SampledSignal& a, const Kernel& g,
                                std::optional<double> t0, std::optional<double> f0,
                                double tolerance) {
    validate(rho);
    validate(a);
    const std::size_t n = rho.n;
    if (n != a.size())
        throw std::invalid_argument("relation1_check: grid and signal sizes differ");
    if (!is_time_marginal(g, axes::nu_axis(n, a.sample_rate)) ||
        !is_freq_marginal(g, axes::tau_axis(n, a.sample_rate)))
        throw std::invalid_argument(
            "relation1_check: kernel '" + g.name +
            "' does not satisfy both marginal conditions; the relation does not apply");

    const double energy = norm2(a) * norm2(a);
    if (energy < 1e-30) throw std::domain_error("relation1_check: signal is degenerate");
    const double cell = rho.dt() * rho.df();

    double mass = 0.0;
    for (const double v : rho.values) mass += v;
    mass *= cell;
    if (!(mass > 0.0)) throw std::domain_error("relation1_check: non-positive grid mass");
    const double scale = energy / mass;  // renormalize grid mass to ||a||^2

    double ct, cf;
    if (t0 && f0) {
        ct = *t0;
        cf = *f0;
    } else {
        const CovarianceMatrix C = covariance(rho);
        ct = t0.value_or(C.mean_t);
        cf = f0.value_or(C.mean_f);
    }

    double lhs = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dtt = rho.t_axis[i] - ct;
        double row = 0.0, row_w = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double v = rho.values[i * n + k];
            const double dff = rho.f_axis[k] - cf;
            row += v;
            row_w += v * dff * dff;
        }
        lhs += dtt * dtt * row + row_w;
    }
    lhs *= cell * scale;

    Relation1Result r;
    r.lhs = lhs;
    r.rhs = energy / (2.0 * pi);
    r.ratio = r.lhs / r.rhs;
    r.t0 = ct;
    r.f0 = cf;
    r.pass = r.lhs >= r.rhs * (1.0 - tolerance);
    return r;
}

StrongUncertaintyResult strong_uncertainty_check(const CovarianceMatrix& C) {
    StrongUncertaintyResult r;
    r.det = C.var_t * C.var_f - C.cov_tf * C.cov_tf - hbar_eff * hbar_eff / 4.0;
    const double tol = 1e-4 * C.var_t * C.var_f;
    r.psd = (r.det >= -tol) && (C.var_t + C.var_f >= 0.0);
    return r;
}

}  // namespace tfkit
