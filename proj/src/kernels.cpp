#include "tfkit/kernels.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "tfkit/ambiguity.hpp"
#include "tfkit/grid.hpp"

namespace tfkit {

namespace {

constexpr double pi = std::numbers::pi;

double sinc_pi(double x) {
    // sin(pi x)/(pi x), continuous extension at 0
    const double px = pi * x;
    if (std::abs(px) < 1e-8) return 1.0 - px * px / 6.0;
    return std::sin(px) / px;
}

// Window self-ambiguity, cached on the window's own lattice. evaluate()
// snaps to the lattice when the query lands on it; otherwise it falls back
// to the lag-product sum (even lags exactly, linear in tau between them).
class WindowAmbiguity {
public:
    explicit WindowAmbiguity(SampledSignal window)
        : window_(std::move(window)), grid_(direct_ambiguity(window_)) {}

    cplx value(double tau, double nu) const {
        const double dtau = grid_.dtau();
        const double dnu = grid_.dnu();
        const double itau = tau / dtau + static_cast<double>(grid_.n) / 2.0;
        const double inu = nu / dnu + static_cast<double>(grid_.n) / 2.0;
        const double ri = std::round(itau), rj = std::round(inu);
        if (std::abs(itau - ri) < 1e-9 && std::abs(inu - rj) < 1e-9 && ri >= 0.0 && rj >= 0.0 &&
            ri < static_cast<double>(grid_.n) && rj < static_cast<double>(grid_.n)) {
            return grid_.at(static_cast<std::size_t>(ri), static_cast<std::size_t>(rj));
        }
        return off_lattice(tau, nu);
    }

    bool real_valued() const {
        double peak = 0.0, max_imag = 0.0;
        for (const auto& z : grid_.values) {
            peak = std::max(peak, std::abs(z));
            max_imag = std::max(max_imag, std::abs(z.imag()));
        }
        return peak == 0.0 || max_imag < 1e-10 * peak;
    }

private:
    cplx lag_sum(std::ptrdiff_t m, double nu) const {
        const auto n = static_cast<std::ptrdiff_t>(window_.size());
        cplx acc = 0.0;
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const std::ptrdiff_t ip = i + m, im = i - m;
            if (ip < 0 || ip >= n || im < 0 || im >= n) continue;
            const double ph = 2.0 * pi * nu * window_.time_at(static_cast<std::size_t>(i));
            acc += window_.samples[ip] * std::conj(window_.samples[im]) *
                   cplx(std::cos(ph), std::sin(ph));
        }
        return acc * window_.dt();
    }

    cplx off_lattice(double tau, double nu) const {
        const double dtau = 2.0 * window_.dt();
        const double x = tau / dtau;
        const double fl = std::floor(x);
        const auto m0 = static_cast<std::ptrdiff_t>(fl);
        const double w = x - fl;
        if (std::abs(w) < 1e-12) return lag_sum(m0, nu);
        return (1.0 - w) * lag_sum(m0, nu) + w * lag_sum(m0 + 1, nu);
    }

    SampledSignal window_;
    AmbGrid grid_;
};

}  // namespace

Kernel make_wigner_kernel() {
    Kernel k;
    k.name = "wigner";
    k.evaluate = [](double, double) { return cplx(1.0); };
    k.separable = Kernel::Separable{[](double) { return cplx(1.0); },
                                    [](double) { return cplx(1.0); }};
    k.real_valued = true;
    return k;
}

Kernel make_gaussian_kernel(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("gaussian kernel: alpha and beta must be positive");
    Kernel k;
    k.name = "gaussian";
    k.params = {{"alpha", alpha}, {"beta", beta}};
    k.evaluate = [alpha, beta](double tau, double nu) {
        return cplx(std::exp(-pi * (alpha * nu * nu + beta * tau * tau)));
    };
    k.separable = Kernel::Separable{
        [alpha](double nu) { return cplx(std::exp(-pi * alpha * nu * nu)); },
        [beta](double tau) { return cplx(std::exp(-pi * beta * tau * tau)); }};
    k.real_valued = true;
    return k;
}

Kernel make_rihaczek_kernel() {
    Kernel k;
    k.name = "rihaczek";
    k.evaluate = [](double tau, double nu) {
        const double ph = pi * tau * nu;
        return cplx(std::cos(ph), std::sin(ph));
    };
    k.real_valued = false;
    return k;
}

Kernel make_levin_kernel() {
    Kernel k;
    k.name = "levin";
    k.evaluate = [](double tau, double nu) {
        const double ph = -pi * std::abs(tau) * nu;
        return cplx(std::cos(ph), std::sin(ph));
    };
    k.real_valued = false;
    return k;
}

Kernel make_page_kernel() {
    // conjugate sign convention relative to levin
    Kernel k;
    k.name = "page";
    k.evaluate = [](double tau, double nu) {
        const double ph = pi * std::abs(tau) * nu;
        return cplx(std::cos(ph), std::sin(ph));
    };
    k.real_valued = false;
    return k;
}

Kernel make_born_jordan_kernel() {
    Kernel k;
    k.name = "born_jordan";
    k.evaluate = [](double tau, double nu) { return cplx(sinc_pi(tau * nu)); };
    k.real_valued = true;
    return k;
}

Kernel make_spectrogram_kernel(const SampledSignal& window) {
    validate(window);
    auto amb = std::make_shared<WindowAmbiguity>(normalize(window));
    Kernel k;
    k.name = "spectrogram";
    // g(tau,nu) = A_w(-tau,-nu) = conj(A_w(tau,nu)) by Hermitian symmetry
    k.evaluate = [amb](double tau, double nu) { return std::conj(amb->value(tau, nu)); };
    k.real_valued = amb->real_valued();
    return k;
}

KernelSpec parse_kernel_spec(const std::string& text) {
    KernelSpec spec;
    const auto colon = text.find(':');
    spec.name = text.substr(0, colon);
    if (spec.name.empty()) throw std::invalid_argument("kernel spec: empty name");
    if (colon == std::string::npos) return spec;

    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        const std::string item = rest.substr(pos, comma - pos);
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("kernel spec: expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        try {
            std::size_t used = 0;
            const double val = std::stod(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("trailing junk");
            spec.params[key] = val;
        } catch (const std::exception&) {
            throw std::invalid_argument("kernel spec: bad value in '" + item + "'");
        }
        pos = comma + 1;
    }
    return spec;
}

Kernel make_kernel(const KernelSpec& spec, const SampledSignal* grid_context) {
    const auto need = [&](const std::string& key) {
        auto it = spec.params.find(key);
        if (it == spec.params.end())
            throw std::invalid_argument("kernel '" + spec.name + "': missing parameter '" + key + "'");
        return it->second;
    };
    const auto get_or = [&](const std::string& key, double fallback) {
        auto it = spec.params.find(key);
        return it == spec.params.end() ? fallback : it->second;
    };

    if (spec.name == "wigner") return make_wigner_kernel();
    if (spec.name == "gaussian") return make_gaussian_kernel(need("alpha"), need("beta"));
    if (spec.name == "rihaczek") return make_rihaczek_kernel();
    if (spec.name == "levin") return make_levin_kernel();
    if (spec.name == "page") return make_page_kernel();
    if (spec.name == "born_jordan") return make_born_jordan_kernel();
    if (spec.name == "spectrogram") {
        if (grid_context == nullptr)
            throw std::invalid_argument("spectrogram kernel needs a signal grid for its window");
        SignalSpec w;
        w.kind = SignalKind::gaussian;
        w.n = grid_context->size();
        w.sample_rate = grid_context->sample_rate;
        w.parameters["width"] = get_or("width", 1.0);
        return make_spectrogram_kernel(generate(w));
    }
    throw std::invalid_argument("unknown kernel: " + spec.name);
}

bool is_time_marginal(const Kernel& g, const std::vector<double>& nu_axis) {
    for (const double nu : nu_axis)
        if (std::abs(g.evaluate(0.0, nu) - cplx(1.0)) >= 1e-10) return false;
    return true;
}

bool is_freq_marginal(const Kernel& g, const std::vector<double>& tau_axis) {
    for (const double tau : tau_axis)
        if (std::abs(g.evaluate(tau, 0.0) - cplx(1.0)) >= 1e-10) return false;
    return true;
}

}  // namespace tfkit
