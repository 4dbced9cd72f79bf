#include "tfkit/symplectic.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tfkit/detail/ctft.hpp"
#include "tfkit/fft.hpp"

namespace tfkit {

namespace {

constexpr double pi = std::numbers::pi;

bool grid_self_dual(const SampledSignal& a) {
    const std::size_t n = a.size();
    const double dt = a.dt();
    const double dnu = a.sample_rate / static_cast<double>(n);
    const double t0_dual = -(static_cast<double>(n) / 2.0) * dnu;
    return std::abs(dnu - dt) <= 1e-9 * dt && std::abs(a.t0 - t0_dual) <= 1e-9 * a.duration();
}

SampledSignal fourier_action(const SampledSignal& a, int sign) {
    validate(a);
    const std::size_t n = a.size();
    if (grid_self_dual(a)) {
        // frequency lattice coincides with the time lattice: one twisted FFT
        std::vector<cplx> v = a.samples;
        if (sign < 0)
            detail::to_dual_minus(v, a.dt(), a.t0);
        else
            detail::to_dual_plus(v, a.dt(), a.t0);
        return SampledSignal{std::move(v), a.sample_rate, a.t0};
    }
    // non-self-dual grid: evaluate the transform at the time-grid points
    const double dt = a.dt();
    std::vector<cplx> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double f = a.time_at(k);
        cplx acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ph = sign * 2.0 * pi * f * a.time_at(i);
            acc += a.samples[i] * cplx(std::cos(ph), std::sin(ph));
        }
        v[k] = dt * acc;
    }
    return SampledSignal{std::move(v), a.sample_rate, a.t0};
}

// trigonometric interpolant of the samples, evaluated at fractional index x
// (in samples, relative to t0); Nyquist bin split symmetrically
class TrigInterpolant {
public:
    explicit TrigInterpolant(const SampledSignal& a)
        : n_(a.size()), coef_(fft::forward_copy(a.samples)) {
        const double inv = 1.0 / static_cast<double>(n_);
        for (auto& c : coef_) c *= inv;
    }

    cplx eval(double x) const {
        const auto n = static_cast<std::ptrdiff_t>(n_);
        // e^{j 2 pi x k / N} walked by recurrence over k
        const double step = 2.0 * pi * x / static_cast<double>(n_);
        const cplx w(std::cos(step), std::sin(step));
        cplx acc = coef_[0];
        cplx wp = w;
        for (std::ptrdiff_t k = 1; k < n / 2; ++k) {
            // bins k and N-k carry frequencies +k and -k
            acc += coef_[static_cast<std::size_t>(k)] * wp +
                   coef_[static_cast<std::size_t>(n - k)] * std::conj(wp);
            wp *= w;
        }
        acc += coef_[n_ / 2] * std::cos(pi * x);
        return acc;
    }

private:
    std::size_t n_;
    std::vector<cplx> coef_;
};

// energy fraction near the window edges (first/last samples)
double time_edge_fraction(const std::vector<cplx>& v) {
    const std::size_t n = v.size();
    const std::size_t band = std::max<std::size_t>(2, n / 64);
    double total = 0.0, edge = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = std::norm(v[i]);
        total += p;
        if (i < band || i >= n - band) edge += p;
    }
    return total > 0.0 ? edge / total : 0.0;
}

// energy fraction near +-fs/2, which in raw DFT order is the middle bins
double freq_edge_fraction(const std::vector<cplx>& spectrum) {
    const std::size_t n = spectrum.size();
    const std::size_t band = std::max<std::size_t>(2, n / 64);
    double total = 0.0, edge = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = std::norm(spectrum[i]);
        total += p;
        const std::size_t dist = i > n / 2 ? i - n / 2 : n / 2 - i;
        if (dist < band) edge += p;
    }
    return total > 0.0 ? edge / total : 0.0;
}

// largest |t| carrying non-negligible amplitude
double effective_time_extent(const SampledSignal& a) {
    double peak = 0.0;
    for (const auto& s : a.samples) peak = std::max(peak, std::abs(s));
    if (peak == 0.0) return 0.0;
    double extent = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a.samples[i]) >= 1e-6 * peak)
            extent = std::max(extent, std::abs(a.time_at(i)));
    return extent;
}

}  // namespace

SL2Matrix SL2Matrix::dilation(double c) {
    if (!(c > 0.0)) throw std::invalid_argument("dilation: scale must be positive");
    return {c, 0.0, 0.0, 1.0 / c};
}

double max_abs_diff(const SL2Matrix& x, const SL2Matrix& y) {
    return std::max(std::max(std::abs(x.a - y.a), std::abs(x.b - y.b)),
                    std::max(std::abs(x.c - y.c), std::abs(x.d - y.d)));
}

bool is_symplectic(const SL2Matrix& S) {
    for (const double v : {S.a, S.b, S.c, S.d})
        if (!std::isfinite(v)) return false;
    const SL2Matrix J = SL2Matrix::rotation();
    return max_abs_diff(S.transpose() * J * S, J) < 1e-10;
}

void require_symplectic(const SL2Matrix& S) {
    if (!is_symplectic(S))
        throw std::invalid_argument("matrix is not symplectic (det != 1)");
}

SL2Matrix token_matrix(const GenToken& t) {
    switch (t.kind) {
        case GenToken::Kind::J: return SL2Matrix::rotation();
        case GenToken::Kind::Jinv: return SL2Matrix::rotation().inverse();
        case GenToken::Kind::T: return SL2Matrix::shear(t.value);
        case GenToken::Kind::M: return SL2Matrix::dilation(t.value);
    }
    throw std::logic_error("unreachable");
}

SL2Matrix word_matrix(const GeneratorWord& w) {
    SL2Matrix p = SL2Matrix::identity();
    for (const auto& t : w.tokens) p = p * token_matrix(t);
    return p;
}

SL2Matrix word_action_matrix(const GeneratorWord& w) {
    SL2Matrix p = SL2Matrix::identity();
    for (const auto& t : w.tokens) {
        GenToken e = t;
        if (e.kind == GenToken::Kind::T) e.value = chirp_shear_sign * e.value;
        p = p * token_matrix(e);
    }
    return p;
}

namespace {

// S = t(c/a) m(a) u(b/a) with u(x) = [[1,x],[0,1]] = J t(-x) J^{-1};
// negative a becomes (J J) m(-a) since J^2 = -I is central. Caller
// guarantees |a| >= |c|, which for a det-1 matrix keeps a away from zero.
GeneratorWord factor_pivot(const SL2Matrix& S) {
    GeneratorWord w;
    const double lower = S.c / S.a;
    const double upper = S.b / S.a;
    if (lower != 0.0) w.tokens.push_back({GenToken::Kind::T, lower});
    if (S.a < 0.0) {
        w.tokens.push_back({GenToken::Kind::J, 0.0});
        w.tokens.push_back({GenToken::Kind::J, 0.0});
        if (-S.a != 1.0) w.tokens.push_back({GenToken::Kind::M, -S.a});
    } else if (S.a != 1.0) {
        w.tokens.push_back({GenToken::Kind::M, S.a});
    }
    if (upper != 0.0) {
        w.tokens.push_back({GenToken::Kind::J, 0.0});
        w.tokens.push_back({GenToken::Kind::T, -upper});
        w.tokens.push_back({GenToken::Kind::Jinv, 0.0});
    }
    return w;
}

}  // namespace

GeneratorWord factor(const SL2Matrix& S) {
    require_symplectic(S);
    if (std::abs(S.a) < std::abs(S.c)) {
        // pivot on the larger first-column entry: S = J^{-1} (J S) and J S
        // has top-left c
        GeneratorWord w;
        w.tokens.push_back({GenToken::Kind::Jinv, 0.0});
        const GeneratorWord rest = factor_pivot(SL2Matrix::rotation() * S);
        w.tokens.insert(w.tokens.end(), rest.tokens.begin(), rest.tokens.end());
        return w;
    }
    return factor_pivot(S);
}

GeneratorWord realization_word(const SL2Matrix& S) {
    GeneratorWord w = factor(S);
    for (auto& t : w.tokens)
        if (t.kind == GenToken::Kind::T) t.value = chirp_shear_sign * t.value;
    return w;
}

GeneratorWord parse_word(const std::string& text) {
    GeneratorWord w;
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text.compare(pos, 4, "Jinv") == 0) {
            w.tokens.push_back({GenToken::Kind::Jinv, 0.0});
            pos += 4;
        } else if (text[pos] == 'J') {
            w.tokens.push_back({GenToken::Kind::J, 0.0});
            pos += 1;
        } else if (text[pos] == 'T' || text[pos] == 'M') {
            const auto kind = text[pos] == 'T' ? GenToken::Kind::T : GenToken::Kind::M;
            pos += 1;
            skip_ws();
            if (pos >= text.size() || text[pos] != '(')
                throw std::invalid_argument("word: expected '(' after T/M in '" + text + "'");
            const auto close = text.find(')', pos);
            if (close == std::string::npos)
                throw std::invalid_argument("word: missing ')' in '" + text + "'");
            double value = 0.0;
            try {
                std::size_t used = 0;
                const std::string num = text.substr(pos + 1, close - pos - 1);
                value = std::stod(num, &used);
                while (used < num.size() && std::isspace(static_cast<unsigned char>(num[used])))
                    ++used;
                if (used != num.size()) throw std::invalid_argument("junk");
            } catch (const std::exception&) {
                throw std::invalid_argument("word: bad numeric argument in '" + text + "'");
            }
            if (kind == GenToken::Kind::M && !(value > 0.0))
                throw std::invalid_argument("word: M(.) needs a positive argument");
            w.tokens.push_back({kind, value});
            pos = close + 1;
        } else {
            throw std::invalid_argument("word: unexpected character '" + std::string(1, text[pos]) +
                                        "' in '" + text + "'");
        }
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != ',')
                throw std::invalid_argument("word: expected ',' between tokens in '" + text + "'");
            ++pos;
            skip_ws();
        }
    }
    return w;
}

std::string to_string(const GeneratorWord& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.tokens.size(); ++i) {
        if (i) os << ",";
        const auto& t = w.tokens[i];
        switch (t.kind) {
            case GenToken::Kind::J: os << "J"; break;
            case GenToken::Kind::Jinv: os << "Jinv"; break;
            case GenToken::Kind::T: os << "T(" << t.value << ")"; break;
            case GenToken::Kind::M: os << "M(" << t.value << ")"; break;
        }
    }
    return os.str();
}

SampledSignal act_fourier(const SampledSignal& a) { return fourier_action(a, -1); }

SampledSignal act_inverse_fourier(const SampledSignal& a) { return fourier_action(a, +1); }

SampledSignal act_chirp(const SampledSignal& a, double k) {
    validate(a);
    if (std::abs(k) * effective_time_extent(a) > 0.5 * a.sample_rate)
        std::cerr << "tfkit: chirp rate " << k
                  << " sweeps the instantaneous frequency outside the sampled band\n";
    SampledSignal out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double t = out.time_at(i);
        const double ph = -pi * k * t * t;
        out.samples[i] *= cplx(std::cos(ph), std::sin(ph));
    }
    return out;
}

SampledSignal act_dilate(const SampledSignal& a, double c, double max_tail_fraction) {
    validate(a);
    if (!(c > 0.0)) throw std::invalid_argument("act_dilate: scale must be positive");
    if (c == 1.0) return a;

    const TrigInterpolant interp(a);
    const double inv_sqrt_c = 1.0 / std::sqrt(c);
    SampledSignal out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double x = (out.time_at(i) / c - a.t0) * a.sample_rate;
        out.samples[i] = inv_sqrt_c * interp.eval(x);
    }

    const double time_tail = time_edge_fraction(out.samples);
    const double freq_tail = freq_edge_fraction(fft::forward_copy(out.samples));
    const double tail = std::max(time_tail, freq_tail);
    if (tail > max_tail_fraction)
        throw std::domain_error("act_dilate: dilated signal overflows the grid (tail fraction " +
                                std::to_string(tail) + ")");
    if (tail > 1e-6)
        std::cerr << "tfkit: act_dilate tail fraction " << tail << " near the grid edge\n";
    return out;
}

SampledSignal act_word(const SampledSignal& a, const GeneratorWord& w) {
    // tokens compose like the matrix product: rightmost acts first
    SampledSignal s = a;
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
        switch (it->kind) {
            case GenToken::Kind::J: s = act_fourier(s); break;
            case GenToken::Kind::Jinv: s = act_inverse_fourier(s); break;
            case GenToken::Kind::T: s = act_chirp(s, it->value); break;
            case GenToken::Kind::M: s = act_dilate(s, it->value); break;
        }
    }
    return s;
}

CovarianceMatrix pushforward(const CovarianceMatrix& C, const SL2Matrix& S) {
    require_symplectic(S);
    CovarianceMatrix out = C;
    out.var_t = S.a * S.a * C.var_t + 2.0 * S.a * S.b * C.cov_tf + S.b * S.b * C.var_f;
    out.cov_tf = S.a * S.c * C.var_t + (S.a * S.d + S.b * S.c) * C.cov_tf + S.b * S.d * C.var_f;
    out.var_f = S.c * S.c * C.var_t + 2.0 * S.c * S.d * C.cov_tf + S.d * S.d * C.var_f;
    out.mean_t = S.a * C.mean_t + S.b * C.mean_f;
    out.mean_f = S.c * C.mean_t + S.d * C.mean_f;
    return out;
}

}  // namespace tfkit
