#include <cmath>
#include <complex>

#include "doctest.h"
#include "helpers.hpp"
#include "tfkit/signal.hpp"

using namespace tfkit;

TEST_CASE("generated gaussian has unit norm by construction") {
    const auto a = th::gaussian_signal();
    CHECK(std::abs(norm2(a) - 1.0) < 1e-12);
}

TEST_CASE("tone at zero frequency is a constant") {
    const auto a = th::tone_signal(0.0, 256, 16.0);
    for (const auto& s : a.samples) {
        CHECK(std::abs(s - a.samples[0]) < 1e-14);
        CHECK(std::abs(std::abs(s) - std::abs(a.samples[0])) < 1e-15);
    }
}

TEST_CASE("gaussian second moment matches the closed form by direct summation") {
    // oracle: Riemann sum of t^2 |a(t)|^2 against 1/(4 pi)
    const auto a = th::gaussian_signal();
    const auto m = th::time_moments(a);
    CHECK(std::abs(m.var - 1.0 / (4.0 * th::pi)) < 1e-10);
    CHECK(m.var == doctest::Approx(0.0795775).epsilon(1e-5));
}

TEST_CASE("generate validates its spec") {
    SignalSpec s;
    s.kind = SignalKind::gaussian;
    s.n = 64;
    s.sample_rate = 8.0;
    SUBCASE("missing required parameter") {
        CHECK_THROWS_AS((void)generate(s), std::invalid_argument);
    }
    SUBCASE("odd length") {
        s.parameters["width"] = 1.0;
        s.n = 63;
        CHECK_THROWS_AS((void)generate(s), std::invalid_argument);
    }
    SUBCASE("non-positive sample rate") {
        s.parameters["width"] = 1.0;
        s.sample_rate = 0.0;
        CHECK_THROWS_AS((void)generate(s), std::invalid_argument);
    }
    SUBCASE("chirp needs a rate") {
        s.kind = SignalKind::lfm_chirp;
        s.parameters["width"] = 1.0;
        CHECK_THROWS_AS((void)generate(s), std::invalid_argument);
    }
}

TEST_CASE("dft of an impulse is flat") {
    std::vector<cplx> x(64, 0.0);
    x[0] = 1.0;
    const auto X = dft(x);
    for (const auto& v : X) CHECK(std::abs(v - cplx(1.0)) < 1e-13);
}

TEST_CASE("idft inverts dft") {
    for (const std::size_t n : {2u, 64u, 256u, 1024u}) {
        const auto x = th::random_signal(n, 8.0, 17u + static_cast<unsigned>(n));
        const auto back = idft(dft(x.samples));
        double err = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            err = std::max(err, std::abs(back[i] - x.samples[i]));
            scale = std::max(scale, std::abs(x.samples[i]));
        }
        CHECK(err < 1e-12 * scale);
    }
}

TEST_CASE("spectrum of the unit gaussian is the unit gaussian") {
    // self-dual grid: frequency lattice equals the time lattice
    const auto a = th::gaussian_signal();
    const auto sp = spectrum(a);
    double err = 0.0;
    for (std::size_t k = 0; k < sp.values.size(); ++k)
        err = std::max(err, std::abs(sp.values[k] - cplx(th::gauss_spectrum(sp.f_axis[k]))));
    CHECK(err < 1e-8);
}

TEST_CASE("parseval holds for random signals") {
    for (unsigned seed : {1u, 2u, 3u}) {
        const auto x = th::random_signal(256, 16.0, seed);
        const auto sp = spectrum(x);
        const double dnu = sp.f_axis[1] - sp.f_axis[0];
        double fe = 0.0;
        for (const auto& v : sp.values) fe += std::norm(v) * dnu;
        const double te = norm2(x) * norm2(x);
        CHECK(std::abs(fe - te) < 1e-12 * te);
    }
}

TEST_CASE("analytic signal of a cosine is the complex exponential") {
    const std::size_t n = 1024;
    const double fs = 32.0, f0 = 2.0;
    std::vector<cplx> v(n);
    const double t0 = -16.0;
    for (std::size_t i = 0; i < n; ++i)
        v[i] = std::cos(2.0 * th::pi * f0 * (t0 + static_cast<double>(i) / fs));
    const auto x = make_signal(std::move(v), fs, t0);
    const auto a = analytic(x);
    double err = 0.0, real_err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = a.time_at(i);
        const cplx want(std::cos(2.0 * th::pi * f0 * t), std::sin(2.0 * th::pi * f0 * t));
        err = std::max(err, std::abs(a.samples[i] - want));
        real_err = std::max(real_err, std::abs(a.samples[i].real() - x.samples[i].real()));
    }
    CHECK(err < 1e-6);
    CHECK(real_err < 1e-10);
}

TEST_CASE("analytic applies the one-sided masking rule") {
    const auto x = th::random_signal(128, 8.0, 5);
    SampledSignal re = x;
    for (auto& s : re.samples) s = s.real();
    const auto a = analytic(re);
    const auto X = dft(re.samples);
    const auto A = dft(a.samples);
    const std::size_t n = re.size();
    CHECK(std::abs(A[0] - X[0]) < 1e-10);
    CHECK(std::abs(A[n / 2] - X[n / 2]) < 1e-10);
    for (std::size_t k = 1; k < n / 2; ++k) CHECK(std::abs(A[k] - 2.0 * X[k]) < 1e-10);
    for (std::size_t k = n / 2 + 1; k < n; ++k) CHECK(std::abs(A[k]) < 1e-10);
}

TEST_CASE("analytic of zero is zero, complex input refused") {
    SampledSignal z{std::vector<cplx>(64, 0.0), 8.0, 0.0};
    const auto a = analytic(z);
    for (const auto& s : a.samples) CHECK(std::abs(s) == 0.0);

    const auto c = th::random_signal(64, 8.0, 9);
    CHECK_THROWS_AS((void)analytic(c), std::invalid_argument);
}

TEST_CASE("analytic energy doubling for band-limited zero-mean input") {
    // sum of in-band tones away from DC and Nyquist: ||a||^2 = 2 ||x||^2
    const std::size_t n = 512;
    const double fs = 32.0;
    std::vector<cplx> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / fs;
        v[i] = std::cos(2.0 * th::pi * 2.0 * t) + 0.5 * std::cos(2.0 * th::pi * 5.0 * t + 0.3);
    }
    const auto x = make_signal(std::move(v), fs, 0.0);
    const auto a = analytic(x);
    const double ex = norm2(x) * norm2(x);
    const double ea = norm2(a) * norm2(a);
    CHECK(std::abs(ea - 2.0 * ex) < 1e-8 * ex);
}

TEST_CASE("norm2 of the constant-one signal over 4 samples at 1 Hz is 2") {
    SampledSignal x{std::vector<cplx>(4, 1.0), 1.0, 0.0};
    CHECK(norm2(x) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("normalize is scale invariant and rejects zero") {
    const auto x = th::random_signal(128, 8.0, 23);
    for (const double c : {0.5, 3.0, 1e6}) {
        SampledSignal scaled = x;
        for (auto& s : scaled.samples) s *= c;
        const auto n1 = normalize(x);
        const auto n2 = normalize(scaled);
        double err = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            err = std::max(err, std::abs(n1.samples[i] - n2.samples[i]));
        CHECK(err < 1e-12);
    }
    SampledSignal z{std::vector<cplx>(64, 0.0), 8.0, 0.0};
    CHECK_THROWS_AS((void)normalize(z), std::domain_error);
}

TEST_CASE("signal invariants are enforced") {
    CHECK_THROWS_AS((void)make_signal({cplx(1.0)}, 8.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)make_signal(std::vector<cplx>(3, 1.0), 8.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)make_signal(std::vector<cplx>(4, 1.0), -1.0, 0.0), std::invalid_argument);
    std::vector<cplx> bad(4, 1.0);
    bad[2] = cplx(std::nan(""), 0.0);
    CHECK_THROWS_AS((void)make_signal(std::move(bad), 8.0, 0.0), std::invalid_argument);
}
