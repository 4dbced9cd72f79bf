// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Desk scale throughout: 1024 samples at 32 Hz. The CLI criterion
// needs the tfkit binary; its path comes from argv[1] or the TFKIT_BIN
// compile definition.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tfkit/ambiguity.hpp"
#include "tfkit/io.hpp"
#include "tfkit/kernels.hpp"
#include "tfkit/moments.hpp"
#include "tfkit/signal.hpp"
#include "tfkit/symplectic.hpp"
#include "tfkit/tfd.hpp"
#include "tfkit/wigner.hpp"

using namespace tfkit;
namespace fs = std::filesystem;

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr std::size_t kN = 1024;
constexpr double kFs = 32.0;

std::string g_cli_path;
int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

SampledSignal make(SignalKind kind, std::map<std::string, double> params) {
    SignalSpec s;
    s.kind = kind;
    s.n = kN;
    s.sample_rate = kFs;
    s.parameters = std::move(params);
    return generate(s);
}

SampledSignal gaussian() { return make(SignalKind::gaussian, {{"width", 1.0}}); }
SampledSignal chirp() {
    return make(SignalKind::lfm_chirp, {{"width", 1.0}, {"chirp_rate", 2.0}});
}
SampledSignal two_component() {
    return make(SignalKind::two_component, {{"width", 1.0}, {"separation", 2.0}});
}

double rel_energy_err(const std::vector<double>& got, const std::vector<double>& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num += std::abs(got[i] - want[i]);
        den += std::abs(want[i]);
    }
    return num / den;
}

double peak_of(const std::vector<double>& v) {
    double p = 0.0;
    for (double x : v) p = std::max(p, std::abs(x));
    return p;
}

std::vector<Kernel> marginal_family() {
    return {make_wigner_kernel(), make_rihaczek_kernel(), make_levin_kernel(), make_page_kernel(),
            make_born_jordan_kernel()};
}

std::vector<SampledSignal> test_signals() { return {gaussian(), chirp(), two_component()}; }

double strong_det(const CovarianceMatrix& C) { return strong_uncertainty_check(C).det; }

SL2Matrix random_sl2(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (;;) {
        const double a = u(rng), b = u(rng), c = u(rng);
        if (std::abs(a) < 1e-2) continue;
        const double d = (1.0 + b * c) / a;
        if (std::abs(d) > 3.0) continue;
        return {a, b, c, d};
    }
}

double cov_max_dev(const CovarianceMatrix& got, const CovarianceMatrix& want) {
    double scale = 0.0, dev = 0.0;
    for (double v : {want.var_t, want.var_f, want.cov_tf}) scale = std::max(scale, std::abs(v));
    dev = std::max(dev, std::abs(got.var_t - want.var_t));
    dev = std::max(dev, std::abs(got.var_f - want.var_f));
    dev = std::max(dev, std::abs(got.cov_tf - want.cov_tf));
    return dev / scale;
}

// ---- criteria ----

// criteria 1 and 3 walk the same kernel-by-signal family of distributions;
// one pass computes each distribution once and keeps only scalars
struct FamilyScan {
    double worst_marginal = 0.0;
    std::string worst_marginal_case;
    double min_ratio = 1e300;
    std::string min_ratio_case;
    double gaussian_equality_ratio = 0.0;
    double spectrogram_dev_t = 0.0;
    double spectrogram_dev_f = 0.0;
};

const FamilyScan& family_scan() {
    static const FamilyScan scan = [] {
        FamilyScan r;
        for (const auto& a : test_signals()) {
            std::vector<double> want_t(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) want_t[i] = std::norm(a.samples[i]);
            const auto A = spectrum_on_axis(a, axes::wvd_freq_axis(kN, kFs));
            std::vector<double> want_f(a.size());
            for (std::size_t k = 0; k < a.size(); ++k) want_f[k] = std::norm(A[k]);
            for (const auto& g : marginal_family()) {
                const auto rho = compute_tfd(a, g);
                const double err = std::max(rel_energy_err(time_marginal(rho), want_t),
                                            rel_energy_err(freq_marginal(rho), want_f));
                if (err > r.worst_marginal) {
                    r.worst_marginal = err;
                    r.worst_marginal_case = g.name;
                }
                const auto rel = relation1_check(rho, a, g);
                if (rel.ratio < r.min_ratio) {
                    r.min_ratio = rel.ratio;
                    r.min_ratio_case = g.name;
                }
            }
        }

        const auto a = gaussian();
        r.gaussian_equality_ratio =
            relation1_check(compute_tfd(a, make_wigner_kernel()), a, make_wigner_kernel()).ratio;

        const auto tc = two_component();
        const auto g = make_kernel(parse_kernel_spec("spectrogram"), &tc);
        const auto rho = compute_tfd(tc, g);
        std::vector<double> want_t(tc.size());
        for (std::size_t i = 0; i < tc.size(); ++i) want_t[i] = std::norm(tc.samples[i]);
        const auto A = spectrum_on_axis(tc, axes::wvd_freq_axis(kN, kFs));
        std::vector<double> want_f(tc.size());
        for (std::size_t k = 0; k < tc.size(); ++k) want_f[k] = std::norm(A[k]);
        r.spectrogram_dev_t = rel_energy_err(time_marginal(rho), want_t);
        r.spectrogram_dev_f = rel_energy_err(freq_marginal(rho), want_f);
        return r;
    }();
    return scan;
}

bool c1_marginals(std::string& detail) {
    const auto& scan = family_scan();
    std::ostringstream os;
    os << "family worst " << scan.worst_marginal << " (" << scan.worst_marginal_case
       << "), spectrogram deviation t " << scan.spectrogram_dev_t << " f "
       << scan.spectrogram_dev_f;
    detail = os.str();
    return scan.worst_marginal < 1e-6 && scan.spectrogram_dev_t > 1e-3 &&
           scan.spectrogram_dev_f > 1e-3;
}

bool c2_heisenberg_equality(std::string& detail) {
    const auto r = heisenberg_check(gaussian());
    detail = "ratio " + std::to_string(r.ratio);
    return std::abs(r.ratio - 1.0) <= 0.01;
}

bool c3_relation1(std::string& detail) {
    const auto& scan = family_scan();
    std::ostringstream os;
    os << "min ratio " << scan.min_ratio << " (" << scan.min_ratio_case
       << "), gaussian equality ratio " << scan.gaussian_equality_ratio;
    detail = os.str();
    return scan.min_ratio >= 1.0 - 1e-6 && std::abs(scan.gaussian_equality_ratio - 1.0) <= 0.01;
}

bool c4_relation2_dichotomy(std::string& detail) {
    const auto W = wvd(two_component());
    const double g_hi = std::sqrt(0.30), g_lo = std::sqrt(0.10);
    const auto above = gaussian_smooth(W, g_hi, g_hi);
    const auto below = gaussian_smooth(W, g_lo, g_lo);
    const double min_above = min_scan(above).value / peak_of(above.values);
    const double min_below = min_scan(below).value / peak_of(below.values);
    std::ostringstream os;
    os << "min/peak at 0.30: " << min_above << ", at 0.10: " << min_below;
    detail = os.str();
    return min_above >= -1e-6 && min_below < -1e-3;
}

bool c5_semigroup(std::string& detail) {
    const auto W = wvd(two_component());
    const auto twice = gaussian_smooth(gaussian_smooth(W, 0.2, 0.3), 0.15, 0.25);
    const auto once = gaussian_smooth(W, 0.35, 0.55);
    double err = 0.0;
    for (std::size_t i = 0; i < once.values.size(); ++i)
        err = std::max(err, std::abs(twice.values[i] - once.values[i]));
    const double rel = err / peak_of(once.values);
    detail = "max diff / peak = " + std::to_string(rel);
    return rel <= 1e-8;
}

bool c6_transform_consistency(std::string& detail) {
    const auto a = gaussian();
    const auto W = wvd(a);
    const double peak = peak_of(W.values);

    const auto back = wvd_from_ambiguity(ambiguity_from_wvd(W));
    double rt = 0.0;
    for (std::size_t i = 0; i < W.values.size(); ++i)
        rt = std::max(rt, std::abs(back.values[i] - W.values[i]));
    rt /= peak;

    const auto At = ambiguity_from_wvd(W);
    const auto Ad = direct_ambiguity(a);
    double amb_peak = 0.0, dual = 0.0;
    for (const auto& z : Ad.values) amb_peak = std::max(amb_peak, std::abs(z));
    for (std::size_t i = 0; i < At.values.size(); ++i)
        dual = std::max(dual, std::abs(At.values[i] - Ad.values[i]));
    dual /= amb_peak;

    std::ostringstream os;
    os << "round trip " << rt << ", direct-vs-transform " << dual;
    detail = os.str();
    return rt <= 1e-12 && dual <= 1e-8;
}

bool c7_pushforward(std::string& detail) {
    const auto a = gaussian();
    const auto C0 = covariance(wvd(a));
    const double inv4pi = 1.0 / (4.0 * pi);

    const auto after_j = covariance(wvd(act_fourier(a)));
    const double dev_j = cov_max_dev(after_j, pushforward(C0, SL2Matrix::rotation()));

    const auto after_t = covariance(wvd(act_chirp(a, 2.0)));
    const double dev_t =
        cov_max_dev(after_t, pushforward(C0, SL2Matrix::shear(chirp_shear_sign * 2.0)));
    const bool var_f_spot = std::abs(after_t.var_f - 5.0 * inv4pi) <= 0.02 * 5.0 * inv4pi;

    const auto after_m = covariance(wvd(act_dilate(a, 2.0)));
    const double dev_m = cov_max_dev(after_m, pushforward(C0, SL2Matrix::dilation(2.0)));
    const bool var_spot = std::abs(after_m.var_t - 1.0 / pi) <= 0.02 / pi &&
                          std::abs(after_m.var_f - 1.0 / (16.0 * pi)) <= 0.02 / (16.0 * pi);

    const auto w = parse_word("M(2),T(1)");
    const auto after_w = covariance(wvd(act_word(a, w)));
    const double dev_w = cov_max_dev(after_w, pushforward(C0, word_action_matrix(w)));

    std::ostringstream os;
    os << "deviations J " << dev_j << ", t(2) " << dev_t << ", m(2) " << dev_m << ", word "
       << dev_w;
    detail = os.str();
    return dev_j <= 0.02 && dev_t <= 0.02 && dev_m <= 0.02 && dev_w <= 0.05 && var_f_spot &&
           var_spot;
}

bool c8_det_invariance(std::string& detail) {
    CovarianceMatrix C;
    C.var_t = 0.31;
    C.var_f = 0.27;
    C.cov_tf = 0.08;
    const double d0 = strong_det(C);
    std::mt19937 rng(20250809u);
    double worst_alg = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto S = random_sl2(rng);
        worst_alg = std::max(worst_alg, std::abs(strong_det(pushforward(C, S)) - d0));
    }
    const bool alg_ok = worst_alg <= 1e-12;

    const auto a = gaussian();
    const auto Cg = covariance(wvd(a));
    const double dg = strong_det(Cg);
    const double gscale = std::max(Cg.var_t * Cg.var_f, hbar_eff * hbar_eff / 4.0);
    double worst_sig = 0.0;
    worst_sig = std::max(worst_sig, std::abs(strong_det(covariance(wvd(act_fourier(a)))) - dg));
    worst_sig = std::max(worst_sig, std::abs(strong_det(covariance(wvd(act_chirp(a, 2.0)))) - dg));
    worst_sig = std::max(worst_sig, std::abs(strong_det(covariance(wvd(act_dilate(a, 2.0)))) - dg));
    const bool sig_ok = worst_sig <= 0.02 * gscale;

    std::ostringstream os;
    os << "algebraic worst " << worst_alg << ", signal-level worst " << worst_sig;
    detail = os.str();
    return alg_ok && sig_ok;
}

bool c9_factor_soundness(std::string& detail) {
    std::mt19937 rng(777u);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto S = random_sl2(rng);
        worst = std::max(worst, max_abs_diff(word_matrix(factor(S)), S));
    }
    for (const auto& S : {SL2Matrix::identity(), SL2Matrix::rotation(), SL2Matrix::shear(3.0),
                          SL2Matrix::dilation(0.5), SL2Matrix{0.0, 2.0, -0.5, 1.0}})
        worst = std::max(worst, max_abs_diff(word_matrix(factor(S)), S));
    detail = "worst reconstruction error " + std::to_string(worst);
    return worst <= 1e-12;
}

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(const fs::path& dir, const std::string& args) {
    const auto out = (dir / "stdout.txt").string();
    const std::string cmd = "\"" + g_cli_path + "\" " + args + " > \"" + out + "\" 2> \"" +
                            (dir / "stderr.txt").string() + "\"";
    const int rc = std::system(cmd.c_str());
    std::ostringstream ss;
    ss << std::ifstream(out).rdbuf();
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, ss.str()};
}

std::string slurp(const fs::path& p) {
    std::ostringstream ss;
    ss << std::ifstream(p).rdbuf();
    return ss.str();
}

bool c10_cli_contract(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "tfkit binary path not provided";
        return false;
    }
    const fs::path dir =
        fs::temp_directory_path() / ("tfkit-acceptance-" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
    struct Cleanup {
        fs::path d;
        ~Cleanup() { fs::remove_all(d); }
    } cleanup{dir};

    const auto sig = (dir / "g.csv").string();
    if (cli(dir, "gen --kind gaussian --n 512 --fs 32 -o " + sig).code != 0) {
        detail = "gen failed";
        return false;
    }
    if (cli(dir, "gen --kind gaussian --fs 32 -o " + (dir / "x.csv").string()).code != 2) {
        detail = "missing --n should exit 2";
        return false;
    }
    if (cli(dir, "tfd " + sig + " --kernel nosuch -o " + (dir / "w.csv").string()).code != 2) {
        detail = "unknown kernel should exit 2";
        return false;
    }
    {
        std::ofstream z(dir / "z.csv");
        z << "# tfkit-signal v1, fs=32, t0=0\n";
        for (int i = 0; i < 128; ++i) z << "0,0\n";
    }
    if (cli(dir, "report " + (dir / "z.csv").string()).code != 3) {
        detail = "zero-mass report should exit 3";
        return false;
    }

    // file round trip through the identity action is byte-exact
    if (cli(dir, "sl2 " + sig + " --matrix 1,0,0,1 -o " + (dir / "g2.csv").string()).code != 0) {
        detail = "sl2 identity failed";
        return false;
    }
    if (slurp(dir / "g.csv") != slurp(dir / "g2.csv")) {
        detail = "identity action altered the file";
        return false;
    }

    // report schema
    const auto rep = cli(dir, "report " + sig + " --kernel wigner");
    if (rep.code != 0) {
        detail = "report failed";
        return false;
    }
    try {
        const auto j = nlohmann::json::parse(rep.out);
        if (j.at("schema") != "tfkit-report/1") throw std::runtime_error("schema tag");
        for (const char* key : {"signal", "kernel", "heisenberg", "relation1",
                                "strong_uncertainty", "covariance"})
            if (!j.contains(key)) throw std::runtime_error(std::string("missing ") + key);
        if (!j.at("heisenberg").at("pass").get<bool>()) throw std::runtime_error("heisenberg");
        if (!j.at("relation1").at("applicable").get<bool>()) throw std::runtime_error("relation1");
    } catch (const std::exception& e) {
        detail = std::string("report JSON: ") + e.what();
        return false;
    }

    detail = "exit codes, round trip, schema all good";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) {
        g_cli_path = argv[1];
    } else if (const char* env = std::getenv("TFKIT_BIN")) {
        g_cli_path = env;
    } else {
#ifdef TFKIT_BIN
        g_cli_path = TFKIT_BIN;
#endif
    }

    criterion(1, "marginal kernels reproduce |a|^2 and |A|^2; spectrogram breaks both",
              c1_marginals);
    criterion(2, "heisenberg equality for the unit gaussian", c2_heisenberg_equality);
    criterion(3, "relation 1 across marginal kernels and signals", c3_relation1);
    criterion(4, "smoothed-WVD sign dichotomy across alpha*beta = 1/4", c4_relation2_dichotomy);
    criterion(5, "gaussian smoothing semigroup", c5_semigroup);
    criterion(6, "W<->A round trip and dual-path agreement", c6_transform_consistency);
    criterion(7, "covariance pushforward for J, t(2), m(2) and the word (M(2),T(1))",
              c7_pushforward);
    criterion(8, "strong-uncertainty determinant invariance", c8_det_invariance);
    criterion(9, "generator factorization soundness over 1000 samples", c9_factor_soundness);
    criterion(10, "CLI exit codes, round trips, report schema", c10_cli_contract);

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
