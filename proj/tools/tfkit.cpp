// tfkit command line: signal generation, TFD/ambiguity computation,
// uncertainty reports, and SL(2,R) actions on signals.
//
// Exit codes: 0 success, 2 usage/validation error, 3 numerical failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "tfkit/ambiguity.hpp"
#include "tfkit/io.hpp"
#include "tfkit/kernels.hpp"
#include "tfkit/moments.hpp"
#include "tfkit/symplectic.hpp"
#include "tfkit/tfd.hpp"
#include "tfkit/wigner.hpp"

namespace {

using namespace tfkit;

double report_tolerance() {
    if (const char* env = std::getenv("TFKIT_TOL")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("TFKIT_TOL is not a number");
        }
    }
    return 1e-6;
}

struct GenArgs {
    std::string kind;
    std::size_t n = 0;
    double fs = 0.0;
    double width = 1.0;
    double tc = 0.0;
    double fc = 0.0;
    std::optional<double> rate, sep, t0;
    std::string output;
    std::string format = "csv";
};

int run_gen(const GenArgs& args) {
    SignalSpec spec;
    spec.kind = signal_kind_from_string(args.kind);
    spec.n = args.n;
    spec.sample_rate = args.fs;
    spec.parameters["width"] = args.width;
    spec.parameters["center_time"] = args.tc;
    spec.parameters["center_frequency"] = args.fc;
    if (args.rate) spec.parameters["chirp_rate"] = *args.rate;
    if (args.sep) spec.parameters["separation"] = *args.sep;
    if (args.t0) spec.parameters["t0"] = *args.t0;
    io::write_signal(args.output, generate(spec), io::format_from_string(args.format));
    return 0;
}

struct GridArgs {
    std::string input;
    std::string kernel = "wigner";
    std::string output;
    std::string format = "csv";
};

Kernel build_kernel(const std::string& text, const SampledSignal& a) {
    return make_kernel(parse_kernel_spec(text), &a);
}

int run_tfd(const GridArgs& args) {
    const SampledSignal a = io::read_signal(args.input);
    const TFGrid rho = compute_tfd(a, build_kernel(args.kernel, a));
    io::write_tfgrid(args.output, rho, io::format_from_string(args.format));
    return 0;
}

int run_amb(const GridArgs& args) {
    const SampledSignal a = io::read_signal(args.input);
    AmbGrid A = ambiguity_from_wvd(wvd(a));
    const Kernel g = build_kernel(args.kernel, a);
    if (g.name != "wigner") A = apply_kernel(A, g);
    io::write_ambgrid(args.output, A, io::format_from_string(args.format));
    return 0;
}

struct ReportArgs {
    std::string input;
    std::string kernel = "wigner";
    std::optional<double> t0, f0;
    std::string output;  // empty -> stdout
};

int run_report(const ReportArgs& args) {
    const double tol = report_tolerance();
    const SampledSignal a = io::read_signal(args.input);
    const Kernel g = build_kernel(args.kernel, a);
    const TFGrid rho = compute_tfd(a, g);

    UncertaintyReport rep;
    rep.norm2 = norm2(a);
    rep.kernel_name = g.name;
    rep.kernel_time_marginal = is_time_marginal(g, axes::nu_axis(a.size(), a.sample_rate));
    rep.kernel_freq_marginal = is_freq_marginal(g, axes::tau_axis(a.size(), a.sample_rate));
    rep.heisenberg = heisenberg_check(a, tol);
    rep.covariance = covariance(rho);
    rep.strong = strong_uncertainty_check(rep.covariance);
    rep.relation1_applicable = rep.kernel_time_marginal && rep.kernel_freq_marginal;
    if (rep.relation1_applicable)
        rep.relation1 = relation1_check(rho, a, g, args.t0, args.f0, tol);

    const std::string text = io::report_json(rep);
    if (args.output.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(args.output);
        if (!f) throw std::runtime_error("cannot open for writing: " + args.output);
        f << text << "\n";
    }
    return 0;
}

struct Sl2Args {
    std::string input;
    std::string word;
    std::string matrix;
    std::string output;
    std::string format = "csv";
    bool verify = false;
    std::string verify_out;
};

int run_sl2(const Sl2Args& args) {
    if (args.word.empty() == args.matrix.empty())
        throw std::invalid_argument("sl2: pass exactly one of --word or --matrix");
    const SampledSignal a = io::read_signal(args.input);

    GeneratorWord w;
    SL2Matrix action;
    if (!args.word.empty()) {
        w = parse_word(args.word);
        action = word_action_matrix(w);
    } else {
        SL2Matrix S;
        std::stringstream ss(args.matrix);
        char comma;
        if (!(ss >> S.a >> comma >> S.b >> comma >> S.c >> comma >> S.d))
            throw std::invalid_argument("sl2: --matrix expects a,b,c,d");
        require_symplectic(S);
        w = realization_word(S);
        action = S;
    }

    const SampledSignal out = act_word(a, w);
    if (!args.output.empty())
        io::write_signal(args.output, out, io::format_from_string(args.format));

    if (args.verify || !args.verify_out.empty()) {
        const CovarianceMatrix before = covariance(wvd(a));
        const CovarianceMatrix measured = covariance(wvd(out));
        const CovarianceMatrix expected = pushforward(before, action);
        double scale = 0.0;
        for (const double v : {expected.var_t, expected.var_f, expected.cov_tf})
            scale = std::max(scale, std::abs(v));
        double dev = 0.0;
        dev = std::max(dev, std::abs(measured.var_t - expected.var_t));
        dev = std::max(dev, std::abs(measured.var_f - expected.var_f));
        dev = std::max(dev, std::abs(measured.cov_tf - expected.cov_tf));
        const double rel = scale > 0.0 ? dev / scale : dev;

        nlohmann::json j;
        j["schema"] = "tfkit-sl2-verify/1";
        j["word"] = to_string(w);
        j["action_matrix"] = {action.a, action.b, action.c, action.d};
        auto cov_json = [](const CovarianceMatrix& C) {
            return nlohmann::json{{"var_t", C.var_t},   {"var_f", C.var_f},
                                  {"cov_tf", C.cov_tf}, {"mean_t", C.mean_t},
                                  {"mean_f", C.mean_f}};
        };
        j["covariance_before"] = cov_json(before);
        j["covariance_measured"] = cov_json(measured);
        j["covariance_pushforward"] = cov_json(expected);
        j["max_relative_deviation"] = rel;
        const std::string text = j.dump(1);
        if (!args.verify_out.empty()) {
            std::ofstream f(args.verify_out);
            if (!f) throw std::runtime_error("cannot open for writing: " + args.verify_out);
            f << text << "\n";
        }
        if (args.verify) std::cout << text << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tfkit: Wigner-Ville / ambiguity / kernel-TFD toolkit"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* cgen = app.add_subcommand("gen", "generate a test signal");
    cgen->add_option("--kind", gen.kind, "gaussian|lfm_chirp|tone|two_tone|two_component")
        ->required();
    cgen->add_option("--n", gen.n, "number of samples (even)")->required();
    cgen->add_option("--fs", gen.fs, "sample rate, Hz")->required();
    cgen->add_option("--width", gen.width, "gaussian width, s (default 1)");
    cgen->add_option("--tc", gen.tc, "center time, s");
    cgen->add_option("--fc", gen.fc, "center frequency, Hz");
    cgen->add_option("--rate", [&gen](const std::vector<std::string>& v) {
        gen.rate = std::stod(v.at(0));
        return true;
    }, "chirp rate, Hz/s");
    cgen->add_option("--sep", [&gen](const std::vector<std::string>& v) {
        gen.sep = std::stod(v.at(0));
        return true;
    }, "component separation");
    cgen->add_option("--t0", [&gen](const std::vector<std::string>& v) {
        gen.t0 = std::stod(v.at(0));
        return true;
    }, "time of sample 0 (default: centered window)");
    cgen->add_option("-o,--output", gen.output, "output file")->required();
    cgen->add_option("--format", gen.format, "csv|json");

    GridArgs tfd_args;
    auto* ctfd = app.add_subcommand("tfd", "kernel-filtered time-frequency distribution");
    ctfd->add_option("input", tfd_args.input, "signal file")->required();
    ctfd->add_option("--kernel", tfd_args.kernel, "name[:key=val,...]");
    ctfd->add_option("-o,--output", tfd_args.output, "output grid file")->required();
    ctfd->add_option("--format", tfd_args.format, "csv|json");

    GridArgs amb_args;
    auto* camb = app.add_subcommand("amb", "ambiguity function (optionally kernel-filtered)");
    camb->add_option("input", amb_args.input, "signal file")->required();
    camb->add_option("--kernel", amb_args.kernel, "name[:key=val,...]");
    camb->add_option("-o,--output", amb_args.output, "output grid file")->required();
    camb->add_option("--format", amb_args.format, "csv|json");

    ReportArgs rep;
    auto* crep = app.add_subcommand("report", "uncertainty report (JSON)");
    crep->add_option("input", rep.input, "signal file")->required();
    crep->add_option("--kernel", rep.kernel, "name[:key=val,...]");
    crep->add_option("--t0", [&rep](const std::vector<std::string>& v) {
        rep.t0 = std::stod(v.at(0));
        return true;
    }, "time center for relation 1 (default: mean)");
    crep->add_option("--f0", [&rep](const std::vector<std::string>& v) {
        rep.f0 = std::stod(v.at(0));
        return true;
    }, "frequency center for relation 1 (default: mean)");
    crep->add_option("-o,--output", rep.output, "write report here instead of stdout");

    Sl2Args sl2;
    auto* csl2 = app.add_subcommand("sl2", "apply an SL(2,R) action to a signal");
    csl2->add_option("input", sl2.input, "signal file")->required();
    csl2->add_option("--word", sl2.word, "generator word, e.g. \"J,T(2.0),M(0.5)\"");
    csl2->add_option("--matrix", sl2.matrix, "a,b,c,d with det 1");
    csl2->add_option("-o,--output", sl2.output, "transformed signal file");
    csl2->add_option("--format", sl2.format, "csv|json");
    csl2->add_flag("--verify", sl2.verify, "print measured-vs-pushforward covariance JSON");
    csl2->add_option("--verify-out", sl2.verify_out, "write the verification JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cgen->parsed()) return run_gen(gen);
        if (ctfd->parsed()) return run_tfd(tfd_args);
        if (camb->parsed()) return run_amb(amb_args);
        if (crep->parsed()) return run_report(rep);
        if (csl2->parsed()) return run_sl2(sl2);
    } catch (const std::domain_error& e) {
        std::cerr << "tfkit: numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "tfkit: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
