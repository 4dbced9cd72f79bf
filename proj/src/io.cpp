#include "tfkit/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tfkit::io {

using json = nlohmann::json;

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    return f;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    return f;
}

// "# tfkit-signal v1, fs=32, t0=-16" -> {"fs": "32", "t0": "-16"}, checking
// the magic and version
std::map<std::string, std::string> parse_header(const std::string& line, const std::string& magic) {
    if (line.rfind("# " + magic + " ", 0) != 0)
        throw std::runtime_error("bad header: expected '# " + magic + " v1, ...'");
    std::string rest = line.substr(magic.size() + 3);
    std::map<std::string, std::string> fields;
    std::stringstream ss(rest);
    std::string item;
    bool first = true;
    while (std::getline(ss, item, ',')) {
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        if (first) {
            if (item != "v1")
                throw std::runtime_error("unsupported " + magic + " version: " + item);
            first = false;
            continue;
        }
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw std::runtime_error("bad header field: " + item);
        fields[item.substr(0, eq)] = item.substr(eq + 1);
    }
    if (first) throw std::runtime_error("bad header: missing version");
    return fields;
}

// std::from_chars: handles subnormals, never throws on underflow
double parse_double(std::string_view text, const char* what) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    // result_out_of_range still stores the nearest representable value
    // (0 or inf) in v for libstdc++; accept underflow, reject overflow via
    // the finiteness checks downstream
    if ((ec != std::errc() && ec != std::errc::result_out_of_range) || ptr != last)
        throw std::runtime_error(std::string("bad number in ") + what + ": '" +
                                 std::string(text) + "'");
    return v;
}

double field_as_double(const std::map<std::string, std::string>& f, const std::string& key) {
    auto it = f.find(key);
    if (it == f.end()) throw std::runtime_error("header missing field '" + key + "'");
    return parse_double(it->second, "header field");
}

std::vector<double> parse_row(const std::string& line, std::size_t expected, const char* what) {
    std::vector<double> out;
    out.reserve(expected);
    std::size_t pos = 0;
    while (pos <= line.size()) {
        auto comma = line.find(',', pos);
        if (comma == std::string::npos) comma = line.size();
        out.push_back(parse_double(std::string_view(line).substr(pos, comma - pos), what));
        pos = comma + 1;
    }
    if (out.size() != expected)
        throw std::runtime_error(std::string(what) + ": expected " + std::to_string(expected) +
                                 " values, got " + std::to_string(out.size()));
    return out;
}

void write_axis(std::ofstream& f, const std::vector<double>& axis) {
    for (std::size_t i = 0; i < axis.size(); ++i)
        f << (i ? "," : "") << format_double(axis[i]);
    f << "\n";
}

std::string read_line(std::ifstream& f, const char* what) {
    std::string line;
    if (!std::getline(f, line)) throw std::runtime_error(std::string("unexpected EOF in ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

json axis_to_json(const std::vector<double>& axis) { return json(axis); }

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Format format_from_string(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw std::invalid_argument("unknown format: " + s + " (expected csv or json)");
}

void write_signal(const std::string& path, const SampledSignal& x, Format fmt) {
    validate(x);
    auto f = open_out(path);
    if (fmt == Format::csv) {
        f << "# tfkit-signal v1, fs=" << format_double(x.sample_rate)
          << ", t0=" << format_double(x.t0) << "\n";
        for (const auto& s : x.samples)
            f << format_double(s.real()) << "," << format_double(s.imag()) << "\n";
    } else {
        json j;
        j["format"] = "tfkit-signal";
        j["version"] = 1;
        j["fs"] = x.sample_rate;
        j["t0"] = x.t0;
        auto& rows = j["samples"] = json::array();
        for (const auto& s : x.samples) rows.push_back({s.real(), s.imag()});
        f << j.dump(1) << "\n";
    }
}

SampledSignal read_signal(const std::string& path) {
    auto f = open_in(path);
    // peek: JSON files start with '{'
    const int first = f.peek();
    if (first == '{') {
        json j;
        f >> j;
        if (j.value("format", "") != "tfkit-signal" || j.value("version", 0) != 1)
            throw std::runtime_error("not a tfkit-signal v1 JSON file: " + path);
        SampledSignal x;
        x.sample_rate = j.at("fs").get<double>();
        x.t0 = j.at("t0").get<double>();
        for (const auto& row : j.at("samples"))
            x.samples.emplace_back(row.at(0).get<double>(), row.at(1).get<double>());
        validate(x);
        return x;
    }

    const auto header = parse_header(read_line(f, "signal header"), "tfkit-signal");
    SampledSignal x;
    x.sample_rate = field_as_double(header, "fs");
    x.t0 = field_as_double(header, "t0");
    std::string line;
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto vals = parse_row(line, 2, "signal sample");
        x.samples.emplace_back(vals[0], vals[1]);
    }
    validate(x);
    return x;
}

void write_tfgrid(const std::string& path, const TFGrid& g, Format fmt) {
    validate(g);
    const double fs = 1.0 / g.dt();
    auto f = open_out(path);
    if (fmt == Format::csv) {
        f << "# tfkit-tfgrid v1, n=" << g.n << ", fs=" << format_double(fs) << "\n";
        write_axis(f, g.t_axis);
        write_axis(f, g.f_axis);
        for (std::size_t i = 0; i < g.n; ++i) {
            for (std::size_t k = 0; k < g.n; ++k)
                f << (k ? "," : "") << format_double(g.values[i * g.n + k]);
            f << "\n";
        }
    } else {
        json j;
        j["format"] = "tfkit-tfgrid";
        j["version"] = 1;
        j["n"] = g.n;
        j["fs"] = fs;
        j["t_axis"] = axis_to_json(g.t_axis);
        j["f_axis"] = axis_to_json(g.f_axis);
        auto& rows = j["values"] = json::array();
        for (std::size_t i = 0; i < g.n; ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < g.n; ++k) row.push_back(g.values[i * g.n + k]);
            rows.push_back(std::move(row));
        }
        f << j.dump() << "\n";
    }
}

TFGrid read_tfgrid(const std::string& path) {
    auto f = open_in(path);
    if (f.peek() == '{') {
        json j;
        f >> j;
        if (j.value("format", "") != "tfkit-tfgrid" || j.value("version", 0) != 1)
            throw std::runtime_error("not a tfkit-tfgrid v1 JSON file: " + path);
        TFGrid g;
        g.n = j.at("n").get<std::size_t>();
        g.t_axis = j.at("t_axis").get<std::vector<double>>();
        g.f_axis = j.at("f_axis").get<std::vector<double>>();
        for (const auto& row : j.at("values"))
            for (const auto& v : row) g.values.push_back(v.get<double>());
        validate(g);
        return g;
    }

    const auto header = parse_header(read_line(f, "tfgrid header"), "tfkit-tfgrid");
    TFGrid g;
    g.n = static_cast<std::size_t>(field_as_double(header, "n"));
    g.t_axis = parse_row(read_line(f, "t axis"), g.n, "t axis");
    g.f_axis = parse_row(read_line(f, "f axis"), g.n, "f axis");
    g.values.reserve(g.n * g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        const auto row = parse_row(read_line(f, "grid row"), g.n, "grid row");
        g.values.insert(g.values.end(), row.begin(), row.end());
    }
    validate(g);
    return g;
}

void write_ambgrid(const std::string& path, const AmbGrid& g, Format fmt) {
    validate(g);
    auto f = open_out(path);
    if (fmt == Format::csv) {
        f << "# tfkit-ambgrid v1, n=" << g.n << ", fs=" << format_double(g.sample_rate)
          << ", t0=" << format_double(g.t_origin) << ", f0=" << format_double(g.f_origin) << "\n";
        write_axis(f, g.tau_axis);
        write_axis(f, g.nu_axis);
        for (std::size_t i = 0; i < g.n; ++i) {
            for (std::size_t k = 0; k < g.n; ++k) {
                const cplx v = g.values[i * g.n + k];
                f << (k ? "," : "") << format_double(v.real()) << "," << format_double(v.imag());
            }
            f << "\n";
        }
    } else {
        json j;
        j["format"] = "tfkit-ambgrid";
        j["version"] = 1;
        j["n"] = g.n;
        j["fs"] = g.sample_rate;
        j["t0"] = g.t_origin;
        j["f0"] = g.f_origin;
        j["tau_axis"] = axis_to_json(g.tau_axis);
        j["nu_axis"] = axis_to_json(g.nu_axis);
        auto& rows = j["values"] = json::array();
        for (std::size_t i = 0; i < g.n; ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < g.n; ++k) {
                const cplx v = g.values[i * g.n + k];
                row.push_back({v.real(), v.imag()});
            }
            rows.push_back(std::move(row));
        }
        f << j.dump() << "\n";
    }
}

AmbGrid read_ambgrid(const std::string& path) {
    auto f = open_in(path);
    if (f.peek() == '{') {
        json j;
        f >> j;
        if (j.value("format", "") != "tfkit-ambgrid" || j.value("version", 0) != 1)
            throw std::runtime_error("not a tfkit-ambgrid v1 JSON file: " + path);
        AmbGrid g;
        g.n = j.at("n").get<std::size_t>();
        g.sample_rate = j.at("fs").get<double>();
        g.t_origin = j.at("t0").get<double>();
        g.f_origin = j.at("f0").get<double>();
        g.tau_axis = j.at("tau_axis").get<std::vector<double>>();
        g.nu_axis = j.at("nu_axis").get<std::vector<double>>();
        for (const auto& row : j.at("values"))
            for (const auto& v : row) g.values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
        validate(g);
        return g;
    }

    const auto header = parse_header(read_line(f, "ambgrid header"), "tfkit-ambgrid");
    AmbGrid g;
    g.n = static_cast<std::size_t>(field_as_double(header, "n"));
    g.sample_rate = field_as_double(header, "fs");
    g.t_origin = field_as_double(header, "t0");
    g.f_origin = field_as_double(header, "f0");
    g.tau_axis = parse_row(read_line(f, "tau axis"), g.n, "tau axis");
    g.nu_axis = parse_row(read_line(f, "nu axis"), g.n, "nu axis");
    g.values.reserve(g.n * g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        const auto row = parse_row(read_line(f, "grid row"), 2 * g.n, "grid row");
        for (std::size_t k = 0; k < g.n; ++k) g.values.emplace_back(row[2 * k], row[2 * k + 1]);
    }
    validate(g);
    return g;
}

std::string report_json(const UncertaintyReport& r) {
    json j;
    j["schema"] = "tfkit-report/1";
    j["signal"] = {{"norm2", r.norm2}};
    j["kernel"] = {{"name", r.kernel_name},
                   {"time_marginal", r.kernel_time_marginal},
                   {"freq_marginal", r.kernel_freq_marginal}};
    j["heisenberg"] = {{"lhs", r.heisenberg.lhs},
                       {"rhs", r.heisenberg.rhs},
                       {"ratio", r.heisenberg.ratio},
                       {"pass", r.heisenberg.pass}};
    if (r.relation1_applicable) {
        j["relation1"] = {{"applicable", true}, {"lhs", r.relation1.lhs},
                          {"rhs", r.relation1.rhs}, {"ratio", r.relation1.ratio},
                          {"t0", r.relation1.t0},  {"f0", r.relation1.f0},
                          {"pass", r.relation1.pass}};
    } else {
        j["relation1"] = {{"applicable", false},
                          {"reason", "kernel does not satisfy both marginal conditions"}};
    }
    j["strong_uncertainty"] = {{"det", r.strong.det},
                               {"psd", r.strong.psd},
                               {"hbar_eff", hbar_eff}};
    j["covariance"] = {{"var_t", r.covariance.var_t},   {"var_f", r.covariance.var_f},
                       {"cov_tf", r.covariance.cov_tf}, {"mean_t", r.covariance.mean_t},
                       {"mean_f", r.covariance.mean_f}, {"total_mass", r.covariance.total_mass}};
    return j.dump(1);
}

}  // namespace tfkit::io
