#pragma once

#include <string>

#include "tfkit/grid.hpp"
#include "tfkit/moments.hpp"
#include "tfkit/signal.hpp"

namespace tfkit::io {

enum class Format { csv, json };

Format format_from_string(const std::string& s);

// Signal files. CSV: header "# tfkit-signal v1, fs=<float>, t0=<float>",
// then one "re,im" line per sample. Readers reject other versions.
void write_signal(const std::string& path, const SampledSignal& x, Format fmt = Format::csv);
SampledSignal read_signal(const std::string& path);

// TFGrid files. CSV: header "# tfkit-tfgrid v1, n=<int>, fs=<float>",
// t axis line, f axis line, then n rows of n values.
void write_tfgrid(const std::string& path, const TFGrid& g, Format fmt = Format::csv);
TFGrid read_tfgrid(const std::string& path);

// AmbGrid files mirror the TFGrid layout with interleaved re/im columns and
// carry the source-grid origins in the header.
void write_ambgrid(const std::string& path, const AmbGrid& g, Format fmt = Format::csv);
AmbGrid read_ambgrid(const std::string& path);

/// Uncertainty report as JSON text (schema "tfkit-report/1").
std::string report_json(const UncertaintyReport& r);

/// Shortest representation that parses back to the same double.
std::string format_double(double v);

}  // namespace tfkit::io
