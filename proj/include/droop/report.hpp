#pragma once

// Deterministic text output. Numbers are written with std::to_chars, so the
// result does not depend on locale or stream state:
//   - CSV and report values: 9 significant digits (%.9g style, shortest
//     form, no trailing zeros); dB columns follow the same rule.
//   - configuration echo: shortest round-trip representation.
//   - NaN (model invalid) -> "NA", +inf -> "inf", -inf -> "-inf", -0 -> "0".

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "droop/span_chain.hpp"
#include "droop/sweep.hpp"
#include "droop/units.hpp"

namespace droop {

inline constexpr const char* kToolName = "droop-snr";
inline constexpr const char* kToolVersion = "1.0.0";

std::string format_number(double x);
std::string format_exact(double x);

/// Provenance block written as '#'-prefixed lines ahead of every table.
struct RunManifest {
    std::string subcommand;
    LinkConfig config;
    DerivedParams derived;
    std::vector<std::pair<std::string, std::string>> grid;
    std::vector<std::pair<std::string, std::string>> results;
};

RunManifest make_manifest(std::string subcommand, const LinkConfig& cfg, const DerivedParams& derived);

void write_manifest(std::ostream& out, const RunManifest& manifest);

void write_sweep_csv(std::ostream& out, const RunManifest& manifest, const std::vector<SweepRow>& rows);
void write_span_sweep_csv(std::ostream& out, const RunManifest& manifest,
                          const std::vector<SpanSweepRow>& rows);
void write_trace_csv(std::ostream& out, const RunManifest& manifest, const ChainResult& chain);

/// Named quantities of the derived working set, linear and dB forms.
std::vector<std::pair<std::string, std::string>> derived_fields(const DerivedParams& derived);

}  // namespace droop
