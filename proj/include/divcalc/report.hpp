#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "divcalc/model_io.hpp"
#include "divcalc/random_classes.hpp"

namespace divcalc {

inline constexpr const char* kEngineVersion = "0.1.0";

/// A report is a JSON object with sorted keys and every rational stored as a
/// canonical "p/q" string.
using ReportDocument = nlohmann::json;

struct RunArgs {
    std::optional<QVec> d, d1, d2;
    long m_max = 12;
    std::uint64_t seed = kDefaultSeed;
    long count = 0;  // > 0 switches decompose / minkowski-report to random cases
    std::optional<std::vector<std::size_t>> flag;  // ray indices of a maximal cone, in flag order
};

const std::vector<std::string>& command_names();

/// Runs one command. Engine errors propagate as divcalc::Error.
ReportDocument run_command(const std::string& command, const LoadedModel& model, const RunArgs& args);

enum class Format { json, table };

std::string render_report(const ReportDocument& r, Format format);

/// Parses rendered JSON and checks the report shape ("report-shape").
ReportDocument parse_report(std::string_view text);

/// Error document for input failures, keyed like a report.
ReportDocument error_report(const Error& e);

}  // namespace divcalc
