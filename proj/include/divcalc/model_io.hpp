#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "divcalc/surface.hpp"
#include "divcalc/toric.hpp"

namespace divcalc {

/// Surface model sharing the Picard group of a toric surface, with the class
/// of each D_ρ in the surface basis.
struct SurfaceLink {
    std::string model;
    std::vector<QVec> class_map;
};

struct LoadedModel {
    std::variant<SurfaceModel, ToricModel> model;
    std::optional<SurfaceLink> surface_link;

    bool is_surface() const { return std::holds_alternative<SurfaceModel>(model); }
    const SurfaceModel& surface() const { return std::get<SurfaceModel>(model); }
    const ToricModel& toric() const { return std::get<ToricModel>(model); }
    const std::string& name() const;
};

/// Parses and validates a model document. Errors: "parse-error",
/// "rational-encoding", or ValidationError with one Issue per violation.
LoadedModel parse_model(std::string_view text);

/// File path, catalog directory override or built-in name.
LoadedModel load_model(const std::string& spec);

nlohmann::json model_to_json(const LoadedModel& m);
/// Canonical serialization (sorted keys, canonical rationals).
std::string canonical_model_text(const LoadedModel& m);
/// FNV-1a of the canonical serialization, as 16 hex digits.
std::string model_hash(const LoadedModel& m);

/// Exact rational from a JSON string "p/q" or integer; floats are rejected.
Rat rational_from_json(const nlohmann::json& v);
nlohmann::json rational_to_json(const Rat& r);
QVec qvec_from_json(const nlohmann::json& v);
nlohmann::json qvec_to_json(const QVec& v);

/// "1,-2,1/2" with the expected length ("dimension-mismatch").
QVec parse_divisor(std::string_view csv, std::size_t expected_length);

}  // namespace divcalc
