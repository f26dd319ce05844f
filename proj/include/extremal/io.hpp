#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "extremal/chebyshev.hpp"
#include "extremal/generators.hpp"
#include "extremal/point_set.hpp"

#include <json.hpp>

namespace extremal::io {

/// 17 significant digits; round-trips any double through text.
std::string format_double(double v);

/// Point-cloud CSV: one point per row, comma-separated plain decimal
/// coordinates, optional first row "dim=<d>", UTF-8, LF line endings.
PointSet parse_point_csv(std::istream& in, const std::string& source_name);
PointSet read_point_csv(const std::filesystem::path& path);
std::string point_csv_string(const PointSet& pts);

/// Writes via a temp file in the same directory plus rename.
void write_text_atomic(const std::filesystem::path& path,
                       const std::string& content);
void write_point_csv(const std::filesystem::path& path, const PointSet& pts);

nlohmann::ordered_json to_json(const ChebyshevResult& r);
ChebyshevResult chebyshev_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const GeneratorSpec& spec);
GeneratorSpec generator_spec_from_json(const nlohmann::json& j);

/// Input config: either {"family": ...} (one GeneratorSpec) or
/// {"union": [spec, spec, ...]}.
std::vector<GeneratorSpec> parse_input_config(const nlohmann::json& j);
std::vector<GeneratorSpec> read_input_config(const std::filesystem::path&);

} // namespace extremal::io
