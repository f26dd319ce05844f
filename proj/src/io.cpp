#include "extremal/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace extremal::io {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

bool parse_full_double(std::string_view token, double& out) {
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  while (begin != end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end != begin && (end[-1] == ' ' || end[-1] == '\t')) --end;
  if (begin == end) return false;
  const auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc{} && res.ptr == end;
}

} // namespace

PointSet parse_point_csv(std::istream& in, const std::string& source_name) {
  std::vector<double> coords;
  std::size_t dim = 0;
  std::size_t rows = 0;
  bool dim_from_header = false;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) continue;
    if (rows == 0 && !dim_from_header && line.rfind("dim=", 0) == 0) {
      const std::string_view rest(line.data() + 4, line.size() - 4);
      std::size_t d = 0;
      const auto res =
          std::from_chars(rest.data(), rest.data() + rest.size(), d);
      if (res.ec != std::errc{} || res.ptr != rest.data() + rest.size() ||
          d == 0) {
        throw ParseError(source_name + ": malformed dim= header", line_no);
      }
      dim = d;
      dim_from_header = true;
      continue;
    }
    std::vector<double> row;
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) comma = line.size();
      double v = 0.0;
      if (!parse_full_double(
              std::string_view(line.data() + start, comma - start), v)) {
        throw ParseError(source_name + ": malformed coordinate \"" +
                             line.substr(start, comma - start) + "\"",
                         line_no);
      }
      if (!std::isfinite(v)) {
        throw ParseError(source_name + ": non-finite coordinate", line_no);
      }
      row.push_back(v);
      start = comma + 1;
      if (comma == line.size()) break;
    }
    if (dim == 0) {
      dim = row.size();
    }
    if (row.size() != dim) {
      throw ParseError(source_name + ": expected " + std::to_string(dim) +
                           " coordinates, found " +
                           std::to_string(row.size()),
                       line_no);
    }
    coords.insert(coords.end(), row.begin(), row.end());
    ++rows;
  }
  if (rows == 0) {
    throw ParseError(source_name + ": no points found");
  }
  return PointSet(dim, std::move(coords));
}

PointSet read_point_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open input file: " + path.string());
  }
  return parse_point_csv(in, path.filename().string());
}

std::string point_csv_string(const PointSet& pts) {
  std::string out = "dim=" + std::to_string(pts.dim()) + "\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto p = pts.point(i);
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j > 0) out += ',';
      out += format_double(p[j]);
    }
    out += '\n';
  }
  return out;
}

void write_text_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw ParseError("cannot open output file: " + tmp.string());
    }
    out << content;
    out.flush();
    if (!out) {
      throw ParseError("write failed: " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

void write_point_csv(const std::filesystem::path& path, const PointSet& pts) {
  write_text_atomic(path, point_csv_string(pts));
}

nlohmann::ordered_json to_json(const ChebyshevResult& r) {
  nlohmann::ordered_json j;
  j["center"] = r.center;
  j["radius"] = r.radius;
  auto support = nlohmann::ordered_json::array();
  for (const auto& e : r.support) {
    support.push_back({{"index", e.index}, {"weight", e.weight}});
  }
  j["support"] = std::move(support);
  j["residual"] = r.residual;
  return j;
}

ChebyshevResult chebyshev_from_json(const nlohmann::json& j) {
  ChebyshevResult r;
  r.center = j.at("center").get<std::vector<double>>();
  r.radius = j.at("radius").get<double>();
  for (const auto& e : j.at("support")) {
    r.support.push_back(
        {e.at("index").get<std::size_t>(), e.at("weight").get<double>()});
  }
  r.residual = j.value("residual", 0.0);
  return r;
}

nlohmann::ordered_json to_json(const GeneratorSpec& spec) {
  nlohmann::ordered_json j;
  j["family"] = spec.family;
  j["m"] = spec.m;
  if (!spec.params.empty()) {
    nlohmann::ordered_json params;
    for (const auto& [key, value] : spec.params) {
      params[key] = value;
    }
    j["params"] = std::move(params);
  }
  return j;
}

GeneratorSpec generator_spec_from_json(const nlohmann::json& j) {
  GeneratorSpec spec;
  try {
    spec.family = j.at("family").get<std::string>();
    spec.m = j.at("m").get<std::size_t>();
    if (j.contains("params")) {
      for (const auto& [key, value] : j.at("params").items()) {
        spec.params[key] = value.get<double>();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed generator spec: ") + e.what());
  }
  return spec;
}

std::vector<GeneratorSpec> parse_input_config(const nlohmann::json& j) {
  std::vector<GeneratorSpec> specs;
  if (j.contains("union")) {
    const auto& parts = j.at("union");
    if (!parts.is_array() || parts.empty()) {
      throw ParseError("config: \"union\" must be a non-empty array");
    }
    for (const auto& part : parts) {
      specs.push_back(generator_spec_from_json(part));
    }
  } else {
    specs.push_back(generator_spec_from_json(j));
  }
  return specs;
}

std::vector<GeneratorSpec> read_input_config(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open input file: " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.filename().string() + ": " + e.what());
  }
  return parse_input_config(j);
}

} // namespace extremal::io
