#include "extremal/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "extremal/jung.hpp"

namespace extremal {

namespace {

double param_or(const GeneratorSpec& spec, const std::string& key,
                double fallback) {
  const auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

// Portable uniform in (0, 1] and Box-Muller gaussian on top of the
// mt19937_64 stream, so seeded families are reproducible bit-for-bit.
double unit_open(std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u > 0.0 ? u : 0x1.0p-53;
}

void gaussian_pair(std::mt19937_64& rng, double& z0, double& z1) {
  const double u1 = unit_open(rng);
  const double u2 = unit_open(rng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  z0 = r * std::cos(a);
  z1 = r * std::sin(a);
}

} // namespace

bool is_known_family(const std::string& id) {
  const auto& ids = known_families();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

const std::vector<std::string>& known_families() {
  static const std::vector<std::string> ids = {
      "example1",     "example1-cauchy",   "example2",      "orthonormal",
      "scaled-orthonormal", "regular-simplex", "random-sphere"};
  return ids;
}

PointSet example1(std::size_t m) {
  if (m < 2) {
    throw DomainError("example1: m must be at least 2");
  }
  std::vector<double> coords(m * m, 0.0);
  for (std::size_t n = 1; n <= m; ++n) {
    coords[(n - 1) * m + (n - 1)] = 1.0 - 1.0 / static_cast<double>(n);
  }
  return PointSet(m, std::move(coords));
}

PointSet example1_cauchy(std::size_t m) {
  if (m < 1) {
    throw DomainError("example1_cauchy: m must be at least 1");
  }
  const std::size_t dim = m + 1;
  std::vector<double> coords(m * dim, 0.0);
  for (std::size_t n = 1; n <= m; ++n) {
    double* row = coords.data() + (n - 1) * dim;
    for (std::size_t k = 1; k <= n; ++k) {
      row[k - 1] = std::pow(2.0, -0.5 * static_cast<double>(k));
    }
    row[n] = std::pow(2.0, -0.5 * static_cast<double>(n));
  }
  return PointSet(dim, std::move(coords));
}

PointSet example2(double gamma, std::size_t m) {
  if (!(gamma > 0.0) || !(gamma <= std::numbers::sqrt2)) {
    throw DomainError("example2: gamma must lie in (0, sqrt(2)]");
  }
  if (m < 2) {
    throw DomainError("example2: m must be at least 2");
  }
  const double beta = gamma / std::numbers::sqrt2;
  const double lambda = std::sqrt(std::max(0.0, 1.0 - beta * beta));
  const std::size_t dim = m + 1;
  std::vector<double> coords(m * dim, 0.0);
  for (std::size_t n = 1; n <= m; ++n) {
    double* row = coords.data() + (n - 1) * dim;
    row[0] = lambda;
    row[n] = beta;
  }
  return PointSet(dim, std::move(coords));
}

PointSet orthonormal_family(std::size_t m) {
  if (m < 1) {
    throw DomainError("orthonormal_family: m must be at least 1");
  }
  std::vector<double> coords(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    coords[i * m + i] = 1.0;
  }
  return PointSet(m, std::move(coords));
}

PointSet scaled_orthonormal(std::size_t m, double s) {
  if (!(s > 0.0)) {
    throw DomainError("scaled_orthonormal: scale must be positive");
  }
  if (m < 1) {
    throw DomainError("scaled_orthonormal: m must be at least 1");
  }
  std::vector<double> coords(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    coords[i * m + i] = s;
  }
  return PointSet(m, std::move(coords));
}

PointSet random_sphere(std::size_t m, std::size_t d, std::uint64_t seed) {
  if (m < 1 || d < 1) {
    throw DomainError("random_sphere: m and d must be positive");
  }
  std::mt19937_64 rng(seed);
  std::vector<double> coords(m * d, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double* row = coords.data() + i * d;
    for (std::size_t j = 0; j < d; j += 2) {
      double z0 = 0.0, z1 = 0.0;
      gaussian_pair(rng, z0, z1);
      row[j] = z0;
      if (j + 1 < d) {
        row[j + 1] = z1;
      }
    }
    double norm_sq = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      norm_sq += row[j] * row[j];
    }
    const double norm = std::sqrt(norm_sq);
    if (norm < 1e-300) {
      row[0] = 1.0; // vanishing gaussian draw; keep the point on the sphere
      continue;
    }
    for (std::size_t j = 0; j < d; ++j) {
      row[j] /= norm;
    }
  }
  return PointSet(d, std::move(coords));
}

PointSet union_of(const std::vector<PointSet>& parts) {
  if (parts.empty()) {
    throw DomainError("union_of: at least one part required");
  }
  std::size_t dim = 0;
  std::size_t total = 0;
  for (const auto& p : parts) {
    dim = std::max(dim, p.dim());
    total += p.size();
  }
  std::vector<double> coords(total * dim, 0.0);
  std::size_t row = 0;
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < part.size(); ++i, ++row) {
      const auto src = part.point(i);
      std::copy(src.begin(), src.end(), coords.begin() + row * dim);
    }
  }
  return PointSet(dim, std::move(coords));
}

PointSet build_family(const GeneratorSpec& spec) {
  if (!is_known_family(spec.family)) {
    throw DomainError("unknown generator family: \"" + spec.family + "\"");
  }
  if (spec.family == "example1") {
    return example1(spec.m);
  }
  if (spec.family == "example1-cauchy") {
    return example1_cauchy(spec.m);
  }
  if (spec.family == "example2") {
    return example2(param_or(spec, "gamma", 1.0), spec.m);
  }
  if (spec.family == "orthonormal") {
    return orthonormal_family(spec.m);
  }
  if (spec.family == "scaled-orthonormal") {
    return scaled_orthonormal(spec.m, param_or(spec, "s", 1.0));
  }
  if (spec.family == "regular-simplex") {
    if (spec.m < 2) {
      throw DomainError("regular-simplex: m (= n+1 vertices) must be >= 2");
    }
    return regular_simplex(spec.m - 1, param_or(spec, "edge", 1.0));
  }
  // random-sphere
  const auto d = static_cast<std::size_t>(param_or(spec, "d", 3.0));
  const auto seed = static_cast<std::uint64_t>(param_or(spec, "seed", 0.0));
  return random_sphere(spec.m, d, seed);
}

std::size_t family_dim(const GeneratorSpec& spec) {
  if (spec.family == "example1" || spec.family == "orthonormal" ||
      spec.family == "scaled-orthonormal" ||
      spec.family == "regular-simplex") {
    return spec.m;
  }
  if (spec.family == "example1-cauchy" || spec.family == "example2") {
    return spec.m + 1;
  }
  if (spec.family == "random-sphere") {
    return static_cast<std::size_t>(param_or(spec, "d", 3.0));
  }
  throw DomainError("unknown generator family: \"" + spec.family + "\"");
}

double family_limit_radius(const GeneratorSpec& spec) {
  if (!is_known_family(spec.family)) {
    throw DomainError("unknown generator family: \"" + spec.family + "\"");
  }
  if (spec.family == "scaled-orthonormal") {
    return param_or(spec, "s", 1.0);
  }
  if (spec.family == "regular-simplex") {
    return param_or(spec, "edge", 1.0) / std::numbers::sqrt2;
  }
  // the unit-circumsphere families
  return 1.0;
}

std::optional<Ball> family_limit_sphere(const GeneratorSpec& spec,
                                        std::size_t dim) {
  if (spec.family == "regular-simplex") {
    return std::nullopt; // not centered at the origin
  }
  const double radius = family_limit_radius(spec);
  return Ball(std::vector<double>(dim, 0.0), radius);
}

} // namespace extremal
