#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extremal/point_set.hpp"

namespace extremal {

/// Named point-set family plus parameters; serializes to the CLI's JSON
/// config. `m` is the truncation size (first m elements in enumeration
/// order); the ambient dimension is the smallest holding all of them.
struct GeneratorSpec {
  std::string family; // see known_families()
  std::size_t m = 0;
  std::map<std::string, double> params; // gamma, s, edge, d, seed
};

bool is_known_family(const std::string& id);
const std::vector<std::string>& known_families();

/// Points (1 - 1/n) e_n for n = 1..m in R^m; n=1 is the zero vector. m >= 2.
PointSet example1(std::size_t m);

/// Points x_n = sum_{k=1..n} 2^{-k/2} e_k + 2^{-n/2} e_{n+1} for n = 1..m,
/// in R^{m+1}. Unit norm for every n; a Cauchy sequence.
PointSet example1_cauchy(std::size_t m);

/// With beta = gamma/sqrt(2), lambda = sqrt(1 - beta^2): points
/// y_n = lambda e_1 + beta e_{n+1}, n = 1..m, in R^{m+1}. Unit norm, all
/// pairwise distances equal to gamma. Requires gamma in (0, sqrt(2)], m >= 2.
PointSet example2(double gamma, std::size_t m);

/// Standard basis e_1..e_m in R^m.
PointSet orthonormal_family(std::size_t m);

/// s * e_1..e_m. Requires s > 0.
PointSet scaled_orthonormal(std::size_t m, double s);

/// m points uniform on the unit sphere of R^d: mt19937_64 stream, Box-Muller
/// gaussians, normalized. Bit-identical across runs for a fixed seed.
PointSet random_sphere(std::size_t m, std::size_t d, std::uint64_t seed);

/// Embeds all inputs into the max dimension by zero-padding and
/// concatenates, in order. Labels are dropped.
PointSet union_of(const std::vector<PointSet>& parts);

PointSet build_family(const GeneratorSpec& spec);

/// Ambient dimension build_family(spec) will produce.
std::size_t family_dim(const GeneratorSpec& spec);

/// Circumradius of the family's limit object (1 for the unit-circumsphere
/// families, s for scaled-orthonormal, edge/sqrt(2) for regular-simplex).
/// Profiles divide by this, so the unit families stay bit-identical raw.
double family_limit_radius(const GeneratorSpec& spec);

/// Limit circumsphere (center and radius) for the origin-centered families;
/// empty for regular-simplex. Useful as the reference sphere for slices.
std::optional<Ball> family_limit_sphere(const GeneratorSpec& spec,
                                        std::size_t dim);

} // namespace extremal
