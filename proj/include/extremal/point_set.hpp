#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "extremal/common.hpp"

namespace extremal {

/// A finite ordered collection of d-dimensional points, stored row-major.
///
/// Invariants enforced on construction: at least one point, every point has
/// exactly dim coordinates, all coordinates finite, labels (when present)
/// are unique with one per point. Duplicate points are allowed.
class PointSet {
public:
  PointSet(std::size_t dim, std::vector<double> coords,
           std::vector<std::string> labels = {});

  static PointSet from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return size_; }
  std::size_t dim() const noexcept { return dim_; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  const std::vector<double>& coords() const noexcept { return coords_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Uniform scaling x -> factor * x. Labels carry over.
  PointSet scaled(double factor) const;

  /// Selection by index, in the given order. Labels carry over.
  PointSet subset(const std::vector<std::size_t>& indices) const;

  /// Copy with one extra point appended. Labels are dropped.
  PointSet appended(std::span<const double> extra) const;

  /// Indices of the first occurrence of each distinct point (exact
  /// coordinate equality), in increasing order.
  std::vector<std::size_t> distinct_indices() const;

private:
  std::size_t dim_;
  std::size_t size_;
  std::vector<double> coords_;
  std::vector<std::string> labels_;
};

/// Closed ball B(c, r). The sphere S(c, r) is represented as a ball plus a
/// membership tolerance.
struct Ball {
  std::vector<double> center;
  double radius = 0.0;

  Ball(std::vector<double> c, double r);

  bool contains(std::span<const double> x, double tol = 0.0) const;
  bool on_sphere(std::span<const double> x, double tol) const;
};

} // namespace extremal
