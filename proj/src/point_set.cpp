#include "extremal/point_set.hpp"

#include <cmath>
#include <map>
#include <set>

#include "extremal/kernels.hpp"

namespace extremal {

PointSet::PointSet(std::size_t dim, std::vector<double> coords,
                   std::vector<std::string> labels)
    : dim_(dim), size_(0), coords_(std::move(coords)),
      labels_(std::move(labels)) {
  if (dim_ == 0) {
    throw DomainError("point set dimension must be positive");
  }
  if (coords_.empty() || coords_.size() % dim_ != 0) {
    throw DomainError("coordinate buffer must hold a positive number of "
                      "points of dimension " +
                      std::to_string(dim_));
  }
  size_ = coords_.size() / dim_;
  for (double v : coords_) {
    if (!std::isfinite(v)) {
      throw DomainError("point coordinates must be finite");
    }
  }
  if (!labels_.empty()) {
    if (labels_.size() != size_) {
      throw DomainError("labels must match the number of points");
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) {
      throw DomainError("labels must be unique");
    }
  }
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) {
    throw DomainError("point set must contain at least one point");
  }
  const std::size_t dim = rows.front().size();
  std::vector<double> coords;
  coords.reserve(rows.size() * dim);
  for (const auto& row : rows) {
    if (row.size() != dim) {
      throw DomainError("all points must have the same dimension");
    }
    coords.insert(coords.end(), row.begin(), row.end());
  }
  return PointSet(dim, std::move(coords));
}

PointSet PointSet::scaled(double factor) const {
  std::vector<double> coords(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords[i] = coords_[i] * factor;
  }
  return PointSet(dim_, std::move(coords), labels_);
}

PointSet PointSet::subset(const std::vector<std::size_t>& indices) const {
  if (indices.empty()) {
    throw DomainError("subset selection must be non-empty");
  }
  std::vector<double> coords;
  coords.reserve(indices.size() * dim_);
  std::vector<std::string> labels;
  for (std::size_t idx : indices) {
    if (idx >= size_) {
      throw DomainError("subset index out of range");
    }
    const auto p = point(idx);
    coords.insert(coords.end(), p.begin(), p.end());
    if (has_labels()) {
      labels.push_back(labels_[idx]);
    }
  }
  return PointSet(dim_, std::move(coords), std::move(labels));
}

PointSet PointSet::appended(std::span<const double> extra) const {
  if (extra.size() != dim_) {
    throw DomainError("appended point has mismatched dimension");
  }
  std::vector<double> coords = coords_;
  coords.insert(coords.end(), extra.begin(), extra.end());
  return PointSet(dim_, std::move(coords));
}

std::vector<std::size_t> PointSet::distinct_indices() const {
  std::map<std::vector<double>, std::size_t> seen;
  std::vector<std::size_t> firsts;
  for (std::size_t i = 0; i < size_; ++i) {
    const auto p = point(i);
    std::vector<double> key(p.begin(), p.end());
    if (seen.emplace(std::move(key), i).second) {
      firsts.push_back(i);
    }
  }
  return firsts;
}

Ball::Ball(std::vector<double> c, double r) : center(std::move(c)), radius(r) {
  if (center.empty()) {
    throw DomainError("ball center must have positive dimension");
  }
  for (double v : center) {
    if (!std::isfinite(v)) {
      throw DomainError("ball center must be finite");
    }
  }
  if (!(radius >= 0.0)) {
    throw DomainError("ball radius must be nonnegative");
  }
}

bool Ball::contains(std::span<const double> x, double tol) const {
  if (x.size() != center.size()) {
    throw DomainError("ball membership: dimension mismatch");
  }
  return kernels::distance(x, center) <= radius + tol;
}

bool Ball::on_sphere(std::span<const double> x, double tol) const {
  if (x.size() != center.size()) {
    throw DomainError("sphere membership: dimension mismatch");
  }
  return std::abs(kernels::distance(x, center) - radius) <= tol;
}

} // namespace extremal
