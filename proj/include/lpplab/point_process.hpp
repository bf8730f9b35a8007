#pragma once

// Poisson point configurations on planar regions and on offset diagonal
// lines. Fields are generated left to right through exponential x-gaps, so a
// cloud is Poisson by construction and comes out already sorted.

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lpplab/points.hpp"
#include "lpplab/rng.hpp"

namespace lpplab {

// Rate-1 (or rate-r) Poisson field on a rectangle. The x-coordinates form a
// 1-D Poisson process of intensity rate*height; each point gets an
// independent uniform y. Zero-width gaps (possible only at the resolution
// floor of the uniform grid) are redrawn so points stay strictly ordered.
inline PointCloud sample_poisson_field(const Region& region, double rate, const StreamKey& key) {
  if (!(rate >= 0.0) || !std::isfinite(rate)) throw std::invalid_argument("poisson field: rate must be finite and >= 0");
  if (!region.valid()) throw std::invalid_argument("poisson field: invalid region");

  PointCloud cloud;
  cloud.seed_record = key;
  const double line_rate = rate * region.height();
  if (line_rate <= 0.0 || region.width() <= 0.0) return cloud;

  Stream stream(key);
  const double expected = line_rate * region.width();
  cloud.points.reserve(static_cast<std::size_t>(expected + 6.0 * std::sqrt(expected) + 16.0));

  double x = region.x_min;
  for (;;) {
    double gap = stream.exponential(line_rate);
    while (gap == 0.0) gap = stream.exponential(line_rate);
    x += gap;
    if (x >= region.x_max) break;
    cloud.points.push_back({x, stream.uniform(region.y_min, region.y_max)});
  }
  cloud.tags.assign(cloud.points.size(), PointTag::bulk);
  return cloud;
}

// 1-D Poisson process of intensity lambda per unit arc length on the line
// y = x + m, restricted to x in [x_lo, x_hi]. Arc length is sqrt(2) per unit
// of x, so the x-projection has intensity lambda*sqrt(2).
inline PointCloud sample_diagonal_reinforcement(double lambda, double offset_m, double x_lo,
                                                double x_hi, const StreamKey& key) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("diagonal reinforcement: lambda must be finite and >= 0");
  if (!(x_lo <= x_hi)) throw std::invalid_argument("diagonal reinforcement: x_lo must be <= x_hi");

  PointCloud cloud;
  cloud.seed_record = key;
  const double line_rate = lambda * std::sqrt(2.0);
  if (line_rate <= 0.0 || x_hi <= x_lo) return cloud;

  Stream stream(key);
  const double expected = line_rate * (x_hi - x_lo);
  cloud.points.reserve(static_cast<std::size_t>(expected + 6.0 * std::sqrt(expected) + 16.0));

  double x = x_lo;
  for (;;) {
    double gap = stream.exponential(line_rate);
    while (gap == 0.0) gap = stream.exponential(line_rate);
    x += gap;
    if (x >= x_hi) break;
    cloud.points.push_back({x, x + offset_m});
  }
  cloud.tags.assign(cloud.points.size(), PointTag::diagonal);
  return cloud;
}

// Multiset union of two clouds; tags travel with their points.
inline PointCloud superimpose(const PointCloud& a, const PointCloud& b) {
  PointCloud out;
  out.seed_record = a.points.empty() ? b.seed_record : a.seed_record;
  out.points.resize(a.size() + b.size());
  out.tags.resize(a.size() + b.size());
  std::size_t ia = 0, ib = 0, k = 0;
  while (ia < a.size() && ib < b.size()) {
    if (lex_less(b.points[ib], a.points[ia])) {
      out.points[k] = b.points[ib];
      out.tags[k++] = b.tags[ib++];
    } else {
      out.points[k] = a.points[ia];
      out.tags[k++] = a.tags[ia++];
    }
  }
  for (; ia < a.size(); ++ia, ++k) out.points[k] = a.points[ia], out.tags[k] = a.tags[ia];
  for (; ib < b.size(); ++ib, ++k) out.points[k] = b.points[ib], out.tags[k] = b.tags[ib];
  return out;
}

}  // namespace lpplab
