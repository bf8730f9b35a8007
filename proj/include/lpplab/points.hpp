#pragma once

// Planar point configurations: the raw material of the continuum model.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lpplab/rng.hpp"

namespace lpplab {

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

// Lexicographic (x, y) order used for storage.
inline bool lex_less(const PlanarPoint& a, const PlanarPoint& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Strict partial order: u < v iff both coordinates strictly increase.
inline bool strictly_below(const PlanarPoint& u, const PlanarPoint& v) {
  return u.x < v.x && u.y < v.y;
}

inline bool weakly_below(const PlanarPoint& u, const PlanarPoint& v) {
  return u.x <= v.x && u.y <= v.y;
}

// l1 distance d(u,u') for u <= u'.
inline double l1_distance(const PlanarPoint& u, const PlanarPoint& v) {
  return (v.x - u.x) + (v.y - u.y);
}

inline double box_area(const PlanarPoint& u, const PlanarPoint& v) {
  return (v.x - u.x) * (v.y - u.y);
}

struct Region {
  double x_min = 0.0, x_max = 0.0;
  double y_min = 0.0, y_max = 0.0;

  bool valid() const { return x_min <= x_max && y_min <= y_max; }
  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }

  static Region square(double n) { return {0.0, n, 0.0, n}; }
};

enum class PointTag : uint8_t { bulk = 0, diagonal = 1 };

// A finite configuration, sorted lexicographically by (x, y), with one
// provenance tag per point and the key that generated it.
struct PointCloud {
  std::vector<PlanarPoint> points;
  std::vector<PointTag> tags;
  StreamKey seed_record;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }

  bool is_sorted() const {
    for (std::size_t i = 1; i < points.size(); ++i)
      if (!lex_less(points[i - 1], points[i])) return false;
    return true;
  }

  bool contains(const PlanarPoint& p) const {
    auto it = std::lower_bound(points.begin(), points.end(), p, lex_less);
    return it != points.end() && *it == p;
  }
};

}  // namespace lpplab
