#pragma once

// Longest increasing path statistics over planar point clouds: lengths,
// topmost maximal paths, and the path functionals (length against a
// configuration, area, transversal fluctuation).
//
// A chain is a set of cloud points increasing strictly in both coordinates.
// Endpoint convention: a query between corners u < u' ranges over cloud
// points p with u <= p <= u' componentwise; corner points that happen to be
// in the cloud count once.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lpplab/point_process.hpp"
#include "lpplab/points.hpp"

namespace lpplab {

// A piecewise linear increasing path, identified with the function gamma_x.
struct IncreasingPath {
  std::vector<PlanarPoint> vertices;

  bool strictly_increasing() const {
    for (std::size_t i = 1; i < vertices.size(); ++i)
      if (!strictly_below(vertices[i - 1], vertices[i])) return false;
    return true;
  }

  double x_front() const { return vertices.front().x; }
  double x_back() const { return vertices.back().x; }

  // gamma_x by linear interpolation; clamped outside the span.
  double value_at(double x) const {
    if (vertices.empty()) throw std::domain_error("path: empty");
    if (x <= vertices.front().x) return vertices.front().y;
    if (x >= vertices.back().x) return vertices.back().y;
    auto it = std::upper_bound(vertices.begin(), vertices.end(), x,
                               [](double xv, const PlanarPoint& p) { return xv < p.x; });
    const PlanarPoint& b = *it;
    const PlanarPoint& a = *(it - 1);
    if (b.x == a.x) return b.y;
    return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
  }
};

struct LisResult {
  int64_t length = 0;
  IncreasingPath topmost_path;
  PlanarPoint from, to;

  // X-hat centering: length minus the l1 distance of the corners.
  double centered_l1() const { return static_cast<double>(length) - l1_distance(from, to); }
};

namespace detail {

// Candidate points of a corner query, in chain-scan order: x ascending with
// y descending on x-ties (so equal-x points can never stack in one chain).
inline void box_candidates(const PointCloud& cloud, const PlanarPoint& u, const PlanarPoint& v,
                           std::vector<double>& xs, std::vector<double>& ys) {
  xs.clear();
  ys.clear();
  auto lo = std::lower_bound(cloud.points.begin(), cloud.points.end(), u.x,
                             [](const PlanarPoint& p, double x) { return p.x < x; });
  for (auto it = lo; it != cloud.points.end() && it->x <= v.x; ++it) {
    if (it->y >= u.y && it->y <= v.y) {
      xs.push_back(it->x);
      ys.push_back(it->y);
    }
  }
  // reverse equal-x runs to get the y-descending tiebreak
  std::size_t i = 0;
  while (i < xs.size()) {
    std::size_t j = i + 1;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    if (j - i > 1) std::reverse(ys.begin() + i, ys.begin() + j);
    i = j;
  }
}

// Patience piles over ys (candidates in chain-scan order). piles[k] holds
// candidate indices whose longest chain ending there has k+1 points; along a
// pile, y decreases and x increases.
inline int64_t patience_piles(const std::vector<double>& ys,
                              std::vector<std::vector<int32_t>>* piles) {
  std::vector<double> tails;
  tails.reserve(256);
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const double y = ys[i];
    auto it = std::lower_bound(tails.begin(), tails.end(), y);
    const std::size_t k = static_cast<std::size_t>(it - tails.begin());
    if (it == tails.end())
      tails.push_back(y);
    else
      *it = y;
    if (piles) {
      if (k == piles->size()) piles->emplace_back();
      (*piles)[k].push_back(static_cast<int32_t>(i));
    }
  }
  return static_cast<int64_t>(tails.size());
}

inline void require_corner_order(const PlanarPoint& u, const PlanarPoint& v) {
  if (!strictly_below(u, v)) throw std::domain_error("corners must satisfy u < u' strictly");
}

}  // namespace detail

// X_{u,u'}: maximum chain cardinality between corners, O(N log N).
inline int64_t lis_length(const PointCloud& cloud, const PlanarPoint& u, const PlanarPoint& v) {
  detail::require_corner_order(u, v);
  std::vector<double> xs, ys;
  detail::box_candidates(cloud, u, v, xs, ys);
  return detail::patience_piles(ys, nullptr);
}

// Exact O(N^2) longest-chain DP; the independent oracle for lis_length.
inline int64_t lis_brute_force(const PointCloud& cloud, const PlanarPoint& u,
                               const PlanarPoint& v) {
  detail::require_corner_order(u, v);
  std::vector<double> xs, ys;
  detail::box_candidates(cloud, u, v, xs, ys);
  const std::size_t n = xs.size();
  std::vector<int64_t> dp(n, 1);
  int64_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (xs[j] < xs[i] && ys[j] < ys[i]) dp[i] = std::max(dp[i], dp[j] + 1);
    best = std::max(best, dp[i]);
  }
  return best;
}

// The topmost maximal path: among all maximum chains, the one whose path
// function dominates every other pointwise. Reconstructed backwards over the
// patience piles, taking at each level the highest-y point compatible with
// the vertex above it.
inline LisResult topmost_maximal_path(const PointCloud& cloud, const PlanarPoint& u,
                                      const PlanarPoint& v) {
  detail::require_corner_order(u, v);
  LisResult res;
  res.from = u;
  res.to = v;

  std::vector<double> xs, ys;
  detail::box_candidates(cloud, u, v, xs, ys);
  std::vector<std::vector<int32_t>> piles;
  res.length = detail::patience_piles(ys, &piles);

  std::vector<PlanarPoint> chain(static_cast<std::size_t>(res.length));
  double cx = v.x, cy = v.y;
  bool cap_is_corner = true;
  for (int64_t k = res.length - 1; k >= 0; --k) {
    const auto& pile = piles[static_cast<std::size_t>(k)];
    // first entry strictly below the vertex above; piles are y-descending
    auto it = cap_is_corner
                  ? std::partition_point(pile.begin(), pile.end(),
                                         [&](int32_t i) { return ys[i] > cy; })
                  : std::partition_point(pile.begin(), pile.end(),
                                         [&](int32_t i) { return ys[i] >= cy; });
    while (it != pile.end() && !(xs[*it] < cx || (cap_is_corner && xs[*it] <= cx)) ) ++it;
    if (it == pile.end()) throw std::logic_error("topmost path: no compatible predecessor");
    chain[static_cast<std::size_t>(k)] = {xs[*it], ys[*it]};
    cx = xs[*it];
    cy = ys[*it];
    cap_is_corner = false;
  }

  auto& verts = res.topmost_path.vertices;
  verts.reserve(chain.size() + 2);
  if (chain.empty() || chain.front() != u) verts.push_back(u);
  verts.insert(verts.end(), chain.begin(), chain.end());
  if (chain.empty() || chain.back() != v) verts.push_back(v);
  return res;
}

// l_gamma: vertices of the path that lie in the configuration, counting the
// start vertex but never the end vertex.
inline int64_t path_length(const IncreasingPath& gamma, const PointCloud& cloud) {
  if (gamma.vertices.empty()) return 0;
  int64_t count = 0;
  for (std::size_t j = 0; j + 1 < gamma.vertices.size(); ++j)
    if (cloud.contains(gamma.vertices[j])) ++count;
  return count;
}

// A_gamma between u and u' along the path: total area of the axis-aligned
// boxes spanned by consecutive configuration points of gamma (the corners u
// and u' close off the first and last box).
inline double path_area(const IncreasingPath& gamma, const PointCloud& cloud,
                        const PlanarPoint& u, const PlanarPoint& v) {
  const auto& verts = gamma.vertices;
  auto iu = std::find(verts.begin(), verts.end(), u);
  auto iv = std::find(verts.begin(), verts.end(), v);
  if (iu == verts.end() || iv == verts.end() || !(iu < iv))
    throw std::domain_error("path_area: u and u' must be vertices of gamma in order");

  double area = 0.0;
  PlanarPoint prev = u;
  for (auto it = iu + 1; it != iv; ++it) {
    if (cloud.contains(*it)) {
      area += box_area(prev, *it);
      prev = *it;
    }
  }
  area += box_area(prev, v);
  return area;
}

// L_n^{lambda,m}: LIS of a rate-1 field on [0,n]^2 superimposed with a rate
// lambda diagonal reinforcement on y = x + m, between (0,0) and (n,n). The
// bulk and diagonal substreams are addressed by purpose under the given key.
inline LisResult reinforced_lis(int64_t n, double lambda, double m, const StreamKey& key) {
  if (n < 1) throw std::domain_error("reinforced_lis: n must be >= 1");
  if (!(lambda >= 0.0)) throw std::invalid_argument("reinforced_lis: lambda must be >= 0");
  if (!(std::fabs(m) < static_cast<double>(n)))
    throw std::domain_error("reinforced_lis: |m| < n required (line must cross the square)");

  StreamKey bulk_key = key;
  bulk_key.purpose = static_cast<uint32_t>(Purpose::bulk_field);
  PointCloud cloud = sample_poisson_field(Region::square(static_cast<double>(n)), 1.0, bulk_key);

  if (lambda > 0.0) {
    StreamKey diag_key = key;
    diag_key.purpose = static_cast<uint32_t>(Purpose::diagonal);
    const double x_lo = std::max(0.0, -m);
    const double x_hi = std::min(static_cast<double>(n), static_cast<double>(n) - m);
    cloud = superimpose(cloud, sample_diagonal_reinforcement(lambda, m, x_lo, x_hi, diag_key));
  }
  return topmost_maximal_path(cloud, {0.0, 0.0},
                              {static_cast<double>(n), static_cast<double>(n)});
}

struct TransversalFluctuation {
  double about_diagonal = 0.0;  // F: sup_x |gamma(x) - x|
  double about_chord = 0.0;     // D: sup_x |gamma(x) - L(x)|, L the chord a->b
};

// Both sups are attained at path vertices (the compared functions are linear
// between them).
inline TransversalFluctuation transversal_fluctuation(const IncreasingPath& gamma,
                                                      const PlanarPoint& a,
                                                      const PlanarPoint& b) {
  TransversalFluctuation out;
  const double dx = b.x - a.x;
  const double slope = dx != 0.0 ? (b.y - a.y) / dx : 0.0;
  for (const auto& p : gamma.vertices) {
    out.about_diagonal = std::max(out.about_diagonal, std::fabs(p.y - p.x));
    const double chord_y = a.y + (p.x - a.x) * slope;
    out.about_chord = std::max(out.about_chord, std::fabs(p.y - chord_y));
  }
  return out;
}

}  // namespace lpplab
