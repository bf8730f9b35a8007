#pragma once

// Exponential directed last passage percolation on Z^2_+ with a slow-bond
// defect line: weight sampling, passage-time dynamic programming, geodesic
// backtracking, and the Bernoulli decomposition of the defect distribution.
//
// Vertex-sum convention: an oriented path from (0,0) to (n,n) has 2n+1
// vertices and the passage time sums all of them, both endpoints included.

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpplab/rng.hpp"

namespace lpplab {

// Geodesic extraction keeps the full (n+1)^2 table in memory; exponent
// studies should use passage_time_value instead.
inline constexpr int64_t kMaxTableN = 10000;

struct LatticeWeights {
  int64_t n = 0;
  double epsilon = 0.0;
  int64_t m = 0;  // defect line y = x + m
  std::vector<double> xi;  // (n+1)x(n+1), row-major in x

  double at(int64_t x, int64_t y) const { return xi[static_cast<std::size_t>(x * (n + 1) + y)]; }
  bool on_defect(int64_t x, int64_t y) const { return y == x + m; }
};

// Weight of cell (x,y) is -log(1-u)/rate with u the uniform attached to the
// index pair (x,y) under the key. Because the uniforms do not depend on
// epsilon or m, runs with the same key are coupled across defect strengths
// (common random numbers), and the defected table dominates the clean one
// realization by realization.
inline LatticeWeights sample_weights(int64_t n, double epsilon, int64_t m, const StreamKey& key) {
  if (!(epsilon >= 0.0 && epsilon < 1.0))
    throw std::invalid_argument("sample_weights: epsilon must be in [0,1)");
  if (n < 0) throw std::invalid_argument("sample_weights: n must be >= 0");
  if (std::llabs(m) > n) throw std::invalid_argument("sample_weights: |m| <= n required");

  LatticeWeights w;
  w.n = n;
  w.epsilon = epsilon;
  w.m = m;
  w.xi.resize(static_cast<std::size_t>((n + 1) * (n + 1)));
  std::size_t k = 0;
  for (int64_t x = 0; x <= n; ++x) {
    for (int64_t y = 0; y <= n; ++y, ++k) {
      const double rate = (y == x + m) ? 1.0 - epsilon : 1.0;
      w.xi[k] = exponential_at(key, static_cast<uint32_t>(x), static_cast<uint32_t>(y), rate);
    }
  }
  return w;
}

struct PassageTable {
  int64_t n = 0;
  std::vector<double> T;  // (n+1)x(n+1), row-major in x

  double at(int64_t x, int64_t y) const { return T[static_cast<std::size_t>(x * (n + 1) + y)]; }
};

// T(n,n) only, O(n) memory.
inline double passage_time_value(const LatticeWeights& w) {
  const int64_t n = w.n;
  std::vector<double> row(static_cast<std::size_t>(n + 1));
  for (int64_t x = 0; x <= n; ++x) {
    for (int64_t y = 0; y <= n; ++y) {
      double best = 0.0;
      if (x == 0 && y == 0)
        best = 0.0;
      else if (x == 0)
        best = row[static_cast<std::size_t>(y - 1)];
      else if (y == 0)
        best = row[0];
      else
        best = std::max(row[static_cast<std::size_t>(y)], row[static_cast<std::size_t>(y - 1)]);
      row[static_cast<std::size_t>(y)] = w.at(x, y) + best;
    }
  }
  return row[static_cast<std::size_t>(n)];
}

struct PassageResult {
  double time = 0.0;
  PassageTable table;
};

// Full table, for geodesic backtracking.
inline PassageResult passage_time(const LatticeWeights& w) {
  if (w.n > kMaxTableN)
    throw std::invalid_argument("passage_time: table mode capped at n <= 10000");
  PassageResult r;
  const int64_t n = w.n;
  r.table.n = n;
  r.table.T.resize(w.xi.size());
  auto& T = r.table.T;
  const auto idx = [n](int64_t x, int64_t y) { return static_cast<std::size_t>(x * (n + 1) + y); };
  for (int64_t x = 0; x <= n; ++x) {
    for (int64_t y = 0; y <= n; ++y) {
      double best = 0.0;
      if (x > 0 && y > 0)
        best = std::max(T[idx(x - 1, y)], T[idx(x, y - 1)]);
      else if (x > 0)
        best = T[idx(x - 1, y)];
      else if (y > 0)
        best = T[idx(x, y - 1)];
      T[idx(x, y)] = w.at(x, y) + best;
    }
  }
  r.time = T[idx(n, n)];
  return r;
}

struct LatticePath {
  std::vector<std::array<int32_t, 2>> vertices;  // (0,0) to (n,n), 2n+1 entries
};

// Backtracks the maximizing path from (n,n), preferring the vertical
// predecessor on exact ties. Verifies the DP recurrence at every visited
// cell and throws if the table does not belong to the weights.
inline LatticePath topmost_geodesic(const PassageTable& table, const LatticeWeights& w) {
  if (table.n != w.n) throw std::runtime_error("topmost_geodesic: table/weights size mismatch");
  const int64_t n = w.n;
  LatticePath path;
  path.vertices.resize(static_cast<std::size_t>(2 * n + 1));
  int64_t x = n, y = n;
  for (int64_t k = 2 * n; k >= 0; --k) {
    double best = 0.0;
    if (x > 0 && y > 0)
      best = std::max(table.at(x - 1, y), table.at(x, y - 1));
    else if (x > 0)
      best = table.at(x - 1, y);
    else if (y > 0)
      best = table.at(x, y - 1);
    if (table.at(x, y) != w.at(x, y) + best)
      throw std::runtime_error("topmost_geodesic: table inconsistent with weights");
    path.vertices[static_cast<std::size_t>(k)] = {static_cast<int32_t>(x),
                                                  static_cast<int32_t>(y)};
    if (k == 0) break;
    if (y > 0 && (x == 0 || table.at(x, y - 1) >= table.at(x - 1, y)))
      --y;
    else
      --x;
  }
  return path;
}

inline double path_weight_sum(const LatticePath& path, const LatticeWeights& w) {
  double s = 0.0;
  for (const auto& v : path.vertices) s += w.at(v[0], v[1]);
  return s;
}

struct BernoulliDecomposition {
  std::vector<double> direct;     // Exp(1-eps) draws
  std::vector<double> composite;  // zeta_1 + Ber(eps) * zeta'_{1-eps}
};

// The defect distribution splits as Exp(1-eps) =d Exp(1) + Ber(eps)*Exp(1-eps)
// with all three independent; both sides sampled for distributional tests.
inline BernoulliDecomposition bernoulli_decomposition_sample(double epsilon, std::size_t count,
                                                             const StreamKey& key) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("bernoulli_decomposition_sample: epsilon must be in (0,1)");
  BernoulliDecomposition out;
  out.direct.resize(count);
  out.composite.resize(count);
  Stream stream(key);
  for (auto& v : out.direct) v = stream.exponential(1.0 - epsilon);
  for (auto& v : out.composite) {
    v = stream.exponential(1.0);
    if (stream.uniform() < epsilon) v += stream.exponential(1.0 - epsilon);
  }
  return out;
}

// ---- debug binary dumps -----------------------------------------------------
// 24-byte header: 8-byte magic, n as uint64 LE, epsilon as float64 LE; then
// the (n+1)^2 doubles row-major, little-endian.

namespace detail {

inline void put_u64_le(std::ostream& os, uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}

inline uint64_t get_u64_le(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
  return v;
}

inline uint64_t f64_bits(double d) {
  uint64_t v;
  std::memcpy(&v, &d, 8);
  return v;
}

inline double bits_f64(uint64_t v) {
  double d;
  std::memcpy(&d, &v, 8);
  return d;
}

inline void dump_grid(const std::string& path, const char magic[8], int64_t n, double epsilon,
                      const std::vector<double>& grid) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("dump: cannot open " + path);
  os.write(magic, 8);
  put_u64_le(os, static_cast<uint64_t>(n));
  put_u64_le(os, f64_bits(epsilon));
  for (double d : grid) put_u64_le(os, f64_bits(d));
  if (!os) throw std::runtime_error("dump: write failed for " + path);
}

inline std::vector<double> load_grid(const std::string& path, const char magic[8], int64_t& n,
                                     double& epsilon) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("load: cannot open " + path);
  char got[8];
  is.read(got, 8);
  if (!is || std::memcmp(got, magic, 8) != 0) throw std::runtime_error("load: bad magic in " + path);
  n = static_cast<int64_t>(get_u64_le(is));
  epsilon = bits_f64(get_u64_le(is));
  std::vector<double> grid(static_cast<std::size_t>((n + 1) * (n + 1)));
  for (double& d : grid) d = bits_f64(get_u64_le(is));
  if (!is) throw std::runtime_error("load: truncated file " + path);
  return grid;
}

}  // namespace detail

inline constexpr char kWeightsMagic[9] = "LPPWGT01";
inline constexpr char kTableMagic[9] = "LPPTBL01";

inline void write_weights(const std::string& path, const LatticeWeights& w) {
  detail::dump_grid(path, kWeightsMagic, w.n, w.epsilon, w.xi);
}

// The header does not carry the defect offset; loaded weights report m = 0.
inline LatticeWeights read_weights(const std::string& path) {
  LatticeWeights w;
  w.xi = detail::load_grid(path, kWeightsMagic, w.n, w.epsilon);
  return w;
}

inline void write_table(const std::string& path, const PassageTable& t, double epsilon) {
  detail::dump_grid(path, kTableMagic, t.n, epsilon, t.T);
}

inline PassageTable read_table(const std::string& path) {
  PassageTable t;
  double eps_ignored;
  t.T = detail::load_grid(path, kTableMagic, t.n, eps_ignored);
  return t;
}

}  // namespace lpplab
