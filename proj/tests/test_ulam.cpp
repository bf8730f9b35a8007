#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "lpplab/ulam.hpp"

using namespace lpplab;

namespace {

PointCloud make_cloud(std::vector<PlanarPoint> pts) {
  PointCloud c;
  std::sort(pts.begin(), pts.end(), lex_less);
  c.points = std::move(pts);
  c.tags.assign(c.points.size(), PointTag::bulk);
  return c;
}

PointCloud random_cloud(std::size_t n, double side, Stream& s) {
  std::vector<PlanarPoint> pts(n);
  for (auto& p : pts) p = {s.uniform(0.0, side), s.uniform(0.0, side)};
  return make_cloud(std::move(pts));
}

// every maximum-length chain, by exhaustive extension (test oracle, N <= 12)
void extend_chains(const std::vector<PlanarPoint>& pts, std::vector<std::size_t>& cur,
                   std::size_t start, std::size_t target,
                   std::vector<std::vector<PlanarPoint>>& out) {
  if (cur.size() == target) {
    std::vector<PlanarPoint> chain;
    for (auto i : cur) chain.push_back(pts[i]);
    out.push_back(std::move(chain));
    return;
  }
  for (std::size_t i = start; i < pts.size(); ++i) {
    if (!cur.empty() && !strictly_below(pts[cur.back()], pts[i])) continue;
    cur.push_back(i);
    extend_chains(pts, cur, i + 1, target, out);
    cur.pop_back();
  }
}

std::vector<std::vector<PlanarPoint>> all_max_chains(const PointCloud& cloud,
                                                     const PlanarPoint& u, const PlanarPoint& v) {
  std::vector<PlanarPoint> pts;
  for (const auto& p : cloud.points)
    if (weakly_below(u, p) && weakly_below(p, v)) pts.push_back(p);
  const auto target = static_cast<std::size_t>(lis_brute_force(cloud, u, v));
  std::vector<std::vector<PlanarPoint>> out;
  if (target == 0) return out;
  std::vector<std::size_t> cur;
  extend_chains(pts, cur, 0, target, out);
  return out;
}

IncreasingPath chain_to_path(std::vector<PlanarPoint> chain, const PlanarPoint& u,
                             const PlanarPoint& v) {
  IncreasingPath p;
  if (chain.empty() || !(chain.front() == u)) p.vertices.push_back(u);
  p.vertices.insert(p.vertices.end(), chain.begin(), chain.end());
  if (chain.empty() || !(chain.back() == v)) p.vertices.push_back(v);
  return p;
}

bool dominates(const IncreasingPath& hi, const IncreasingPath& lo) {
  std::vector<double> xs;
  for (const auto& p : hi.vertices) xs.push_back(p.x);
  for (const auto& p : lo.vertices) xs.push_back(p.x);
  for (double x : xs)
    if (hi.value_at(x) < lo.value_at(x) - 1e-9) return false;
  return true;
}

}  // namespace

TEST_CASE("lis_length on the spec's hand examples") {
  const PlanarPoint u{0, 0}, v{4, 4};
  CHECK(lis_length(make_cloud({}), u, v) == 0);
  CHECK(lis_length(make_cloud({{1, 1}, {2, 2}, {3, 3}}), u, v) == 3);
  CHECK(lis_length(make_cloud({{1, 3}, {2, 2}, {3, 1}}), u, v) == 1);
}

TEST_CASE("corner order is enforced") {
  const auto c = make_cloud({{1, 1}});
  CHECK_THROWS_AS(lis_length(c, {0, 0}, {0, 5}), std::domain_error);
  CHECK_THROWS_AS(lis_length(c, {2, 2}, {1, 3}), std::domain_error);
  CHECK_THROWS_AS(topmost_maximal_path(c, {3, 3}, {3, 3}), std::domain_error);
}

TEST_CASE("x-ties cannot stack in a chain") {
  CHECK(lis_length(make_cloud({{1, 1}, {1, 2}, {1, 3}}), {0, 0}, {4, 4}) == 1);
  CHECK(lis_length(make_cloud({{1, 1}, {1, 2}, {2, 3}}), {0, 0}, {4, 4}) == 2);
  CHECK(lis_length(make_cloud({{1, 1}, {2, 1}, {2, 2}}), {0, 0}, {4, 4}) == 2);
}

TEST_CASE("patience sorting agrees with the quadratic oracle on 1000 random clouds") {
  Stream s({411, 0, 9});
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = static_cast<std::size_t>(s.uniform_index(41));
    const auto cloud = random_cloud(n, 10.0, s);
    const PlanarPoint u{-1.0, -1.0}, v{11.0, 11.0};
    REQUIRE(lis_length(cloud, u, v) == lis_brute_force(cloud, u, v));
  }
}

TEST_CASE("brute force basics") {
  CHECK(lis_brute_force(make_cloud({}), {0, 0}, {1, 1}) == 0);
  const auto chain = make_cloud({{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}});
  CHECK(lis_brute_force(chain, {0, 0}, {6, 6}) == 5);
}

TEST_CASE("topmost path: unique chain is returned as is") {
  const auto c = make_cloud({{1, 2}, {3, 4}});
  const auto res = topmost_maximal_path(c, {0, 0}, {5, 5});
  CHECK(res.length == 2);
  REQUIRE(res.topmost_path.vertices.size() == 4);
  CHECK(res.topmost_path.vertices[1] == PlanarPoint{1, 2});
  CHECK(res.topmost_path.vertices[2] == PlanarPoint{3, 4});
}

TEST_CASE("topmost path: a genuine two-chain tie resolves upward") {
  // two maximum chains {(1,1),(2,2)} and {(1,1),(1.5,2.5)}; the high one wins
  const auto c = make_cloud({{1, 1}, {1.5, 2.5}, {2, 2}});
  const auto res = topmost_maximal_path(c, {0, 0}, {3, 3});
  CHECK(res.length == 2);
  REQUIRE(res.topmost_path.vertices.size() == 4);
  CHECK(res.topmost_path.vertices[2] == PlanarPoint{1.5, 2.5});
  for (const auto& chain : all_max_chains(c, {0, 0}, {3, 3}))
    CHECK(dominates(res.topmost_path, chain_to_path(chain, {0, 0}, {3, 3})));
}

TEST_CASE("topmost path dominates every maximum chain (exhaustive, N <= 10)") {
  Stream s({412, 0, 9});
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(s.uniform_index(11));
    const auto cloud = random_cloud(n, 1.0, s);
    const PlanarPoint u{-0.1, -0.1}, v{1.1, 1.1};
    const auto res = topmost_maximal_path(cloud, u, v);
    const auto chains = all_max_chains(cloud, u, v);
    REQUIRE(res.length == lis_brute_force(cloud, u, v));
    if (res.length > 0) REQUIRE(!chains.empty());
    for (const auto& chain : chains)
      REQUIRE(dominates(res.topmost_path, chain_to_path(chain, u, v)));
    // and it is itself a maximum chain
    CHECK(path_length(res.topmost_path, cloud) == res.length);
    CHECK(res.topmost_path.strictly_increasing());
  }
}

TEST_CASE("polymer ordering: stacked endpoints give ordered topmost paths") {
  Stream s({413, 0, 9});
  const auto cloud = random_cloud(900, 40.0, s);
  for (int trial = 0; trial < 100; ++trial) {
    const double a2 = s.uniform(0.0, 5.0);
    const double a3 = a2 + s.uniform(0.0, 5.0);
    const double b2 = std::max(a3, 30.0) + s.uniform(0.0, 4.0);
    const double b3 = b2 + s.uniform(0.0, 5.0);
    const PlanarPoint a{0.0, a2}, ap{0.0, a3}, b{40.0, b2}, bp{40.0, b3};
    const auto lo = topmost_maximal_path(cloud, a, b);
    const auto hi = topmost_maximal_path(cloud, ap, bp);
    REQUIRE(dominates(hi.topmost_path, lo.topmost_path));
  }
}

TEST_CASE("path_length follows the start-not-end convention") {
  const auto cloud = make_cloud({{0, 0}, {1, 1}});
  IncreasingPath gamma{{{0, 0}, {1, 1}, {2, 2}}};
  CHECK(path_length(gamma, cloud) == 2);

  IncreasingPath outside{{{5, 5}, {6, 6}}};
  CHECK(path_length(outside, cloud) == 0);

  // appending an end vertex not in the configuration changes nothing
  IncreasingPath longer = gamma;
  longer.vertices.push_back({3, 3});
  CHECK(path_length(longer, cloud) == path_length(gamma, cloud) + (cloud.contains({2, 2}) ? 1 : 0));
}

TEST_CASE("path_area: box decomposition between configuration points") {
  const PlanarPoint u{0, 0}, v{2, 3};
  IncreasingPath direct{{u, v}};
  CHECK(path_area(direct, make_cloud({}), u, v) == Catch::Approx(6.0));

  IncreasingPath through{{u, {1, 1}, v}};
  CHECK(path_area(through, make_cloud({{1, 1}}), u, v) == Catch::Approx(3.0));
  // a vertex that is not a configuration point does not split the box
  CHECK(path_area(through, make_cloud({}), u, v) == Catch::Approx(6.0));

  CHECK_THROWS_AS(path_area(direct, make_cloud({}), {9, 9}, v), std::domain_error);
}

TEST_CASE("path area never exceeds the corner box area") {
  Stream s({414, 0, 9});
  for (int trial = 0; trial < 50; ++trial) {
    const auto cloud = random_cloud(60, 10.0, s);
    const PlanarPoint u{-0.5, -0.5}, v{10.5, 10.5};
    const auto res = topmost_maximal_path(cloud, u, v);
    CHECK(path_area(res.topmost_path, cloud, u, v) <= box_area(u, v) + 1e-12);
  }
}

TEST_CASE("superadditivity holds pathwise on random corner triples") {
  Stream s({415, 0, 9});
  const auto cloud = random_cloud(1200, 30.0, s);
  for (int trial = 0; trial < 1000; ++trial) {
    const PlanarPoint u1{s.uniform(0.0, 9.0), s.uniform(0.0, 9.0)};
    const PlanarPoint u2{u1.x + s.uniform(0.1, 10.0), u1.y + s.uniform(0.1, 10.0)};
    const PlanarPoint u3{u2.x + s.uniform(0.1, 10.0), u2.y + s.uniform(0.1, 10.0)};
    REQUIRE(lis_length(cloud, u1, u3) >= lis_length(cloud, u1, u2) + lis_length(cloud, u2, u3));
  }
}

TEST_CASE("lis_length is translation invariant") {
  Stream s({416, 0, 9});
  const auto cloud = random_cloud(300, 20.0, s);
  const PlanarPoint u{1.0, 2.0}, v{18.0, 19.0};
  const auto base = lis_length(cloud, u, v);
  const double dx = 3.25, dy = -1.5;
  PointCloud shifted = cloud;
  for (auto& p : shifted.points) p = {p.x + dx, p.y + dy};
  CHECK(lis_length(shifted, {u.x + dx, u.y + dy}, {v.x + dx, v.y + dy}) == base);
}

TEST_CASE("reinforced_lis: lambda 0 reduces to the unperturbed field") {
  const StreamKey key{555, 3, 0};
  const auto reinforced = reinforced_lis(60, 0.0, 0.0, key);
  StreamKey bulk = key;
  bulk.purpose = static_cast<uint32_t>(Purpose::bulk_field);
  const auto cloud = sample_poisson_field(Region::square(60.0), 1.0, bulk);
  CHECK(reinforced.length == lis_length(cloud, {0, 0}, {60, 60}));
}

TEST_CASE("adding diagonal points never shortens the maximum chain") {
  for (uint32_t r = 0; r < 50; ++r) {
    StreamKey bulk{777, r, static_cast<uint32_t>(Purpose::bulk_field)};
    StreamKey diag{777, r, static_cast<uint32_t>(Purpose::diagonal)};
    const auto base = sample_poisson_field(Region::square(40.0), 1.0, bulk);
    const auto extra = sample_diagonal_reinforcement(1.5, 0.0, 0.0, 40.0, diag);
    const auto both = superimpose(base, extra);
    REQUIRE(lis_length(both, {0, 0}, {40, 40}) >= lis_length(base, {0, 0}, {40, 40}));
  }
}

TEST_CASE("reinforced_lis rejects an offset that misses the square") {
  CHECK_THROWS_AS(reinforced_lis(10, 1.0, 10.0, StreamKey{1, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(reinforced_lis(10, 1.0, -12.0, StreamKey{1, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(reinforced_lis(0, 1.0, 0.0, StreamKey{1, 0, 0}), std::domain_error);
}

TEST_CASE("reinforced_lis result is consistent with its own path") {
  const auto res = reinforced_lis(50, 2.0, 0.0, StreamKey{888, 1, 0});
  CHECK(res.length > 0);
  CHECK(res.topmost_path.vertices.front() == PlanarPoint{0, 0});
  CHECK(res.topmost_path.vertices.back() == PlanarPoint{50, 50});
  CHECK(res.centered_l1() == Catch::Approx(static_cast<double>(res.length) - 100.0));
}

TEST_CASE("transversal fluctuation of hand-built paths") {
  IncreasingPath diag{{{0, 0}, {3, 3}, {7, 7}}};
  const auto f0 = transversal_fluctuation(diag, {0, 0}, {7, 7});
  CHECK(f0.about_diagonal == 0.0);
  CHECK(f0.about_chord == 0.0);

  IncreasingPath bump{{{0, 0}, {1, 4}, {5, 5}}};
  const auto f1 = transversal_fluctuation(bump, {0, 0}, {5, 5});
  CHECK(f1.about_diagonal == Catch::Approx(3.0));
  // chord of (0,0)-(5,5) is the diagonal, so D = F
  CHECK(f1.about_chord == f1.about_diagonal);
}
