#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "setfrac/fixtures.hpp"
#include "setfrac/grid_map.hpp"

using namespace setfrac;

namespace {

GridMap sym_linear(int segments) {
  return GridMap::sample(0.0, 1.0, segments, [](double u) { return Interval(-u, u); });
}

GridMap hat_map(int segments) {
  return GridMap::sample(0.0, 1.0, segments,
                         [](double u) { return Interval(0.0, 1.0 - std::abs(2.0 * u - 1.0)); });
}

// Variation over a random partition of [a, b] with `cuts` interior points.
double partition_variation(const Selection& s, std::mt19937_64& rng, int cuts) {
  std::uniform_real_distribution<double> u(s.grid().a(), s.grid().b());
  std::vector<double> pts{s.grid().a(), s.grid().b()};
  for (int i = 0; i < cuts; ++i) pts.push_back(u(rng));
  std::sort(pts.begin(), pts.end());
  double v = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) v += std::abs(s.eval(pts[i]) - s.eval(pts[i - 1]));
  return v;
}

}  // namespace

TEST_SUITE("grid_map") {

TEST_CASE("uniform grid nodes and segments") {
  const UniformGrid g(-1.0, 2.0, 3);
  CHECK(g.size() == 4);
  CHECK(g.node(0) == -1.0);
  CHECK(g.node(3) == 2.0);
  CHECK(g.step() == 1.0);
  CHECK(g.segment_of(-1.0) == 0);
  CHECK(g.segment_of(2.0) == 2);
  CHECK(g.segment_of(0.5) == 1);
  CHECK_THROWS_AS(g.segment_of(2.5), InvalidArgument);
  CHECK_THROWS_AS(UniformGrid(1.0, 1.0, 4), InvalidArgument);
  CHECK_THROWS_AS(UniformGrid(0.0, 1.0, 0), InvalidArgument);
}

TEST_CASE("eval examples") {
  const GridMap f = sym_linear(4);
  CHECK(eval(f, 0.5) == Interval(-0.5, 0.5));
  CHECK(eval(f, 0.75) == f[3]);
  const Interval mid = eval(f, 0.3);
  CHECK(mid.lo() == doctest::Approx(-0.3).epsilon(1e-15));
  CHECK(mid.hi() == doctest::Approx(0.3).epsilon(1e-15));
  const GridMap c = builtin_map("constant", 0.0, 1.0, 7);
  for (double u : {0.0, 0.1234, 0.5, 0.99, 1.0}) CHECK(eval(c, u) == Interval(1, 2));
  CHECK_THROWS_AS(eval(f, -0.01), InvalidArgument);
  CHECK_THROWS_AS(eval(f, 1.01), InvalidArgument);
}

TEST_CASE("sup_bound examples") {
  CHECK(sup_bound(sym_linear(16)) == 1.0);
  CHECK(sup_bound(builtin_map("constant", 0.0, 1.0, 8)) == 2.0);
  const GridMap f = GridMap::sample(0.0, 1.0, 10, [](double u) { return Interval(-3.0 + u, u); });
  double brute = 0.0;
  for (int i = 0; i <= 10000; ++i) {
    const double u = i / 10000.0;
    brute = std::max({brute, std::abs(-3.0 + u), std::abs(u)});
  }
  CHECK(sup_bound(f) == 3.0);
  CHECK(brute == 3.0);
}

TEST_CASE("sup_bound equals the brute-force sup over random points") {
  for (const auto& [name, f] : default_fixtures(64)) {
    CAPTURE(name);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(f.a(), f.b());
    double brute = std::max(hausdorff_to_zero(f[0]), hausdorff_to_zero(f[f.segments()]));
    for (int i = 0; i < 10000; ++i) brute = std::max(brute, hausdorff_to_zero(eval(f, u(rng))));
    CHECK(brute <= sup_bound(f) + 1e-12);
    // Sampled points approach the node maximum; add every node to close the gap.
    for (const Interval& v : f.values()) brute = std::max(brute, hausdorff_to_zero(v));
    CHECK(std::abs(brute - sup_bound(f)) <= 1e-12);
  }
}

TEST_CASE("extremal selections") {
  const GridMap f = sym_linear(8);
  const Selection lo = extremal_lower(f), hi = extremal_upper(f);
  for (int i = 0; i <= 8; ++i) {
    CHECK(lo[i] == -f.grid().node(i));
    CHECK(hi[i] == f.grid().node(i));
  }
  const GridMap d = GridMap::sample(0.0, 1.0, 5, [](double u) { return Interval::point(u * u); });
  const Selection dl = extremal_lower(d), du = extremal_upper(d);
  CHECK(std::equal(dl.values().begin(), dl.values().end(), du.values().begin()));
  const Selection c = extremal_upper(builtin_map("constant", 0.0, 1.0, 4));
  for (double y : c.values()) CHECK(y == 2.0);
}

TEST_CASE("random selection determinism and membership") {
  const GridMap d = GridMap::sample(0.0, 1.0, 6, [](double u) { return Interval::point(std::sin(u)); });
  const Selection unique = random_selection(d, 99);
  for (int i = 0; i <= 6; ++i) CHECK(unique[i] == d[i].lo());

  const GridMap f = builtin_map("sin_envelope", 0.0, 2.0, 50);
  const Selection s1 = random_selection(f, 1234), s2 = random_selection(f, 1234);
  CHECK(std::equal(s1.values().begin(), s1.values().end(), s2.values().begin()));
  const Selection s3 = random_selection(f, 1235);
  CHECK_FALSE(std::equal(s1.values().begin(), s1.values().end(), s3.values().begin()));
}

TEST_CASE("selections are members at nodes and at random interior points") {
  for (const auto& [name, f] : default_fixtures(32)) {
    CAPTURE(name);
    std::vector<Selection> sels{extremal_lower(f), extremal_upper(f)};
    for (std::uint64_t seed = 0; seed < 5; ++seed) sels.push_back(random_selection(f, seed));
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(f.a(), f.b());
    for (const Selection& s : sels) {
      CHECK(is_selection_of(s, f));
      for (int k = 0; k < 1000; ++k) {
        const double x = u(rng);
        const Interval v = eval(f, x);
        const double y = s.eval(x);
        CHECK(y >= v.lo() - 1e-12);
        CHECK(y <= v.hi() + 1e-12);
      }
    }
  }
}

TEST_CASE("selection on another grid is not a selection") {
  const GridMap f = sym_linear(8);
  const Selection s(UniformGrid(0.0, 1.0, 4), std::vector<double>(5, 0.0));
  CHECK_FALSE(is_selection_of(s, f));
  const Selection out(f.grid(), std::vector<double>(9, 0.5));
  CHECK_FALSE(is_selection_of(out, f));  // 0.5 is outside [0, 0] at u = 0
}

TEST_CASE("random selection mean at u = 1 is near zero") {
  const GridMap f = sym_linear(4);
  double sum = 0.0;
  const int n = 10000;
  for (int k = 0; k < n; ++k) sum += random_selection(f, static_cast<std::uint64_t>(k))[4];
  const double se = (2.0 / std::sqrt(12.0)) / std::sqrt(static_cast<double>(n));
  CHECK(se == doctest::Approx(0.00577).epsilon(1e-3));
  CHECK(std::abs(sum / n) <= 3.0 * se);
}

TEST_CASE("variation and lipschitz of selections") {
  const Selection down = extremal_lower(sym_linear(10));
  CHECK(variation_selection(down) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lipschitz_selection(down) == doctest::Approx(1.0).epsilon(1e-12));
  const Selection flat(UniformGrid(0, 1, 5), std::vector<double>(6, 3.0));
  CHECK(variation_selection(flat) == 0.0);
  CHECK(lipschitz_selection(flat) == 0.0);

  const Selection hat = extremal_upper(hat_map(2));
  CHECK(variation_selection(hat) == 2.0);
  CHECK(lipschitz_selection(hat) == 2.0);
}

TEST_CASE("variation and lipschitz agree with random-partition estimates") {
  std::mt19937_64 rng(31);
  for (const auto& [name, f] : default_fixtures(24)) {
    CAPTURE(name);
    for (const Selection& s : {extremal_lower(f), extremal_upper(f), random_selection(f, 8)}) {
      const double v = variation_selection(s), lip = lipschitz_selection(s);
      double best = 0.0;
      for (int k = 0; k < 200; ++k) best = std::max(best, partition_variation(s, rng, 60));
      CHECK(best <= v + 1e-12);
      // Refining by the grid nodes recovers the exact value.
      std::vector<double> nodes;
      for (int i = 0; i <= f.segments(); ++i) nodes.push_back(f.grid().node(i));
      double on_nodes = 0.0;
      for (std::size_t i = 1; i < nodes.size(); ++i)
        on_nodes += std::abs(s.eval(nodes[i]) - s.eval(nodes[i - 1]));
      CHECK(std::abs(on_nodes - v) <= 1e-12 * std::max(1.0, v));

      std::uniform_real_distribution<double> u(f.a(), f.b());
      double ratio = 0.0;
      for (int k = 0; k < 2000; ++k) {
        const double x = u(rng), y = u(rng);
        if (x != y) ratio = std::max(ratio, std::abs(s.eval(x) - s.eval(y)) / std::abs(x - y));
      }
      CHECK(ratio <= lip * (1 + 1e-9) + 1e-12);
    }
  }
}

TEST_CASE("hat variation: random partitions approach 2 without exceeding it") {
  const Selection hat = extremal_upper(hat_map(2));
  std::mt19937_64 rng(2);
  double best = 0.0;
  for (int k = 0; k < 10000; ++k) best = std::max(best, partition_variation(hat, rng, 3));
  CHECK(best <= 2.0 + 1e-12);
  CHECK(best >= 1.99);
}

TEST_CASE("combine and scaled") {
  const GridMap f = builtin_map("affine", 0.0, 1.0, 8);
  const Selection lo = extremal_lower(f), hi = extremal_upper(f);
  for (double lambda : {0.0, 0.3, 1.0}) {
    const Selection c = combine(lo, hi, lambda);
    CHECK(is_selection_of(c, f));
  }
  CHECK_THROWS_AS(combine(lo, hi, 1.5), InvalidArgument);
  const GridMap g = scaled(f, 2.0);
  for (int i = 0; i <= 8; ++i) {
    CHECK(g[i].lo() == 2.0 * f[i].lo());
    CHECK(g[i].hi() == 2.0 * f[i].hi());
  }
  CHECK_THROWS_AS(scaled(f, -1.0), InvalidArgument);
}

TEST_CASE("builtin maps") {
  for (const std::string& name : builtin_map_names()) {
    CAPTURE(name);
    CHECK_NOTHROW(builtin_map(name, 0.0, 1.0, 16));
  }
  CHECK_THROWS_AS(builtin_map("nope", 0.0, 1.0, 4), InvalidArgument);
  CHECK_THROWS_AS(builtin_map("sym_linear", -1.0, 1.0, 4), InvalidArgument);
  const GridMap f = builtin_map("affine", 0.0, 1.0, 4, {{"lo0", -1.0}, {"hi1", 3.0}});
  CHECK(f[4] == Interval(0.0, 3.0));
}

}  // TEST_SUITE
