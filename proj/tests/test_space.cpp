#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "svd/space.hpp"

using namespace svd;

TEST_CASE("rational parsing and arithmetic") {
  CHECK(Rat::parse("3/8") == Rat(3, 8));
  CHECK(Rat::parse("2") == Rat(2));
  CHECK(Rat::parse("-1/4") == Rat(-1, 4));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 2) * Rat(2, 5) == Rat(1, 5));
  CHECK(Rat(1, 8) < Rat(1, 4));
  CHECK(Rat(1, 8).str() == "1/8");
  CHECK(Rat(4).str() == "4");
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("0.25"), std::invalid_argument);
}

TEST_CASE("built-in space diameters") {
  CHECK(build_space(SpaceKind::circle, 4)->diameter() == Rat(1, 2));
  CHECK(build_space(SpaceKind::torus, 4)->diameter() == Rat(1, 2));
  CHECK(build_space(SpaceKind::circle, 5)->diameter() == Rat(2, 5));
  CHECK_THROWS_AS(build_space(SpaceKind::circle, 2), std::invalid_argument);
}

TEST_CASE("explicit space validation") {
  std::vector<std::vector<Rat>> two = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  auto sp = build_explicit_space(two, Rat(1));
  CHECK(sp->diameter() == Rat(1));

  std::vector<std::vector<Rat>> one = {{Rat(0)}};
  CHECK(build_explicit_space(one, Rat(1))->diameter() == Rat(0));

  // d(0,2)=3 > d(0,1)+d(1,2)=2; the error names the offending triple
  std::vector<std::vector<Rat>> bad = {{Rat(0), Rat(1), Rat(3)},
                                       {Rat(1), Rat(0), Rat(1)},
                                       {Rat(3), Rat(1), Rat(0)}};
  CHECK_THROWS_WITH_AS(build_explicit_space(bad, Rat(1)),
                       doctest::Contains("triple (0,1,2)"), std::invalid_argument);

  std::vector<std::vector<Rat>> neg = {{Rat(0), Rat(-1)}, {Rat(-1), Rat(0)}};
  CHECK_THROWS_AS(build_explicit_space(neg, Rat(1)), std::invalid_argument);

  std::vector<std::vector<Rat>> dup = {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}};
  CHECK_THROWS_AS(build_explicit_space(dup, Rat(1)), std::invalid_argument);
}

TEST_CASE("min_distance") {
  auto sp = build_space(SpaceKind::circle, 8);
  PointSet a(sp, {0});
  CHECK(min_distance(a, a) == Rat(0));
  CHECK(min_distance(PointSet(sp, {0}), PointSet(sp, {4})) == Rat(1, 2));

  PointSet left(sp, {0, 1}), right(sp, {3, 4});
  CHECK(min_distance(left, right) == oracle::min_distance_direct(left, right));
  CHECK(min_distance(left, right) == Rat(1, 4));

  auto other = build_space(SpaceKind::circle, 8);
  CHECK_THROWS_AS(min_distance(a, PointSet(other, {0})), std::invalid_argument);
}

TEST_CASE("hausdorff") {
  auto sp = build_space(SpaceKind::circle, 8);
  CHECK(hausdorff(PointSet(sp, {2}), PointSet(sp, {5})) == sp->metric(2, 5));

  PointSet a(sp, {0, 1}), b(sp, {4});
  CHECK(hausdorff(a, b) == oracle::hausdorff_direct(a, b));
  CHECK(hausdorff(a, b) == Rat(1, 2));

  // A subset of B: one directed term vanishes
  PointSet inner(sp, {0, 1}), outer(sp, {0, 1, 2, 3});
  CHECK(hausdorff(inner, outer) == oracle::hausdorff_direct(inner, outer));
}

TEST_CASE("diameter") {
  auto sp = build_space(SpaceKind::circle, 8);
  CHECK(diameter(PointSet(sp, {3})) == Rat(0));
  CHECK(diameter(full_set(sp)) == Rat(1, 2));
  PointSet arc(sp, {2, 3, 4});
  CHECK(diameter(arc) == Rat(2, 8));
  CHECK(diameter(arc) == oracle::diameter_direct(arc));
}

TEST_CASE("is_connected") {
  auto sp = build_space(SpaceKind::circle, 8);
  CHECK(is_connected(PointSet(sp, {2, 3, 4})));
  CHECK_FALSE(is_connected(PointSet(sp, {0, 4})));
  CHECK(is_connected(full_set(sp)));
  CHECK(is_connected(PointSet(sp, {5})));
  CHECK_THROWS_AS(Continuum(PointSet(sp, {0, 4})), std::invalid_argument);
}

TEST_CASE("ball") {
  auto sp = build_space(SpaceKind::circle, 8);
  CHECK(ball(sp, 3, Rat(0)) == PointSet(sp, {3}));
  CHECK(ball(sp, 3, Rat(1, 2)) == full_set(sp));
  CHECK(ball(sp, 0, Rat(1, 8)) == PointSet(sp, {7, 0, 1}));
  CHECK_THROWS_AS(ball(sp, 0, Rat(-1, 8)), std::invalid_argument);
}

namespace {

// Deterministic point-set generator for property checks.
std::vector<PointSet> sample_sets(const SpacePtr& sp) {
  std::vector<PointSet> out;
  int n = sp->size();
  unsigned state = 12345;
  for (int i = 0; i < 24; ++i) {
    std::vector<std::int32_t> pts;
    for (int p = 0; p < n; ++p) {
      state = state * 1664525u + 1013904223u;
      if ((state >> 16) % 3 == 0) pts.push_back(p);
    }
    if (pts.empty()) pts.push_back(i % n);
    out.emplace_back(sp, std::move(pts));
  }
  return out;
}

}  // namespace

TEST_CASE("hausdorff metric properties on sampled sets") {
  for (int q : {5, 8}) {
    auto sp = build_space(SpaceKind::circle, q);
    auto sets = sample_sets(sp);
    for (const auto& a : sets)
      for (const auto& b : sets) {
        Rat hd = hausdorff(a, b);
        CHECK(hd == hausdorff(b, a));
        CHECK((hd == Rat(0)) == (a == b));
        CHECK(min_distance(a, b) <= hd);
        for (const auto& c : sets)
          CHECK(hausdorff(a, c) <= hausdorff(a, b) + hausdorff(b, c));
      }
  }
}

TEST_CASE("diameter of a union dominates both parts") {
  auto sp = build_space(SpaceKind::circle, 8);
  auto sets = sample_sets(sp);
  for (const auto& a : sets)
    for (const auto& b : sets) {
      std::vector<std::int32_t> merged = a.members();
      merged.insert(merged.end(), b.members().begin(), b.members().end());
      PointSet u(sp, std::move(merged));
      CHECK(diameter(u) >= diameter(a));
      CHECK(diameter(u) >= diameter(b));
    }
}

TEST_CASE("balls are monotone in the radius") {
  auto sp = build_space(SpaceKind::circle, 8);
  for (int x = 0; x < sp->size(); ++x) {
    Rat radii[] = {Rat(0), Rat(1, 8), Rat(2, 8), Rat(3, 8), Rat(1, 2)};
    for (std::size_t i = 0; i + 1 < std::size(radii); ++i) {
      auto small = ball(sp, x, radii[i]);
      auto big = ball(sp, x, radii[i + 1]);
      for (auto p : small.members()) CHECK(big.contains(p));
    }
  }
}

TEST_CASE("torus metric is the max of coordinate metrics") {
  auto sp = build_space(SpaceKind::torus, 5);
  CHECK(sp->size() == 25);
  CHECK(sp->metric(torus_index(0, 0, 5), torus_index(2, 1, 5)) == Rat(2, 5));
  CHECK(sp->metric(torus_index(4, 4, 5), torus_index(0, 0, 5)) == Rat(1, 5));
  // balls are squares: one-step ball has 9 points
  CHECK(ball(sp, torus_index(2, 2, 5), Rat(1, 5)).size() == 9);
}
