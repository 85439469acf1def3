#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "svd/orbit.hpp"

using namespace svd;

TEST_CASE("enumerate_segments counts and cap semantics") {
  auto sp4 = build_space(SpaceKind::circle, 4);
  auto full = make_constant_full(sp4);

  auto one = enumerate_segments(make_single_rotation(sp4, 1), 2, 4, 100);
  CHECK(one.size() == 1);
  CHECK(one.exhaustive());
  CHECK(one.get(0).states == std::vector<std::int32_t>{2, 3, 0, 1});

  auto fixed = enumerate_segments(full, 1, 3, 1000);
  CHECK(fixed.size() == 16);  // q^(n-1)
  CHECK(fixed.exhaustive());

  auto capped = enumerate_segments(full, 1, 3, 5);
  CHECK(capped.size() == 5);
  CHECK_FALSE(capped.exhaustive());

  auto snug = enumerate_segments(full, 1, 3, 16);
  CHECK(snug.size() == 16);
  CHECK(snug.exhaustive());

  auto all = enumerate_segments(full, std::nullopt, 2, 1000);
  CHECK(all.size() == 16);  // q^n over all starts

  // enumeration order is deterministic and matches the plain recursion
  auto expect = oracle::all_segments(*full, std::nullopt, 2);
  REQUIRE(all.size() == expect.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto seg = all.segment(i);
    CHECK(std::vector<std::int32_t>(seg.begin(), seg.end()) == expect[i]);
  }

  CHECK_THROWS_AS(enumerate_segments(full, std::nullopt, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_segments(full, std::nullopt, 2, 0), std::invalid_argument);
}

TEST_CASE("every enumerated segment is a valid orbit") {
  auto sp = build_space(SpaceKind::circle, 6);
  for (auto f : {make_blurred_doubling(sp, Rat(1, 6)), make_rotation_interval(sp, 2)}) {
    auto orbits = enumerate_segments(f, std::nullopt, 4, 100000);
    CHECK(orbits.exhaustive());
    for (std::size_t i = 0; i < orbits.size(); ++i)
      CHECK(is_orbit_of(*f, orbits.segment(i)));
  }
}

TEST_CASE("segment_distance") {
  auto sp = build_space(SpaceKind::circle, 8);
  std::vector<std::int32_t> a{0, 0}, b{1, 4}, c{0, 0};
  CHECK(segment_distance(*sp, a, c) == Rat(0));
  CHECK(segment_distance(*sp, a, b) == Rat(1, 2));
  std::vector<std::int32_t> s1{3}, s2{6};
  CHECK(segment_distance(*sp, s1, s2) == sp->metric(3, 6));
  CHECK_THROWS_AS(segment_distance(*sp, a, s1), std::invalid_argument);
}

TEST_CASE("weighted segment distance") {
  auto sp = build_space(SpaceKind::circle, 8);
  std::vector<std::int32_t> a{0, 0, 0}, same{0, 0, 0};
  CHECK(weighted_segment_distance(*sp, a, same) == Rat(0));

  // difference only at index k contributes d/(k+1)
  std::vector<std::int32_t> b{0, 0, 2};
  CHECK(weighted_segment_distance(*sp, a, b) == Rat(2, 8) / Rat(3));

  // truncation is monotone: more coordinates can only raise the sup
  std::vector<std::int32_t> x{0, 3, 1, 6}, y{1, 1, 4, 2};
  for (std::size_t len = 1; len + 1 <= x.size(); ++len) {
    auto prefix = weighted_segment_distance(
        *sp, std::span(x).first(len), std::span(y).first(len));
    auto longer = weighted_segment_distance(
        *sp, std::span(x).first(len + 1), std::span(y).first(len + 1));
    CHECK(prefix <= longer);
  }
}

TEST_CASE("orbit semimetric basics") {
  auto sp = build_space(SpaceKind::circle, 8);
  auto full = make_constant_full(sp);
  for (int n = 1; n <= 5; ++n)
    for (int x = 0; x < 8; ++x)
      for (int y = 0; y < 8; ++y)
        CHECK(orbit_semimetric(*full, x, y, n) == sp->metric(x, y));

  auto rot = make_rotation_interval(sp, 2);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      CHECK(orbit_semimetric(*rot, x, y, 1) == sp->metric(x, y));
}

TEST_CASE("orbit semimetric equals the orbit-pair enumeration oracle") {
  auto sp = build_space(SpaceKind::circle, 6);
  std::vector<MapPtr> maps = {make_blurred_doubling(sp, Rat(1, 6)),
                              make_rotation_interval(sp, 2),
                              make_single_rotation(sp, 1)};
  // an asymmetric handcrafted relation
  std::vector<std::vector<std::int32_t>> images = {{1, 2}, {3}, {0, 4}, {5}, {1}, {0, 2}};
  maps.push_back(make_explicit_map(sp, images));

  for (const auto& f : maps) {
    for (int n = 1; n <= 4; ++n) {
      auto levels = orbit_semimetric_levels(*f, n);
      for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
          Rat dp(levels[n - 1][std::size_t(x) * 6 + y], sp->den());
          CHECK(dp == oracle::dn_by_enumeration(*f, x, y, n));
        }
    }
  }
}

TEST_CASE("orbit semimetric properties") {
  auto sp = build_space(SpaceKind::circle, 8);
  auto blur = make_blurred_doubling(sp, Rat(1, 8));
  auto levels = orbit_semimetric_levels(*blur, 4);
  for (int n = 1; n <= 4; ++n) {
    const auto& m = levels[n - 1];
    for (int x = 0; x < 8; ++x) {
      CHECK(m[std::size_t(x) * 8 + x] == 0);
      for (int y = 0; y < 8; ++y) {
        CHECK(m[std::size_t(x) * 8 + y] == m[std::size_t(y) * 8 + x]);
        CHECK(m[std::size_t(x) * 8 + y] >= sp->dist_num(x, y));  // d_n >= d
        if (n > 1)
          CHECK(m[std::size_t(x) * 8 + y] >=
                levels[n - 2][std::size_t(x) * 8 + y]);  // monotone in n
      }
    }
  }
}

TEST_CASE("find_periodic") {
  auto sp = build_space(SpaceKind::circle, 8);
  auto full = make_constant_full(sp);
  for (int x = 0; x < 8; ++x) CHECK(find_periodic(*full, x, 4) == 1);

  // shift by k: period q / gcd(q, k)
  for (int k = 1; k < 8; ++k) {
    auto rot = make_single_rotation(sp, k);
    int expect = 8 / std::gcd(8, k);
    for (int x = 0; x < 8; ++x) CHECK(find_periodic(*rot, x, 8) == expect);
  }

  auto shift1 = make_single_rotation(sp, 1);
  CHECK_FALSE(find_periodic(*shift1, 0, 3).has_value());
}

TEST_CASE("constant orbit demo") {
  auto sp = build_space(SpaceKind::circle, 8);

  auto rot = make_rotation_interval(sp, 3);
  auto r = constant_orbits(*rot, full_set(sp));
  CHECK(int(r.valid_points.size()) == 8);  // t is always in [t, f(t)]
  CHECK(r.shift_fixed);

  auto shift = make_single_rotation(sp, 1);
  auto none = constant_orbits(*shift, full_set(sp));
  CHECK(none.valid_points.empty());

  auto full = make_constant_full(sp);
  CHECK(int(constant_orbits(*full, full_set(sp)).valid_points.size()) == 8);
}

TEST_CASE("segment validation") {
  auto sp = build_space(SpaceKind::circle, 8);
  auto rot = make_rotation_interval(sp, 2);
  CHECK_NOTHROW(make_orbit_segment(*rot, {0, 1, 2}));
  CHECK_THROWS_AS(make_orbit_segment(*rot, {0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(make_orbit_segment(*rot, {}), std::invalid_argument);
}
