#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "svd/expansivity.hpp"

using namespace svd;

TEST_CASE("cw_check on the constant map: every continuum escapes at once") {
  auto sp = build_space(SpaceKind::circle, 16);
  auto full = make_constant_full(sp);
  auto family = all_arc_family(sp, 2);
  auto report = cw_check(*full, family, Rat(2, 5), 10);
  CHECK(report.pass);
  for (const auto& e : report.results) CHECK(e.witness_n == 1);
}

TEST_CASE("cw_check passes on the interval rotation and fails on the isometry") {
  auto sp = build_space(SpaceKind::circle, 16);
  auto rot = make_rotation_interval(sp, 3);
  auto family = all_arc_family(sp, 2);
  auto pass = cw_check(*rot, family, Rat(2, 5), 10);
  CHECK(pass.pass);
  CHECK(pass.hypotheses.connected);

  // an isometry preserves diameters, so small arcs never escape
  auto iso = make_single_rotation(sp, 3);
  auto small = small_arc_family(sp, Rat(2, 5));
  auto fail = cw_check(*iso, small, Rat(2, 5), 24);
  CHECK_FALSE(fail.pass);
  for (std::size_t i = 0; i < small.size(); ++i) {
    CHECK_FALSE(fail.results[i].witness_n.has_value());
    CHECK(fail.results[i].max_diam_seen == diameter(small[i].set()));
  }
}

TEST_CASE("cw_check is monotone in delta") {
  auto sp = build_space(SpaceKind::circle, 16);
  auto rot = make_rotation_interval(sp, 2);
  auto family = all_arc_family(sp, 2);
  auto strict = cw_check(*rot, family, Rat(2, 5), 12);
  auto loose = cw_check(*rot, family, Rat(1, 5), 12);
  if (strict.pass) CHECK(loose.pass);
}

TEST_CASE("cw_check rejects bad input") {
  auto sp = build_space(SpaceKind::circle, 16);
  auto rot = make_rotation_interval(sp, 2);
  CHECK_THROWS_AS(cw_check(*rot, {}, Rat(1, 4), 10), std::invalid_argument);
  std::vector<Continuum> degenerate{Continuum(PointSet(sp, {3}))};
  CHECK_THROWS_AS(cw_check(*rot, degenerate, Rat(1, 4), 10), std::invalid_argument);
}

TEST_CASE("uniform_horizon basics") {
  auto sp = build_space(SpaceKind::circle, 16);
  auto family = all_arc_family(sp, 2);

  // constant map: any small member escapes exactly at the first step
  auto full = make_constant_full(sp);
  CHECK(uniform_horizon(*full, Rat(2, 5), Rat(1, 16), family, 10) == 1);

  // isometry: diameters never grow, no horizon exists
  auto iso = make_single_rotation(sp, 5);
  CHECK_FALSE(uniform_horizon(*iso, Rat(2, 5), Rat(1, 16), family, 10).has_value());
}

TEST_CASE("uniform_horizon matches the direct-iteration oracle") {
  auto sp = build_space(SpaceKind::circle, 256);
  auto blur = make_blurred_doubling(sp, Rat(1, 4));
  Rat delta(1, 4), eps(1, 32);
  auto family = minimal_continuum_family(sp, eps);
  auto fast = uniform_horizon(*blur, delta, eps, family, 64);
  auto direct = oracle::horizon_by_iteration(*blur, delta, eps, family, 64);
  REQUIRE(fast.has_value());
  REQUIRE(direct.has_value());
  CHECK(std::abs(*fast - *direct) <= 1);
  CHECK(*fast == *direct);
}

TEST_CASE("uniform_horizon is antitone in eps") {
  auto sp = build_space(SpaceKind::circle, 64);
  auto blur = make_blurred_doubling(sp, Rat(1, 16));
  auto family = all_arc_family(sp, 2);
  auto fine = uniform_horizon(*blur, Rat(1, 4), Rat(1, 32), family, 64);
  auto coarse = uniform_horizon(*blur, Rat(1, 4), Rat(1, 8), family, 64);
  REQUIRE(fine.has_value());
  REQUIRE(coarse.has_value());
  CHECK(*coarse <= *fine);
}

TEST_CASE("split_continuum on the full net") {
  auto sp = build_space(SpaceKind::circle, 256);
  Continuum a(full_set(sp));
  Rat c(2, 5);
  auto [s1, s2] = split_continuum(a, c);
  Rat c8 = c / Rat(8);
  Rat two_h = sp->adjacency_radius() * Rat(2);

  for (const auto& part : {s1, s2}) {
    CHECK(is_connected(part.set()));
    Rat d = diameter(part.set());
    CHECK(d >= c8);
    CHECK(d <= c8 + two_h);
    for (auto p : part.set().members()) CHECK(a.set().contains(p));
  }
  CHECK(hausdorff(s1.set(), s2.set()) > c8);
}

TEST_CASE("split feasibility confirmed by the exhaustive pair oracle at q=32") {
  auto sp = build_space(SpaceKind::circle, 32);
  Rat c(2, 5);
  Rat c8 = c / Rat(8);
  Rat two_h = sp->adjacency_radius() * Rat(2);
  // all pairs of arcs within the diameter window, checked for the bound
  bool found = false;
  for (int len1 = 2; len1 <= 32 && !found; ++len1) {
    Rat d1(len1 - 1, 32);
    if (d1 < c8 || d1 > c8 + two_h) continue;
    for (int len2 = 2; len2 <= 32 && !found; ++len2) {
      Rat d2(len2 - 1, 32);
      if (d2 < c8 || d2 > c8 + two_h) continue;
      for (int a1 = 0; a1 < 32 && !found; ++a1)
        for (int a2 = 0; a2 < 32 && !found; ++a2) {
          std::vector<std::int32_t> p1, p2;
          for (int s = 0; s < len1; ++s) p1.push_back((a1 + s) % 32);
          for (int s = 0; s < len2; ++s) p2.push_back((a2 + s) % 32);
          if (oracle::hausdorff_direct(PointSet(sp, p1), PointSet(sp, p2)) > c8)
            found = true;
        }
    }
  }
  CHECK(found);
}

TEST_CASE("split_continuum enforces its preconditions") {
  auto sp32 = build_space(SpaceKind::circle, 32);
  // c/8 = 1/20 is below two grid steps at q=32
  CHECK_THROWS_AS(split_continuum(Continuum(full_set(sp32)), Rat(2, 5)),
                  std::invalid_argument);

  auto sp = build_space(SpaceKind::circle, 256);
  std::vector<std::int32_t> tiny{0, 1, 2};
  CHECK_THROWS_AS(split_continuum(Continuum(PointSet(sp, tiny)), Rat(2, 5)),
                  std::invalid_argument);
}

TEST_CASE("separated family at depth zero is a single segment") {
  auto sp = build_space(SpaceKind::circle, 64);
  auto blur = make_blurred_doubling(sp, Rat(1, 16));
  std::vector<std::int32_t> pts;
  for (int s = 0; s <= 3; ++s) pts.push_back(s);
  Continuum a0{PointSet(sp, pts)};
  auto result = build_separated_family(blur, a0, Rat(1, 4), 4, 0);
  CHECK(result.segments.size() == 1);
  CHECK(result.certificate.separation_verified);
}

TEST_CASE("separated family on a small blur system") {
  auto sp = build_space(SpaceKind::circle, 64);
  auto blur = make_blurred_doubling(sp, Rat(1, 16));
  Rat delta(1, 4);
  auto family = minimal_continuum_family(sp, delta / Rat(10));
  auto n = uniform_horizon(*blur, delta, delta / Rat(10), family, 32);
  REQUIRE(n.has_value());

  std::vector<std::int32_t> pts;
  for (int s = 0; s <= 2; ++s) pts.push_back(s);  // diameter 2/64 in (delta/10, delta)
  Continuum a0{PointSet(sp, pts)};
  auto result = build_separated_family(blur, a0, delta, *n, 3);
  CHECK(result.segments.size() == 8);
  CHECK(result.certificate.separation_verified);
  CHECK(result.certificate.min_pairwise_separation > delta / Rat(8));

  // segments are genuine orbits threading the construction
  for (std::size_t i = 0; i < result.segments.size(); ++i)
    CHECK(is_orbit_of(*blur, result.segments.segment(i)));

  // certificate separation agrees with a direct pairwise recomputation
  long long direct = sp->diameter_num();
  for (std::size_t i = 0; i < result.segments.size(); ++i)
    for (std::size_t j = i + 1; j < result.segments.size(); ++j)
      direct = std::min(direct, segment_distance_num(*sp, result.segments.segment(i),
                                                     result.segments.segment(j)));
  CHECK(Rat(direct, sp->den()) == result.certificate.min_pairwise_separation);
}

TEST_CASE("separated family rejects an isometry") {
  auto sp = build_space(SpaceKind::circle, 64);
  auto iso = make_single_rotation(sp, 3);
  std::vector<std::int32_t> pts{0, 1, 2};
  Continuum a0{PointSet(sp, pts)};
  CHECK_THROWS_AS(build_separated_family(iso, a0, Rat(1, 4), 4, 2), CertificateError);
}

TEST_CASE("separated family validates the seed diameter window") {
  auto sp = build_space(SpaceKind::circle, 64);
  auto blur = make_blurred_doubling(sp, Rat(1, 16));
  // too big: diameter not below delta
  Continuum big(full_set(sp));
  CHECK_THROWS_AS(build_separated_family(blur, big, Rat(1, 4), 4, 2),
                  std::invalid_argument);
  // too small: diameter not above delta/10
  Continuum tiny{PointSet(sp, {0, 1})};
  CHECK_THROWS_AS(build_separated_family(blur, tiny, Rat(1, 4), 4, 2),
                  std::invalid_argument);
}
