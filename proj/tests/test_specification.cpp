#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "svd/specification.hpp"

using namespace svd;

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(SpecInstance({}, Rat(1, 8), 1), std::invalid_argument);
  CHECK_THROWS_AS(SpecInstance({{0, 0}, {1, 1}}, Rat(1, 8), 1), std::invalid_argument);
  CHECK_THROWS_AS(SpecInstance({{0, 0}}, Rat(0), 1), std::invalid_argument);
  CHECK_NOTHROW(SpecInstance({{0, 0}, {1, 2}}, Rat(1, 8), 1));

  auto sp = build_space(SpaceKind::circle, 8);
  auto full = make_constant_full(sp);
  std::vector<BlockSpecInstance::Block> blocks;
  blocks.push_back({make_orbit_segment(*full, {0, 1}), 0, 1});
  CHECK_THROWS_AS(BlockSpecInstance(*full, std::move(blocks), Rat(1, 8), 0, 1),
                  std::invalid_argument);  // period must exceed M + b_n - a_1
}

TEST_CASE("pointwise specification on the constant map") {
  auto sp = build_space(SpaceKind::circle, 16);
  auto full = make_constant_full(sp);
  Rat eps(1, 16);

  // at any time >= 1 the image is the whole space, too spread for a singleton
  SpecInstance late({{5, 1}}, eps, 0);
  CHECK_FALSE(pointwise_spec_check(*full, late, 8).has_value());

  SpecInstance multi({{2, 0}, {7, 2}}, eps, 1);
  CHECK_FALSE(pointwise_spec_check(*full, multi, 8).has_value());

  // at time 0 the scan lands on the target itself
  SpecInstance immediate({{5, 0}}, eps, 0);
  auto r = pointwise_spec_check(*full, immediate, 8);
  REQUIRE(r.has_value());
  CHECK(r->z == 5);
  CHECK(r->target_distances == std::vector<Rat>{Rat(0)});

  CHECK_THROWS_AS(pointwise_spec_check(*full, late, 0), std::invalid_argument);
}

TEST_CASE("pointwise check agrees with the direct-definition oracle") {
  std::vector<MapPtr> maps;
  auto sp8 = build_space(SpaceKind::circle, 8);
  auto sp16 = build_space(SpaceKind::circle, 16);
  maps.push_back(make_constant_full(sp8));
  maps.push_back(make_identity(sp8));
  maps.push_back(make_single_rotation(sp8, 3));
  maps.push_back(make_rotation_interval(sp8, 2));
  maps.push_back(make_blurred_doubling(sp16, Rat(1, 8)));
  maps.push_back(make_anosov_mimic(build_space(SpaceKind::torus, 4)));

  for (const auto& f : maps) {
    const SpacePtr& space = f->space();
    Rat eps(space->diameter_num(), space->den() * 4);
    for (int gap : {0, 1}) {
      for (int k = 1; k <= 2; ++k) {
        std::vector<SpecInstance::Target> targets;
        std::vector<std::pair<int, int>> oracle_targets;
        for (int i = 0; i < k; ++i) {
          int point = (3 * i + 1) % space->size();
          int time = i * (gap + 1);
          targets.push_back({std::int32_t(point), time});
          oracle_targets.emplace_back(point, time);
        }
        SpecInstance inst(std::move(targets), eps, gap);
        auto fast = pointwise_spec_check(*f, inst, 8);
        auto direct = oracle::pointwise_spec_direct(*f, oracle_targets, eps);
        CHECK(fast.has_value() == direct.has_value());
        if (fast && direct) CHECK(fast->z == *direct);
      }
    }
  }
}

TEST_CASE("pointwise success is monotone in eps") {
  auto sp = build_space(SpaceKind::circle, 16);
  auto blur = make_blurred_doubling(sp, Rat(1, 16));
  for (int t = 0; t < 16; t += 5) {
    SpecInstance tight({{std::int32_t(t), 1}}, Rat(3, 16), 0);
    SpecInstance loose({{std::int32_t(t), 1}}, Rat(5, 16), 0);
    if (pointwise_spec_check(*blur, tight, 8))
      CHECK(pointwise_spec_check(*blur, loose, 8).has_value());
  }
}

TEST_CASE("orbit specification on the constant map with gap zero") {
  auto sp = build_space(SpaceKind::circle, 8);
  auto full = make_constant_full(sp);
  Rat eps(1, 8);

  std::vector<BlockSpecInstance::Block> blocks;
  blocks.push_back({make_orbit_segment(*full, {2, 6}), 0, 1});
  blocks.push_back({make_orbit_segment(*full, {4, 1}), 3, 4});
  BlockSpecInstance inst(*full, std::move(blocks), eps, 0, 6);
  auto seg = orbit_spec_check(*full, inst, 32);
  REQUIRE(seg.has_value());
  CHECK(is_orbit_of(*full, seg->states));
  CHECK(seg->states[6] == seg->states[0]);  // closes up at the period
  CHECK(sp->metric(seg->states[0], 2) < eps);
  CHECK(sp->metric(seg->states[4], 1) < eps);
}

TEST_CASE("a single block is shadowed by its own segment") {
  auto sp = build_space(SpaceKind::circle, 8);
  auto rot = make_rotation_interval(sp, 2);
  std::vector<std::int32_t> states{3, 4, 5};
  std::vector<BlockSpecInstance::Block> blocks;
  blocks.push_back({make_orbit_segment(*rot, states), 0, 2});
  BlockSpecInstance inst(*rot, std::move(blocks), Rat(1, 8), 0, std::nullopt);
  auto seg = orbit_spec_check(*rot, inst, 16);
  REQUIRE(seg.has_value());
  for (int t = 0; t < 3; ++t) CHECK(sp->metric(seg->states[t], states[t]) < Rat(1, 8));
}

TEST_CASE("orbit spec matches the unpruned exhaustive oracle") {
  auto sp = build_space(SpaceKind::circle, 6);
  std::vector<MapPtr> maps = {make_rotation_interval(sp, 2),
                              make_single_rotation(sp, 1),
                              make_blurred_doubling(sp, Rat(1, 6))};
  for (const auto& f : maps) {
    std::vector<std::int32_t> blk{1, 2};
    if (!is_orbit_of(*f, blk)) blk = {1, f->image(1).front()};
    for (const Rat& eps : {Rat(1, 6), Rat(2, 6)}) {
      std::vector<BlockSpecInstance::Block> blocks;
      blocks.push_back({make_orbit_segment(*f, blk), 1, 2});
      BlockSpecInstance inst(*f, std::move(blocks), eps, 0, std::nullopt);
      auto fast = orbit_spec_check(*f, inst, 16);
      bool direct = oracle::orbit_spec_direct(*f, {{1, 2, blk}}, eps, std::nullopt, 3);
      CHECK(fast.has_value() == direct);
      if (fast) CHECK(is_orbit_of(*f, fast->states));
    }
  }
}

TEST_CASE("orbit spec cap precondition") {
  auto sp = build_space(SpaceKind::circle, 8);
  auto full = make_constant_full(sp);
  std::vector<BlockSpecInstance::Block> blocks;
  blocks.push_back({make_orbit_segment(*full, {0, 1}), 0, 1});
  BlockSpecInstance inst(*full, std::move(blocks), Rat(1, 8), 0, 10);
  CHECK_THROWS_AS(orbit_spec_check(*full, inst, 4), std::invalid_argument);
}

TEST_CASE("mixing on the constant map and the identity") {
  auto sp = build_space(SpaceKind::circle, 8);
  auto opens = one_step_ball_opens(sp);

  auto full = make_constant_full(sp);
  auto yes = mixing_check(*full, opens, 8);
  CHECK(yes.pass);
  for (const auto& row : yes.witness)
    for (const auto& w : row) CHECK(w == 0);

  auto id = make_identity(sp);
  CHECK_FALSE(mixing_check(*id, opens, 8).pass);
}

TEST_CASE("mixing on the blur system matches the matrix-power oracle") {
  auto sp = build_space(SpaceKind::circle, 64);
  auto blur = make_blurred_doubling(sp, Rat(1, 16));
  auto opens = one_step_ball_opens(sp);
  auto fast = mixing_check(*blur, opens, 32);
  CHECK(fast.pass);
  auto direct = oracle::mixing_by_matrix_power(*blur, opens, 32);
  for (std::size_t u = 0; u < opens.size(); ++u)
    for (std::size_t v = 0; v < opens.size(); ++v)
      CHECK(fast.witness[u][v] == direct[u][v]);
}

TEST_CASE("implication audit runs clean on the built-in systems") {
  std::vector<MapPtr> maps;
  auto sp8 = build_space(SpaceKind::circle, 8);
  maps.push_back(make_constant_full(sp8));
  maps.push_back(make_identity(sp8));
  maps.push_back(make_single_rotation(sp8, 3));
  maps.push_back(make_rotation_interval(sp8, 3));
  maps.push_back(make_blurred_doubling(build_space(SpaceKind::circle, 16), Rat(1, 8)));
  maps.push_back(make_anosov_mimic(build_space(SpaceKind::torus, 5)));

  for (const auto& f : maps) {
    const MetricSpace& X = *f->space();
    std::vector<Rat> eps_grid = {Rat(X.diameter_num(), X.den() * 4),
                                 Rat(X.diameter_num(), X.den() * 8)};
    auto report = implication_audit(f, eps_grid, {1, 2}, 12);
    CHECK(report.ok());
    CHECK(report.growth_checked);
  }
}

TEST_CASE("audit on the constant map: spec fails yet mixing passes, no violation") {
  auto sp = build_space(SpaceKind::circle, 8);
  auto full = make_constant_full(sp);
  auto report = implication_audit(full, {Rat(1, 8)}, {1}, 12);
  CHECK_FALSE(report.spec_all);  // multi-target instances cannot be satisfied
  CHECK(report.mixing_pass);
  CHECK(report.ok());
}

TEST_CASE("audit on the tiny anosov lattice equals direct evaluation") {
  auto sp = build_space(SpaceKind::torus, 5);
  auto f = make_anosov_mimic(sp);
  Rat eps(1, 10);
  auto report = implication_audit(f, {eps}, {1}, 12);

  // direct evaluation of the sampled instances on all 25 lattice points
  bool all = true;
  for (int k = 1; k <= 3; ++k) {
    for (int pattern = 0; pattern < 2; ++pattern) {
      std::vector<std::pair<int, int>> targets;
      for (int i = 0; i < k; ++i) {
        int point = pattern == 0 ? i % 25 : (i * i + 1) % 25;
        targets.emplace_back(point, i * 2);
      }
      if (!oracle::pointwise_spec_direct(*f, targets, eps).has_value()) all = false;
    }
  }
  CHECK(report.spec_all == all);
  CHECK(report.ok());
}
