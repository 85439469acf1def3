#pragma once

#include <optional>
#include <string>
#include <vector>

#include "svd/orbit.hpp"

namespace svd {

// Prescribed singleton targets x^i at strictly increasing times a_i, gaps
// strictly larger than M.
struct SpecInstance {
  struct Target {
    std::int32_t point;
    int time;
  };
  std::vector<Target> targets;
  Rat epsilon;
  int gap = 0;  // M

  SpecInstance(std::vector<Target> targets, Rat epsilon, int gap);
};

// Prescribed orbit blocks over windows [a_i, b_i] with gaps > M; optionally a
// period P forcing z_P = z_0.
struct BlockSpecInstance {
  struct Block {
    OrbitSegment segment;  // states for times a..b, validated against the map
    int a = 0;
    int b = 0;
  };
  std::vector<Block> blocks;
  Rat epsilon;
  int gap = 0;
  std::optional<int> period;

  BlockSpecInstance(const SetValuedMap& f, std::vector<Block> blocks, Rat epsilon,
                    int gap, std::optional<int> period);
};

struct PointwiseSpecResult {
  std::int32_t z;
  std::vector<Rat> target_distances;  // Hausdorff distance per target, in order
};

// Scans every z in ascending order, iterating F incrementally, and returns
// the first z with d_H(F^{a_i}(z), {x^i}) < epsilon for every target. The
// condition is evaluated exactly at the times a_i.
std::optional<PointwiseSpecResult> pointwise_spec_check(const SetValuedMap& f,
                                                        const SpecInstance& inst,
                                                        int horizon);

// Looks for one orbit segment shadowing every block within epsilon (strict <)
// and closing up at the period when one is prescribed. Depth-first search
// with per-step pruning against the active window constraint.
std::optional<OrbitSegment> orbit_spec_check(const SetValuedMap& f,
                                             const BlockSpecInstance& inst,
                                             int cap);

struct MixingReport {
  bool pass = false;
  int horizon = 0;
  // per ordered pair (u, v): smallest M with F^m(U) meeting V for every
  // m in (M, horizon]; absent when the pair fails even at the horizon.
  std::vector<std::vector<std::optional<int>>> witness;
};

MixingReport mixing_check(const SetValuedMap& f, const std::vector<PointSet>& opens,
                          int horizon);

// One-grid-step closed balls around every point: the default finite stand-in
// for a basis of open sets.
std::vector<PointSet> one_step_ball_opens(const SpacePtr& space);

struct AuditReport {
  struct InstanceRow {
    Rat epsilon;
    int gap;
    int targets;
    bool satisfied;
  };
  struct Violation {
    std::string implication;
    std::string witness;  // replayable description
  };
  std::vector<InstanceRow> rows;
  std::vector<std::pair<Rat, bool>> spec_holds_per_eps;
  bool spec_all = false;
  bool mixing_pass = false;
  bool growth_checked = false;
  double growth_rate = 0.0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Theorem-level consistency audit: samples pointwise-specification instances
// over the (epsilon, M) grid (targets = first k points, times (i-1)(M+1)).
// When the property holds across every tested epsilon, topological mixing is
// an obligation; separated-count growth is an obligation when it also holds
// at some epsilon below diameter/3. Mixing and growth are always computed and
// reported; discrepancies are violations only when the obligation is active.
AuditReport implication_audit(const MapPtr& f, const std::vector<Rat>& eps_grid,
                              const std::vector<int>& gap_grid, int horizon);

}  // namespace svd
