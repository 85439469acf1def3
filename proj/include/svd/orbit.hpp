#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "svd/svmap.hpp"

namespace svd {

// Length-n state sequence with x_{i+1} in F(x_i).
struct OrbitSegment {
  std::vector<std::int32_t> states;

  int length() const { return int(states.size()); }
};

bool is_orbit_of(const SetValuedMap& f, std::span<const std::int32_t> states);

// Validating constructor used where segments arrive from outside.
OrbitSegment make_orbit_segment(const SetValuedMap& f,
                                std::vector<std::int32_t> states);

// Collection of equal-length segments of one map, stored flat. `exhaustive`
// is false when an enumeration cap was hit.
class OrbitSet {
public:
  OrbitSet(MapPtr source, int length, std::optional<std::int32_t> start)
      : source_(std::move(source)), length_(length), start_(start) {}

  const MapPtr& source() const { return source_; }
  int length() const { return length_; }
  std::optional<std::int32_t> start() const { return start_; }
  bool exhaustive() const { return exhaustive_; }

  std::size_t size() const { return flat_.size() / length_; }
  std::span<const std::int32_t> segment(std::size_t i) const {
    return {flat_.data() + i * length_, std::size_t(length_)};
  }
  OrbitSegment get(std::size_t i) const {
    auto s = segment(i);
    return OrbitSegment{{s.begin(), s.end()}};
  }

  void push(std::span<const std::int32_t> states) {
    flat_.insert(flat_.end(), states.begin(), states.end());
  }
  void set_exhaustive(bool v) { exhaustive_ = v; }

private:
  MapPtr source_;
  int length_ = 0;
  std::optional<std::int32_t> start_;
  bool exhaustive_ = true;
  std::vector<std::int32_t> flat_;
};

// Depth-first enumeration in ascending point order. With `start` absent all
// start points are enumerated. Stops after `cap` segments and flags the
// result non-exhaustive (capping is an outcome, not an error).
OrbitSet enumerate_segments(const MapPtr& f, std::optional<std::int32_t> start,
                            int n, std::size_t cap);

// Sup metric on equal-length segments: max over coordinates of d(x_i, y_i).
Rat segment_distance(const MetricSpace& space, std::span<const std::int32_t> a,
                     std::span<const std::int32_t> b);
long long segment_distance_num(const MetricSpace& space,
                               std::span<const std::int32_t> a,
                               std::span<const std::int32_t> b);

// Truncated product-space metric: max over i of d(x_i, y_i) / (i + 1).
Rat weighted_segment_distance(const MetricSpace& space,
                              std::span<const std::int32_t> a,
                              std::span<const std::int32_t> b);

// Smallest worst-case distance between synchronized orbits of x and y over n
// steps, computed by a layered bottleneck recursion over the pair relation:
//   w_1(a,b) = d(a,b)
//   w_{k+1}(a,b) = max(d(a,b), min over a' in F(a), b' in F(b) of w_k(a',b'))
// Exact, and O(n q^2 B) rather than the exponential orbit-pair enumeration,
// which survives only as a test oracle. Symmetric, vanishes on the diagonal;
// the triangle inequality is NOT asserted.
Rat orbit_semimetric(const SetValuedMap& f, int x, int y, int n);

// Full q x q matrix of numerators (over space.den()) for one n.
std::vector<long long> orbit_semimetric_matrix(const SetValuedMap& f, int n);

// Matrices for every level 1..n_max in one sweep.
std::vector<std::vector<long long>> orbit_semimetric_levels(const SetValuedMap& f,
                                                            int n_max);

// Smallest n <= max_period with a length-n cycle through x, if any.
std::optional<int> find_periodic(const SetValuedMap& f, int x, int max_period);

struct ConstantOrbitReport {
  std::vector<std::int32_t> valid_points;  // t in A with t in F(t)
  bool shift_fixed = true;                 // shifting each constant segment reproduces it
};

// Constant sequences over fixed points of the relation; demonstrates that the
// shift map leaves the set of constant orbit segments fixed.
ConstantOrbitReport constant_orbits(const SetValuedMap& f, const PointSet& a);

}  // namespace svd
