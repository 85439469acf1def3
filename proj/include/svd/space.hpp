#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "svd/bitset.hpp"
#include "svd/rational.hpp"

namespace svd {

enum class SpaceKind { circle, torus, explicit_table };

// Finite net standing in for a compact metric space: a point set with an
// exact metric table, an adjacency resolution, and a cached diameter.
//
// Distances are stored as integer numerators over one common denominator, so
// every comparison in the toolkit is an exact integer comparison.
class MetricSpace {
public:
  int size() const { return size_; }
  SpaceKind kind() const { return kind_; }
  int resolution() const { return resolution_; }  // q for circle/torus, 0 otherwise
  long long den() const { return den_; }

  long long dist_num(int i, int j) const { return dist_[std::size_t(i) * size_ + j]; }
  Rat metric(int i, int j) const { return Rat(dist_num(i, j), den_); }

  Rat adjacency_radius() const { return adjacency_radius_; }
  Rat diameter() const { return Rat(diam_num_, den_); }
  long long diameter_num() const { return diam_num_; }

  std::span<const std::int32_t> neighbors(int i) const {
    return {neighbors_.data() + nbr_off_[i],
            std::size_t(nbr_off_[i + 1] - nbr_off_[i])};
  }

  // Exact comparison of the stored distance d(i,j) against a rational bound.
  bool dist_gt(int i, int j, const Rat& r) const {
    return (__int128)dist_num(i, j) * r.den() > (__int128)r.num() * den_;
  }
  bool dist_le(int i, int j, const Rat& r) const { return !dist_gt(i, j, r); }

  friend std::shared_ptr<const MetricSpace> build_space(SpaceKind kind, int q);
  friend std::shared_ptr<const MetricSpace> build_explicit_space(
      const std::vector<std::vector<Rat>>& table, const Rat& adjacency_radius);

private:
  MetricSpace() = default;
  void finish();  // diameter cache + adjacency lists

  SpaceKind kind_ = SpaceKind::explicit_table;
  int size_ = 0;
  int resolution_ = 0;
  long long den_ = 1;
  std::vector<long long> dist_;
  Rat adjacency_radius_;
  long long diam_num_ = 0;
  std::vector<std::int32_t> neighbors_;
  std::vector<std::int32_t> nbr_off_;
};

using SpacePtr = std::shared_ptr<const MetricSpace>;

// Built-in nets. circle: q points at spacing 1/q with arc metric.
// torus: q x q grid, metric = max of the two coordinate arc metrics
// (balls are squares and diameters stay exact on the grid).
SpacePtr build_space(SpaceKind kind, int q);

// Validated explicit metric table; rejects triangle violations naming the
// offending triple. Diameter is cached as the largest entry.
SpacePtr build_explicit_space(const std::vector<std::vector<Rat>>& table,
                              const Rat& adjacency_radius);

// Torus grid index helpers.
inline int torus_index(int x, int y, int q) { return x * q + y; }

// Non-empty sorted set of point indices of one space.
class PointSet {
public:
  PointSet(SpacePtr space, std::vector<std::int32_t> members);

  const SpacePtr& space() const { return space_; }
  const std::vector<std::int32_t>& members() const { return members_; }
  int size() const { return int(members_.size()); }
  bool contains(std::int32_t p) const;

  Bitset to_bitset() const;
  static PointSet from_bitset(const SpacePtr& space, const Bitset& bits);

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.space_ == b.space_ && a.members_ == b.members_;
  }

private:
  SpacePtr space_;
  std::vector<std::int32_t> members_;
};

PointSet full_set(const SpacePtr& space);

// inf-distance between two sets: min over pairs.
Rat min_distance(const PointSet& a, const PointSet& b);

// Hausdorff distance: max of the two directed sup-inf terms.
Rat hausdorff(const PointSet& a, const PointSet& b);

// Largest pairwise distance; 0 for singletons.
Rat diameter(const PointSet& a);

// True when the set induces a connected subgraph of the adjacency graph.
bool is_connected(const PointSet& a);

// Closed ball {y : d(x,y) <= r}.
PointSet ball(const SpacePtr& space, int x, const Rat& r);

// Threshold tests with early exit; used by the iteration-heavy checks.
bool diameter_gt(const MetricSpace& space, std::span<const std::int32_t> pts,
                 const Rat& t);
bool diameter_ge(const MetricSpace& space, std::span<const std::int32_t> pts,
                 const Rat& t);
long long diameter_num(const MetricSpace& space, std::span<const std::int32_t> pts);

// Connected point set: the net-scale stand-in for a continuum.
class Continuum {
public:
  explicit Continuum(PointSet set);
  const PointSet& set() const { return set_; }
  const SpacePtr& space() const { return set_.space(); }

private:
  PointSet set_;
};

}  // namespace svd
