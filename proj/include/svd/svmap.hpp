#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "svd/space.hpp"

namespace svd {

enum class TriState { yes, no, unknown };

// Relation point -> non-empty point set over one MetricSpace, with semantic
// flags recorded by the factories (connected images, upper semi-continuity).
class SetValuedMap {
public:
  SetValuedMap(SpacePtr space, std::vector<std::vector<std::int32_t>> images,
               std::string name, TriState images_connected = TriState::unknown,
               TriState usc = TriState::unknown);

  const SpacePtr& space() const { return space_; }
  const std::string& name() const { return name_; }
  TriState images_connected() const { return images_connected_; }
  TriState usc() const { return usc_; }

  std::span<const std::int32_t> image(int x) const { return images_[x]; }
  const Bitset& image_mask(int x) const { return image_masks_[x]; }
  int max_image_size() const { return max_image_size_; }

  // Image of a whole set under the relation, as a bitset over the space.
  Bitset image_of(const Bitset& s) const;

  // Predecessors {p : F(p) meets s}; realizes backward orbit enumeration.
  Bitset preimage_of(const Bitset& s) const;

private:
  SpacePtr space_;
  std::vector<std::vector<std::int32_t>> images_;
  std::vector<Bitset> image_masks_;
  std::string name_;
  TriState images_connected_;
  TriState usc_;
  int max_image_size_ = 0;
};

using MapPtr = std::shared_ptr<const SetValuedMap>;

// Built-in systems.
MapPtr make_constant_full(const SpacePtr& space);
MapPtr make_single_valued(const SpacePtr& space, std::vector<std::int32_t> f,
                          std::string name = "single_valued");
MapPtr make_identity(const SpacePtr& space);
// f(i) = i + k on the circle; the underlying rotation by k/q.
MapPtr make_single_rotation(const SpacePtr& space, int k);
// F(t) = the arc from t to t + k/q (k+1 net points).
MapPtr make_rotation_interval(const SpacePtr& space, int k);
// F(t) = closed ball around 2t of radius blur; blur must be a multiple of 1/q.
MapPtr make_blurred_doubling(const SpacePtr& space, const Rat& blur);
// Cat-map matrix (2,1;1,1) acting exactly on the torus lattice, where every
// lattice point is periodic, so the map is single-valued everywhere.
MapPtr make_anosov_mimic(const SpacePtr& space);
MapPtr make_explicit_map(const SpacePtr& space,
                         std::vector<std::vector<std::int32_t>> images);

// F(A) = union of images over A.
PointSet image_of_set(const SetValuedMap& f, const PointSet& a);

// n-fold image; n = 0 returns A unchanged.
PointSet iterate_set(const SetValuedMap& f, const PointSet& a, int n);

// (g o f)(x) = union of g over f(x).
MapPtr compose(const MapPtr& g, const MapPtr& f);

struct UscReport {
  bool pass = true;
  std::vector<std::pair<std::int32_t, std::int32_t>> witnesses;  // (x, neighbor)
};

// One-step surrogate for upper semi-continuity at net scale: for every
// adjacency neighbor y of x, F(y) must sit inside the tol-expansion of F(x).
UscReport check_usc(const SetValuedMap& f, const Rat& tol);

struct CwHypothesesReport {
  bool connected = true;
  bool nonempty = true;
  std::vector<std::int32_t> witnesses;  // points with disconnected image
};

CwHypothesesReport check_cw_hypotheses(const SetValuedMap& f);

}  // namespace svd
