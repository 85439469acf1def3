#include "svd/svmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace svd {

SetValuedMap::SetValuedMap(SpacePtr space,
                           std::vector<std::vector<std::int32_t>> images,
                           std::string name, TriState images_connected,
                           TriState usc)
    : space_(std::move(space)),
      images_(std::move(images)),
      name_(std::move(name)),
      images_connected_(images_connected),
      usc_(usc) {
  if (!space_) throw std::invalid_argument("map: null space");
  if (int(images_.size()) != space_->size())
    throw std::invalid_argument("map: image table size mismatch");
  image_masks_.reserve(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    auto& img = images_[x];
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (img.empty())
      throw std::invalid_argument("map: empty image at point " + std::to_string(x));
    if (img.front() < 0 || img.back() >= space_->size())
      throw std::invalid_argument("map: image index out of range at point " +
                                  std::to_string(x));
    Bitset m(space_->size());
    for (auto p : img) m.set(p);
    image_masks_.push_back(std::move(m));
    max_image_size_ = std::max(max_image_size_, int(img.size()));
  }
}

Bitset SetValuedMap::image_of(const Bitset& s) const {
  Bitset out(space_->size());
  s.for_each([&](int p) { out |= image_masks_[p]; });
  return out;
}

Bitset SetValuedMap::preimage_of(const Bitset& s) const {
  Bitset out(space_->size());
  for (int p = 0; p < space_->size(); ++p)
    if (image_masks_[p].intersects(s)) out.set(p);
  return out;
}

MapPtr make_constant_full(const SpacePtr& space) {
  std::vector<std::int32_t> all(space->size());
  for (int i = 0; i < space->size(); ++i) all[i] = i;
  std::vector<std::vector<std::int32_t>> images(space->size(), all);
  bool conn = is_connected(full_set(space));
  return std::make_shared<SetValuedMap>(space, std::move(images), "constant_full",
                                        conn ? TriState::yes : TriState::no,
                                        TriState::yes);
}

MapPtr make_single_valued(const SpacePtr& space, std::vector<std::int32_t> f,
                          std::string name) {
  if (int(f.size()) != space->size())
    throw std::invalid_argument("single_valued: table size mismatch");
  std::vector<std::vector<std::int32_t>> images(space->size());
  for (int i = 0; i < space->size(); ++i) images[i] = {f[i]};
  return std::make_shared<SetValuedMap>(space, std::move(images), std::move(name),
                                        TriState::yes, TriState::unknown);
}

MapPtr make_identity(const SpacePtr& space) {
  std::vector<std::int32_t> f(space->size());
  for (int i = 0; i < space->size(); ++i) f[i] = i;
  return make_single_valued(space, std::move(f), "identity");
}

MapPtr make_single_rotation(const SpacePtr& space, int k) {
  if (space->kind() != SpaceKind::circle)
    throw std::invalid_argument("single_rotation: circle space required");
  int q = space->resolution();
  if (k < 1 || k >= q) throw std::invalid_argument("single_rotation: need 1 <= k < q");
  std::vector<std::int32_t> f(q);
  for (int i = 0; i < q; ++i) f[i] = (i + k) % q;
  return make_single_valued(space, std::move(f), "single_rotation_k" + std::to_string(k));
}

MapPtr make_rotation_interval(const SpacePtr& space, int k) {
  if (space->kind() != SpaceKind::circle)
    throw std::invalid_argument("rotation_interval: circle space required");
  int q = space->resolution();
  if (k < 1 || k >= q) throw std::invalid_argument("rotation_interval: need 1 <= k < q");
  std::vector<std::vector<std::int32_t>> images(q);
  for (int t = 0; t < q; ++t) {
    images[t].reserve(k + 1);
    for (int s = 0; s <= k; ++s) images[t].push_back((t + s) % q);
  }
  return std::make_shared<SetValuedMap>(space, std::move(images),
                                        "rotation_interval_k" + std::to_string(k),
                                        TriState::yes, TriState::yes);
}

MapPtr make_blurred_doubling(const SpacePtr& space, const Rat& blur) {
  if (space->kind() != SpaceKind::circle)
    throw std::invalid_argument("blurred_doubling: circle space required");
  int q = space->resolution();
  // Radius must land exactly on the net so images are exactly representable.
  if (blur.num() <= 0 || q % blur.den() != 0)
    throw std::invalid_argument("blurred_doubling: blur radius not representable on the net");
  long long steps = blur.num() * (q / blur.den());
  if (steps <= 0 || steps >= q)
    throw std::invalid_argument("blurred_doubling: blur radius out of range");
  std::vector<std::vector<std::int32_t>> images(q);
  for (int t = 0; t < q; ++t) {
    int c = (2 * t) % q;
    for (long long s = -steps; s <= steps; ++s)
      images[t].push_back(std::int32_t(((c + s) % q + q) % q));
  }
  return std::make_shared<SetValuedMap>(space, std::move(images),
                                        "blurred_doubling_" + blur.str(),
                                        TriState::yes, TriState::yes);
}

MapPtr make_anosov_mimic(const SpacePtr& space) {
  if (space->kind() != SpaceKind::torus)
    throw std::invalid_argument("anosov_mimic: torus space required");
  int q = space->resolution();
  std::vector<std::int32_t> f(space->size());
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      f[torus_index(x, y, q)] = torus_index((2 * x + y) % q, (x + y) % q, q);
  return make_single_valued(space, std::move(f), "anosov_mimic");
}

MapPtr make_explicit_map(const SpacePtr& space,
                         std::vector<std::vector<std::int32_t>> images) {
  return std::make_shared<SetValuedMap>(space, std::move(images), "explicit");
}

PointSet image_of_set(const SetValuedMap& f, const PointSet& a) {
  if (f.space() != a.space())
    throw std::invalid_argument("image_of_set: set belongs to a different space");
  return PointSet::from_bitset(f.space(), f.image_of(a.to_bitset()));
}

PointSet iterate_set(const SetValuedMap& f, const PointSet& a, int n) {
  if (f.space() != a.space())
    throw std::invalid_argument("iterate_set: set belongs to a different space");
  if (n < 0) throw std::invalid_argument("iterate_set: negative iterate");
  Bitset s = a.to_bitset();
  for (int i = 0; i < n; ++i) s = f.image_of(s);
  return PointSet::from_bitset(f.space(), s);
}

MapPtr compose(const MapPtr& g, const MapPtr& f) {
  if (g->space() != f->space())
    throw std::invalid_argument("compose: maps over different spaces");
  int n = f->space()->size();
  std::vector<std::vector<std::int32_t>> images(n);
  for (int x = 0; x < n; ++x) {
    Bitset acc(n);
    for (auto y : f->image(x)) acc |= g->image_mask(y);
    images[x] = acc.to_indices();
  }
  return std::make_shared<SetValuedMap>(f->space(), std::move(images),
                                        g->name() + "." + f->name());
}

UscReport check_usc(const SetValuedMap& f, const Rat& tol) {
  const MetricSpace& X = *f.space();
  if (tol < X.adjacency_radius())
    throw std::invalid_argument("check_usc: tol must be >= adjacency radius");

  // tol-expansion masks: expand[m] = closed ball around m of radius tol.
  std::vector<Bitset> expand(X.size(), Bitset(X.size()));
  for (int m = 0; m < X.size(); ++m)
    for (int p = 0; p < X.size(); ++p)
      if (X.dist_le(m, p, tol)) expand[m].set(p);

  UscReport report;
  for (int x = 0; x < X.size(); ++x) {
    Bitset allowed(X.size());
    for (auto m : f.image(x)) allowed |= expand[m];
    for (int y : X.neighbors(x)) {
      if (!f.image_mask(y).subset_of(allowed)) {
        report.pass = false;
        report.witnesses.emplace_back(x, y);
      }
    }
  }
  return report;
}

CwHypothesesReport check_cw_hypotheses(const SetValuedMap& f) {
  CwHypothesesReport report;
  for (int x = 0; x < f.space()->size(); ++x) {
    auto img = f.image(x);
    PointSet s(f.space(), {img.begin(), img.end()});
    if (!is_connected(s)) {
      report.connected = false;
      report.witnesses.push_back(x);
    }
  }
  return report;
}

}  // namespace svd
