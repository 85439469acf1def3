#include "svd/space.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace svd {

namespace {

long long lcm_checked(long long a, long long b) {
  long long g = std::gcd(a, b);
  __int128 l = (__int128)(a / g) * b;
  if (l > (__int128(1) << 50))
    throw std::overflow_error("explicit space: denominators too large");
  return (long long)l;
}

int circ_steps(int i, int j, int q) {
  int d = i > j ? i - j : j - i;
  return std::min(d, q - d);
}

}  // namespace

void MetricSpace::finish() {
  diam_num_ = 0;
  for (long long v : dist_) diam_num_ = std::max(diam_num_, v);

  nbr_off_.assign(size_ + 1, 0);
  for (int i = 0; i < size_; ++i) {
    int deg = 0;
    for (int j = 0; j < size_; ++j)
      if (j != i && dist_le(i, j, adjacency_radius_)) ++deg;
    nbr_off_[i + 1] = nbr_off_[i] + deg;
  }
  neighbors_.resize(nbr_off_[size_]);
  for (int i = 0; i < size_; ++i) {
    int at = nbr_off_[i];
    for (int j = 0; j < size_; ++j)
      if (j != i && dist_le(i, j, adjacency_radius_)) neighbors_[at++] = j;
  }
}

SpacePtr build_space(SpaceKind kind, int q) {
  if (kind != SpaceKind::circle && kind != SpaceKind::torus)
    throw std::invalid_argument("build_space: kind must be circle or torus");
  if (q < 3) throw std::invalid_argument("build_space: invalid resolution, q must be >= 3");

  auto sp = std::shared_ptr<MetricSpace>(new MetricSpace());
  sp->kind_ = kind;
  sp->resolution_ = q;
  sp->den_ = q;
  sp->adjacency_radius_ = Rat(1, q);

  if (kind == SpaceKind::circle) {
    sp->size_ = q;
    sp->dist_.resize(std::size_t(q) * q);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j)
        sp->dist_[std::size_t(i) * q + j] = circ_steps(i, j, q);
  } else {
    if (q > 64)
      throw std::invalid_argument("build_space: torus resolution above supported size");
    int n = q * q;
    sp->size_ = n;
    sp->dist_.resize(std::size_t(n) * n);
    for (int x1 = 0; x1 < q; ++x1)
      for (int y1 = 0; y1 < q; ++y1)
        for (int x2 = 0; x2 < q; ++x2)
          for (int y2 = 0; y2 < q; ++y2) {
            int i = torus_index(x1, y1, q), j = torus_index(x2, y2, q);
            sp->dist_[std::size_t(i) * n + j] =
                std::max(circ_steps(x1, x2, q), circ_steps(y1, y2, q));
          }
  }
  sp->finish();
  return sp;
}

SpacePtr build_explicit_space(const std::vector<std::vector<Rat>>& table,
                              const Rat& adjacency_radius) {
  int n = int(table.size());
  if (n == 0) throw std::invalid_argument("explicit space: empty table");
  for (const auto& row : table)
    if (int(row.size()) != n)
      throw std::invalid_argument("explicit space: table must be square");

  long long den = 1;
  for (const auto& row : table)
    for (const Rat& v : row) {
      if (v.is_negative())
        throw std::invalid_argument("explicit space: negative entry rejected");
      den = lcm_checked(den, v.den());
    }

  auto sp = std::shared_ptr<MetricSpace>(new MetricSpace());
  sp->kind_ = SpaceKind::explicit_table;
  sp->size_ = n;
  sp->den_ = den;
  sp->adjacency_radius_ = adjacency_radius;
  sp->dist_.resize(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sp->dist_[std::size_t(i) * n + j] = table[i][j].num() * (den / table[i][j].den());

  for (int i = 0; i < n; ++i) {
    if (sp->dist_num(i, i) != 0)
      throw std::invalid_argument("explicit space: nonzero diagonal at point " +
                                  std::to_string(i));
    for (int j = i + 1; j < n; ++j) {
      if (sp->dist_num(i, j) != sp->dist_num(j, i))
        throw std::invalid_argument("explicit space: asymmetric entries at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      if (sp->dist_num(i, j) == 0)
        throw std::invalid_argument("explicit space: distinct points at zero distance (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (sp->dist_num(i, j) > sp->dist_num(i, k) + sp->dist_num(k, j))
          throw std::invalid_argument(
              "explicit space: triangle inequality violated by triple (" +
              std::to_string(i) + "," + std::to_string(k) + "," + std::to_string(j) + ")");

  sp->finish();
  return sp;
}

PointSet::PointSet(SpacePtr space, std::vector<std::int32_t> members)
    : space_(std::move(space)), members_(std::move(members)) {
  if (!space_) throw std::invalid_argument("point set: null space");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw std::invalid_argument("point set: must be non-empty");
  if (members_.front() < 0 || members_.back() >= space_->size())
    throw std::invalid_argument("point set: index out of range");
}

bool PointSet::contains(std::int32_t p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

Bitset PointSet::to_bitset() const {
  Bitset b(space_->size());
  for (auto p : members_) b.set(p);
  return b;
}

PointSet PointSet::from_bitset(const SpacePtr& space, const Bitset& bits) {
  return PointSet(space, bits.to_indices());
}

PointSet full_set(const SpacePtr& space) {
  std::vector<std::int32_t> all(space->size());
  for (int i = 0; i < space->size(); ++i) all[i] = i;
  return PointSet(space, std::move(all));
}

namespace {
void require_same_space(const PointSet& a, const PointSet& b) {
  if (a.space() != b.space())
    throw std::invalid_argument("point sets belong to different spaces");
}
}  // namespace

Rat min_distance(const PointSet& a, const PointSet& b) {
  require_same_space(a, b);
  const MetricSpace& X = *a.space();
  long long best = X.diameter_num();
  for (auto p : a.members())
    for (auto q : b.members()) {
      best = std::min(best, X.dist_num(p, q));
      if (best == 0) return Rat(0);
    }
  return Rat(best, X.den());
}

Rat hausdorff(const PointSet& a, const PointSet& b) {
  require_same_space(a, b);
  const MetricSpace& X = *a.space();
  long long worst = 0;
  auto directed = [&](const PointSet& from, const PointSet& to) {
    for (auto p : from.members()) {
      long long nearest = X.diameter_num();
      for (auto q : to.members()) nearest = std::min(nearest, X.dist_num(p, q));
      worst = std::max(worst, nearest);
    }
  };
  directed(a, b);
  directed(b, a);
  return Rat(worst, X.den());
}

long long diameter_num(const MetricSpace& space, std::span<const std::int32_t> pts) {
  long long best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::max(best, space.dist_num(pts[i], pts[j]));
  return best;
}

Rat diameter(const PointSet& a) {
  return Rat(diameter_num(*a.space(), a.members()), a.space()->den());
}

bool diameter_gt(const MetricSpace& space, std::span<const std::int32_t> pts,
                 const Rat& t) {
  __int128 rhs = (__int128)t.num() * space.den();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if ((__int128)space.dist_num(pts[i], pts[j]) * t.den() > rhs) return true;
  return false;
}

bool diameter_ge(const MetricSpace& space, std::span<const std::int32_t> pts,
                 const Rat& t) {
  __int128 rhs = (__int128)t.num() * space.den();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if ((__int128)space.dist_num(pts[i], pts[j]) * t.den() >= rhs) return true;
  return false;
}

bool is_connected(const PointSet& a) {
  const MetricSpace& X = *a.space();
  Bitset in = a.to_bitset();
  Bitset seen(X.size());
  std::queue<int> bfs;
  int start = a.members().front();
  bfs.push(start);
  seen.set(start);
  int reached = 1;
  while (!bfs.empty()) {
    int p = bfs.front();
    bfs.pop();
    for (int nb : X.neighbors(p))
      if (in.test(nb) && !seen.test(nb)) {
        seen.set(nb);
        ++reached;
        bfs.push(nb);
      }
  }
  return reached == a.size();
}

PointSet ball(const SpacePtr& space, int x, const Rat& r) {
  if (r.is_negative()) throw std::invalid_argument("ball: negative radius");
  if (x < 0 || x >= space->size()) throw std::invalid_argument("ball: center out of range");
  std::vector<std::int32_t> pts;
  for (int y = 0; y < space->size(); ++y)
    if (space->dist_le(x, y, r)) pts.push_back(y);
  return PointSet(space, std::move(pts));
}

Continuum::Continuum(PointSet set) : set_(std::move(set)) {
  if (!is_connected(set_))
    throw std::invalid_argument("continuum: point set is not adjacency-connected");
}

}  // namespace svd
