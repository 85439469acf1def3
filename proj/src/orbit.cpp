#include "svd/orbit.hpp"

#include <algorithm>
#include <stdexcept>

namespace svd {

bool is_orbit_of(const SetValuedMap& f, std::span<const std::int32_t> states) {
  if (states.empty()) return false;
  for (std::size_t i = 0; i + 1 < states.size(); ++i) {
    auto img = f.image(states[i]);
    if (!std::binary_search(img.begin(), img.end(), states[i + 1])) return false;
  }
  return true;
}

OrbitSegment make_orbit_segment(const SetValuedMap& f,
                                std::vector<std::int32_t> states) {
  if (!is_orbit_of(f, states))
    throw std::invalid_argument("orbit segment: consecutive states not related by the map");
  return OrbitSegment{std::move(states)};
}

OrbitSet enumerate_segments(const MapPtr& f, std::optional<std::int32_t> start,
                            int n, std::size_t cap) {
  if (n < 1) throw std::invalid_argument("enumerate_segments: length must be >= 1");
  if (cap < 1) throw std::invalid_argument("enumerate_segments: cap must be >= 1");
  if (start && (*start < 0 || *start >= f->space()->size()))
    throw std::invalid_argument("enumerate_segments: start out of range");

  OrbitSet out(f, n, start);
  std::vector<std::int32_t> path(n);
  std::vector<std::size_t> choice(n, 0);
  bool capped = false;

  int first = start ? *start : 0;
  int last = start ? *start : f->space()->size() - 1;
  for (int s = first; s <= last && !capped; ++s) {
    path[0] = s;
    int depth = 0;
    choice[0] = 0;
    while (depth >= 0) {
      if (depth == n - 1) {
        if (out.size() == cap) {
          // One more segment exists beyond the cap: truncate and flag.
          capped = true;
          break;
        }
        out.push(path);
        --depth;
        continue;
      }
      auto img = f->image(path[depth]);
      if (choice[depth] == img.size()) {
        choice[depth] = 0;
        --depth;
        continue;
      }
      path[depth + 1] = img[choice[depth]++];
      ++depth;
      choice[depth] = 0;
    }
  }
  out.set_exhaustive(!capped);
  return out;
}

long long segment_distance_num(const MetricSpace& space,
                               std::span<const std::int32_t> a,
                               std::span<const std::int32_t> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("segment_distance: length mismatch");
  long long worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, space.dist_num(a[i], b[i]));
  return worst;
}

Rat segment_distance(const MetricSpace& space, std::span<const std::int32_t> a,
                     std::span<const std::int32_t> b) {
  return Rat(segment_distance_num(space, a, b), space.den());
}

Rat weighted_segment_distance(const MetricSpace& space,
                              std::span<const std::int32_t> a,
                              std::span<const std::int32_t> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("weighted_segment_distance: length mismatch");
  Rat best(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat term(space.dist_num(a[i], b[i]), space.den() * (long long)(i + 1));
    if (term > best) best = term;
  }
  return best;
}

namespace {

// One bottleneck sweep step: w_next(a,b) = max(d(a,b), min over successors).
// Factored through m(a',b) = min over b' in F(b) of w(a',b') so the cost per
// level is O(q^2 B) instead of O(q^2 B^2).
void semimetric_step(const SetValuedMap& f, const std::vector<long long>& w,
                     std::vector<long long>& m, std::vector<long long>& next) {
  const MetricSpace& X = *f.space();
  const int q = X.size();
  const long long inf = X.diameter_num() + 1;

  std::fill(m.begin(), m.end(), inf);
  for (int b = 0; b < q; ++b)
    for (auto bp : f.image(b)) {
      const long long* wrow = w.data() + std::size_t(bp);
      long long* mcol = m.data() + b;
      for (int ap = 0; ap < q; ++ap) {
        long long v = wrow[std::size_t(ap) * q];
        if (v < mcol[std::size_t(ap) * q]) mcol[std::size_t(ap) * q] = v;
      }
    }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      long long best = inf;
      for (auto ap : f.image(a))
        best = std::min(best, m[std::size_t(ap) * q + b]);
      next[std::size_t(a) * q + b] = std::max(X.dist_num(a, b), best);
    }
}

}  // namespace

std::vector<std::vector<long long>> orbit_semimetric_levels(const SetValuedMap& f,
                                                            int n_max) {
  if (n_max < 1) throw std::invalid_argument("orbit_semimetric: n must be >= 1");
  const MetricSpace& X = *f.space();
  const int q = X.size();

  std::vector<std::vector<long long>> levels;
  levels.reserve(n_max);
  std::vector<long long> w(std::size_t(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) w[std::size_t(a) * q + b] = X.dist_num(a, b);
  levels.push_back(w);

  std::vector<long long> m(std::size_t(q) * q), next(std::size_t(q) * q);
  for (int k = 1; k < n_max; ++k) {
    semimetric_step(f, w, m, next);
    w.swap(next);
    levels.push_back(w);
  }
  return levels;
}

std::vector<long long> orbit_semimetric_matrix(const SetValuedMap& f, int n) {
  auto levels = orbit_semimetric_levels(f, n);
  return std::move(levels.back());
}

Rat orbit_semimetric(const SetValuedMap& f, int x, int y, int n) {
  const int q = f.space()->size();
  if (x < 0 || x >= q || y < 0 || y >= q)
    throw std::invalid_argument("orbit_semimetric: point out of range");
  auto m = orbit_semimetric_matrix(f, n);
  return Rat(m[std::size_t(x) * q + y], f.space()->den());
}

std::optional<int> find_periodic(const SetValuedMap& f, int x, int max_period) {
  if (max_period < 1) throw std::invalid_argument("find_periodic: max_period must be >= 1");
  Bitset s(f.space()->size());
  s.set(x);
  for (int n = 1; n <= max_period; ++n) {
    s = f.image_of(s);
    if (s.test(x)) return n;
  }
  return std::nullopt;
}

ConstantOrbitReport constant_orbits(const SetValuedMap& f, const PointSet& a) {
  if (f.space() != a.space())
    throw std::invalid_argument("constant_orbits: set belongs to a different space");
  ConstantOrbitReport report;
  for (auto t : a.members())
    if (f.image_mask(t).test(t)) report.valid_points.push_back(t);
  // Shift each constant segment and compare; vacuously fixed when empty.
  for (auto t : report.valid_points) {
    std::vector<std::int32_t> seg(4, t);
    std::vector<std::int32_t> shifted(seg.begin() + 1, seg.end());
    shifted.push_back(t);
    if (shifted != seg || !is_orbit_of(f, seg)) report.shift_fixed = false;
  }
  return report;
}

}  // namespace svd
