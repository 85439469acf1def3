#include "svd/expansivity.hpp"

#include <algorithm>
#include <queue>

namespace svd {

namespace {

Rat half(const Rat& r) { return Rat(r.num(), r.den() * 2); }

std::vector<std::int32_t> bits_to_members(const Bitset& b) { return b.to_indices(); }

}  // namespace

CwReport cw_check(const SetValuedMap& f, const std::vector<Continuum>& family,
                  const Rat& delta, int horizon) {
  if (family.empty()) throw std::invalid_argument("cw_check: empty continuum family");
  if (!(delta > Rat(0))) throw std::invalid_argument("cw_check: delta must be positive");
  for (const auto& c : family) {
    if (c.space() != f.space())
      throw std::invalid_argument("cw_check: continuum from a different space");
    if (diameter(c.set()).is_zero())
      throw std::invalid_argument("cw_check: degenerate continuum in family");
  }

  const MetricSpace& X = *f.space();
  CwReport report;
  report.delta = delta;
  report.horizon = horizon;
  report.hypotheses = check_cw_hypotheses(f);
  report.pass = true;
  report.results.reserve(family.size());

  for (const auto& c : family) {
    CwReport::Entry entry;
    Bitset s = c.set().to_bitset();
    std::vector<std::int32_t> pts = c.set().members();
    long long max_seen = diameter_num(X, pts);
    for (int n = 1; n <= horizon; ++n) {
      s = f.image_of(s);
      pts = bits_to_members(s);
      long long d = diameter_num(X, pts);
      max_seen = std::max(max_seen, d);
      if ((__int128)d * delta.den() > (__int128)delta.num() * X.den()) {
        entry.witness_n = n;
        break;
      }
    }
    entry.max_diam_seen = Rat(max_seen, X.den());
    if (!entry.witness_n) report.pass = false;
    report.results.push_back(std::move(entry));
  }
  return report;
}

std::optional<int> uniform_horizon(const SetValuedMap& f, const Rat& delta,
                                   const Rat& eps,
                                   const std::vector<Continuum>& family,
                                   int n_max) {
  if (!(delta > Rat(0)) || !(eps > Rat(0)))
    throw std::invalid_argument("uniform_horizon: thresholds must be positive");
  const MetricSpace& X = *f.space();
  const Rat target = half(delta);
  int worst = 0;
  for (const auto& c : family) {
    if (c.space() != f.space())
      throw std::invalid_argument("uniform_horizon: continuum from a different space");
    if (!diameter_ge(X, c.set().members(), eps)) continue;
    if (diameter_ge(X, c.set().members(), target)) continue;  // escapes at i = 0
    Bitset s = c.set().to_bitset();
    bool escaped = false;
    for (int i = 1; i <= n_max; ++i) {
      s = f.image_of(s);
      auto pts = bits_to_members(s);
      if (diameter_ge(X, pts, target)) {
        worst = std::max(worst, i);
        escaped = true;
        break;
      }
    }
    if (!escaped) return std::nullopt;
  }
  return worst;
}

std::pair<Continuum, Continuum> split_continuum(const Continuum& a, const Rat& c) {
  const MetricSpace& X = *a.space();
  const auto& pts = a.set().members();
  const Rat c8(c.num(), c.den() * 8);
  const Rat two_h = a.space()->adjacency_radius() * Rat(2);

  if (!(diameter(a.set()) > c))
    throw std::invalid_argument("split_continuum: diameter must exceed c");
  if (c8 < two_h)
    throw std::invalid_argument(
        "split_continuum: c/8 below twice the adjacency radius, not resolvable at net scale");

  // Lexicographically first pair at distance > c/2.
  const Rat c2 = half(c);
  int seed1 = -1, seed2 = -1;
  for (std::size_t i = 0; i < pts.size() && seed1 < 0; ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (X.dist_gt(pts[i], pts[j], c2)) {
        seed1 = pts[i];
        seed2 = pts[j];
        break;
      }
  if (seed1 < 0)
    throw std::logic_error("split_continuum: no pair above c/2 despite diameter > c");

  Bitset inside = a.set().to_bitset();
  auto grow = [&](int seed) {
    Bitset cur(X.size());
    cur.set(seed);
    std::vector<std::int32_t> members{std::int32_t(seed)};
    while (!diameter_ge(X, members, c8)) {
      // Accrete the whole next adjacency shell inside A.
      Bitset frontier(X.size());
      bool grew = false;
      cur.for_each([&](int p) {
        for (int nb : X.neighbors(p))
          if (inside.test(nb) && !cur.test(nb)) {
            frontier.set(nb);
            grew = true;
          }
      });
      if (!grew)
        throw std::logic_error("split_continuum: accretion exhausted A before c/8");
      cur |= frontier;
      members = cur.to_indices();
    }
    return PointSet(a.space(), std::move(members));
  };

  PointSet s1 = grow(seed1);
  PointSet s2 = grow(seed2);

  auto check_window = [&](const PointSet& s) {
    Rat d = diameter(s);
    if (d < c8 || d > c8 + two_h)
      throw std::logic_error("split_continuum: grown set missed the diameter window");
  };
  check_window(s1);
  check_window(s2);
  if (!(hausdorff(s1, s2) > c8))
    throw std::logic_error("split_continuum: grown sets violate the Hausdorff bound");

  return {Continuum(std::move(s1)), Continuum(std::move(s2))};
}

std::vector<Continuum> minimal_continuum_family(const SpacePtr& space,
                                                const Rat& min_diam) {
  std::vector<Continuum> out;
  if (space->kind() == SpaceKind::circle) {
    int q = space->resolution();
    // Smallest arc span reaching the floor: diam of a (k+1)-point arc is k/q.
    int span = 1;
    while (span < q && Rat(span, q) < min_diam) ++span;
    for (int start = 0; start < q; ++start) {
      std::vector<std::int32_t> pts;
      for (int s = 0; s <= span; ++s) pts.push_back((start + s) % q);
      out.emplace_back(PointSet(space, std::move(pts)));
    }
  } else if (space->kind() == SpaceKind::torus) {
    int q = space->resolution();
    int side = 1;
    while (side < q && Rat(side, q) < min_diam) ++side;
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y) {
        std::vector<std::int32_t> pts;
        for (int dx = 0; dx <= side; ++dx)
          for (int dy = 0; dy <= side; ++dy)
            pts.push_back(torus_index((x + dx) % q, (y + dy) % q, q));
        out.emplace_back(PointSet(space, std::move(pts)));
      }
  } else {
    throw std::invalid_argument("continuum family generation needs a circle or torus");
  }
  return out;
}

std::vector<Continuum> all_arc_family(const SpacePtr& space, int min_points) {
  if (min_points < 1) throw std::invalid_argument("all_arc_family: min_points >= 1");
  std::vector<Continuum> out;
  if (space->kind() == SpaceKind::circle) {
    int q = space->resolution();
    for (int len = min_points; len <= q; ++len)
      for (int start = 0; start < q; ++start) {
        if (len == q && start > 0) break;  // the full net only once
        std::vector<std::int32_t> pts;
        pts.reserve(len);
        for (int s = 0; s < len; ++s) pts.push_back((start + s) % q);
        out.emplace_back(PointSet(space, std::move(pts)));
      }
  } else if (space->kind() == SpaceKind::torus) {
    int q = space->resolution();
    for (int side = min_points; side <= q; ++side)
      for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
          if (side == q && (x > 0 || y > 0)) break;
          std::vector<std::int32_t> pts;
          for (int dx = 0; dx < side; ++dx)
            for (int dy = 0; dy < side; ++dy)
              pts.push_back(torus_index((x + dx) % q, (y + dy) % q, q));
          out.emplace_back(PointSet(space, std::move(pts)));
        }
  } else {
    throw std::invalid_argument("continuum family generation needs a circle or torus");
  }
  return out;
}

std::vector<Continuum> small_arc_family(const SpacePtr& space, const Rat& max_diam) {
  if (space->kind() != SpaceKind::circle)
    throw std::invalid_argument("small_arc_family: circle space required");
  int q = space->resolution();
  std::vector<Continuum> out;
  for (int len = 2; len <= q; ++len) {
    if (Rat(len - 1, q) > max_diam) break;
    for (int start = 0; start < q; ++start) {
      std::vector<std::int32_t> pts;
      pts.reserve(len);
      for (int s = 0; s < len; ++s) pts.push_back((start + s) % q);
      out.emplace_back(PointSet(space, std::move(pts)));
    }
  }
  return out;
}

namespace {

struct TreeLeaf {
  std::string path;
  std::vector<Bitset> checkpoint_sets;  // continuum at each level, root included
  std::vector<int> checkpoint_times;
  std::vector<int> step_counts;
};

void build_tree(const MapPtr& f, const Bitset& node_set, int node_time,
                const Rat& delta, int n_horizon, int m, int depth,
                const std::string& path, std::vector<Bitset> chain_sets,
                std::vector<int> chain_times, std::vector<int> chain_steps,
                std::vector<TreeLeaf>& leaves, bool& overrun, int& max_steps) {
  const MetricSpace& X = *f->space();
  chain_sets.push_back(node_set);
  chain_times.push_back(node_time);

  if (depth == m) {
    leaves.push_back(TreeLeaf{path, std::move(chain_sets), std::move(chain_times),
                              std::move(chain_steps)});
    return;
  }

  // Iterate the node until its diameter exceeds delta. The horizon certifies
  // reaching delta/2 only, so allow up to 2N+1 steps and record the overrun.
  const int cap = 2 * n_horizon + 1;
  Bitset s = node_set;
  int l = 0;
  bool found = false;
  for (int i = 1; i <= cap; ++i) {
    s = f->image_of(s);
    auto pts = s.to_indices();
    if (diameter_gt(X, pts, delta)) {
      l = i;
      found = true;
      break;
    }
  }
  if (!found)
    throw CertificateError("separated family: node " + (path.empty() ? "root" : path) +
                           " never exceeded delta within " + std::to_string(cap) +
                           " steps (contradicts the horizon certificate)");
  if (l > n_horizon) overrun = true;
  max_steps = std::max(max_steps, l);

  Continuum big(PointSet::from_bitset(f->space(), s));
  auto [left, right] = split_continuum(big, delta);

  chain_steps.push_back(l);
  int child_time = node_time + l;
  auto child_path = [&](int which) {
    return path.empty() ? std::to_string(which) : path + "." + std::to_string(which);
  };
  build_tree(f, left.set().to_bitset(), child_time, delta, n_horizon, m, depth + 1,
             child_path(1), chain_sets, chain_times, chain_steps, leaves, overrun,
             max_steps);
  build_tree(f, right.set().to_bitset(), child_time, delta, n_horizon, m, depth + 1,
             child_path(2), chain_sets, chain_times, chain_steps, leaves, overrun,
             max_steps);
}

// Thread one orbit segment of length total+1 through the leaf's chain:
// backward reachability pins the feasible sets, then a forward pass always
// takes the smallest-index point that keeps every later checkpoint reachable.
std::vector<std::int32_t> extract_segment(const SetValuedMap& f, const TreeLeaf& leaf,
                                          int total_time) {
  const int q = f.space()->size();
  const int last_cp = leaf.checkpoint_times.back();

  std::vector<int> cp_at(last_cp + 1, -1);
  for (std::size_t k = 0; k < leaf.checkpoint_times.size(); ++k)
    cp_at[leaf.checkpoint_times[k]] = int(k);

  // feasible[t] for t = 0..last_cp
  std::vector<Bitset> feasible(last_cp + 1, Bitset(q));
  feasible[last_cp] = leaf.checkpoint_sets.back();
  for (int t = last_cp - 1; t >= 0; --t) {
    feasible[t] = f.preimage_of(feasible[t + 1]);
    if (cp_at[t] >= 0) feasible[t] &= leaf.checkpoint_sets[cp_at[t]];
  }

  std::vector<std::int32_t> seg;
  seg.reserve(total_time + 1);
  int cur = feasible[0].first();
  if (cur < 0)
    throw CertificateError("separated family: leaf " + leaf.path +
                           " has no feasible orbit");
  seg.push_back(std::int32_t(cur));
  for (int t = 1; t <= total_time; ++t) {
    int next = -1;
    if (t <= last_cp) {
      for (auto cand : f.image(cur))
        if (feasible[t].test(cand)) {
          next = cand;
          break;
        }
    } else {
      next = f.image(cur).front();  // free run past the last checkpoint
    }
    if (next < 0)
      throw CertificateError("separated family: leaf " + leaf.path +
                             " lost feasibility at step " + std::to_string(t));
    seg.push_back(std::int32_t(next));
    cur = next;
  }
  return seg;
}

}  // namespace

SeparatedFamilyResult build_separated_family(const MapPtr& f, const Continuum& a0,
                                             const Rat& delta, int n_horizon,
                                             int m) {
  if (f->space() != a0.space())
    throw std::invalid_argument("separated family: continuum from a different space");
  if (!(delta > Rat(0)))
    throw std::invalid_argument("separated family: delta must be positive");
  if (n_horizon < 1)
    throw std::invalid_argument("separated family: horizon must be >= 1");
  if (m < 0) throw std::invalid_argument("separated family: negative depth");
  Rat d0 = diameter(a0.set());
  if (!(d0 > Rat(delta.num(), delta.den() * 10)) || !(d0 < delta))
    throw std::invalid_argument(
        "separated family: seed diameter must lie strictly between delta/10 and delta");

  std::vector<TreeLeaf> leaves;
  bool overrun = false;
  int max_steps = 0;
  build_tree(f, a0.set().to_bitset(), 0, delta, n_horizon, m, 0, "", {}, {}, {},
             leaves, overrun, max_steps);

  int total_time = 0;
  for (const auto& leaf : leaves)
    total_time = std::max(total_time, leaf.checkpoint_times.back());

  OrbitSet segments(f, total_time + 1, std::nullopt);
  for (const auto& leaf : leaves) segments.push(extract_segment(*f, leaf, total_time));
  segments.set_exhaustive(false);  // a selected family, not an enumeration

  SeparatedFamilyCertificate cert;
  cert.required_separation = Rat(delta.num(), delta.den() * 8);
  cert.horizon = n_horizon;
  cert.horizon_overrun = overrun;
  cert.max_steps_used = max_steps;
  for (const auto& leaf : leaves)
    cert.leaves.push_back({leaf.path, leaf.checkpoint_times, leaf.step_counts});

  // Direct re-verification of the pairwise separation on the emitted segments.
  const MetricSpace& X = *f->space();
  if (segments.size() < 2) {
    cert.min_pairwise_separation = Rat(0);
    cert.separation_verified = true;  // a single segment is trivially separated
  } else {
    long long min_sep = X.diameter_num();
    for (std::size_t i = 0; i < segments.size(); ++i)
      for (std::size_t j = i + 1; j < segments.size(); ++j)
        min_sep = std::min(min_sep, segment_distance_num(X, segments.segment(i),
                                                         segments.segment(j)));
    cert.min_pairwise_separation = Rat(min_sep, X.den());
    cert.separation_verified =
        (__int128)min_sep * cert.required_separation.den() >
        (__int128)cert.required_separation.num() * X.den();
  }

  return SeparatedFamilyResult{std::move(segments), std::move(cert)};
}

}  // namespace svd
