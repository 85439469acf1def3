#include "svd/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace svd {

namespace {

constexpr int kExactUniverseLimit = 20000;

// D(i,j) <= eps, tested coordinate-wise with early exit on a far coordinate.
struct SegmentCloseness {
  const OrbitSet& s;
  const MetricSpace& x;
  __int128 rhs;  // eps.num * den
  long long mul;  // eps.den

  SegmentCloseness(const OrbitSet& set, const Rat& eps)
      : s(set), x(*set.source()->space()), rhs((__int128)eps.num() * x.den()),
        mul(eps.den()) {}

  bool close(std::size_t i, std::size_t j) const {
    auto a = s.segment(i), b = s.segment(j);
    for (std::size_t t = 0; t < a.size(); ++t)
      if ((__int128)x.dist_num(a[t], b[t]) * mul > rhs) return false;
    return true;
  }
};

struct PointCloseness {
  const std::vector<long long>& dn;
  int q;
  __int128 rhs;
  long long mul;

  PointCloseness(const MetricSpace& space, const std::vector<long long>& matrix,
                 const Rat& eps)
      : dn(matrix), q(space.size()), rhs((__int128)eps.num() * space.den()),
        mul(eps.den()) {}

  bool close(std::size_t i, std::size_t j) const {
    return (__int128)dn[i * q + j] * mul <= rhs;
  }
};

template <typename Closeness>
std::vector<std::int32_t> greedy_separated(std::size_t universe,
                                           const Closeness& cl) {
  std::vector<std::int32_t> kept;
  for (std::size_t i = 0; i < universe; ++i) {
    bool ok = true;
    for (auto k : kept)
      if (cl.close(i, std::size_t(k))) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(std::int32_t(i));
  }
  return kept;
}

template <typename Closeness>
std::vector<Bitset> build_closeness_graph(std::size_t universe, const Closeness& cl,
                                          bool include_self) {
  if (universe > kExactUniverseLimit)
    throw std::invalid_argument("exact mode: universe too large");
  std::vector<Bitset> g(universe, Bitset(int(universe)));
  for (std::size_t i = 0; i < universe; ++i) {
    if (include_self) g[i].set(int(i));
    for (std::size_t j = i + 1; j < universe; ++j)
      if (cl.close(i, j)) {
        g[i].set(int(j));
        g[j].set(int(i));
      }
  }
  return g;
}

// Maximum separated family = maximum independent set in the closeness graph.
// Branch and bound with a greedy clique-cover bound; deterministic order.
class MaxSeparatedSolver {
public:
  MaxSeparatedSolver(std::vector<Bitset> conflict, std::vector<std::int32_t> seed)
      : u_(int(conflict.size())), conflict_(std::move(conflict)),
        best_(std::move(seed)) {}

  std::vector<std::int32_t> solve() {
    improve_incumbent();
    Bitset cand(u_);
    for (int i = 0; i < u_; ++i) cand.set(i);
    rec(cand);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

private:
  // Deterministic (1,2)-swap pass over the greedy seed: drop one member to
  // admit a non-member with a single conflict, then re-extend greedily.
  void improve_incumbent() {
    bool improved = true;
    while (improved) {
      improved = false;
      Bitset in(u_);
      for (auto v : best_) in.set(v);
      for (int u = 0; u < u_ && !improved; ++u) {
        if (in.test(u)) continue;
        if (conflict_[u].count_and(in) != 1) continue;
        Bitset trial = in;
        Bitset blocker = conflict_[u];
        blocker &= in;
        trial.and_not(blocker);
        trial.set(u);
        // greedy re-extension in index order
        for (int w = 0; w < u_; ++w)
          if (!trial.test(w) && !conflict_[w].intersects(trial)) trial.set(w);
        if (trial.count() > int(best_.size())) {
          best_ = trial.to_indices();
          improved = true;
        }
      }
    }
  }

  // Greedy clique cover of the candidates, stopped at `cap` cliques: once the
  // bound cannot prune there is no point finishing the count.
  int clique_cover_bound(const Bitset& cand, int cap) const {
    std::vector<Bitset> commons;
    for (int v = cand.first(); v >= 0; v = cand.next(v + 1)) {
      bool placed = false;
      for (auto& c : commons)
        if (c.test(v)) {
          c &= conflict_[v];
          placed = true;
          break;
        }
      if (!placed) {
        commons.push_back(conflict_[v]);
        if (int(commons.size()) >= cap) return cap;
      }
    }
    return int(commons.size());
  }

  void rec(Bitset cand) {
    int v = cand.first();
    if (v < 0) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    int cap = int(best_.size()) - int(current_.size()) + 1;
    if (cap > 0 && clique_cover_bound(cand, cap) < cap) return;

    Bitset inc = cand;
    inc.and_not(conflict_[v]);
    inc.reset(v);
    current_.push_back(std::int32_t(v));
    rec(std::move(inc));
    current_.pop_back();

    cand.reset(v);
    rec(std::move(cand));
  }

  int u_;
  std::vector<Bitset> conflict_;
  std::vector<std::int32_t> best_;
  std::vector<std::int32_t> current_;
};

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& w) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : w) {
      h ^= std::size_t(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Minimum spanning family = minimum cover by closed eps-balls. Closeness is
// symmetric, so the coverers of an element are exactly its own ball. Branch
// and bound on the least-coverable uncovered element, with a fractional
// bound, a ball-disjointness packing bound, a partition bound, candidate
// dominance, and a transposition table keyed on the uncovered set.
//
// The partition bound uses any grouping of the universe: covering the
// uncovered cells of group j takes at least ceil(cnt_j / tau_j) balls that
// touch j (tau_j = the largest trace any ball leaves on j), and one ball
// touches at most maxTouch groups, so sum_j ceil(cnt_j / tau_j) <= B *
// maxTouch for any cover of size B. Segment universes group naturally by
// their tail coordinates, which is where this bites: sup-metric balls leave
// short traces on each tail fiber.
class MinCoverSolver {
public:
  MinCoverSolver(std::vector<Bitset> balls, std::vector<std::int32_t> seed,
                 const std::vector<std::vector<int>>& partitions = {})
      : u_(int(balls.size())), ball_(std::move(balls)), best_(std::move(seed)) {
    cocover_.assign(u_, Bitset(u_));
    for (int i = 0; i < u_; ++i)
      for (int j = 0; j < u_; ++j)
        if (ball_[i].intersects(ball_[j])) cocover_[i].set(j);
    ball_size_.resize(u_);
    for (int i = 0; i < u_; ++i) ball_size_[i] = ball_[i].count();

    for (const auto& group_of : partitions) {
      Partition part;
      part.group_of = group_of;
      int groups = 1 + *std::max_element(group_of.begin(), group_of.end());
      part.tau.assign(groups, 1);
      part.max_touch = 1;
      part.pos.assign(u_, 0);
      std::vector<int> group_size(groups, 0);
      for (int e = 0; e < u_; ++e) part.pos[e] = group_size[group_of[e]]++;

      bool small_groups = true;
      long long table_cells = 0;
      for (int g = 0; g < groups; ++g) {
        if (group_size[g] > 16) small_groups = false;
        else table_cells += 1ll << group_size[g];
      }
      bool with_tables = small_groups && table_cells <= (1ll << 23);

      std::vector<std::vector<std::uint32_t>> traces(groups);
      std::vector<int> per_group(groups);
      std::vector<std::uint32_t> mask(groups);
      for (int c = 0; c < u_; ++c) {
        std::fill(per_group.begin(), per_group.end(), 0);
        std::fill(mask.begin(), mask.end(), 0);
        ball_[c].for_each([&](int e) {
          int g = group_of[e];
          per_group[g]++;
          if (with_tables) mask[g] |= std::uint32_t(1) << part.pos[e];
        });
        int touched = 0;
        for (int g = 0; g < groups; ++g) {
          if (!per_group[g]) continue;
          ++touched;
          part.tau[g] = std::max(part.tau[g], per_group[g]);
          if (with_tables) traces[g].push_back(mask[g]);
        }
        part.max_touch = std::max(part.max_touch, touched);
      }

      // Exact min-trace tables per small group: the count bound rounds runs
      // together, while scattered residuals genuinely need one ball per run.
      if (with_tables) {
        part.table.assign(groups, {});
        for (int g = 0; g < groups; ++g) {
          auto& tr = traces[g];
          std::sort(tr.begin(), tr.end());
          tr.erase(std::unique(tr.begin(), tr.end()), tr.end());
          auto& tab = part.table[g];
          tab.assign(std::size_t(1) << group_size[g], 0);
          for (std::uint32_t pat = 1; pat < tab.size(); ++pat) {
            std::uint32_t low = pat & (~pat + 1);
            int best = group_size[g] + 1;
            for (std::uint32_t t : tr)
              if (t & low) best = std::min(best, 1 + int(tab[pat & ~t]));
            tab[pat] = std::uint8_t(best);
          }
        }
      }
      part.count.assign(groups, 0);
      part.pattern.assign(groups, 0);
      partitions_.push_back(std::move(part));
    }
  }

  std::vector<std::int32_t> solve() {
    Bitset unc(u_);
    for (int i = 0; i < u_; ++i) unc.set(i);
    improve_incumbent();
    root_lower_ = root_bound(unc);
    if (int(best_.size()) > root_lower_) rec(unc, Bitset(u_));
    std::sort(best_.begin(), best_.end());
    return best_;
  }

private:
  // Deterministic strengthening of the greedy seed: drop redundant centers,
  // then try replacing two centers by one and three by two, to fixpoint.
  void improve_incumbent() {
    auto union_except = [&](const std::vector<std::int32_t>& s, std::size_t skip1,
                            std::size_t skip2, std::size_t skip3) {
      Bitset covered(u_);
      for (std::size_t k = 0; k < s.size(); ++k)
        if (k != skip1 && k != skip2 && k != skip3) covered |= ball_[s[k]];
      return covered;
    };
    auto find_single_cover = [&](const Bitset& need) -> int {
      int e = need.first();
      if (e < 0) return -1;
      int found = -1;
      ball_[e].for_each([&](int c) {
        if (found < 0 && need.subset_of(ball_[c])) found = c;
      });
      return found;
    };
    const std::size_t none = std::size_t(-1);
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t i = 0; i < best_.size() && !improved; ++i) {
        Bitset covered = union_except(best_, i, none, none);
        Bitset need(u_);
        for (int e = 0; e < u_; ++e)
          if (!covered.test(e)) need.set(e);
        if (need.none()) {
          best_.erase(best_.begin() + i);
          improved = true;
        }
      }
      if (improved) continue;
      for (std::size_t i = 0; i < best_.size() && !improved; ++i)
        for (std::size_t j = i + 1; j < best_.size() && !improved; ++j) {
          Bitset covered = union_except(best_, i, j, none);
          Bitset need(u_);
          for (int e = 0; e < u_; ++e)
            if (!covered.test(e)) need.set(e);
          int c = find_single_cover(need);
          if (c >= 0) {
            best_.erase(best_.begin() + j);
            best_.erase(best_.begin() + i);
            best_.push_back(std::int32_t(c));
            improved = true;
          }
        }
      if (improved) continue;
      for (std::size_t i = 0; i < best_.size() && !improved; ++i)
        for (std::size_t j = i + 1; j < best_.size() && !improved; ++j)
          for (std::size_t k = j + 1; k < best_.size() && !improved; ++k) {
            Bitset covered = union_except(best_, i, j, k);
            Bitset need(u_);
            for (int e = 0; e < u_; ++e)
              if (!covered.test(e)) need.set(e);
            int e0 = need.first();
            if (e0 < 0) continue;
            bool done = false;
            ball_[e0].for_each([&](int c1) {
              if (done) return;
              Bitset rest = need;
              rest.and_not(ball_[c1]);
              int c2 = rest.none() ? c1 : find_single_cover(rest);
              if (c2 >= 0) {
                best_.erase(best_.begin() + k);
                best_.erase(best_.begin() + j);
                best_.erase(best_.begin() + i);
                best_.push_back(std::int32_t(c1));
                if (c2 != c1) best_.push_back(std::int32_t(c2));
                done = true;
              }
            });
            improved = done;
          }
    }
  }

  // Root floor combining every partition with exact per-group covering
  // numbers, each computed by a recursive solve of the group's trace
  // instance. Once the incumbent matches this floor it is optimal and the
  // search stops.
  int root_bound(const Bitset& unc) {
    int bound = std::max(
        {packing_bound(unc), fractional_bound(unc, unc.count(), Bitset(u_)),
         partition_bound(unc)});
    for (auto& part : partitions_) {
      int groups = int(part.count.size());
      if (groups <= 1) continue;
      long long touches = 0;
      bool usable = true;
      for (int g = 0; g < groups && usable; ++g) {
        // Build the trace instance of group g.
        std::vector<int> cells;
        for (int e = 0; e < u_; ++e)
          if (part.group_of[e] == g) cells.push_back(e);
        if (cells.empty()) continue;
        if (cells.size() > 80) {
          usable = false;
          break;
        }
        std::vector<int> cell_index(u_, -1);
        for (std::size_t idx = 0; idx < cells.size(); ++idx)
          cell_index[cells[idx]] = int(idx);
        std::vector<Bitset> traces;
        std::set<std::vector<std::uint64_t>> seen;
        for (int c = 0; c < u_; ++c) {
          Bitset tr(int(cells.size()));
          bool any = false;
          ball_[c].for_each([&](int e) {
            if (cell_index[e] >= 0) {
              tr.set(cell_index[e]);
              any = true;
            }
          });
          if (any && seen.insert(tr.words()).second) traces.push_back(std::move(tr));
        }
        if (auto exact = exact_trace_cover(int(cells.size()), traces)) {
          touches += *exact;
        } else {
          // Mini solve ran out: fall back to the sound counting estimate.
          int tau = 1;
          for (const auto& tr : traces) tau = std::max(tau, tr.count());
          touches += (int(cells.size()) + tau - 1) / tau;
        }
      }
      if (usable)
        bound = std::max(bound, int((touches + part.max_touch - 1) / part.max_touch));
    }
    return bound;
  }

  // Small exact cover of a group by ball traces; first-uncovered branching
  // with a fractional prune. Returns nothing if its node budget runs out.
  static std::optional<int> exact_trace_cover(int cells,
                                              const std::vector<Bitset>& traces) {
    int tau = 1;
    for (const auto& tr : traces) tau = std::max(tau, tr.count());
    // greedy seed
    Bitset all(cells);
    for (int i = 0; i < cells; ++i) all.set(i);
    int best = 0;
    {
      Bitset unc = all;
      while (unc.any()) {
        int bi = -1, bg = -1;
        for (std::size_t t = 0; t < traces.size(); ++t) {
          int g = traces[t].count_and(unc);
          if (g > bg) {
            bg = g;
            bi = int(t);
          }
        }
        unc.and_not(traces[bi]);
        ++best;
      }
    }
    long long nodes = 0;
    const long long budget = 2000000;
    bool out_of_budget = false;
    auto rec2 = [&](auto&& self, const Bitset& unc, int used) -> void {
      if (out_of_budget) return;
      if (++nodes > budget) {
        out_of_budget = true;
        return;
      }
      int remaining = unc.count();
      if (!remaining) {
        best = std::min(best, used);
        return;
      }
      if (used + (remaining + tau - 1) / tau >= best) return;
      int e = unc.first();
      for (std::size_t t = 0; t < traces.size(); ++t) {
        if (!traces[t].test(e)) continue;
        Bitset next = unc;
        next.and_not(traces[t]);
        self(self, next, used + 1);
      }
    };
    rec2(rec2, all, 0);
    if (out_of_budget) return std::nullopt;
    return best;
  }
  int packing_bound(const Bitset& unc) const {
    int cnt = 0;
    Bitset rem = unc;
    int v;
    while ((v = rem.first()) >= 0) {
      ++cnt;
      rem.and_not(cocover_[v]);
      rem.reset(v);
    }
    return cnt;
  }

  int fractional_bound(const Bitset& unc, int unc_count, const Bitset& banned) const {
    int widest = 1;
    for (int c = 0; c < u_; ++c)
      if (!banned.test(c)) widest = std::max(widest, ball_[c].count_and(unc));
    return (unc_count + widest - 1) / widest;
  }

  int partition_bound(const Bitset& unc) {
    int bound = 0;
    for (auto& part : partitions_) {
      long long touches = 0;
      if (!part.table.empty()) {
        std::fill(part.pattern.begin(), part.pattern.end(), 0);
        unc.for_each([&](int e) {
          part.pattern[part.group_of[e]] |= std::uint32_t(1) << part.pos[e];
        });
        for (std::size_t g = 0; g < part.pattern.size(); ++g)
          if (part.pattern[g]) {
            touches += part.table[g][part.pattern[g]];
            part.pattern[g] = 0;
          }
      } else {
        std::fill(part.count.begin(), part.count.end(), 0);
        unc.for_each([&](int e) { part.count[part.group_of[e]]++; });
        for (std::size_t g = 0; g < part.count.size(); ++g)
          if (part.count[g])
            touches += (part.count[g] + part.tau[g] - 1) / part.tau[g];
      }
      bound = std::max(bound, int((touches + part.max_touch - 1) / part.max_touch));
    }
    return bound;
  }

  // Branch on the coverers of the least-coverable uncovered element. Branch j
  // commits the j-th candidate and bans candidates 1..j-1 in the whole
  // subtree: every cover contains a first-listed coverer of that element, so
  // the branches partition the solution space and the ban shrinks it fast.
  void rec(const Bitset& unc, const Bitset& banned) {
    if (stop_) return;
    if (++nodes_ > kNodeBudget)
      throw SolverBudgetError(
          "exact cover: optimality proof exhausted the node budget on this "
          "instance (universe " + std::to_string(u_) + ", incumbent " +
          std::to_string(best_.size()) + ")");
    int remaining = unc.count();
    if (remaining == 0) {
      if (current_.size() < best_.size()) {
        best_ = current_;
        if (int(best_.size()) <= root_lower_) stop_ = true;
      }
      return;
    }
    int lb = std::max({packing_bound(unc), fractional_bound(unc, remaining, banned),
                       partition_bound(unc)});
    if (current_.size() + lb >= best_.size()) return;

    std::vector<std::uint64_t> key = unc.words();
    key.insert(key.end(), banned.words().begin(), banned.words().end());
    if (memo_.size() < kMemoLimit) {
      auto [it, inserted] = memo_.try_emplace(std::move(key), int(current_.size()));
      if (!inserted) {
        if (it->second <= int(current_.size())) return;
        it->second = int(current_.size());
      }
    } else {
      auto it = memo_.find(key);
      if (it != memo_.end() && it->second <= int(current_.size())) return;
    }

    // Uncovered element with the fewest allowed coverers.
    int e = -1, fewest = u_ + 1;
    unc.for_each([&](int v) {
      int allowed = ball_[v].count() - ball_[v].count_and(banned);
      if (allowed < fewest) {
        fewest = allowed;
        e = v;
      }
    });
    if (fewest == 0) return;  // no allowed ball covers e in this subtree

    struct Cand {
      int c;
      int gain;
      Bitset covers;
    };
    std::vector<Cand> cands;
    ball_[e].for_each([&](int c) {
      if (banned.test(c)) return;
      Bitset cov = ball_[c];
      cov &= unc;
      cands.push_back({c, cov.count(), std::move(cov)});
    });
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.gain != b.gain) return a.gain > b.gain;
      return a.c < b.c;
    });
    // Drop candidates whose residual coverage sits inside an earlier one's;
    // any cover using the dropped one maps to a same-size cover that survives.
    std::vector<int> keep;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      bool dominated = false;
      for (int k : keep)
        if (cands[i].covers.subset_of(cands[k].covers)) {
          dominated = true;
          break;
        }
      if (!dominated) keep.push_back(int(i));
    }

    Bitset child_banned = banned;
    for (int k : keep) {
      if (stop_) return;
      Bitset next = unc;
      next.and_not(cands[k].covers);
      current_.push_back(std::int32_t(cands[k].c));
      rec(next, child_banned);
      current_.pop_back();
      child_banned.set(cands[k].c);
    }
  }

  static constexpr std::size_t kMemoLimit = 1u << 22;
  static constexpr long long kNodeBudget = 2000000;

  struct Partition {
    std::vector<int> group_of;
    std::vector<int> pos;  // bit position of each element inside its group
    std::vector<int> tau;
    std::vector<int> count;
    std::vector<std::uint32_t> pattern;               // per-node scratch
    std::vector<std::vector<std::uint8_t>> table;     // min traces per pattern
    int max_touch = 1;
  };

  long long nodes_ = 0;
  int root_lower_ = 0;
  bool stop_ = false;
  int u_;
  std::vector<Bitset> ball_;
  std::vector<Bitset> cocover_;
  std::vector<int> ball_size_;
  std::vector<Partition> partitions_;
  std::vector<std::int32_t> best_;
  std::vector<std::int32_t> current_;
  std::unordered_map<std::vector<std::uint64_t>, int, WordsHash> memo_;
};

template <typename Closeness>
std::vector<std::int32_t> greedy_cover(const std::vector<Bitset>& balls) {
  int u = int(balls.size());
  Bitset unc(u);
  for (int i = 0; i < u; ++i) unc.set(i);
  std::vector<std::int32_t> chosen;
  while (unc.any()) {
    int bestc = -1, bestgain = -1;
    for (int c = 0; c < u; ++c) {
      int gain = balls[c].count_and(unc);
      if (gain > bestgain) {
        bestgain = gain;
        bestc = c;
      }
    }
    chosen.push_back(std::int32_t(bestc));
    unc.and_not(balls[bestc]);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

template <typename Closeness>
PackingResult separated_impl(std::size_t universe, const Closeness& cl,
                             PackMode mode, bool exhaustive) {
  PackingResult r;
  r.mode = mode;
  r.exhaustive_input = exhaustive;
  if (mode == PackMode::greedy) {
    r.witnesses = greedy_separated(universe, cl);
    return r;
  }
  if (!exhaustive)
    throw std::invalid_argument("exact separated packing needs exhaustive input");
  auto conflict = build_closeness_graph(universe, cl, /*include_self=*/false);
  // The streaming greedy family seeds the search as an incumbent.
  MaxSeparatedSolver solver(std::move(conflict), greedy_separated(universe, cl));
  r.witnesses = solver.solve();
  return r;
}

template <typename Closeness>
PackingResult spanning_impl(std::size_t universe, const Closeness& cl,
                            PackMode mode, bool exhaustive,
                            const std::vector<std::vector<int>>& partitions = {}) {
  if (!exhaustive)
    throw std::invalid_argument("spanning cover needs exhaustive input");
  PackingResult r;
  r.mode = mode;
  r.exhaustive_input = exhaustive;
  auto balls = build_closeness_graph(universe, cl, /*include_self=*/true);
  auto greedy = greedy_cover<Closeness>(balls);
  if (mode == PackMode::greedy) {
    r.witnesses = std::move(greedy);
    return r;
  }
  MinCoverSolver solver(std::move(balls), std::move(greedy), partitions);
  r.witnesses = solver.solve();
  return r;
}

// Group segments that agree on every coordinate except the skipped one; the
// partition bound works off these fibers.
std::vector<int> segment_fibers(const OrbitSet& s, int skip_coord) {
  std::map<std::vector<std::int32_t>, int> ids;
  std::vector<int> group_of(s.size());
  std::vector<std::int32_t> key;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto seg = s.segment(i);
    key.clear();
    for (int t = 0; t < int(seg.size()); ++t)
      if (t != skip_coord) key.push_back(seg[t]);
    auto [it, inserted] = ids.try_emplace(key, int(ids.size()));
    group_of[i] = it->second;
  }
  return group_of;
}

// Group segments by the value of one coordinate (layers).
std::vector<int> segment_layers(const OrbitSet& s, int coord) {
  std::map<std::int32_t, int> ids;
  std::vector<int> group_of(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto [it, inserted] = ids.try_emplace(s.segment(i)[coord], int(ids.size()));
    group_of[i] = it->second;
  }
  return group_of;
}

void require_positive_eps(const Rat& eps) {
  if (!(eps > Rat(0))) throw std::invalid_argument("eps must be positive");
}

}  // namespace

PackingResult pack_separated_segments(const OrbitSet& s, const Rat& eps,
                                      PackMode mode) {
  require_positive_eps(eps);
  SegmentCloseness cl(s, eps);
  return separated_impl(s.size(), cl, mode, s.exhaustive());
}

PackingResult cover_spanning_segments(const OrbitSet& s, const Rat& eps,
                                      PackMode mode) {
  require_positive_eps(eps);
  SegmentCloseness cl(s, eps);
  std::vector<std::vector<int>> partitions;
  if (mode == PackMode::exact && s.length() > 1) {
    partitions.push_back(segment_fibers(s, 0));
    partitions.push_back(segment_fibers(s, s.length() - 1));
    partitions.push_back(segment_layers(s, 0));
    partitions.push_back(segment_layers(s, s.length() - 1));
  }
  return spanning_impl(s.size(), cl, mode, s.exhaustive(), partitions);
}

PackingResult pack_separated_points_dn(const MetricSpace& space,
                                       const std::vector<long long>& dn,
                                       const Rat& eps, PackMode mode) {
  require_positive_eps(eps);
  PointCloseness cl(space, dn, eps);
  return separated_impl(std::size_t(space.size()), cl, mode, true);
}

PackingResult cover_spanning_points_dn(const MetricSpace& space,
                                       const std::vector<long long>& dn,
                                       const Rat& eps, PackMode mode) {
  require_positive_eps(eps);
  PointCloseness cl(space, dn, eps);
  return spanning_impl(std::size_t(space.size()), cl, mode, true);
}

PackingResult pack_separated_points(const SetValuedMap& f, int n, const Rat& eps,
                                    PackMode mode) {
  auto dn = orbit_semimetric_matrix(f, n);
  return pack_separated_points_dn(*f.space(), dn, eps, mode);
}

PackingResult cover_spanning_points(const SetValuedMap& f, int n, const Rat& eps,
                                    PackMode mode) {
  auto dn = orbit_semimetric_matrix(f, n);
  return cover_spanning_points_dn(*f.space(), dn, eps, mode);
}

bool verify_separated_segments(const OrbitSet& s,
                               const std::vector<std::int32_t>& witnesses,
                               const Rat& eps) {
  SegmentCloseness cl(s, eps);
  for (std::size_t i = 0; i < witnesses.size(); ++i)
    for (std::size_t j = i + 1; j < witnesses.size(); ++j)
      if (cl.close(witnesses[i], witnesses[j])) return false;
  return true;
}

bool verify_spanning_segments(const OrbitSet& s,
                              const std::vector<std::int32_t>& witnesses,
                              const Rat& eps) {
  SegmentCloseness cl(s, eps);
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool covered = false;
    for (auto w : witnesses)
      if (cl.close(i, std::size_t(w))) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

bool verify_separated_points_dn(const MetricSpace& space,
                                const std::vector<long long>& dn,
                                const std::vector<std::int32_t>& witnesses,
                                const Rat& eps) {
  PointCloseness cl(space, dn, eps);
  for (std::size_t i = 0; i < witnesses.size(); ++i)
    for (std::size_t j = i + 1; j < witnesses.size(); ++j)
      if (cl.close(std::size_t(witnesses[i]), std::size_t(witnesses[j])))
        return false;
  return true;
}

bool verify_spanning_points_dn(const MetricSpace& space,
                               const std::vector<long long>& dn,
                               const std::vector<std::int32_t>& witnesses,
                               const Rat& eps) {
  PointCloseness cl(space, dn, eps);
  for (int p = 0; p < space.size(); ++p) {
    bool covered = false;
    for (auto w : witnesses)
      if (cl.close(std::size_t(p), std::size_t(w))) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

double fit_growth_rate(const std::vector<std::pair<int, std::size_t>>& samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("growth rate: need at least two samples");
  double n = double(samples.size());
  double sx = 0, sy = 0;
  for (auto& [x, c] : samples) {
    if (c < 1) throw std::invalid_argument("growth rate: counts must be >= 1");
    sx += x;
    sy += std::log(double(c));
  }
  double mx = sx / n, my = sy / n;
  double num = 0, den = 0;
  for (auto& [x, c] : samples) {
    num += (x - mx) * (std::log(double(c)) - my);
    den += (x - mx) * (x - mx);
  }
  if (den == 0) throw std::invalid_argument("growth rate: degenerate sample range");
  return num / den;
}

double last_ratio_rate(const std::vector<std::pair<int, std::size_t>>& samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("growth rate: need at least two samples");
  auto [n1, c1] = samples[samples.size() - 2];
  auto [n2, c2] = samples[samples.size() - 1];
  if (n2 == n1) throw std::invalid_argument("growth rate: repeated n");
  return (std::log(double(c2)) - std::log(double(c1))) / double(n2 - n1);
}

EntropyCurve make_curve(const Rat& epsilon,
                        std::vector<EntropyCurve::Sample> samples) {
  for (std::size_t i = 0; i + 1 < samples.size(); ++i)
    if (samples[i].n >= samples[i + 1].n)
      throw std::invalid_argument("entropy curve: n must be strictly increasing");
  std::vector<std::pair<int, std::size_t>> pts;
  pts.reserve(samples.size());
  for (auto& s : samples) pts.emplace_back(s.n, s.count);
  EntropyCurve curve;
  curve.epsilon = epsilon;
  curve.samples = std::move(samples);
  curve.rate = fit_growth_rate(pts);
  return curve;
}

}  // namespace svd
