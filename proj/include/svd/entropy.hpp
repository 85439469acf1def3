#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "svd/orbit.hpp"

namespace svd {

enum class PackMode { greedy, exact };

// Raised when an exact search exhausts its node budget. Exact mode either
// returns a true optimum or refuses; it never degrades to a bound silently.
struct SolverBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Outcome of a packing/covering computation. Witnesses index into the scanned
// universe (segments of an OrbitSet, or points of the space). Exact mode is
// only meaningful, and only permitted, on exhaustive input; greedy gives a
// certified one-sided bound (lower for separated, upper for spanning).
struct PackingResult {
  std::vector<std::int32_t> witnesses;
  PackMode mode = PackMode::greedy;
  bool exhaustive_input = true;
  std::size_t cardinality() const { return witnesses.size(); }
};

// Separated families of orbit segments under the sup metric, strict > eps.
// greedy: scan in enumeration order keeping maximal; exact: branch-and-bound
// maximum (requires exhaustive input).
PackingResult pack_separated_segments(const OrbitSet& s, const Rat& eps,
                                      PackMode mode);

// Spanning families of orbit segments (closed balls, <= eps). Covering a
// capped enumeration certifies nothing, so exhaustive input is required for
// both modes.
PackingResult cover_spanning_segments(const OrbitSet& s, const Rat& eps,
                                      PackMode mode);

// Point packings/coverings under the orbit semimetric d_n. The full point set
// is always an exhaustive universe, so exact mode is always available.
PackingResult pack_separated_points(const SetValuedMap& f, int n, const Rat& eps,
                                    PackMode mode);
PackingResult cover_spanning_points(const SetValuedMap& f, int n, const Rat& eps,
                                    PackMode mode);

// Same, over a precomputed d_n matrix (numerators over space.den()).
PackingResult pack_separated_points_dn(const MetricSpace& space,
                                       const std::vector<long long>& dn,
                                       const Rat& eps, PackMode mode);
PackingResult cover_spanning_points_dn(const MetricSpace& space,
                                       const std::vector<long long>& dn,
                                       const Rat& eps, PackMode mode);

// Direct pairwise recomputation of the defining conditions; packing results
// are never trusted without these.
bool verify_separated_segments(const OrbitSet& s,
                               const std::vector<std::int32_t>& witnesses,
                               const Rat& eps);
bool verify_spanning_segments(const OrbitSet& s,
                              const std::vector<std::int32_t>& witnesses,
                              const Rat& eps);
bool verify_separated_points_dn(const MetricSpace& space,
                                const std::vector<long long>& dn,
                                const std::vector<std::int32_t>& witnesses,
                                const Rat& eps);
bool verify_spanning_points_dn(const MetricSpace& space,
                               const std::vector<long long>& dn,
                               const std::vector<std::int32_t>& witnesses,
                               const Rat& eps);

// Least-squares slope of log(count) against n. Needs at least two samples.
double fit_growth_rate(const std::vector<std::pair<int, std::size_t>>& samples);

// Last-interval ratio estimate, emitted alongside the fitted rate.
double last_ratio_rate(const std::vector<std::pair<int, std::size_t>>& samples);

// Count series at one epsilon with its fitted per-step log growth.
struct EntropyCurve {
  struct Sample {
    int n;
    std::size_t count;
    PackMode mode;
    bool exhaustive;
  };
  Rat epsilon;
  std::vector<Sample> samples;
  double rate = 0.0;
};

EntropyCurve make_curve(const Rat& epsilon, std::vector<EntropyCurve::Sample> samples);

}  // namespace svd
