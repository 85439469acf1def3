#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "svd/entropy.hpp"
#include "svd/orbit.hpp"

namespace svd {

// Raised when the separated-family construction cannot honor its horizon.
struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CwReport {
  struct Entry {
    std::optional<int> witness_n;  // first n in [1, horizon] with diam > delta
    Rat max_diam_seen;             // over the evaluated iterates (including n = 0)
  };
  Rat delta;
  int horizon = 0;
  std::vector<Entry> results;
  bool pass = false;  // every tested continuum produced a witness
  CwHypothesesReport hypotheses;
};

// Iterates each continuum up to the horizon looking for diameter > delta.
CwReport cw_check(const SetValuedMap& f, const std::vector<Continuum>& family,
                  const Rat& delta, int horizon);

// Smallest N <= n_max such that every family member with diameter >= eps has
// some iterate i <= N (i = 0 allowed) of diameter >= delta / 2; absent if a
// member never gets there.
std::optional<int> uniform_horizon(const SetValuedMap& f, const Rat& delta,
                                   const Rat& eps,
                                   const std::vector<Continuum>& family,
                                   int n_max);

// Two connected subsets of A grown from a far-apart seed pair, each stopped
// at the first accretion step of diameter >= c/8. Postcondition: diameters in
// [c/8, c/8 + 2h] and Hausdorff distance > c/8 (verified, not assumed).
std::pair<Continuum, Continuum> split_continuum(const Continuum& a, const Rat& c);

// All arcs (circle) or geodesic squares (torus) at the resolution floor:
// the smallest shapes whose diameter reaches min_diam, at every position.
// Every connected set with diameter >= min_diam contains one of these.
std::vector<Continuum> minimal_continuum_family(const SpacePtr& space,
                                                const Rat& min_diam);

// All arcs with at least min_points points (circle), or all k x k geodesic
// squares with k >= min_side (torus).
std::vector<Continuum> all_arc_family(const SpacePtr& space, int min_points);

// Arcs with diameter <= max_diam and at least two points (circle only).
std::vector<Continuum> small_arc_family(const SpacePtr& space, const Rat& max_diam);

struct SeparatedFamilyCertificate {
  struct Leaf {
    std::string path;                // e.g. "1.2.1.1.2"
    std::vector<int> checkpoint_times;
    std::vector<int> step_counts;    // l at each level of the leaf's chain
  };
  std::vector<Leaf> leaves;
  Rat required_separation;   // delta / 8
  Rat min_pairwise_separation;
  bool separation_verified = false;
  bool horizon_overrun = false;  // some node needed more than N steps
  int horizon = 0;
  int max_steps_used = 0;
};

struct SeparatedFamilyResult {
  OrbitSet segments;
  SeparatedFamilyCertificate certificate;
};

// Binary tree of depth m: each node is iterated until its diameter exceeds
// delta and then split; one orbit segment is threaded through each leaf's
// chain of continua and the pairwise separation > delta/8 is re-verified
// directly on the emitted segments.
//
// N certifies reaching delta/2 from diameter >= delta/10, which does not in
// general bound the first iterate exceeding delta itself; nodes may search up
// to 2N + 1 steps, recording an overrun in the certificate, and only a node
// that never exceeds delta within that window raises CertificateError.
SeparatedFamilyResult build_separated_family(const MapPtr& f, const Continuum& a0,
                                             const Rat& delta, int n_horizon,
                                             int m);

}  // namespace svd
