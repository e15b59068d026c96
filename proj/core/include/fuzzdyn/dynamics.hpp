#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fuzzdyn/compacta.hpp"
#include "fuzzdyn/fuzzy.hpp"
#include "fuzzdyn/ground.hpp"
#include "fuzzdyn/rational.hpp"

namespace fuzzdyn {

enum class MetricKind { Infty, Skorokhod, Sendo };

// Distance between two step fuzzy sets in the chosen metric.
Rat fuzzy_distance(MetricKind kind, const StepFuzzySet& a, const StepFuzzySet& b);

// [u, f^(u), ..., f^n-th image of u], length n + 1. pre: n >= 0
std::vector<StepFuzzySet> orbit_fuzzy(const DynMap& f, const StepFuzzySet& u, long n);

// A constructed set w close to the source u whose n-th image lands close to
// the target v, with both distances re-measured after the fact.
struct WitnessCertificate {
  StepFuzzySet w;
  long n = 0;       // >= 1
  Rat d_source;     // level-wise distance from u to w
  Rat d_target;     // level-wise distance from the n-th image of w to v
  std::vector<std::pair<Rat, std::size_t>> per_level_log;  // (level, points placed)
};

// Builds a witness with d_source < eps and d_target < eps for a map with a
// mixing oracle: per level of the merged jump partition, quarter-radius balls
// around the source cut are pulled back through inverse branches onto the
// target cut, and the level sets are assembled as suffix unions so they nest.
// Both bounds are re-verified on the result with the public distance
// functions; failure of that check throws PostCheckError.
WitnessCertificate fuzzy_witness(const DynMap& f, const StepFuzzySet& u, const StepFuzzySet& v,
                                 const Rat& eps);

struct HittingResult {
  bool found = false;
  std::optional<long> n;  // first iterate landing inside the target ball
  Rat achieved_distance;  // the hit distance, or the smallest one observed
  MetricKind metric_kind = MetricKind::Infty;
};

// Randomized search for an iterate of something near u landing near v: trial
// zero iterates u itself, later trials iterate samples from the eps_u-ball
// of u, and the last trial iterates the constructed witness when the map has
// a mixing oracle. Each candidate is verified to lie in the ball before use
// and is iterated up to max_iterate steps with cycle detection. The outcome
// is a pure function of the arguments and the seed.
HittingResult empirical_hitting(const DynMap& f, const StepFuzzySet& u, const Rat& eps_u,
                                const StepFuzzySet& v, const Rat& eps_v, long max_iterate,
                                MetricKind metric_kind, int trials, std::uint64_t seed);

// Open rational intervals U = (u_lo, u_hi) and V = (v_lo, v_hi); on the
// circle U and V are arcs read upward from their left ends.
struct IntervalPair {
  Rat u_lo, u_hi;
  Rat v_lo, v_hi;
};

// One iterate n with the n-th image of every U_i covering its V_i, taken as
// the largest covering time among the U_i. The coverage claim is re-verified
// by exact interval iteration; pre: at least two pairs, all non-empty.
long weak_mixing_check(const DynMap& f, const std::vector<IntervalPair>& pairs);

struct HyperspaceTransfer {
  Compactum a;
  bool source_within = false;  // a lies within eps of the top cut of u
  bool target_within = false;  // the n-th image of a lies within eps of the top cut of v
};

// Reads a fuzzy witness w at the crisp level: a is the support of w, and the
// two flags report entourage containment of a against the top cut of u and
// of its n-th forward image against the top cut of v.
HyperspaceTransfer sendograph_to_hyperspace(const DynMap& f, const StepFuzzySet& u,
                                            const StepFuzzySet& v, const StepFuzzySet& w,
                                            long n, const Rat& eps);

struct SeparationCertificate {
  bool certified = false;  // no iterate of the eps_u-ball of u can reach the eps_v-ball of v
  Rat diameter_gap;        // |diam of top cut of u - diam of top cut of v|
  Rat lower_bound;         // lower bound on the distance from any iterate to v
};

// Impossibility certificate for isometries: an isometry preserves the
// diameter of the top cut, every set within eps_u of u in the level-wise or
// warped metric has top-cut diameter within 2 eps_u of u's, and Hausdorff
// distance is at least half a diameter gap. So a gap above
// 2 eps_u + 2 eps_v certifies that no iterate of the ball can hit. The
// certificate says nothing about the sendograph metric. Throws
// std::invalid_argument unless f is an isometry.
SeparationCertificate isometry_separation_certificate(const DynMap& f, const StepFuzzySet& u,
                                                      const Rat& eps_u, const StepFuzzySet& v,
                                                      const Rat& eps_v);

}  // namespace fuzzdyn
