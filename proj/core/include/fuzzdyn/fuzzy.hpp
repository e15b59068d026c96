#pragma once

#include <utility>
#include <vector>

#include "fuzzdyn/compacta.hpp"

namespace fuzzdyn {

// A fuzzy set u: X -> [0,1] taking finitely many values, stored as its
// alpha-cut chain: levels 0 = a_0 < a_1 < ... < a_n = 1 together with
// compacta C_1 >= C_2 >= ... >= C_n, where the cut at alpha is C_i for
// alpha in (a_{i-1}, a_i] and the closed support is C_1.
//
// Construction validates the chain (normality, nesting, level ordering)
// and canonicalizes by merging adjacent equal cuts, so equal values have
// equal representations.
class StepFuzzySet {
 public:
  StepFuzzySet(GroundSpace space, std::vector<Rat> levels, std::vector<Compactum> cuts);

  // The crisp set K as a fuzzy set: value 1 on K, 0 elsewhere.
  static StepFuzzySet characteristic(const Compactum& k);

  const GroundSpace& space() const { return space_; }
  const std::vector<Rat>& levels() const { return levels_; }
  const std::vector<Compactum>& cuts() const { return cuts_; }
  int pieces() const { return static_cast<int>(cuts_.size()); }

  Rat membership(const Point& x) const;
  const Compactum& alpha_cut(const Rat& alpha) const;
  // Limit of the cuts from above: the next cut down at a jump level, the
  // piece's own cut elsewhere. Undefined at 1.
  const Compactum& right_limit_cut(const Rat& alpha) const;
  const Compactum& support() const { return cuts_.front(); }

  bool operator==(const StepFuzzySet& o) const;
  bool operator!=(const StepFuzzySet& o) const { return !(*this == o); }

 private:
  GroundSpace space_;
  std::vector<Rat> levels_;
  std::vector<Compactum> cuts_;
};

// Increasing piecewise-linear homeomorphism of [0,1], given by its knots
// (s_i, t_i); both coordinate sequences are strictly increasing and the
// endpoints are fixed.
class TimeWarp {
 public:
  explicit TimeWarp(std::vector<std::pair<Rat, Rat>> knots);
  static TimeWarp identity();

  const std::vector<std::pair<Rat, Rat>>& knots() const { return knots_; }
  Rat operator()(const Rat& x) const;
  TimeWarp inverse() const;

  bool operator==(const TimeWarp& o) const { return knots_ == o.knots_; }

 private:
  std::vector<std::pair<Rat, Rat>> knots_;
};

// sup |t(a) - a|, attained at a knot.
Rat warp_norm(const TimeWarp& t);

// The level-reparametrized set tv with (tv)(x) = t(v(x)): levels are
// mapped through t, cuts are untouched.
StepFuzzySet warp_apply(const TimeWarp& t, const StepFuzzySet& v);

// Lift of the point map to fuzzy sets: each cut is replaced by its
// forward image, levels are unchanged.
StepFuzzySet zadeh_extend(const DynMap& f, const StepFuzzySet& u);

// Vertical segment {base} x [0, height].
struct SendographSegment {
  Point base;
  Rat height;
};

bool operator==(const SendographSegment& a, const SendographSegment& b);

// One segment per support point, of height u(x).
std::vector<SendographSegment> sendograph(const StepFuzzySet& u);

// Sorts by base and merges duplicate bases to their maximum height, so
// two lists describe the same union of segments iff they compare equal.
std::vector<SendographSegment> normalize_segments(std::vector<SendographSegment> segs);

// The jump levels of u, 0 and 1 included. Between consecutive entries the
// cut chain is constant, so every (right limit, next cut) pair lies in
// the entourage of any positive radius; that is re-checked before
// returning.
std::vector<Rat> level_partition(const StepFuzzySet& u, const Rat& eps);

// Sorted union of two level vectors; a common refinement.
std::vector<Rat> merge_partitions(const std::vector<Rat>& p, const std::vector<Rat>& q);

}  // namespace fuzzdyn
