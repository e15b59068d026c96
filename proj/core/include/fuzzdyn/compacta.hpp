#pragma once

#include <memory>
#include <vector>

#include "fuzzdyn/ground.hpp"

namespace fuzzdyn {

// Non-empty finite point set in one ground space, kept sorted and
// deduplicated. Stands in for a compact subset; finite sets are dense enough
// in the hyperspace for everything this library computes.
class Compactum {
 public:
  Compactum(GroundSpace space, std::vector<Point> points);

  const GroundSpace& space() const { return space_; }
  const std::vector<Point>& points() const { return points_; }
  int size() const { return static_cast<int>(points_.size()); }
  bool contains(const Point& p) const;

  bool operator==(const Compactum& o) const;
  bool operator!=(const Compactum& o) const { return !(*this == o); }

 private:
  GroundSpace space_;
  std::vector<Point> points_;
};

// max over both directed sup-inf distances; zero iff the sets are equal.
Rat hausdorff_distance(const Compactum& a, const Compactum& b);

Rat diameter(const Compactum& a);

Compactum union_of(const Compactum& a, const Compactum& b);

Compactum image_compactum(const DynMap& f, const Compactum& a);

// Reflexive relation on a finite ground space, stored as a boolean matrix.
class Relation {
 public:
  explicit Relation(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n, false) {}

  int size() const { return n_; }
  bool at(int i, int j) const { return bits_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, bool v = true) { bits_[static_cast<std::size_t>(i) * n_ + j] = v; }

  bool contains_diagonal() const;
  bool is_diagonal() const;
  Relation inverse() const;
  Relation compose(const Relation& other) const;  // pairs (i, k) with i->j->k
  Relation intersect(const Relation& other) const;
  bool subset_of(const Relation& other) const;

  bool operator==(const Relation& o) const { return n_ == o.n_ && bits_ == o.bits_; }

 private:
  int n_;
  std::vector<bool> bits_;
};

// Base of a uniformity on a finite space. Construction checks the base
// axioms: every member contains the diagonal, any two members have a member
// below their intersection, every member has a member below its inverse and
// one whose self-composition it contains, and the members intersect to the
// diagonal alone.
class FiniteUniformity {
 public:
  FiniteUniformity(GroundSpace space, std::vector<Relation> base);

  // Base of threshold relations d(x, y) < eps for eps running down a halving
  // chain that ends below the minimal positive distance.
  static FiniteUniformity from_metric(const GroundSpace& space, const Rat& top_eps);

  const GroundSpace& space() const { return space_; }
  int base_size() const { return static_cast<int>(base_.size()); }
  const Relation& entourage(int i) const { return base_.at(i); }

 private:
  GroundSpace space_;
  std::vector<Relation> base_;
};

// Handle for a single entourage: either the metric entourage of radius eps
// (pairs at distance strictly below eps) or one member of a finite
// relational base.
class EntourageRef {
 public:
  static EntourageRef metric(const Rat& eps);
  static EntourageRef relational(std::shared_ptr<const FiniteUniformity> uniformity, int index);

  bool is_metric() const { return metric_; }
  const Rat& eps() const;
  const Relation& relation() const;

  // Membership of a single pair of points in this entourage.
  bool pair_within(const GroundSpace& space, const Point& x, const Point& y) const;

 private:
  EntourageRef() = default;

  bool metric_ = true;
  Rat eps_;
  std::shared_ptr<const FiniteUniformity> uniformity_;
  int index_ = -1;
};

// The set U(A) of points reachable from A through the entourage, exposed as
// a membership test.
class EntourageImage {
 public:
  EntourageImage(EntourageRef u, Compactum a) : u_(std::move(u)), a_(std::move(a)) {}
  bool contains(const Point& p) const;

 private:
  EntourageRef u_;
  Compactum a_;
};

EntourageImage entourage_image(const EntourageRef& u, const Compactum& a);

// Membership of (a, b) in the hyperspace entourage induced by u: both
// inclusions a subset of u(b) and b subset of u(a). For the metric entourage
// this is equivalent to hausdorff_distance(a, b) < eps.
bool k_entourage_contains(const EntourageRef& u, const Compactum& a, const Compactum& b);

struct CompactWitness {
  Compactum set;
  long iterate = 0;
};

// Builds a set A within eps of K whose iterate-th forward image is exactly L,
// using the exact covering times of the eps/2 balls around K and a descent
// through the two inverse branches of the map. Requires a mixing oracle.
// Re-checks both Hausdorff bounds before returning and throws PostCheckError
// if they fail, which would indicate a bug rather than bad input.
CompactWitness compact_witness(const DynMap& f, const Compactum& k, const Compactum& l,
                               const Rat& eps);

}  // namespace fuzzdyn
