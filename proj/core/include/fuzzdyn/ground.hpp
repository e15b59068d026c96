#pragma once

#include <memory>
#include <vector>

#include "fuzzdyn/rational.hpp"

namespace fuzzdyn {

enum class SpaceKind { UnitInterval, Circle, Finite };

// Finite metric space given by an explicit distance table. The table must be
// symmetric with zero diagonal, positive off-diagonal entries, and satisfy
// the triangle inequality; all of that is checked at construction.
class FiniteMetric {
 public:
  explicit FiniteMetric(std::vector<std::vector<Rat>> table);

  int size() const { return static_cast<int>(table_.size()); }
  const Rat& at(int i, int j) const { return table_[i][j]; }
  const std::vector<std::vector<Rat>>& table() const { return table_; }

  bool operator==(const FiniteMetric& o) const { return table_ == o.table_; }

 private:
  std::vector<std::vector<Rat>> table_;
};

class Point;

// Carrier space for all the set machinery: the unit interval with |x - y|,
// the circle of circumference one with arc-length distance, or a finite
// metric space.
class GroundSpace {
 public:
  static GroundSpace unit_interval();
  static GroundSpace circle();
  static GroundSpace finite(std::vector<std::vector<Rat>> table);

  SpaceKind kind() const { return kind_; }

  // Finite spaces only.
  int finite_size() const;
  const FiniteMetric& metric_table() const;

  // Interval and circle points. Interval coordinates must lie in [0, 1];
  // circle coordinates are wrapped into [0, 1).
  Point point(const Rat& coord) const;
  // Finite-space points, addressed by element index.
  Point element(int index) const;

  bool operator==(const GroundSpace& o) const;

 private:
  GroundSpace(SpaceKind k, std::shared_ptr<const FiniteMetric> fin)
      : kind_(k), fin_(std::move(fin)) {}

  SpaceKind kind_;
  std::shared_ptr<const FiniteMetric> fin_;
};

// One location in a ground space. Construct through GroundSpace::point or
// GroundSpace::element so the coordinate invariants always hold.
class Point {
 public:
  SpaceKind kind() const { return kind_; }
  const Rat& coord() const;
  int index() const;

  friend bool operator==(const Point& a, const Point& b);
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

 private:
  friend class GroundSpace;
  Point(SpaceKind k, Rat c, int i) : kind_(k), coord_(std::move(c)), index_(i) {}

  SpaceKind kind_;
  Rat coord_;
  int index_;
};

// Strict order among points of one space kind; mixed kinds throw.
bool point_less(const Point& a, const Point& b);

// Exact distance in the given space. Mixed-space arguments throw
// std::invalid_argument("space mismatch").
Rat distance(const GroundSpace& space, const Point& a, const Point& b);

enum class MapKind { Tent, Doubling, Rotation, PiecewiseLinear, FiniteTable };
enum class Branch { Left, Right };

// A self-map of a ground space with exact rational dynamics.
//
//   Tent             on [0, 1]:  x -> 2x for x <= 1/2, else 2(1 - x)
//   Doubling         on circle:  x -> 2x mod 1
//   Rotation(theta)  on circle:  x -> x + theta mod 1
//   PiecewiseLinear  on [0, 1]:  linear interpolation through given knots
//   FiniteTable      on finite:  element i -> targets[i]
class DynMap {
 public:
  static DynMap tent();
  static DynMap doubling();
  static DynMap rotation(const Rat& theta);
  static DynMap piecewise_linear(std::vector<Rat> breakpoints, std::vector<Rat> values);
  static DynMap finite_table(GroundSpace space, std::vector<int> targets);

  MapKind kind() const { return kind_; }
  const GroundSpace& space() const { return space_; }

  // True exactly when the map preserves every pairwise distance.
  bool is_isometry() const { return isometry_; }
  // True when exact forward images of intervals are available, which is what
  // the covering and witness machinery runs on.
  bool has_mixing_oracle() const { return mixing_; }

  const Rat& theta() const;
  const std::vector<Rat>& breakpoints() const;
  const std::vector<Rat>& values() const;
  const std::vector<int>& targets() const;

 private:
  DynMap(MapKind k, GroundSpace s) : kind_(k), space_(std::move(s)) {}

  MapKind kind_;
  GroundSpace space_;
  bool isometry_ = false;
  bool mixing_ = false;
  Rat theta_;
  std::vector<Rat> breakpoints_;
  std::vector<Rat> values_;
  std::vector<int> targets_;
};

Point apply_map(const DynMap& f, const Point& x);

// Full preimage of y under f, sorted, possibly empty. Throws when a flat
// piecewise-linear segment makes the preimage infinite.
std::vector<Point> preimage_points(const DynMap& f, const Point& y);

// The two right inverses of the tent map: Left sends y to y/2 in [0, 1/2],
// Right sends y to 1 - y/2 in [1/2, 1].
Rat tent_inverse_branch(const Rat& y, Branch branch);

// Smallest n with f^n([lo, hi]) equal to the whole carrier, computed by exact
// iteration of interval unions. Requires has_mixing_oracle; on the circle the
// argument is the arc from lo up to hi. Throws std::invalid_argument("empty
// interval") when lo >= hi.
long interval_cover_time(const DynMap& f, const Rat& lo, const Rat& hi);

}  // namespace fuzzdyn
