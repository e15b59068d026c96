#include "fuzzdyn/ground.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "fuzzdyn/errors.hpp"
#include "interval_detail.hpp"

namespace fuzzdyn {

FiniteMetric::FiniteMetric(std::vector<std::vector<Rat>> table) : table_(std::move(table)) {
  const auto n = table_.size();
  if (n == 0) throw std::invalid_argument("empty distance table");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("distance table is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table_[i][i] != 0) throw std::invalid_argument("distance table diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j) {
      if (table_[i][j] != table_[j][i]) {
        throw std::invalid_argument("distance table is not symmetric");
      }
      if (i != j && table_[i][j] <= 0) {
        throw std::invalid_argument("off-diagonal distances must be positive");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (table_[i][j] > table_[i][k] + table_[k][j]) {
          throw std::invalid_argument("distance table violates the triangle inequality");
        }
      }
    }
  }
}

GroundSpace GroundSpace::unit_interval() { return GroundSpace(SpaceKind::UnitInterval, nullptr); }

GroundSpace GroundSpace::circle() { return GroundSpace(SpaceKind::Circle, nullptr); }

GroundSpace GroundSpace::finite(std::vector<std::vector<Rat>> table) {
  return GroundSpace(SpaceKind::Finite, std::make_shared<FiniteMetric>(std::move(table)));
}

int GroundSpace::finite_size() const { return metric_table().size(); }

const FiniteMetric& GroundSpace::metric_table() const {
  if (kind_ != SpaceKind::Finite) throw std::invalid_argument("space mismatch");
  return *fin_;
}

Point GroundSpace::point(const Rat& coord) const {
  switch (kind_) {
    case SpaceKind::UnitInterval:
      if (coord < 0 || coord > 1) throw std::invalid_argument("point outside the unit interval");
      return Point(kind_, coord, -1);
    case SpaceKind::Circle:
      return Point(kind_, wrap_unit(coord), -1);
    case SpaceKind::Finite:
      throw std::invalid_argument("space mismatch");
  }
  throw std::logic_error("unreachable");
}

Point GroundSpace::element(int index) const {
  if (kind_ != SpaceKind::Finite) throw std::invalid_argument("space mismatch");
  if (index < 0 || index >= finite_size()) {
    throw std::invalid_argument("element index out of range");
  }
  return Point(kind_, Rat(0), index);
}

bool GroundSpace::operator==(const GroundSpace& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ != SpaceKind::Finite) return true;
  return *fin_ == *o.fin_;
}

const Rat& Point::coord() const {
  if (kind_ == SpaceKind::Finite) throw std::invalid_argument("finite points have no coordinate");
  return coord_;
}

int Point::index() const {
  if (kind_ != SpaceKind::Finite) throw std::invalid_argument("only finite points carry an index");
  return index_;
}

bool operator==(const Point& a, const Point& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == SpaceKind::Finite) return a.index_ == b.index_;
  return a.coord_ == b.coord_;
}

bool point_less(const Point& a, const Point& b) {
  if (a.kind() != b.kind()) throw std::invalid_argument("space mismatch");
  if (a.kind() == SpaceKind::Finite) return a.index() < b.index();
  return a.coord() < b.coord();
}

Rat distance(const GroundSpace& space, const Point& a, const Point& b) {
  if (a.kind() != space.kind() || b.kind() != space.kind()) {
    throw std::invalid_argument("space mismatch");
  }
  switch (space.kind()) {
    case SpaceKind::UnitInterval:
      return rat_abs(a.coord() - b.coord());
    case SpaceKind::Circle: {
      Rat t = rat_abs(a.coord() - b.coord());
      return rat_min(t, Rat(1 - t));
    }
    case SpaceKind::Finite: {
      const auto& tbl = space.metric_table();
      if (a.index() >= tbl.size() || b.index() >= tbl.size()) {
        throw std::invalid_argument("space mismatch");
      }
      return tbl.at(a.index(), b.index());
    }
  }
  throw std::logic_error("unreachable");
}

DynMap DynMap::tent() {
  DynMap f(MapKind::Tent, GroundSpace::unit_interval());
  f.mixing_ = true;
  return f;
}

DynMap DynMap::doubling() {
  DynMap f(MapKind::Doubling, GroundSpace::circle());
  f.mixing_ = true;
  return f;
}

DynMap DynMap::rotation(const Rat& theta) {
  DynMap f(MapKind::Rotation, GroundSpace::circle());
  f.theta_ = wrap_unit(theta);
  f.isometry_ = true;
  return f;
}

DynMap DynMap::piecewise_linear(std::vector<Rat> breakpoints, std::vector<Rat> values) {
  if (breakpoints.size() != values.size() || breakpoints.size() < 2) {
    throw std::invalid_argument("piecewise-linear map needs matching knot lists of size >= 2");
  }
  if (breakpoints.front() != 0 || breakpoints.back() != 1) {
    throw std::invalid_argument("breakpoints must run from 0 to 1");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (breakpoints[i - 1] >= breakpoints[i]) {
      throw std::invalid_argument("breakpoints must be strictly increasing");
    }
  }
  for (const auto& v : values) {
    if (v < 0 || v > 1) throw std::invalid_argument("values must lie in [0, 1]");
  }
  DynMap f(MapKind::PiecewiseLinear, GroundSpace::unit_interval());
  f.breakpoints_ = std::move(breakpoints);
  f.values_ = std::move(values);
  return f;
}

DynMap DynMap::finite_table(GroundSpace space, std::vector<int> targets) {
  if (space.kind() != SpaceKind::Finite) throw std::invalid_argument("space mismatch");
  const int n = space.finite_size();
  if (static_cast<int>(targets.size()) != n) {
    throw std::invalid_argument("target list size must match the space");
  }
  for (int t : targets) {
    if (t < 0 || t >= n) throw std::invalid_argument("target index out of range");
  }
  const auto& tbl = space.metric_table();
  bool iso = true;
  for (int i = 0; i < n && iso; ++i) {
    for (int j = 0; j < n && iso; ++j) {
      if (tbl.at(targets[i], targets[j]) != tbl.at(i, j)) iso = false;
    }
  }
  DynMap f(MapKind::FiniteTable, std::move(space));
  f.targets_ = std::move(targets);
  f.isometry_ = iso;
  return f;
}

const Rat& DynMap::theta() const {
  if (kind_ != MapKind::Rotation) throw std::invalid_argument("wrong map kind");
  return theta_;
}

const std::vector<Rat>& DynMap::breakpoints() const {
  if (kind_ != MapKind::PiecewiseLinear) throw std::invalid_argument("wrong map kind");
  return breakpoints_;
}

const std::vector<Rat>& DynMap::values() const {
  if (kind_ != MapKind::PiecewiseLinear) throw std::invalid_argument("wrong map kind");
  return values_;
}

const std::vector<int>& DynMap::targets() const {
  if (kind_ != MapKind::FiniteTable) throw std::invalid_argument("wrong map kind");
  return targets_;
}

Point apply_map(const DynMap& f, const Point& x) {
  if (x.kind() != f.space().kind()) throw std::invalid_argument("space mismatch");
  switch (f.kind()) {
    case MapKind::Tent: {
      const Rat& c = x.coord();
      return f.space().point(c <= rat(1, 2) ? Rat(2 * c) : Rat(2 - 2 * c));
    }
    case MapKind::Doubling:
      return f.space().point(2 * x.coord());
    case MapKind::Rotation:
      return f.space().point(x.coord() + f.theta());
    case MapKind::PiecewiseLinear: {
      const auto& bp = f.breakpoints();
      const auto& val = f.values();
      const Rat& c = x.coord();
      for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        if (c >= bp[i] && c <= bp[i + 1]) {
          Rat slope = (val[i + 1] - val[i]) / (bp[i + 1] - bp[i]);
          return f.space().point(val[i] + (c - bp[i]) * slope);
        }
      }
      throw std::logic_error("unreachable");
    }
    case MapKind::FiniteTable:
      return f.space().element(f.targets()[x.index()]);
  }
  throw std::logic_error("unreachable");
}

std::vector<Point> preimage_points(const DynMap& f, const Point& y) {
  if (y.kind() != f.space().kind()) throw std::invalid_argument("space mismatch");
  std::vector<Point> out;
  switch (f.kind()) {
    case MapKind::Tent: {
      const Rat& c = y.coord();
      out.push_back(f.space().point(c / 2));
      out.push_back(f.space().point(1 - c / 2));
      break;
    }
    case MapKind::Doubling: {
      const Rat& c = y.coord();
      out.push_back(f.space().point(c / 2));
      out.push_back(f.space().point((c + 1) / 2));
      break;
    }
    case MapKind::Rotation:
      out.push_back(f.space().point(y.coord() - f.theta()));
      break;
    case MapKind::PiecewiseLinear: {
      const auto& bp = f.breakpoints();
      const auto& val = f.values();
      const Rat& c = y.coord();
      for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        if (val[i] == val[i + 1]) {
          if (c == val[i]) {
            throw std::domain_error("preimage not finite on a flat segment");
          }
          continue;
        }
        const Rat& lo = rat_min(val[i], val[i + 1]);
        const Rat& hi = rat_max(val[i], val[i + 1]);
        if (c < lo || c > hi) continue;
        Rat x = bp[i] + (c - val[i]) * (bp[i + 1] - bp[i]) / (val[i + 1] - val[i]);
        out.push_back(f.space().point(x));
      }
      break;
    }
    case MapKind::FiniteTable: {
      const auto& t = f.targets();
      for (int i = 0; i < static_cast<int>(t.size()); ++i) {
        if (t[i] == y.index()) out.push_back(f.space().element(i));
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), point_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rat tent_inverse_branch(const Rat& y, Branch branch) {
  if (y < 0 || y > 1) throw std::invalid_argument("point outside the unit interval");
  return branch == Branch::Left ? Rat(y / 2) : Rat(1 - y / 2);
}

long interval_cover_time(const DynMap& f, const Rat& lo, const Rat& hi) {
  if (lo >= hi) throw std::invalid_argument("empty interval");
  if (!f.has_mixing_oracle()) {
    throw OracleMissingError("map does not expose a mixing oracle");
  }
  detail::IntervalUnion u;
  if (f.space().kind() == SpaceKind::Circle) {
    // On the circle an arc may wrap through zero; [7/8, 9/8] is the arc
    // from 7/8 to 1/8 the short way round.
    if (hi - lo >= 1) {
      u.parts.emplace_back(0, 1);
    } else {
      Rat a = wrap_unit(lo);
      Rat b = a + (hi - lo);
      if (b <= 1) {
        u.parts.emplace_back(a, std::move(b));
      } else {
        u.parts.emplace_back(a, 1);
        u.parts.emplace_back(0, b - 1);
      }
    }
  } else {
    if (lo < 0 || hi > 1) throw std::invalid_argument("interval outside the carrier");
    u.parts.emplace_back(lo, hi);
  }
  u.normalize();
  return detail::cover_time_for_union(f, std::move(u));
}

}  // namespace fuzzdyn
