#include "fuzzdyn/compacta.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "fuzzdyn/errors.hpp"
#include "interval_detail.hpp"

namespace fuzzdyn {

Compactum::Compactum(GroundSpace space, std::vector<Point> points)
    : space_(std::move(space)), points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("empty compactum");
  for (const auto& p : points_) {
    if (p.kind() != space_.kind()) throw std::invalid_argument("space mismatch");
    if (p.kind() == SpaceKind::Finite && p.index() >= space_.finite_size()) {
      throw std::invalid_argument("space mismatch");
    }
  }
  std::sort(points_.begin(), points_.end(), point_less);
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool Compactum::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p, point_less);
}

bool Compactum::operator==(const Compactum& o) const {
  return space_ == o.space_ && points_ == o.points_;
}

namespace {

Rat directed_hausdorff(const Compactum& a, const Compactum& b) {
  Rat worst(0);
  for (const auto& p : a.points()) {
    std::optional<Rat> best;
    for (const auto& q : b.points()) {
      Rat d = distance(a.space(), p, q);
      if (!best || d < *best) best = std::move(d);
    }
    if (*best > worst) worst = std::move(*best);
  }
  return worst;
}

}  // namespace

Rat hausdorff_distance(const Compactum& a, const Compactum& b) {
  if (!(a.space() == b.space())) throw std::invalid_argument("space mismatch");
  return rat_max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

Rat diameter(const Compactum& a) {
  Rat best(0);
  for (const auto& p : a.points()) {
    for (const auto& q : a.points()) {
      Rat d = distance(a.space(), p, q);
      if (d > best) best = std::move(d);
    }
  }
  return best;
}

Compactum union_of(const Compactum& a, const Compactum& b) {
  if (!(a.space() == b.space())) throw std::invalid_argument("space mismatch");
  std::vector<Point> pts = a.points();
  pts.insert(pts.end(), b.points().begin(), b.points().end());
  return Compactum(a.space(), std::move(pts));
}

Compactum image_compactum(const DynMap& f, const Compactum& a) {
  if (!(a.space() == f.space())) throw std::invalid_argument("space mismatch");
  std::vector<Point> pts;
  pts.reserve(a.points().size());
  for (const auto& p : a.points()) pts.push_back(apply_map(f, p));
  return Compactum(a.space(), std::move(pts));
}

bool Relation::contains_diagonal() const {
  for (int i = 0; i < n_; ++i) {
    if (!at(i, i)) return false;
  }
  return true;
}

bool Relation::is_diagonal() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (at(i, j) != (i == j)) return false;
    }
  }
  return true;
}

Relation Relation::inverse() const {
  Relation r(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (at(i, j)) r.set(j, i);
    }
  }
  return r;
}

Relation Relation::compose(const Relation& other) const {
  if (n_ != other.n_) throw std::invalid_argument("relation size mismatch");
  Relation r(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (!at(i, j)) continue;
      for (int k = 0; k < n_; ++k) {
        if (other.at(j, k)) r.set(i, k);
      }
    }
  }
  return r;
}

Relation Relation::intersect(const Relation& other) const {
  if (n_ != other.n_) throw std::invalid_argument("relation size mismatch");
  Relation r(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (at(i, j) && other.at(i, j)) r.set(i, j);
    }
  }
  return r;
}

bool Relation::subset_of(const Relation& other) const {
  if (n_ != other.n_) throw std::invalid_argument("relation size mismatch");
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (at(i, j) && !other.at(i, j)) return false;
    }
  }
  return true;
}

FiniteUniformity::FiniteUniformity(GroundSpace space, std::vector<Relation> base)
    : space_(std::move(space)), base_(std::move(base)) {
  if (space_.kind() != SpaceKind::Finite) {
    throw std::invalid_argument("relational uniformities require a finite space");
  }
  if (base_.empty()) throw std::invalid_argument("uniformity base must be non-empty");
  const int n = space_.finite_size();
  for (const auto& r : base_) {
    if (r.size() != n) throw std::invalid_argument("relation size mismatch");
    if (!r.contains_diagonal()) {
      throw std::invalid_argument("base relation must contain the diagonal");
    }
  }
  auto has_member_below = [&](const Relation& target) {
    return std::any_of(base_.begin(), base_.end(),
                       [&](const Relation& v) { return v.subset_of(target); });
  };
  for (const auto& a : base_) {
    for (const auto& b : base_) {
      if (!has_member_below(a.intersect(b))) {
        throw std::invalid_argument("base lacks a member below an intersection");
      }
    }
    if (!has_member_below(a.inverse())) {
      throw std::invalid_argument("base lacks a member below an inverse");
    }
    bool composable = std::any_of(base_.begin(), base_.end(), [&](const Relation& v) {
      return v.compose(v).subset_of(a);
    });
    if (!composable) {
      throw std::invalid_argument("base lacks a member with composable square");
    }
  }
  Relation meet = base_.front();
  for (const auto& r : base_) meet = meet.intersect(r);
  if (!meet.is_diagonal()) {
    throw std::invalid_argument("base members must intersect to the diagonal");
  }
}

FiniteUniformity FiniteUniformity::from_metric(const GroundSpace& space, const Rat& top_eps) {
  if (space.kind() != SpaceKind::Finite) {
    throw std::invalid_argument("relational uniformities require a finite space");
  }
  if (top_eps <= 0) throw std::invalid_argument("entourage radius must be positive");
  const int n = space.finite_size();
  std::vector<Relation> base;
  Rat eps = top_eps;
  while (true) {
    Relation r(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (space.metric_table().at(i, j) < eps) r.set(i, j);
      }
    }
    base.push_back(r);
    if (r.is_diagonal()) break;
    eps /= 2;
  }
  return FiniteUniformity(space, std::move(base));
}

EntourageRef EntourageRef::metric(const Rat& eps) {
  if (eps <= 0) throw std::invalid_argument("entourage radius must be positive");
  EntourageRef u;
  u.metric_ = true;
  u.eps_ = eps;
  return u;
}

EntourageRef EntourageRef::relational(std::shared_ptr<const FiniteUniformity> uniformity,
                                      int index) {
  if (!uniformity) throw std::invalid_argument("null uniformity handle");
  if (index < 0 || index >= uniformity->base_size()) {
    throw std::invalid_argument("entourage index out of range");
  }
  EntourageRef u;
  u.metric_ = false;
  u.uniformity_ = std::move(uniformity);
  u.index_ = index;
  return u;
}

const Rat& EntourageRef::eps() const {
  if (!metric_) throw std::invalid_argument("not a metric entourage");
  return eps_;
}

const Relation& EntourageRef::relation() const {
  if (metric_) throw std::invalid_argument("not a relational entourage");
  return uniformity_->entourage(index_);
}

bool EntourageRef::pair_within(const GroundSpace& space, const Point& x, const Point& y) const {
  if (metric_) return distance(space, x, y) < eps_;
  if (!(space == uniformity_->space())) throw std::invalid_argument("space mismatch");
  return relation().at(x.index(), y.index());
}

bool EntourageImage::contains(const Point& p) const {
  for (const auto& a : a_.points()) {
    if (u_.pair_within(a_.space(), a, p)) return true;
  }
  return false;
}

EntourageImage entourage_image(const EntourageRef& u, const Compactum& a) {
  return EntourageImage(u, a);
}

bool k_entourage_contains(const EntourageRef& u, const Compactum& a, const Compactum& b) {
  if (!(a.space() == b.space())) throw std::invalid_argument("space mismatch");
  EntourageImage ua = entourage_image(u, a);
  EntourageImage ub = entourage_image(u, b);
  for (const auto& p : a.points()) {
    if (!ub.contains(p)) return false;
  }
  for (const auto& q : b.points()) {
    if (!ua.contains(q)) return false;
  }
  return true;
}

namespace detail {

IntervalUnion coordinate_ball(const GroundSpace& space, const Rat& center, const Rat& r) {
  IntervalUnion out;
  if (space.kind() == SpaceKind::UnitInterval) {
    out.parts.emplace_back(rat_max(Rat(center - r), Rat(0)), rat_min(Rat(center + r), Rat(1)));
  } else {
    if (2 * r >= 1) {
      out.parts.emplace_back(0, 1);
    } else {
      Rat lo = wrap_unit(center - r);
      if (lo + 2 * r <= 1) {
        out.parts.emplace_back(lo, lo + 2 * r);
      } else {
        out.parts.emplace_back(lo, 1);
        out.parts.emplace_back(0, lo + 2 * r - 1);
      }
    }
  }
  out.normalize();
  return out;
}

std::optional<Rat> inverse_descend(const DynMap& f, long d, const Rat& y,
                                   const IntervalUnion& constraint) {
  if (constraint.empty()) return std::nullopt;
  if (d == 0) {
    if (constraint.contains_wrapped(y)) return y;
    return std::nullopt;
  }
  const Rat half(1, 2);
  const bool tent = f.kind() == MapKind::Tent;

  IntervalUnion left = constraint.clipped(Rat(0), half);
  if (!left.empty()) {
    IntervalUnion fwd;
    for (const auto& [a, b] : left.parts) fwd.parts.emplace_back(2 * a, 2 * b);
    fwd.normalize();
    if (auto r = inverse_descend(f, d - 1, y, fwd)) return Rat(*r / 2);
  }
  IntervalUnion right = constraint.clipped(half, Rat(1));
  if (!right.empty()) {
    IntervalUnion fwd;
    for (const auto& [a, b] : right.parts) {
      if (tent) {
        fwd.parts.emplace_back(2 - 2 * b, 2 - 2 * a);
      } else {
        fwd.parts.emplace_back(2 * a - 1, 2 * b - 1);
      }
    }
    fwd.normalize();
    if (auto r = inverse_descend(f, d - 1, y, fwd)) {
      return tent ? Rat(1 - *r / 2) : Rat((*r + 1) / 2);
    }
  }
  return std::nullopt;
}

}  // namespace detail

CompactWitness compact_witness(const DynMap& f, const Compactum& k, const Compactum& l,
                               const Rat& eps) {
  if (!f.has_mixing_oracle()) {
    throw OracleMissingError("map does not expose a mixing oracle");
  }
  if (!(k.space() == f.space()) || !(l.space() == f.space())) {
    throw std::invalid_argument("space mismatch");
  }
  if (eps <= 0) throw std::invalid_argument("radius must be positive");

  const Rat r = eps / 2;
  long n = 1;
  std::vector<detail::IntervalUnion> balls;
  balls.reserve(k.points().size());
  for (const auto& p : k.points()) {
    balls.push_back(detail::coordinate_ball(f.space(), p.coord(), r));
    n = std::max(n, detail::cover_time_for_union(f, balls.back()));
  }

  std::vector<Point> found;
  for (std::size_t i = 0; i < k.points().size(); ++i) {
    for (const auto& target : l.points()) {
      auto x = detail::inverse_descend(f, n, target.coord(), balls[i]);
      if (!x) throw PostCheckError("construction failed post-check");
      found.push_back(f.space().point(*x));
    }
  }
  Compactum a(f.space(), std::move(found));

  if (!(hausdorff_distance(a, k) < eps)) {
    throw PostCheckError("construction failed post-check");
  }
  Compactum fwd = a;
  for (long s = 0; s < n; ++s) fwd = image_compactum(f, fwd);
  if (!(hausdorff_distance(fwd, l) < eps)) {
    throw PostCheckError("construction failed post-check");
  }
  return CompactWitness{std::move(a), n};
}

}  // namespace fuzzdyn
