#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fuzzdyn/ground.hpp"

namespace fuzzdyn::detail {

// Finite unions of closed subintervals of [0, 1]. On the circle the two
// endpoints are identified, so a wrapping arc shows up as a piece touching 1
// plus a piece touching 0; coverage still reads as the single piece [0, 1].
struct IntervalUnion {
  std::vector<std::pair<Rat, Rat>> parts;

  void normalize() {
    std::sort(parts.begin(), parts.end());
    std::vector<std::pair<Rat, Rat>> merged;
    for (auto& p : parts) {
      if (p.first > p.second) continue;
      if (!merged.empty() && p.first <= merged.back().second) {
        merged.back().second = rat_max(merged.back().second, p.second);
      } else {
        merged.push_back(p);
      }
    }
    parts = std::move(merged);
  }

  bool empty() const { return parts.empty(); }

  bool covers_carrier() const {
    return parts.size() == 1 && parts[0].first == 0 && parts[0].second == 1;
  }

  // Membership up to the circle identification of 0 with 1.
  bool contains_wrapped(const Rat& x) const {
    for (const auto& [a, b] : parts) {
      if (x >= a && x <= b) return true;
      if (x + 1 >= a && x + 1 <= b) return true;
    }
    return false;
  }

  IntervalUnion clipped(const Rat& lo, const Rat& hi) const {
    IntervalUnion out;
    for (const auto& [a, b] : parts) {
      out.parts.emplace_back(rat_max(a, lo), rat_min(b, hi));
    }
    out.normalize();
    return out;
  }

  Rat longest_part() const {
    Rat best(0);
    for (const auto& [a, b] : parts) best = rat_max(best, Rat(b - a));
    return best;
  }
};

inline IntervalUnion tent_step(const IntervalUnion& u) {
  IntervalUnion out;
  const Rat half(1, 2);
  for (const auto& [a, b] : u.parts) {
    if (b <= half) {
      out.parts.emplace_back(2 * a, 2 * b);
    } else if (a >= half) {
      out.parts.emplace_back(2 - 2 * b, 2 - 2 * a);
    } else {
      out.parts.emplace_back(rat_min(Rat(2 * a), Rat(2 - 2 * b)), Rat(1));
    }
  }
  out.normalize();
  return out;
}

inline IntervalUnion doubling_step(const IntervalUnion& u) {
  IntervalUnion out;
  const Rat half(1, 2);
  for (const auto& [a, b] : u.parts) {
    if (b - a >= half) {
      out.parts.emplace_back(0, 1);
    } else if (b <= half) {
      out.parts.emplace_back(2 * a, 2 * b);
    } else if (a >= half) {
      out.parts.emplace_back(2 * a - 1, 2 * b - 1);
    } else {
      out.parts.emplace_back(2 * a, 1);
      out.parts.emplace_back(0, 2 * b - 1);
    }
  }
  out.normalize();
  return out;
}

inline IntervalUnion oracle_step(const DynMap& f, const IntervalUnion& u) {
  return f.kind() == MapKind::Tent ? tent_step(u) : doubling_step(u);
}

// Smallest n with the n-th forward image covering the carrier. The cap only
// guards against a bug in the step functions: a union spreads at least as
// fast as its longest piece, which doubles until it folds over.
inline long cover_time_for_union(const DynMap& f, IntervalUnion u) {
  u.normalize();
  if (u.empty()) throw std::invalid_argument("empty interval");
  long cap = 8;
  for (Rat len = u.longest_part(); len < 2; len *= 2) ++cap;
  for (long n = 0; n <= cap; ++n) {
    if (u.covers_carrier()) return n;
    u = oracle_step(f, u);
  }
  throw std::logic_error("interval iteration exceeded its growth bound");
}

// Ball of radius r around a coordinate, as a union of closed pieces of
// [0, 1]. On the circle the ball may wrap through 0.
IntervalUnion coordinate_ball(const GroundSpace& space, const Rat& center, const Rat& r);

// Depth-d inverse-branch descent: a coordinate x inside the constraint set
// with f^d(x) = y, or nothing when no branch sequence stays inside. The left
// branch is tried first, so ties resolve toward it.
std::optional<Rat> inverse_descend(const DynMap& f, long d, const Rat& y,
                                   const IntervalUnion& constraint);

}  // namespace fuzzdyn::detail
