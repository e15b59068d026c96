#include "fuzzdyn/dynamics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "fuzzdyn/errors.hpp"
#include "fuzzdyn/metrics.hpp"
#include "fuzzdyn/random.hpp"
#include "interval_detail.hpp"

namespace fuzzdyn {

Rat fuzzy_distance(MetricKind kind, const StepFuzzySet& a, const StepFuzzySet& b) {
  switch (kind) {
    case MetricKind::Infty:
      return d_infty(a, b);
    case MetricKind::Skorokhod:
      return d_skorokhod(a, b);
    case MetricKind::Sendo:
      return d_sendo(a, b);
  }
  throw std::logic_error("unhandled metric kind");
}

std::vector<StepFuzzySet> orbit_fuzzy(const DynMap& f, const StepFuzzySet& u, long n) {
  if (n < 0) throw std::invalid_argument("orbit length must be non-negative");
  std::vector<StepFuzzySet> orbit;
  orbit.reserve(static_cast<std::size_t>(n) + 1);
  orbit.push_back(u);
  for (long i = 0; i < n; ++i) orbit.push_back(zadeh_extend(f, orbit.back()));
  return orbit;
}

WitnessCertificate fuzzy_witness(const DynMap& f, const StepFuzzySet& u, const StepFuzzySet& v,
                                 const Rat& eps) {
  if (!f.has_mixing_oracle()) {
    throw OracleMissingError("map does not expose a mixing oracle");
  }
  if (!(u.space() == f.space()) || !(v.space() == f.space())) {
    throw std::invalid_argument("space mismatch");
  }
  if (eps <= 0) throw std::invalid_argument("radius must be positive");

  std::vector<Rat> levels = merge_partitions(level_partition(u, eps), level_partition(v, eps));

  // One iterate for every level: by then each quarter-radius ball around a
  // support point has spread over the whole carrier, so each per-level
  // descent below is guaranteed a branch.
  const Rat r = eps / 4;
  const auto& base = u.support().points();
  std::vector<detail::IntervalUnion> balls;
  balls.reserve(base.size());
  long n = 1;
  for (const auto& p : base) {
    balls.push_back(detail::coordinate_ball(f.space(), p.coord(), r));
    n = std::max(n, detail::cover_time_for_union(f, balls.back()));
  }
  auto ball_of = [&](const Point& p) -> const detail::IntervalUnion& {
    auto it = std::lower_bound(base.begin(), base.end(), p, point_less);
    return balls[static_cast<std::size_t>(it - base.begin())];
  };

  std::vector<std::pair<Rat, std::size_t>> log;
  std::vector<Compactum> per_level;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const Compactum& cu = u.alpha_cut(levels[i]);
    const Compactum& cv = v.alpha_cut(levels[i]);
    std::vector<Point> pts;
    for (const auto& k : cu.points()) {
      for (const auto& l : cv.points()) {
        auto x = detail::inverse_descend(f, n, l.coord(), ball_of(k));
        if (!x) throw PostCheckError("construction failed post-check");
        pts.push_back(f.space().point(*x));
      }
    }
    per_level.emplace_back(f.space(), std::move(pts));
    log.emplace_back(levels[i], per_level.back().points().size());
  }

  // Suffix unions nest and stay within the per-level bounds, because both
  // cut chains are themselves unions of their tails.
  std::vector<Compactum> cuts = per_level;
  for (std::size_t i = cuts.size() - 1; i-- > 0;) {
    cuts[i] = union_of(cuts[i], cuts[i + 1]);
  }
  StepFuzzySet w(f.space(), levels, std::move(cuts));

  Rat d_source = d_infty(u, w);
  StepFuzzySet fwd = w;
  for (long s = 0; s < n; ++s) fwd = zadeh_extend(f, fwd);
  Rat d_target = d_infty(fwd, v);
  if (!(d_source < eps) || !(d_target < eps)) {
    throw PostCheckError("construction failed post-check");
  }
  return WitnessCertificate{std::move(w), n, std::move(d_source), std::move(d_target),
                            std::move(log)};
}

namespace {

std::string state_key(const StepFuzzySet& s) {
  std::ostringstream os;
  for (const auto& a : s.levels()) os << rat_str(a) << ';';
  os << '|';
  for (const auto& c : s.cuts()) {
    for (const auto& p : c.points()) {
      if (p.kind() == SpaceKind::Finite) {
        os << p.index() << ',';
      } else {
        os << rat_str(p.coord()) << ',';
      }
    }
    os << '/';
  }
  return os.str();
}

// A set near u: support points are displaced by strictly less than eps / 2
// under one shared point map, which keeps the cut chain nested, and for the
// warp-tolerant metrics the jump levels are additionally nudged by less than
// eps / 8 within their gaps. Both effects stay inside the eps-ball of the
// requested metric with margin.
StepFuzzySet sample_near(Rng& rng, const StepFuzzySet& u, const Rat& eps, MetricKind kind) {
  const GroundSpace& sp = u.space();
  const auto& src = u.support().points();
  std::vector<Point> dst;
  dst.reserve(src.size());
  for (const auto& p : src) {
    if (sp.kind() == SpaceKind::Finite) {
      std::vector<int> close;
      for (int j = 0; j < sp.finite_size(); ++j) {
        if (sp.metric_table().at(p.index(), j) < eps / 2) close.push_back(j);
      }
      dst.push_back(sp.element(close[static_cast<std::size_t>(
          rng.below(static_cast<long>(close.size())))]));
    } else {
      Rat delta = (2 * rng.unit_rational(64) - 1) * eps / 4;
      Rat c = p.coord() + delta;
      if (sp.kind() == SpaceKind::UnitInterval) c = rat_min(rat_max(c, rat(0)), rat(1));
      dst.push_back(sp.point(c));
    }
  }
  auto moved = [&](const Point& p) {
    auto it = std::lower_bound(src.begin(), src.end(), p, point_less);
    return dst[static_cast<std::size_t>(it - src.begin())];
  };
  std::vector<Compactum> cuts;
  cuts.reserve(u.cuts().size());
  for (const auto& c : u.cuts()) {
    std::vector<Point> pts;
    pts.reserve(c.points().size());
    for (const auto& p : c.points()) pts.push_back(moved(p));
    cuts.emplace_back(sp, std::move(pts));
  }
  StepFuzzySet out(sp, u.levels(), std::move(cuts));

  if (kind != MetricKind::Infty && u.levels().size() > 2) {
    const auto& lv = u.levels();
    std::vector<std::pair<Rat, Rat>> knots;
    knots.emplace_back(rat(0), rat(0));
    for (std::size_t i = 1; i + 1 < lv.size(); ++i) {
      Rat lo = rat_max(Rat((lv[i - 1] + lv[i]) / 2), Rat(lv[i] - eps / 8));
      Rat hi = rat_min(Rat((lv[i] + lv[i + 1]) / 2), Rat(lv[i] + eps / 8));
      knots.emplace_back(lv[i], rng.between(lo, hi, 64));
    }
    knots.emplace_back(rat(1), rat(1));
    out = warp_apply(TimeWarp(std::move(knots)), out);
  }
  return out;
}

}  // namespace

HittingResult empirical_hitting(const DynMap& f, const StepFuzzySet& u, const Rat& eps_u,
                                const StepFuzzySet& v, const Rat& eps_v, long max_iterate,
                                MetricKind metric_kind, int trials, std::uint64_t seed) {
  if (!(u.space() == f.space()) || !(v.space() == f.space())) {
    throw std::invalid_argument("space mismatch");
  }
  if (eps_u <= 0 || eps_v <= 0) throw std::invalid_argument("radius must be positive");
  if (max_iterate < 1) throw std::invalid_argument("need at least one iterate");
  if (trials < 1) throw std::invalid_argument("need at least one trial");

  Rng rng(seed);
  HittingResult res;
  res.metric_kind = metric_kind;
  std::optional<Rat> best;
  for (int t = 0; t < trials; ++t) {
    StepFuzzySet w = u;
    if (t + 1 == trials && t > 0 && f.has_mixing_oracle()) {
      w = fuzzy_witness(f, u, v, rat_min(eps_u, eps_v)).w;
    } else if (t > 0) {
      StepFuzzySet candidate = sample_near(rng, u, eps_u, metric_kind);
      if (fuzzy_distance(metric_kind, u, candidate) < eps_u) w = std::move(candidate);
    }
    std::unordered_set<std::string> seen;
    seen.insert(state_key(w));
    StepFuzzySet x = std::move(w);
    for (long j = 1; j <= max_iterate; ++j) {
      x = zadeh_extend(f, x);
      Rat d = fuzzy_distance(metric_kind, x, v);
      if (!best || d < *best) best = d;
      if (d < eps_v) {
        res.found = true;
        res.n = j;
        res.achieved_distance = std::move(d);
        return res;
      }
      if (!seen.insert(state_key(x)).second) break;
    }
  }
  if (best) res.achieved_distance = std::move(*best);
  return res;
}

namespace {

detail::IntervalUnion carrier_interval(const GroundSpace& sp, const Rat& lo, const Rat& hi) {
  if (lo >= hi) throw std::invalid_argument("empty interval");
  detail::IntervalUnion out;
  if (sp.kind() == SpaceKind::Circle) {
    if (hi - lo >= 1) {
      out.parts.emplace_back(rat(0), rat(1));
    } else {
      Rat a = wrap_unit(lo);
      Rat b = a + (hi - lo);
      if (b <= 1) {
        out.parts.emplace_back(a, b);
      } else {
        out.parts.emplace_back(a, rat(1));
        out.parts.emplace_back(rat(0), b - 1);
      }
    }
  } else {
    if (lo < 0 || hi > 1) throw std::invalid_argument("interval outside the carrier");
    out.parts.emplace_back(lo, hi);
  }
  out.normalize();
  return out;
}

bool union_covers(const detail::IntervalUnion& s, const detail::IntervalUnion& t) {
  for (const auto& [a, b] : t.parts) {
    bool inside = false;
    for (const auto& [c, d] : s.parts) {
      if (c <= a && b <= d) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

}  // namespace

long weak_mixing_check(const DynMap& f, const std::vector<IntervalPair>& pairs) {
  if (!f.has_mixing_oracle()) {
    throw OracleMissingError("map does not expose a mixing oracle");
  }
  if (pairs.size() < 2) throw std::invalid_argument("need at least two interval pairs");
  std::vector<detail::IntervalUnion> sources, targets;
  long n = 0;
  for (const auto& pr : pairs) {
    sources.push_back(carrier_interval(f.space(), pr.u_lo, pr.u_hi));
    targets.push_back(carrier_interval(f.space(), pr.v_lo, pr.v_hi));
    n = std::max(n, detail::cover_time_for_union(f, sources.back()));
  }
  for (std::size_t i = 0; i < sources.size(); ++i) {
    detail::IntervalUnion img = sources[i];
    for (long s = 0; s < n; ++s) img = detail::oracle_step(f, img);
    if (!union_covers(img, targets[i])) {
      throw PostCheckError("construction failed post-check");
    }
  }
  return n;
}

HyperspaceTransfer sendograph_to_hyperspace(const DynMap& f, const StepFuzzySet& u,
                                            const StepFuzzySet& v, const StepFuzzySet& w,
                                            long n, const Rat& eps) {
  if (!(u.space() == f.space()) || !(v.space() == f.space()) || !(w.space() == f.space())) {
    throw std::invalid_argument("space mismatch");
  }
  if (n < 0) throw std::invalid_argument("iterate must be non-negative");
  EntourageRef within = EntourageRef::metric(eps);
  Compactum a = w.support();
  Compactum fwd = a;
  for (long s = 0; s < n; ++s) fwd = image_compactum(f, fwd);
  bool src = k_entourage_contains(within, a, u.alpha_cut(rat(1)));
  bool tgt = k_entourage_contains(within, fwd, v.alpha_cut(rat(1)));
  return HyperspaceTransfer{std::move(a), src, tgt};
}

SeparationCertificate isometry_separation_certificate(const DynMap& f, const StepFuzzySet& u,
                                                      const Rat& eps_u, const StepFuzzySet& v,
                                                      const Rat& eps_v) {
  if (!f.is_isometry()) throw std::invalid_argument("certificate requires an isometry");
  if (!(u.space() == f.space()) || !(v.space() == f.space())) {
    throw std::invalid_argument("space mismatch");
  }
  if (eps_u <= 0 || eps_v <= 0) throw std::invalid_argument("radius must be positive");
  Rat gap = rat_abs(diameter(u.alpha_cut(rat(1))) - diameter(v.alpha_cut(rat(1))));
  SeparationCertificate out;
  out.certified = gap > 2 * eps_u + 2 * eps_v;
  out.lower_bound = rat_max(Rat((gap - 2 * eps_u) / 2), rat(0));
  out.diameter_gap = std::move(gap);
  return out;
}

}  // namespace fuzzdyn
