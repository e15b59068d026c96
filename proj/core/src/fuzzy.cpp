#include "fuzzdyn/fuzzy.hpp"

#include <algorithm>
#include <stdexcept>

#include "fuzzdyn/errors.hpp"

namespace fuzzdyn {

namespace {

bool cut_subset(const Compactum& small, const Compactum& big) {
  return std::all_of(small.points().begin(), small.points().end(),
                     [&](const Point& p) { return big.contains(p); });
}

}  // namespace

StepFuzzySet::StepFuzzySet(GroundSpace space, std::vector<Rat> levels,
                           std::vector<Compactum> cuts)
    : space_(std::move(space)), levels_(std::move(levels)), cuts_(std::move(cuts)) {
  if (cuts_.empty()) throw std::invalid_argument("not normal");
  if (levels_.size() != cuts_.size() + 1) {
    throw std::invalid_argument("levels and cuts misaligned");
  }
  if (levels_.front() != 0) throw std::invalid_argument("levels must start at 0");
  if (levels_.back() != 1) throw std::invalid_argument("levels must end at 1");
  for (std::size_t i = 1; i < levels_.size(); ++i) {
    if (!(levels_[i - 1] < levels_[i])) {
      throw std::invalid_argument("levels not increasing");
    }
  }
  for (const auto& c : cuts_) {
    if (!(c.space() == space_)) throw std::invalid_argument("space mismatch");
  }
  for (std::size_t i = 1; i < cuts_.size(); ++i) {
    if (!cut_subset(cuts_[i], cuts_[i - 1])) {
      throw std::invalid_argument("cuts not decreasing");
    }
  }
  // Canonical form: a boundary between equal cuts separates nothing.
  for (std::size_t i = 1; i < cuts_.size();) {
    if (cuts_[i - 1] == cuts_[i]) {
      cuts_.erase(cuts_.begin() + (i - 1));
      levels_.erase(levels_.begin() + i);
    } else {
      ++i;
    }
  }
}

StepFuzzySet StepFuzzySet::characteristic(const Compactum& k) {
  return StepFuzzySet(k.space(), {Rat(0), Rat(1)}, {k});
}

Rat StepFuzzySet::membership(const Point& x) const {
  if (x.kind() != space_.kind()) throw std::invalid_argument("space mismatch");
  for (std::size_t i = cuts_.size(); i-- > 0;) {
    if (cuts_[i].contains(x)) return levels_[i + 1];
  }
  return Rat(0);
}

const Compactum& StepFuzzySet::alpha_cut(const Rat& alpha) const {
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("level outside [0,1]");
  if (alpha == 0) return cuts_.front();
  for (std::size_t i = 1; i < levels_.size(); ++i) {
    if (alpha <= levels_[i]) return cuts_[i - 1];
  }
  return cuts_.back();
}

const Compactum& StepFuzzySet::right_limit_cut(const Rat& alpha) const {
  if (alpha < 0 || alpha >= 1) throw std::invalid_argument("level outside [0,1)");
  for (std::size_t i = 0; i + 1 < levels_.size(); ++i) {
    if (alpha == levels_[i]) return cuts_[i];
  }
  return alpha_cut(alpha);
}

bool StepFuzzySet::operator==(const StepFuzzySet& o) const {
  return space_ == o.space_ && levels_ == o.levels_ && cuts_ == o.cuts_;
}

TimeWarp::TimeWarp(std::vector<std::pair<Rat, Rat>> knots) : knots_(std::move(knots)) {
  if (knots_.size() < 2) throw std::invalid_argument("warp needs at least two knots");
  if (knots_.front() != std::pair<Rat, Rat>(Rat(0), Rat(0)) ||
      knots_.back() != std::pair<Rat, Rat>(Rat(1), Rat(1))) {
    throw std::invalid_argument("warp must fix 0 and 1");
  }
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i - 1].first < knots_[i].first) ||
        !(knots_[i - 1].second < knots_[i].second)) {
      throw std::invalid_argument("warp knots not increasing");
    }
  }
}

TimeWarp TimeWarp::identity() {
  return TimeWarp({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}});
}

Rat TimeWarp::operator()(const Rat& x) const {
  if (x < 0 || x > 1) throw std::invalid_argument("warp argument outside [0,1]");
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    const auto& [x0, y0] = knots_[i - 1];
    const auto& [x1, y1] = knots_[i];
    if (x <= x1) return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
  }
  return Rat(1);
}

TimeWarp TimeWarp::inverse() const {
  std::vector<std::pair<Rat, Rat>> flipped;
  flipped.reserve(knots_.size());
  for (const auto& [s, t] : knots_) flipped.emplace_back(t, s);
  return TimeWarp(std::move(flipped));
}

Rat warp_norm(const TimeWarp& t) {
  Rat best(0);
  for (const auto& [s, v] : t.knots()) {
    Rat dev = rat_abs(Rat(v - s));
    if (dev > best) best = std::move(dev);
  }
  return best;
}

StepFuzzySet warp_apply(const TimeWarp& t, const StepFuzzySet& v) {
  std::vector<Rat> levels;
  levels.reserve(v.levels().size());
  for (const auto& a : v.levels()) levels.push_back(t(a));
  return StepFuzzySet(v.space(), std::move(levels), v.cuts());
}

StepFuzzySet zadeh_extend(const DynMap& f, const StepFuzzySet& u) {
  if (!(f.space() == u.space())) throw std::invalid_argument("space mismatch");
  std::vector<Compactum> cuts;
  cuts.reserve(u.cuts().size());
  for (const auto& c : u.cuts()) cuts.push_back(image_compactum(f, c));
  return StepFuzzySet(u.space(), u.levels(), std::move(cuts));
}

bool operator==(const SendographSegment& a, const SendographSegment& b) {
  return a.base == b.base && a.height == b.height;
}

std::vector<SendographSegment> sendograph(const StepFuzzySet& u) {
  std::vector<SendographSegment> segs;
  segs.reserve(u.support().size());
  for (const auto& x : u.support().points()) {
    segs.push_back(SendographSegment{x, u.membership(x)});
  }
  return segs;
}

std::vector<SendographSegment> normalize_segments(std::vector<SendographSegment> segs) {
  std::sort(segs.begin(), segs.end(), [](const auto& a, const auto& b) {
    return point_less(a.base, b.base);
  });
  std::vector<SendographSegment> out;
  for (auto& s : segs) {
    if (!out.empty() && out.back().base == s.base) {
      out.back().height = rat_max(out.back().height, s.height);
    } else {
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Rat> level_partition(const StepFuzzySet& u, const Rat& eps) {
  if (eps <= 0) throw std::invalid_argument("entourage radius must be positive");
  auto ent = EntourageRef::metric(eps);
  const auto& levels = u.levels();
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    if (!k_entourage_contains(ent, u.right_limit_cut(levels[k]),
                              u.alpha_cut(levels[k + 1]))) {
      throw PostCheckError("partition post-check failed");
    }
  }
  return levels;
}

std::vector<Rat> merge_partitions(const std::vector<Rat>& p, const std::vector<Rat>& q) {
  for (const auto* v : {&p, &q}) {
    if (v->size() < 2 || v->front() != 0 || v->back() != 1 ||
        !std::is_sorted(v->begin(), v->end())) {
      throw std::invalid_argument("partition must run from 0 to 1");
    }
  }
  std::vector<Rat> out;
  out.reserve(p.size() + q.size());
  std::merge(p.begin(), p.end(), q.begin(), q.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fuzzdyn
