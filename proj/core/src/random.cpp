#include "fuzzdyn/random.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace fuzzdyn {

long Rng::below(long n) {
  if (n < 1) throw std::invalid_argument("range must be positive");
  return static_cast<long>(next_u64() % static_cast<std::uint64_t>(n));
}

Rat Rng::unit_rational(long max_den) {
  long den = 1 + below(max_den);
  return rat(below(den + 1), den);
}

Rat Rng::between(const Rat& lo, const Rat& hi, long max_den) {
  if (!(lo < hi)) throw std::invalid_argument("empty interval");
  Rat q = lo + (hi - lo) * unit_rational(max_den);
  if (q <= lo || q >= hi) q = (lo + hi) / 2;
  return q;
}

Point random_point(Rng& rng, const GroundSpace& space, long max_den) {
  if (space.kind() == SpaceKind::Finite) {
    return space.element(static_cast<int>(rng.below(space.finite_size())));
  }
  return space.point(rng.unit_rational(max_den));
}

Compactum random_compactum(Rng& rng, const GroundSpace& space, int max_points, long max_den) {
  if (max_points < 1) throw std::invalid_argument("need at least one point");
  long count = 1 + rng.below(max_points);
  std::vector<Point> pts;
  for (long i = 0; i < count; ++i) pts.push_back(random_point(rng, space, max_den));
  return Compactum(space, std::move(pts));
}

namespace {

Compactum thin(Rng& rng, const Compactum& big) {
  std::vector<Point> kept;
  for (const auto& p : big.points()) {
    if (rng.coin()) kept.push_back(p);
  }
  if (kept.empty()) {
    kept.push_back(big.points()[rng.below(static_cast<long>(big.points().size()))]);
  }
  return Compactum(big.space(), std::move(kept));
}

}  // namespace

std::vector<Compactum> random_nested_chain(Rng& rng, const GroundSpace& space, int length,
                                           int max_points, long max_den) {
  if (length < 1) throw std::invalid_argument("chain length must be positive");
  std::vector<Compactum> chain;
  chain.push_back(random_compactum(rng, space, max_points, max_den));
  for (int i = 1; i < length; ++i) chain.push_back(thin(rng, chain.back()));
  return chain;
}

StepFuzzySet random_step_fuzzy(Rng& rng, const GroundSpace& space, int max_pieces,
                               int max_points, long max_den) {
  if (max_pieces < 1) throw std::invalid_argument("need at least one piece");
  long pieces = 1 + rng.below(max_pieces);
  std::set<Rat> interior;
  for (int attempt = 0; attempt < 64 && static_cast<long>(interior.size()) < pieces - 1;
       ++attempt) {
    interior.insert(rng.between(rat(0), rat(1), max_den));
  }
  std::vector<Rat> levels;
  levels.push_back(rat(0));
  levels.insert(levels.end(), interior.begin(), interior.end());
  levels.push_back(rat(1));
  auto cuts = random_nested_chain(rng, space, static_cast<int>(levels.size()) - 1, max_points,
                                  max_den);
  return StepFuzzySet(space, std::move(levels), std::move(cuts));
}

TimeWarp random_warp(Rng& rng, int max_interior_knots, long max_den) {
  if (max_interior_knots < 0) throw std::invalid_argument("knot count must be non-negative");
  long count = rng.below(max_interior_knots + 1);
  std::set<Rat> xs, ys;
  for (int attempt = 0; attempt < 64 && static_cast<long>(xs.size()) < count; ++attempt) {
    xs.insert(rng.between(rat(0), rat(1), max_den));
  }
  for (int attempt = 0; attempt < 64 && ys.size() < xs.size(); ++attempt) {
    ys.insert(rng.between(rat(0), rat(1), max_den));
  }
  while (ys.size() > xs.size()) ys.erase(ys.begin());
  std::vector<std::pair<Rat, Rat>> knots;
  knots.emplace_back(rat(0), rat(0));
  auto xi = xs.begin();
  auto yi = ys.begin();
  for (; xi != xs.end() && yi != ys.end(); ++xi, ++yi) knots.emplace_back(*xi, *yi);
  knots.emplace_back(rat(1), rat(1));
  return TimeWarp(std::move(knots));
}

GroundSpace random_finite_space(Rng& rng, int size, long max_den) {
  if (size < 1) throw std::invalid_argument("need at least one element");
  std::vector<Rat> weight;
  for (int i = 0; i < size; ++i) weight.push_back(rat(1 + rng.below(max_den), max_den));
  std::vector<std::vector<Rat>> table(size, std::vector<Rat>(size, rat(0)));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (i != j) table[i][j] = weight[i] + weight[j];
    }
  }
  return GroundSpace::finite(std::move(table));
}

}  // namespace fuzzdyn
