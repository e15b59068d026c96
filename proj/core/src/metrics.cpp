#include "fuzzdyn/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fuzzdyn {

namespace {

void require_same_space(const StepFuzzySet& u, const StepFuzzySet& v) {
  if (!(u.space() == v.space())) throw std::invalid_argument("space mismatch");
}

std::vector<std::vector<Rat>> cut_distances(const StepFuzzySet& u, const StepFuzzySet& v) {
  std::vector<std::vector<Rat>> h(u.pieces(), std::vector<Rat>(v.pieces()));
  for (int i = 0; i < u.pieces(); ++i) {
    for (int j = 0; j < v.pieces(); ++j) {
      h[i][j] = hausdorff_distance(u.cuts()[i], v.cuts()[j]);
    }
  }
  return h;
}

// Distance from b to the closed interval [lo, hi]: the infimum cost of
// placing a level strictly inside the corresponding open piece.
Rat clamp_cost(const Rat& b, const Rat& lo, const Rat& hi) {
  if (b < lo) return lo - b;
  if (b > hi) return b - hi;
  return Rat(0);
}

enum class Step { None, FromU, FromV, Diagonal };

struct AlignmentTable {
  std::vector<std::vector<Rat>> cost;
  std::vector<std::vector<Step>> parent;
};

// Minimax alignment of the two piece sequences. A path through cell (i,j)
// pays the cut distance of every region it visits; advancing v alone pays
// the distance from the jump level to the current u-piece's closed level
// range; advancing both pays the exact level gap of the aligned jumps.
AlignmentTable align(const StepFuzzySet& u, const StepFuzzySet& v,
                     const std::vector<std::vector<Rat>>& h) {
  const auto& lu = u.levels();
  const auto& lv = v.levels();
  const int n = u.pieces(), m = v.pieces();
  AlignmentTable t;
  t.cost.assign(n, std::vector<Rat>(m));
  t.parent.assign(n, std::vector<Step>(m, Step::None));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == 0 && j == 0) {
        t.cost[0][0] = h[0][0];
        continue;
      }
      Rat best;
      Step how = Step::None;
      if (i > 0 && j > 0) {
        best = rat_max(t.cost[i - 1][j - 1], rat_abs(Rat(lu[i] - lv[j])));
        how = Step::Diagonal;
      }
      if (i > 0) {
        const Rat& c = t.cost[i - 1][j];
        if (how == Step::None || c < best) {
          best = c;
          how = Step::FromU;
        }
      }
      if (j > 0) {
        Rat c = rat_max(t.cost[i][j - 1], clamp_cost(lv[j], lu[i], lu[i + 1]));
        if (how == Step::None || c < best) {
          best = std::move(c);
          how = Step::FromV;
        }
      }
      t.cost[i][j] = rat_max(best, h[i][j]);
      t.parent[i][j] = how;
    }
  }
  return t;
}

enum class PlacementKind { Exact, NudgeUp, NudgeDown };

struct Placement {
  Rat ideal;
  PlacementKind kind;
};

// Walks the parent pointers and records where each interior jump level of
// v is sent. Exact placements land on a jump level of u; clamped ones sit
// against a piece boundary and need a strict-side nudge.
std::vector<Placement> trace_placements(const StepFuzzySet& u, const StepFuzzySet& v,
                                        const AlignmentTable& t) {
  const auto& lu = u.levels();
  const auto& lv = v.levels();
  std::vector<Placement> rev;
  int i = u.pieces() - 1, j = v.pieces() - 1;
  while (i != 0 || j != 0) {
    switch (t.parent[i][j]) {
      case Step::FromU:
        --i;
        break;
      case Step::FromV: {
        const Rat& b = lv[j];
        if (b < lu[i]) {
          rev.push_back({lu[i], PlacementKind::NudgeUp});
        } else if (b > lu[i + 1]) {
          rev.push_back({lu[i + 1], PlacementKind::NudgeDown});
        } else if (b == lu[i]) {
          rev.push_back({b, PlacementKind::NudgeUp});
        } else if (b == lu[i + 1]) {
          rev.push_back({b, PlacementKind::NudgeDown});
        } else {
          rev.push_back({b, PlacementKind::Exact});
        }
        --j;
        break;
      }
      case Step::Diagonal:
        rev.push_back({lu[i], PlacementKind::Exact});
        --i;
        --j;
        break;
      case Step::None:
        throw std::logic_error("alignment trace escaped the table");
    }
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

TimeWarp build_warp(const StepFuzzySet& u, const StepFuzzySet& v,
                    const AlignmentTable& t) {
  const int m = v.pieces();
  if (m == 1) return TimeWarp::identity();
  auto placements = trace_placements(u, v, t);

  // Nudge step well under the least positive gap between any two of the
  // involved levels, so nudged knots never cross a neighboring level.
  std::vector<Rat> grid = u.levels();
  grid.insert(grid.end(), v.levels().begin(), v.levels().end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  Rat gap(1);
  for (std::size_t k = 1; k < grid.size(); ++k) {
    gap = rat_min(gap, Rat(grid[k] - grid[k - 1]));
  }
  const Rat delta = gap / (4 * (m + 1));

  std::vector<Rat> target(placements.size());
  for (std::size_t k = 0; k < placements.size(); ++k) {
    // A run of equal ideals is ordered NudgeDown*, Exact?, NudgeUp*; the
    // downs count back from the shared value, the ups count forward.
    if (placements[k].kind == PlacementKind::NudgeDown) {
      std::size_t end = k;
      while (end < placements.size() &&
             placements[end].kind == PlacementKind::NudgeDown &&
             placements[end].ideal == placements[k].ideal) {
        ++end;
      }
      const std::size_t run = end - k;
      for (std::size_t r = 0; r < run; ++r) {
        target[k + r] = placements[k].ideal - delta * static_cast<long>(run - r);
      }
      k = end - 1;
    } else if (placements[k].kind == PlacementKind::NudgeUp) {
      std::size_t start = k;
      while (k + 1 < placements.size() &&
             placements[k + 1].kind == PlacementKind::NudgeUp &&
             placements[k + 1].ideal == placements[start].ideal) {
        ++k;
      }
      for (std::size_t r = start; r <= k; ++r) {
        target[r] = placements[start].ideal + delta * static_cast<long>(r - start + 1);
      }
    } else {
      target[k] = placements[k].ideal;
    }
  }

  std::vector<std::pair<Rat, Rat>> knots;
  knots.reserve(placements.size() + 2);
  knots.emplace_back(Rat(0), Rat(0));
  for (std::size_t k = 0; k < target.size(); ++k) {
    knots.emplace_back(v.levels()[k + 1], target[k]);
  }
  knots.emplace_back(Rat(1), Rat(1));
  return TimeWarp(std::move(knots));
}

}  // namespace

Rat d_infty(const StepFuzzySet& u, const StepFuzzySet& v) {
  require_same_space(u, v);
  Rat worst = hausdorff_distance(u.support(), v.support());
  auto levels = merge_partitions(u.levels(), v.levels());
  for (std::size_t k = 1; k < levels.size(); ++k) {
    Rat d = hausdorff_distance(u.alpha_cut(levels[k]), v.alpha_cut(levels[k]));
    if (d > worst) worst = std::move(d);
  }
  return worst;
}

namespace {

Rat directed_sendo(const StepFuzzySet& u, const StepFuzzySet& v) {
  Rat worst(0);
  for (const auto& x : u.support().points()) {
    const Rat ux = u.membership(x);
    bool first = true;
    Rat best(0);
    for (const auto& y : v.support().points()) {
      Rat c = rat_max(distance(u.space(), x, y), rat_max(Rat(ux - v.membership(y)), Rat(0)));
      if (first || c < best) {
        best = std::move(c);
        first = false;
      }
    }
    if (best > worst) worst = std::move(best);
  }
  return worst;
}

}  // namespace

Rat d_sendo(const StepFuzzySet& u, const StepFuzzySet& v) {
  require_same_space(u, v);
  return rat_max(directed_sendo(u, v), directed_sendo(v, u));
}

SkorokhodResult skorokhod_alignment(const StepFuzzySet& u, const StepFuzzySet& v) {
  require_same_space(u, v);
  auto h = cut_distances(u, v);
  auto t = align(u, v, h);
  return SkorokhodResult{t.cost[u.pieces() - 1][v.pieces() - 1], build_warp(u, v, t)};
}

Rat d_skorokhod(const StepFuzzySet& u, const StepFuzzySet& v) {
  require_same_space(u, v);
  auto h = cut_distances(u, v);
  return align(u, v, h).cost[u.pieces() - 1][v.pieces() - 1];
}

bool f_entourage_contains(const Rat& eps, const StepFuzzySet& u, const StepFuzzySet& v) {
  require_same_space(u, v);
  if (eps <= 0) throw std::invalid_argument("entourage radius must be positive");
  auto ent = EntourageRef::metric(eps);
  if (!k_entourage_contains(ent, u.support(), v.support())) return false;
  auto levels = merge_partitions(u.levels(), v.levels());
  for (std::size_t k = 1; k < levels.size(); ++k) {
    if (!k_entourage_contains(ent, u.alpha_cut(levels[k]), v.alpha_cut(levels[k]))) {
      return false;
    }
  }
  return true;
}

bool g_entourage_contains(const Rat& eps_metric, const Rat& eps_warp,
                          const StepFuzzySet& u, const StepFuzzySet& v) {
  require_same_space(u, v);
  if (eps_metric <= 0 || eps_warp <= 0) {
    throw std::invalid_argument("entourage radius must be positive");
  }
  const auto& lu = u.levels();
  const auto& lv = v.levels();
  const int n = u.pieces(), m = v.pieces();
  auto h = cut_distances(u, v);
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(m, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (!(h[i][j] < eps_metric)) continue;
      if (i == 0 && j == 0) {
        ok[0][0] = true;
        continue;
      }
      bool reach = false;
      if (i > 0 && ok[i - 1][j]) reach = true;
      if (!reach && j > 0 && ok[i][j - 1]) {
        reach = clamp_cost(lv[j], lu[i], lu[i + 1]) < eps_warp;
      }
      if (!reach && i > 0 && j > 0 && ok[i - 1][j - 1]) {
        reach = rat_abs(Rat(lu[i] - lv[j])) < eps_warp;
      }
      ok[i][j] = reach;
    }
  }
  return ok[n - 1][m - 1];
}

bool s_entourage_contains(const Rat& eps_metric, const Rat& eps_height,
                          const StepFuzzySet& u, const StepFuzzySet& v) {
  require_same_space(u, v);
  if (eps_metric <= 0 || eps_height <= 0) {
    throw std::invalid_argument("entourage radius must be positive");
  }
  auto covered = [&](const StepFuzzySet& a, const StepFuzzySet& b) {
    for (const auto& x : a.support().points()) {
      const Rat ax = a.membership(x);
      bool hit = false;
      for (const auto& y : b.support().points()) {
        if (distance(a.space(), x, y) < eps_metric && ax - b.membership(y) < eps_height) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  };
  return covered(u, v) && covered(v, u);
}

}  // namespace fuzzdyn
