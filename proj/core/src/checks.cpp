#include "fuzzdyn/checks.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fuzzdyn/compacta.hpp"
#include "fuzzdyn/dynamics.hpp"
#include "fuzzdyn/errors.hpp"
#include "fuzzdyn/ground.hpp"
#include "fuzzdyn/metrics.hpp"
#include "fuzzdyn/random.hpp"

namespace fuzzdyn {

namespace {

void note_failure(CheckReport& r, const std::string& text) {
  ++r.failures;
  if (r.notes.size() < 4) r.notes.push_back(text);
}

GroundSpace space_for(Rng& rng, long which) {
  switch (which % 3) {
    case 0:
      return GroundSpace::unit_interval();
    case 1:
      return GroundSpace::circle();
    default:
      return random_finite_space(rng, 2 + static_cast<int>(rng.below(3)), 8);
  }
}

DynMap map_for(Rng& rng, const GroundSpace& sp) {
  if (sp.kind() == SpaceKind::UnitInterval) {
    if (rng.coin()) return DynMap::tent();
    Rat mid = rng.between(rat(0), rat(1), 8);
    return DynMap::piecewise_linear({rat(0), mid, rat(1)},
                                    {rng.unit_rational(8), rng.unit_rational(8),
                                     rng.unit_rational(8)});
  }
  if (sp.kind() == SpaceKind::Circle) {
    if (rng.coin()) return DynMap::doubling();
    return DynMap::rotation(rat(1 + rng.below(11), 12));
  }
  std::vector<int> tgt;
  for (int i = 0; i < sp.finite_size(); ++i) {
    tgt.push_back(static_cast<int>(rng.below(sp.finite_size())));
  }
  return DynMap::finite_table(sp, std::move(tgt));
}

// Least positive gap in the union of both level sets; matches the spacing
// the alignment's knot nudges are measured against.
Rat min_level_gap(const StepFuzzySet& u, const StepFuzzySet& v) {
  std::vector<Rat> all = u.levels();
  all.insert(all.end(), v.levels().begin(), v.levels().end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  Rat gap(1);
  for (std::size_t i = 1; i < all.size(); ++i) {
    gap = rat_min(gap, Rat(all[i] - all[i - 1]));
  }
  return gap;
}

// Jump levels from {1/4, 1/2, 3/4} and cuts chained over the five-point
// 1/4 grid. Gaps of at least 1/4 dominate any 1/32 lattice displacement,
// which is what makes the lattice oracle tight on this family.
StepFuzzySet random_grid_instance(Rng& rng, const GroundSpace& sp) {
  std::vector<Rat> levels{rat(0)};
  for (int i = 1; i <= 3; ++i) {
    if (rng.coin()) levels.push_back(rat(i, 4));
  }
  levels.push_back(rat(1));
  const int pieces = static_cast<int>(levels.size()) - 1;
  while (true) {
    std::vector<int> thr(5);
    bool top = false;
    for (auto& t : thr) {
      t = static_cast<int>(rng.below(pieces + 1));
      if (t == pieces) top = true;
    }
    if (!top) continue;
    std::vector<Compactum> cuts;
    for (int i = 1; i <= pieces; ++i) {
      std::vector<Point> pts;
      for (int p = 0; p < 5; ++p) {
        if (thr[p] >= i) pts.push_back(sp.point(rat(p, 4)));
      }
      cuts.emplace_back(sp, std::move(pts));
    }
    return StepFuzzySet(sp, levels, std::move(cuts));
  }
}

// Mask-level K membership used by the exhaustive relation sweeps: every
// point of 'to' is reachable from 'from' and vice versa.
bool mask_cover(const Relation& w, int n, unsigned from, unsigned to) {
  for (int x = 0; x < n; ++x) {
    if (((to >> x) & 1u) == 0) continue;
    bool hit = false;
    for (int a = 0; a < n; ++a) {
      if (((from >> a) & 1u) != 0 && w.at(a, x)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

bool mask_k(const Relation& w, int n, unsigned a, unsigned b) {
  return mask_cover(w, n, a, b) && mask_cover(w, n, b, a);
}

Relation relation_from_mask(int n, unsigned mask) {
  Relation w(n);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        w.set(i, j);
        continue;
      }
      if ((mask >> bit) & 1u) w.set(i, j);
      ++bit;
    }
  }
  return w;
}

}  // namespace

Rat skorokhod_grid_oracle(const StepFuzzySet& u, const StepFuzzySet& v, long grid_den) {
  if (grid_den < 1) throw std::invalid_argument("grid resolution must be positive");
  if (!(u.space() == v.space())) throw std::invalid_argument("space mismatch");

  Rat best = d_infty(u, v);  // identity warp
  const auto& lv = v.levels();
  const std::size_t jumps = lv.size() - 2;
  if (jumps == 0) return best;

  // Candidate targets: the interior lattice, refined by the left side's own
  // interior levels so off-lattice jumps still have exact anchors.
  std::vector<Rat> cand;
  for (long k = 1; k < grid_den; ++k) cand.push_back(rat(k, grid_den));
  for (std::size_t i = 1; i + 1 < u.levels().size(); ++i) cand.push_back(u.levels()[i]);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  const std::size_t m = cand.size();
  if (m < jumps) return best;

  std::vector<std::size_t> pick(jumps);
  for (std::size_t i = 0; i < jumps; ++i) pick[i] = i;
  while (true) {
    std::vector<std::pair<Rat, Rat>> knots;
    knots.emplace_back(rat(0), rat(0));
    for (std::size_t i = 0; i < jumps; ++i) knots.emplace_back(lv[i + 1], cand[pick[i]]);
    knots.emplace_back(rat(1), rat(1));
    TimeWarp t(std::move(knots));
    Rat wn = warp_norm(t);
    if (wn < best) {
      Rat obj = rat_max(wn, d_infty(u, warp_apply(t, v)));
      if (obj < best) best = obj;
    }

    std::size_t i = jumps;
    bool advanced = false;
    while (i-- > 0) {
      if (pick[i] + (jumps - i) < m) {
        ++pick[i];
        for (std::size_t k = i + 1; k < jumps; ++k) pick[k] = pick[k - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return best;
}

std::vector<CheckReport> run_metric_suite(std::uint64_t seed, long cases) {
  Rng rng(seed);
  CheckReport hd{"hausdorff-axioms"};
  CheckReport li{"level-metric-axioms"};
  CheckReport se{"sendograph-metric-axioms"};
  CheckReport sk{"warped-metric-axioms"};
  CheckReport ord{"metric-ordering"};
  CheckReport align{"alignment-realizes-value"};
  CheckReport grid{"warped-vs-lattice-oracle"};

  for (long c = 0; c < cases; ++c) {
    GroundSpace sp = space_for(rng, c);
    Compactum a = random_compactum(rng, sp, 5, 12);
    Compactum b = random_compactum(rng, sp, 5, 12);
    Compactum cc = random_compactum(rng, sp, 5, 12);
    ++hd.cases;
    bool ok = hausdorff_distance(a, a) == 0 &&
              (hausdorff_distance(a, b) == 0) == (a == b) &&
              hausdorff_distance(a, b) == hausdorff_distance(b, a) &&
              hausdorff_distance(a, cc) <=
                  Rat(hausdorff_distance(a, b) + hausdorff_distance(b, cc));
    if (!ok) note_failure(hd, "set triple " + std::to_string(c));

    StepFuzzySet u = random_step_fuzzy(rng, sp, 4, 5, 12);
    StepFuzzySet v = random_step_fuzzy(rng, sp, 4, 5, 12);
    StepFuzzySet w = random_step_fuzzy(rng, sp, 4, 5, 12);

    ++li.cases;
    ok = d_infty(u, u) == 0 && (d_infty(u, v) == 0) == (u == v) &&
         d_infty(u, v) == d_infty(v, u) &&
         d_infty(u, w) <= Rat(d_infty(u, v) + d_infty(v, w));
    if (!ok) note_failure(li, "fuzzy triple " + std::to_string(c));

    ++se.cases;
    ok = d_sendo(u, u) == 0 && (d_sendo(u, v) == 0) == (u == v) &&
         d_sendo(u, v) == d_sendo(v, u) &&
         d_sendo(u, w) <= Rat(d_sendo(u, v) + d_sendo(v, w));
    if (!ok) note_failure(se, "fuzzy triple " + std::to_string(c));

    ++sk.cases;
    Rat duv = d_skorokhod(u, v);
    ok = d_skorokhod(u, u) == 0 && (duv == 0) == (u == v) &&
         duv == d_skorokhod(v, u) &&
         d_skorokhod(u, w) <= Rat(duv + d_skorokhod(v, w));
    if (!ok) note_failure(sk, "fuzzy triple " + std::to_string(c));

    ++ord.cases;
    Rat di = d_infty(u, v);
    Rat ds = d_sendo(u, v);
    ok = duv <= di && ds <= di && ds <= Rat(2 * duv);
    if (!ok) note_failure(ord, "pair " + std::to_string(c));

    ++align.cases;
    auto res = skorokhod_alignment(u, v);
    Rat obj = rat_max(warp_norm(res.warp), d_infty(u, warp_apply(res.warp, v)));
    Rat slack = Rat(min_level_gap(u, v) / 4);
    ok = res.value == duv && obj >= res.value && obj <= Rat(res.value + slack);
    if (!ok) note_failure(align, "pair " + std::to_string(c) + " objective " + rat_str(obj));
  }

  const long lattice_pairs = std::max<long>(4, cases / 100);
  GroundSpace unit = GroundSpace::unit_interval();
  for (long c = 0; c < lattice_pairs; ++c) {
    StepFuzzySet u = random_grid_instance(rng, unit);
    StepFuzzySet v = random_grid_instance(rng, unit);
    ++grid.cases;
    Rat dp = d_skorokhod(u, v);
    Rat oracle = skorokhod_grid_oracle(u, v, 32);
    bool ok = dp <= oracle && Rat(oracle - dp) <= rat(1, 1024);
    if (!ok) {
      note_failure(grid, "pair " + std::to_string(c) + " dp " + rat_str(dp) + " lattice " +
                             rat_str(oracle));
    }
  }

  return {hd, li, se, sk, ord, align, grid};
}

std::vector<CheckReport> run_zadeh_suite(std::uint64_t seed, long cases) {
  Rng rng(seed);
  CheckReport cut{"cut-identity"};
  CheckReport chi{"characteristic-law"};
  CheckReport warp{"warp-commutation"};
  CheckReport rot{"rotation-iterate-law"};
  CheckReport fin{"finite-iterate-exhaustive"};
  CheckReport send{"sendograph-image-law"};

  for (long c = 0; c < cases; ++c) {
    GroundSpace sp = space_for(rng, c);
    DynMap f = map_for(rng, sp);
    StepFuzzySet u = random_step_fuzzy(rng, sp, 4, 5, 12);
    StepFuzzySet fu = zadeh_extend(f, u);

    ++cut.cases;
    bool ok = true;
    for (const auto& a : u.levels()) {
      if (!(fu.alpha_cut(a) == image_compactum(f, u.alpha_cut(a)))) ok = false;
    }
    Rat extra = rng.between(rat(0), rat(1), 16);
    if (!(fu.alpha_cut(extra) == image_compactum(f, u.alpha_cut(extra)))) ok = false;
    if (!ok) note_failure(cut, "case " + std::to_string(c));

    ++chi.cases;
    Compactum k = random_compactum(rng, sp, 5, 12);
    if (!(zadeh_extend(f, StepFuzzySet::characteristic(k)) ==
          StepFuzzySet::characteristic(image_compactum(f, k)))) {
      note_failure(chi, "case " + std::to_string(c));
    }

    ++warp.cases;
    TimeWarp t = random_warp(rng, 3, 12);
    if (!(zadeh_extend(f, warp_apply(t, u)) == warp_apply(t, fu))) {
      note_failure(warp, "case " + std::to_string(c));
    }

    ++rot.cases;
    Rat theta = rat(rng.below(12), 12);
    DynMap g = DynMap::rotation(theta);
    StepFuzzySet cu = random_step_fuzzy(rng, GroundSpace::circle(), 4, 5, 12);
    long n = 1 + rng.below(4);
    StepFuzzySet lhs = cu;
    for (long i = 0; i < n; ++i) lhs = zadeh_extend(g, lhs);
    if (!(lhs == zadeh_extend(DynMap::rotation(Rat(theta * n)), cu))) {
      note_failure(rot, "case " + std::to_string(c));
    }

    ++send.cases;
    auto lseg = normalize_segments(sendograph(fu));
    auto rseg = sendograph(u);
    for (auto& s : rseg) s.base = apply_map(f, s.base);
    if (!(lseg == normalize_segments(std::move(rseg)))) {
      note_failure(send, "case " + std::to_string(c));
    }
  }

  for (int n_elems = 1; n_elems <= 4; ++n_elems) {
    std::vector<std::vector<Rat>> table(n_elems, std::vector<Rat>(n_elems, rat(1, 2)));
    for (int i = 0; i < n_elems; ++i) table[i][i] = rat(0);
    GroundSpace sp = GroundSpace::finite(table);

    long map_count = 1;
    for (int i = 0; i < n_elems; ++i) map_count *= n_elems;
    long chain_count = 1;
    for (int i = 0; i < n_elems; ++i) chain_count *= 3;

    for (long mc = 0; mc < map_count; ++mc) {
      std::vector<int> tgt(n_elems);
      long rem = mc;
      for (int i = 0; i < n_elems; ++i) {
        tgt[i] = static_cast<int>(rem % n_elems);
        rem /= n_elems;
      }
      DynMap f = DynMap::finite_table(sp, tgt);

      for (long pc = 0; pc < chain_count; ++pc) {
        std::vector<int> thr(n_elems);
        rem = pc;
        bool top = false;
        for (int i = 0; i < n_elems; ++i) {
          thr[i] = static_cast<int>(rem % 3);
          rem /= 3;
          if (thr[i] == 2) top = true;
        }
        if (!top) continue;
        std::vector<Point> c1, c2;
        for (int i = 0; i < n_elems; ++i) {
          if (thr[i] >= 1) c1.push_back(sp.element(i));
          if (thr[i] >= 2) c2.push_back(sp.element(i));
        }
        StepFuzzySet u(sp, {rat(0), rat(1, 2), rat(1)},
                       {Compactum(sp, c1), Compactum(sp, c2)});

        std::vector<int> comp(n_elems);
        for (int i = 0; i < n_elems; ++i) comp[i] = i;
        StepFuzzySet iter = u;
        for (long step = 1; step <= 4; ++step) {
          iter = zadeh_extend(f, iter);
          for (int i = 0; i < n_elems; ++i) comp[i] = tgt[comp[i]];
          ++fin.cases;
          if (!(iter == zadeh_extend(DynMap::finite_table(sp, comp), u))) {
            note_failure(fin, "size " + std::to_string(n_elems) + " map " +
                                  std::to_string(mc) + " step " + std::to_string(step));
          }
        }
      }
    }
  }

  return {cut, chi, warp, rot, fin, send};
}

std::vector<CheckReport> run_entourage_suite(std::uint64_t seed, long cases) {
  Rng rng(seed);
  CheckReport mono{"k-monotone-exhaustive"};
  CheckReport uni{"k-union-exhaustive"};
  CheckReport agree{"metric-relational-agreement"};
  CheckReport lemmas{"k-lemmas-on-uniformities"};
  CheckReport part{"partition-post-check"};
  CheckReport refine{"refinement-constancy"};

  // Every reflexive relation on up to four points, against every nested
  // non-empty triple A within B within C.
  for (int n = 2; n <= 4; ++n) {
    const unsigned rel_count = 1u << (n * n - n);
    const unsigned prof_count = 1u << (2 * n);
    for (unsigned mask = 0; mask < rel_count; ++mask) {
      Relation w = relation_from_mask(n, mask);
      for (unsigned prof = 0; prof < prof_count; ++prof) {
        unsigned am = 0, bm = 0, cm = 0;
        for (int i = 0; i < n; ++i) {
          unsigned d = (prof >> (2 * i)) & 3u;
          if (d >= 3) am |= 1u << i;
          if (d >= 2) bm |= 1u << i;
          if (d >= 1) cm |= 1u << i;
        }
        if (am == 0) continue;
        ++mono.cases;
        if (mask_k(w, n, am, cm) &&
            !(mask_k(w, n, am, bm) && mask_k(w, n, bm, cm))) {
          note_failure(mono, "n " + std::to_string(n) + " relation " + std::to_string(mask) +
                                 " profile " + std::to_string(prof));
        }
      }
    }
  }

  // Union law, exhaustively on up to three points.
  for (int n = 2; n <= 3; ++n) {
    const unsigned rel_count = 1u << (n * n - n);
    const unsigned set_count = 1u << n;
    for (unsigned mask = 0; mask < rel_count; ++mask) {
      Relation w = relation_from_mask(n, mask);
      for (unsigned a = 1; a < set_count; ++a) {
        for (unsigned c = 1; c < set_count; ++c) {
          if (!mask_k(w, n, a, c)) continue;
          for (unsigned b = 1; b < set_count; ++b) {
            for (unsigned d = 1; d < set_count; ++d) {
              if (!mask_k(w, n, b, d)) continue;
              ++uni.cases;
              if (!mask_k(w, n, a | b, c | d)) {
                note_failure(uni, "n " + std::to_string(n) + " relation " +
                                      std::to_string(mask));
              }
            }
          }
        }
      }
    }
  }

  for (long c = 0; c < cases; ++c) {
    GroundSpace sp = random_finite_space(rng, 2 + static_cast<int>(rng.below(3)), 8);
    Rat top = rat(1 + rng.below(8), 4);
    auto uf = std::make_shared<FiniteUniformity>(FiniteUniformity::from_metric(sp, top));
    int idx = static_cast<int>(rng.below(uf->base_size()));
    Rat eps = top;
    for (int i = 0; i < idx; ++i) eps = Rat(eps / 2);
    EntourageRef rel_ref = EntourageRef::relational(uf, idx);
    EntourageRef met_ref = EntourageRef::metric(eps);

    ++agree.cases;
    Compactum a = random_compactum(rng, sp, 4, 8);
    Compactum b = random_compactum(rng, sp, 4, 8);
    if (k_entourage_contains(rel_ref, a, b) != k_entourage_contains(met_ref, a, b)) {
      note_failure(agree, "case " + std::to_string(c) + " radius " + rat_str(eps));
    }

    ++lemmas.cases;
    bool ok = true;
    auto chain = random_nested_chain(rng, sp, 3, 4, 8);
    if (k_entourage_contains(rel_ref, chain[2], chain[0])) {
      ok = k_entourage_contains(rel_ref, chain[2], chain[1]) &&
           k_entourage_contains(rel_ref, chain[1], chain[0]);
    }
    Compactum c2 = random_compactum(rng, sp, 4, 8);
    Compactum d2 = random_compactum(rng, sp, 4, 8);
    if (ok && k_entourage_contains(rel_ref, a, c2) && k_entourage_contains(rel_ref, b, d2)) {
      ok = k_entourage_contains(rel_ref, union_of(a, b), union_of(c2, d2));
    }
    if (!ok) note_failure(lemmas, "case " + std::to_string(c));
  }

  for (long c = 0; c < cases; ++c) {
    GroundSpace sp = space_for(rng, c);
    StepFuzzySet u = random_step_fuzzy(rng, sp, 4, 5, 12);
    StepFuzzySet v = random_step_fuzzy(rng, sp, 4, 5, 12);
    Rat eps = rat(1 + rng.below(8), 16);

    ++part.cases;
    try {
      if (!(level_partition(u, eps) == u.levels())) {
        note_failure(part, "case " + std::to_string(c));
      }
    } catch (const std::exception& e) {
      note_failure(part, std::string("case ") + std::to_string(c) + ": " + e.what());
    }

    ++refine.cases;
    auto merged = merge_partitions(level_partition(u, eps), level_partition(v, eps));
    bool ok = !merged.empty() && merged.front() == 0 && merged.back() == 1;
    for (std::size_t i = 1; ok && i < merged.size(); ++i) {
      if (!(merged[i - 1] < merged[i])) ok = false;
      Rat mid = Rat((merged[i - 1] + merged[i]) / 2);
      if (ok && !(u.alpha_cut(mid) == u.alpha_cut(merged[i]) &&
                  v.alpha_cut(mid) == v.alpha_cut(merged[i]))) {
        ok = false;
      }
    }
    for (const auto& lev : u.levels()) {
      if (!std::binary_search(merged.begin(), merged.end(), lev)) ok = false;
    }
    for (const auto& lev : v.levels()) {
      if (!std::binary_search(merged.begin(), merged.end(), lev)) ok = false;
    }
    if (!ok) note_failure(refine, "case " + std::to_string(c));
  }

  return {mono, uni, agree, lemmas, part, refine};
}

std::vector<CheckReport> run_witness_suite(std::uint64_t seed, long cases) {
  Rng rng(seed);
  CheckReport tw{"tent-witness-certificates"};
  CheckReport dw{"doubling-witness-certificates"};
  CheckReport sep{"rotation-separation-consistency"};
  CheckReport inv{"isometry-distance-invariance"};
  CheckReport wm{"weak-mixing-iterate"};

  const Rat eps_list[2] = {rat(1, 4), rat(1, 16)};
  for (long c = 0; c < cases; ++c) {
    GroundSpace interval = GroundSpace::unit_interval();
    StepFuzzySet u = random_step_fuzzy(rng, interval, 3, 6, 16);
    StepFuzzySet v = random_step_fuzzy(rng, interval, 3, 6, 16);
    for (const Rat& eps : eps_list) {
      ++tw.cases;
      try {
        auto cert = fuzzy_witness(DynMap::tent(), u, v, eps);
        auto end = orbit_fuzzy(DynMap::tent(), cert.w, cert.n).back();
        bool ok = cert.n >= 1 && cert.d_source < eps && cert.d_target < eps &&
                  d_infty(u, cert.w) == cert.d_source &&
                  d_infty(end, v) == cert.d_target &&
                  d_skorokhod(u, cert.w) < eps && d_skorokhod(end, v) < eps &&
                  d_sendo(u, cert.w) < eps && d_sendo(end, v) < eps;
        if (!ok) note_failure(tw, "case " + std::to_string(c) + " eps " + rat_str(eps));
      } catch (const std::exception& e) {
        note_failure(tw, std::string("case ") + std::to_string(c) + ": " + e.what());
      }
    }

    if (c % 4 == 0) {
      GroundSpace circle = GroundSpace::circle();
      StepFuzzySet cu = random_step_fuzzy(rng, circle, 3, 5, 16);
      StepFuzzySet cv = random_step_fuzzy(rng, circle, 3, 5, 16);
      ++dw.cases;
      try {
        auto cert = fuzzy_witness(DynMap::doubling(), cu, cv, rat(1, 8));
        auto end = orbit_fuzzy(DynMap::doubling(), cert.w, cert.n).back();
        bool ok = cert.n >= 1 && cert.d_source < rat(1, 8) && cert.d_target < rat(1, 8) &&
                  d_infty(cu, cert.w) == cert.d_source && d_infty(end, cv) == cert.d_target;
        if (!ok) note_failure(dw, "case " + std::to_string(c));
      } catch (const std::exception& e) {
        note_failure(dw, std::string("case ") + std::to_string(c) + ": " + e.what());
      }
    }
  }

  for (long c = 0; c < cases; ++c) {
    GroundSpace circle = GroundSpace::circle();
    DynMap f = DynMap::rotation(rat(1 + rng.below(11), 12));
    StepFuzzySet u = random_step_fuzzy(rng, circle, 3, 5, 12);
    StepFuzzySet v = random_step_fuzzy(rng, circle, 3, 5, 12);
    Rat eu = rat(1 + rng.below(4), 64);
    Rat ev = rat(1 + rng.below(4), 64);
    auto cert = isometry_separation_certificate(f, u, eu, v, ev);
    ++sep.cases;
    bool ok = cert.certified == (cert.diameter_gap > Rat(2 * eu + 2 * ev));
    if (cert.certified) {
      auto run = empirical_hitting(f, u, eu, v, ev, 48, MetricKind::Infty, 3, rng.next_u64());
      ok = ok && !run.found && run.achieved_distance >= cert.lower_bound;
      auto run2 =
          empirical_hitting(f, u, eu, v, ev, 48, MetricKind::Skorokhod, 3, rng.next_u64());
      ok = ok && !run2.found;
    }
    if (!ok) note_failure(sep, "case " + std::to_string(c));

    ++inv.cases;
    bool inv_ok;
    if (rng.coin()) {
      StepFuzzySet fu = zadeh_extend(f, u);
      StepFuzzySet fv = zadeh_extend(f, v);
      inv_ok = d_infty(fu, fv) == d_infty(u, v) && d_sendo(fu, fv) == d_sendo(u, v) &&
               d_skorokhod(fu, fv) == d_skorokhod(u, v);
    } else {
      int n_elems = 3 + static_cast<int>(rng.below(2));
      std::vector<std::vector<Rat>> table(n_elems, std::vector<Rat>(n_elems, rat(1, 2)));
      for (int i = 0; i < n_elems; ++i) table[i][i] = rat(0);
      GroundSpace sp = GroundSpace::finite(table);
      std::vector<int> perm(n_elems);
      for (int i = 0; i < n_elems; ++i) perm[i] = i;
      for (int i = n_elems - 1; i > 0; --i) {
        std::swap(perm[i], perm[rng.below(i + 1)]);
      }
      DynMap g = DynMap::finite_table(sp, perm);
      StepFuzzySet a = random_step_fuzzy(rng, sp, 3, n_elems, 8);
      StepFuzzySet b = random_step_fuzzy(rng, sp, 3, n_elems, 8);
      StepFuzzySet ga = zadeh_extend(g, a);
      StepFuzzySet gb = zadeh_extend(g, b);
      inv_ok = g.is_isometry() && d_infty(ga, gb) == d_infty(a, b) &&
               d_sendo(ga, gb) == d_sendo(a, b) &&
               d_skorokhod(ga, gb) == d_skorokhod(a, b);
    }
    if (!inv_ok) note_failure(inv, "case " + std::to_string(c));
  }

  const long mixing_cases = cases / 4 + 1;
  for (long c = 0; c < mixing_cases; ++c) {
    bool on_interval = rng.coin();
    DynMap f = on_interval ? DynMap::tent() : DynMap::doubling();
    int pair_count = 2 + static_cast<int>(rng.below(2));
    std::vector<IntervalPair> pairs;
    for (int i = 0; i < pair_count; ++i) {
      IntervalPair p;
      if (on_interval) {
        long lo = rng.below(7);
        long len = 1 + rng.below(8 - lo);
        p.u_lo = rat(lo, 8);
        p.u_hi = rat(lo + len, 8);
        lo = rng.below(7);
        len = 1 + rng.below(8 - lo);
        p.v_lo = rat(lo, 8);
        p.v_hi = rat(lo + len, 8);
      } else {
        long lo = rng.below(8);
        long len = 1 + rng.below(7);
        p.u_lo = rat(lo, 8);
        p.u_hi = rat(lo + len, 8);
        lo = rng.below(8);
        len = 1 + rng.below(7);
        p.v_lo = rat(lo, 8);
        p.v_hi = rat(lo + len, 8);
      }
      pairs.push_back(std::move(p));
    }
    ++wm.cases;
    try {
      if (weak_mixing_check(f, pairs) < 1) {
        note_failure(wm, "case " + std::to_string(c));
      }
    } catch (const std::exception& e) {
      note_failure(wm, std::string("case ") + std::to_string(c) + ": " + e.what());
    }
  }

  return {tw, dw, sep, inv, wm};
}

}  // namespace fuzzdyn
