#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fuzzdyn/errors.hpp"
#include "fuzzdyn/fuzzy.hpp"

using namespace fuzzdyn;

namespace {

const GroundSpace I = GroundSpace::unit_interval();

Compactum pts(std::initializer_list<Rat> coords) {
  std::vector<Point> v;
  for (const auto& c : coords) v.push_back(I.point(c));
  return Compactum(I, std::move(v));
}

// u(0) = 1, u(1) = 1/2: support {0,1}, top cut {0}.
StepFuzzySet two_level() {
  return StepFuzzySet(I, {Rat(0), rat(1, 2), Rat(1)}, {pts({0, 1}), pts({0})});
}

}  // namespace

TEST_CASE("construction validates the chain") {
  CHECK_NOTHROW(two_level());
  CHECK_NOTHROW(StepFuzzySet::characteristic(pts({rat(1, 3)})));
  CHECK_THROWS_WITH(StepFuzzySet(I, {Rat(0), Rat(1)}, {}), "not normal");
  CHECK_THROWS_WITH(
      StepFuzzySet(I, {Rat(0), rat(1, 2), Rat(1)}, {pts({0}), pts({0, 1})}),
      "cuts not decreasing");
  CHECK_THROWS_WITH(StepFuzzySet(I, {Rat(0), Rat(1)}, {pts({0}), pts({0})}),
                    "levels and cuts misaligned");
  CHECK_THROWS_WITH(
      StepFuzzySet(I, {rat(1, 4), Rat(1)}, {pts({0})}), "levels must start at 0");
  CHECK_THROWS_WITH(
      StepFuzzySet(I, {Rat(0), rat(1, 2)}, {pts({0})}), "levels must end at 1");
  CHECK_THROWS_WITH(
      StepFuzzySet(I, {Rat(0), rat(1, 2), rat(1, 2), Rat(1)},
                   {pts({0, 1}), pts({0, 1}), pts({0})}),
      "levels not increasing");
}

TEST_CASE("adjacent equal cuts merge away") {
  StepFuzzySet u(I, {Rat(0), rat(1, 2), Rat(1)}, {pts({0}), pts({0})});
  CHECK(u.levels() == std::vector<Rat>{Rat(0), Rat(1)});
  CHECK(u.pieces() == 1);
  CHECK(u == StepFuzzySet::characteristic(pts({0})));
  // canonicalization is idempotent: rebuilding from the parts is a no-op
  StepFuzzySet again(I, u.levels(), u.cuts());
  CHECK(again == u);
}

TEST_CASE("alpha cuts follow the left-closed piece convention") {
  auto u = two_level();
  CHECK(u.alpha_cut(rat(1, 2)) == pts({0, 1}));
  CHECK(u.alpha_cut(rat(3, 4)) == pts({0}));
  CHECK(u.alpha_cut(Rat(0)) == pts({0, 1}));
  CHECK(u.alpha_cut(Rat(1)) == pts({0}));
  CHECK(u.alpha_cut(rat(1, 100)) == pts({0, 1}));
  CHECK_THROWS_AS(u.alpha_cut(rat(11, 10)), std::invalid_argument);

  auto chi = StepFuzzySet::characteristic(pts({rat(1, 4), rat(3, 4)}));
  CHECK(chi.alpha_cut(rat(1, 3)) == chi.alpha_cut(Rat(1)));
}

TEST_CASE("right limit cuts") {
  auto u = two_level();
  // at the jump the limit from above is the next cut down
  CHECK(u.right_limit_cut(rat(1, 2)) == pts({0}));
  // at 0 the limit is the support
  CHECK(u.right_limit_cut(Rat(0)) == pts({0, 1}));
  // inside a piece it is the piece's own cut
  CHECK(u.right_limit_cut(rat(1, 4)) == pts({0, 1}));
  CHECK(u.right_limit_cut(rat(3, 4)) == pts({0}));
  CHECK_THROWS_AS(u.right_limit_cut(Rat(1)), std::invalid_argument);
}

TEST_CASE("membership reads off the highest containing cut") {
  auto u = two_level();
  CHECK(u.membership(I.point(Rat(0))) == Rat(1));
  CHECK(u.membership(I.point(Rat(1))) == rat(1, 2));
  CHECK(u.membership(I.point(rat(1, 2))) == Rat(0));
}

TEST_CASE("zadeh extension acts cut-wise") {
  auto f = DynMap::tent();
  auto u = StepFuzzySet(I, {Rat(0), rat(1, 2), Rat(1)},
                        {pts({rat(1, 4), 1}), pts({rat(1, 4)})});
  auto fu = zadeh_extend(f, u);
  CHECK(fu.alpha_cut(rat(1, 4)) == pts({0, rat(1, 2)}));
  CHECK(fu.alpha_cut(Rat(1)) == pts({rat(1, 2)}));
  CHECK(fu.levels() == u.levels());

  auto k = pts({rat(1, 4), 1});
  CHECK(zadeh_extend(f, StepFuzzySet::characteristic(k)) ==
        StepFuzzySet::characteristic(image_compactum(f, k)));

  auto ident = DynMap::piecewise_linear({Rat(0), Rat(1)}, {Rat(0), Rat(1)});
  CHECK(zadeh_extend(ident, u) == u);

  // images of distinct cuts may coincide; the result re-canonicalizes
  auto v = StepFuzzySet(I, {Rat(0), rat(1, 2), Rat(1)}, {pts({0, 1}), pts({1})});
  CHECK(zadeh_extend(f, v).pieces() == 1);
}

TEST_CASE("time warps evaluate piecewise linearly") {
  TimeWarp t({{Rat(0), Rat(0)}, {rat(1, 2), rat(3, 4)}, {Rat(1), Rat(1)}});
  CHECK(t(Rat(0)) == Rat(0));
  CHECK(t(Rat(1)) == Rat(1));
  CHECK(t(rat(1, 4)) == rat(3, 8));
  CHECK(t(rat(1, 2)) == rat(3, 4));
  CHECK(t(rat(3, 4)) == rat(7, 8));
  CHECK(t.inverse()(rat(3, 4)) == rat(1, 2));
  CHECK(t.inverse().inverse() == t);
  CHECK_THROWS_AS(t(rat(3, 2)), std::invalid_argument);
}

TEST_CASE("time warp validation") {
  CHECK_NOTHROW(TimeWarp::identity());
  CHECK_THROWS_WITH(TimeWarp({{Rat(0), Rat(0)}}), "warp needs at least two knots");
  CHECK_THROWS_WITH(TimeWarp({{Rat(0), rat(1, 4)}, {Rat(1), Rat(1)}}),
                    "warp must fix 0 and 1");
  CHECK_THROWS_WITH(TimeWarp({{Rat(0), Rat(0)},
                              {rat(1, 2), rat(3, 4)},
                              {rat(3, 4), rat(1, 2)},
                              {Rat(1), Rat(1)}}),
                    "warp knots not increasing");
}

TEST_CASE("warp norm is the largest knot deviation") {
  CHECK(warp_norm(TimeWarp::identity()) == Rat(0));
  TimeWarp t({{Rat(0), Rat(0)}, {rat(1, 2), rat(3, 4)}, {Rat(1), Rat(1)}});
  CHECK(warp_norm(t) == rat(1, 4));
  CHECK(warp_norm(t.inverse()) == rat(1, 4));
}

TEST_CASE("warping relabels levels and keeps cuts") {
  auto v = two_level();
  CHECK(warp_apply(TimeWarp::identity(), v) == v);
  TimeWarp t({{Rat(0), Rat(0)}, {rat(1, 2), rat(3, 5)}, {Rat(1), Rat(1)}});
  auto tv = warp_apply(t, v);
  CHECK(tv.levels() == std::vector<Rat>{Rat(0), rat(3, 5), Rat(1)});
  CHECK(tv.cuts() == v.cuts());
  CHECK(warp_apply(t.inverse(), tv) == v);
}

TEST_CASE("sendograph segments and normalization") {
  auto u = two_level();
  auto segs = sendograph(u);
  REQUIRE(segs.size() == 2);
  CHECK(segs[0].base.coord() == Rat(0));
  CHECK(segs[0].height == Rat(1));
  CHECK(segs[1].height == rat(1, 2));

  auto chi = sendograph(StepFuzzySet::characteristic(pts({rat(1, 3)})));
  REQUIRE(chi.size() == 1);
  CHECK(chi[0].height == Rat(1));

  // duplicate bases merge to the larger height
  std::vector<SendographSegment> dup = {{I.point(rat(1, 2)), rat(1, 4)},
                                        {I.point(Rat(0)), Rat(1)},
                                        {I.point(rat(1, 2)), rat(3, 4)}};
  auto norm = normalize_segments(dup);
  REQUIRE(norm.size() == 2);
  CHECK(norm[0].base.coord() == Rat(0));
  CHECK(norm[1].height == rat(3, 4));
}

TEST_CASE("level partitions and refinement") {
  auto u = two_level();
  CHECK(level_partition(u, rat(1, 1000000)) ==
        std::vector<Rat>{Rat(0), rat(1, 2), Rat(1)});
  CHECK(level_partition(StepFuzzySet::characteristic(pts({0})), rat(1, 10)) ==
        std::vector<Rat>{Rat(0), Rat(1)});
  CHECK_THROWS_AS(level_partition(u, Rat(0)), std::invalid_argument);

  std::vector<Rat> p{Rat(0), rat(1, 3), Rat(1)};
  std::vector<Rat> q{Rat(0), rat(1, 2), Rat(1)};
  CHECK(merge_partitions(p, q) ==
        std::vector<Rat>{Rat(0), rat(1, 3), rat(1, 2), Rat(1)});
  CHECK(merge_partitions({Rat(0), Rat(1)}, q) == q);
  CHECK(merge_partitions(p, p) == p);
  CHECK_THROWS_AS(merge_partitions({Rat(0)}, q), std::invalid_argument);
  CHECK_THROWS_AS(merge_partitions({rat(1, 4), Rat(1)}, q), std::invalid_argument);
}
