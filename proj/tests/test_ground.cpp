#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fuzzdyn/errors.hpp"
#include "fuzzdyn/ground.hpp"

using namespace fuzzdyn;

namespace {

GroundSpace tri_space() {
  // 3-point space, all off-diagonal distances 1/2.
  std::vector<std::vector<Rat>> t(3, std::vector<Rat>(3, rat(1, 2)));
  for (int i = 0; i < 3; ++i) t[i][i] = 0;
  return GroundSpace::finite(t);
}

}  // namespace

TEST_CASE("interval distance") {
  auto s = GroundSpace::unit_interval();
  CHECK(distance(s, s.point(rat(1, 4)), s.point(rat(7, 8))) == rat(5, 8));
  CHECK(distance(s, s.point(Rat(0)), s.point(Rat(1))) == Rat(1));
  CHECK(distance(s, s.point(rat(1, 2)), s.point(rat(1, 2))) == Rat(0));
}

TEST_CASE("circle distance takes the shorter arc") {
  auto s = GroundSpace::circle();
  CHECK(distance(s, s.point(rat(1, 8)), s.point(rat(7, 8))) == rat(1, 4));
  CHECK(distance(s, s.point(Rat(0)), s.point(rat(1, 2))) == rat(1, 2));
  CHECK(distance(s, s.point(rat(1, 10)), s.point(rat(2, 10))) == rat(1, 10));
}

TEST_CASE("circle coordinates wrap at construction") {
  auto s = GroundSpace::circle();
  CHECK(s.point(rat(5, 4)).coord() == rat(1, 4));
  CHECK(s.point(Rat(1)).coord() == Rat(0));
  CHECK(s.point(rat(-1, 4)).coord() == rat(3, 4));
}

TEST_CASE("interval points must lie in [0,1]") {
  auto s = GroundSpace::unit_interval();
  CHECK_THROWS_WITH(s.point(rat(9, 8)), "point outside the unit interval");
  CHECK_THROWS_WITH(s.point(rat(-1, 8)), "point outside the unit interval");
  CHECK_NOTHROW(s.point(Rat(0)));
  CHECK_NOTHROW(s.point(Rat(1)));
}

TEST_CASE("finite metric tables are validated") {
  using T = std::vector<std::vector<Rat>>;
  CHECK_THROWS_AS(FiniteMetric(T{}), std::invalid_argument);
  // not square
  CHECK_THROWS_AS(FiniteMetric(T{{Rat(0), Rat(1)}}), std::invalid_argument);
  // nonzero diagonal
  CHECK_THROWS_AS(FiniteMetric(T{{Rat(1)}}), std::invalid_argument);
  // asymmetric
  CHECK_THROWS_AS(FiniteMetric(T{{Rat(0), Rat(1)}, {Rat(2), Rat(0)}}),
                  std::invalid_argument);
  // zero off the diagonal
  CHECK_THROWS_AS(FiniteMetric(T{{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}),
                  std::invalid_argument);
  // triangle inequality: d(0,2)=5 > d(0,1)+d(1,2)=2
  CHECK_THROWS_AS(FiniteMetric(T{{Rat(0), Rat(1), Rat(5)},
                                 {Rat(1), Rat(0), Rat(1)},
                                 {Rat(5), Rat(1), Rat(0)}}),
                  std::invalid_argument);
  auto s = tri_space();
  CHECK(distance(s, s.element(0), s.element(1)) == rat(1, 2));
  CHECK_THROWS_AS(s.element(3), std::invalid_argument);
}

TEST_CASE("points refuse to cross spaces") {
  auto i = GroundSpace::unit_interval();
  auto c = GroundSpace::circle();
  CHECK_THROWS_WITH(distance(i, i.point(Rat(0)), c.point(Rat(0))), "space mismatch");
}

TEST_CASE("tent map values") {
  auto f = DynMap::tent();
  auto s = f.space();
  CHECK(apply_map(f, s.point(rat(1, 2))).coord() == Rat(1));
  CHECK(apply_map(f, s.point(rat(3, 4))).coord() == rat(1, 2));
  CHECK(apply_map(f, s.point(Rat(0))).coord() == Rat(0));
  CHECK(apply_map(f, s.point(Rat(1))).coord() == Rat(0));
  CHECK(apply_map(f, s.point(rat(1, 3))).coord() == rat(2, 3));
}

TEST_CASE("doubling map values") {
  auto f = DynMap::doubling();
  auto s = f.space();
  CHECK(apply_map(f, s.point(rat(1, 4))).coord() == rat(1, 2));
  CHECK(apply_map(f, s.point(rat(3, 4))).coord() == rat(1, 2));
  CHECK(apply_map(f, s.point(rat(2, 3))).coord() == rat(1, 3));
}

TEST_CASE("rotation values and isometry flag") {
  auto f = DynMap::rotation(rat(1, 3));
  auto s = f.space();
  CHECK(apply_map(f, s.point(rat(5, 6))).coord() == rat(1, 6));
  CHECK(f.is_isometry());
  CHECK_FALSE(f.has_mixing_oracle());
  CHECK_FALSE(DynMap::tent().is_isometry());
  CHECK(DynMap::tent().has_mixing_oracle());
  CHECK(DynMap::doubling().has_mixing_oracle());
}

TEST_CASE("piecewise linear maps interpolate between knots") {
  // hat with peak 3/4 at x = 1/2
  auto f = DynMap::piecewise_linear({Rat(0), rat(1, 2), Rat(1)},
                                    {Rat(0), rat(3, 4), Rat(0)});
  auto s = f.space();
  CHECK(apply_map(f, s.point(rat(1, 4))).coord() == rat(3, 8));
  CHECK(apply_map(f, s.point(rat(1, 2))).coord() == rat(3, 4));
  CHECK(apply_map(f, s.point(Rat(1))).coord() == Rat(0));
  CHECK_FALSE(f.has_mixing_oracle());

  CHECK_THROWS_AS(DynMap::piecewise_linear({Rat(0)}, {Rat(0)}), std::invalid_argument);
  CHECK_THROWS_AS(
      DynMap::piecewise_linear({Rat(0), rat(1, 2)}, {Rat(0), Rat(1)}),
      std::invalid_argument);  // breakpoints must start at 0 and end at 1
  CHECK_THROWS_AS(
      DynMap::piecewise_linear({Rat(0), rat(1, 2), rat(1, 2), Rat(1)},
                               {Rat(0), Rat(1), Rat(0), Rat(1)}),
      std::invalid_argument);  // strictly increasing breakpoints
  CHECK_THROWS_AS(
      DynMap::piecewise_linear({Rat(0), Rat(1)}, {Rat(0), Rat(2)}),
      std::invalid_argument);  // values confined to [0,1]
}

TEST_CASE("finite table maps and the induced isometry check") {
  auto s = tri_space();
  // 3-cycle on equidistant points preserves every distance
  auto rot = DynMap::finite_table(s, {1, 2, 0});
  CHECK(rot.is_isometry());
  // collapsing map does not
  auto collapse = DynMap::finite_table(s, {0, 0, 0});
  CHECK_FALSE(collapse.is_isometry());
  CHECK(apply_map(rot, s.element(2)).index() == 0);
  CHECK_THROWS_AS(DynMap::finite_table(s, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(DynMap::finite_table(s, {0, 1, 3}), std::invalid_argument);
}

TEST_CASE("tent preimages") {
  auto f = DynMap::tent();
  auto s = f.space();
  auto pre = preimage_points(f, s.point(rat(1, 2)));
  REQUIRE(pre.size() == 2);
  CHECK(pre[0].coord() == rat(1, 4));
  CHECK(pre[1].coord() == rat(3, 4));

  pre = preimage_points(f, s.point(Rat(0)));
  REQUIRE(pre.size() == 2);
  CHECK(pre[0].coord() == Rat(0));
  CHECK(pre[1].coord() == Rat(1));

  pre = preimage_points(f, s.point(Rat(1)));
  REQUIRE(pre.size() == 1);
  CHECK(pre[0].coord() == rat(1, 2));
}

TEST_CASE("doubling and rotation preimages") {
  auto d = DynMap::doubling();
  auto s = d.space();
  auto pre = preimage_points(d, s.point(rat(1, 2)));
  REQUIRE(pre.size() == 2);
  CHECK(pre[0].coord() == rat(1, 4));
  CHECK(pre[1].coord() == rat(3, 4));

  auto r = DynMap::rotation(rat(1, 3));
  pre = preimage_points(r, r.space().point(Rat(0)));
  REQUIRE(pre.size() == 1);
  CHECK(pre[0].coord() == rat(2, 3));
}

TEST_CASE("piecewise linear preimages solve each segment") {
  auto f = DynMap::piecewise_linear({Rat(0), rat(1, 2), Rat(1)},
                                    {Rat(0), Rat(1), Rat(0)});
  auto s = f.space();
  auto pre = preimage_points(f, s.point(rat(1, 2)));
  REQUIRE(pre.size() == 2);
  CHECK(pre[0].coord() == rat(1, 4));
  CHECK(pre[1].coord() == rat(3, 4));

  auto flat = DynMap::piecewise_linear({Rat(0), rat(1, 2), Rat(1)},
                                       {Rat(0), rat(1, 2), rat(1, 2)});
  CHECK_THROWS_AS(preimage_points(flat, s.point(rat(1, 2))), std::domain_error);
  // a target missed by the flat segment is still fine
  auto pre2 = preimage_points(flat, s.point(rat(1, 4)));
  REQUIRE(pre2.size() == 1);
  CHECK(pre2[0].coord() == rat(1, 4));
}

TEST_CASE("inverse branches of the tent map") {
  CHECK(tent_inverse_branch(Rat(1), Branch::Left) == rat(1, 2));
  CHECK(tent_inverse_branch(rat(1, 2), Branch::Right) == rat(3, 4));
  CHECK(tent_inverse_branch(Rat(0), Branch::Right) == Rat(1));
  CHECK(tent_inverse_branch(Rat(0), Branch::Left) == Rat(0));
  CHECK_THROWS_AS(tent_inverse_branch(Rat(2), Branch::Left), std::invalid_argument);
}

TEST_CASE("tent cover times") {
  auto f = DynMap::tent();
  CHECK(interval_cover_time(f, Rat(0), Rat(1)) == 0);
  CHECK(interval_cover_time(f, Rat(0), rat(1, 2)) == 1);
  // [3/8,1/2] -> [3/4,1] -> [0,1/2] -> [0,1]
  CHECK(interval_cover_time(f, rat(3, 8), rat(1, 2)) == 3);
  // [1/4,1/2] -> [1/2,1] (wait: image of [1/4,1/2] is [1/2,1]) -> [0,1]
  CHECK(interval_cover_time(f, rat(1, 4), rat(1, 2)) == 2);
}

TEST_CASE("doubling cover times") {
  auto f = DynMap::doubling();
  // [0,1/4] -> [0,1/2] -> [0,1]
  CHECK(interval_cover_time(f, Rat(0), rat(1, 4)) == 2);
  CHECK(interval_cover_time(f, Rat(0), Rat(1)) == 0);
  // arc wrapping through 0: [7/8,9/8] has length 1/4, one step gives
  // [7/8,1]->[3/4,1] and [0,1/8]->[0,1/4], together [3/4,1]u[0,1/4],
  // next step [1/2,1]u[0,1/2] = all
  CHECK(interval_cover_time(f, rat(7, 8), rat(9, 8)) == 2);
}

TEST_CASE("cover time rejects bad input") {
  auto f = DynMap::tent();
  CHECK_THROWS_WITH(interval_cover_time(f, rat(1, 2), rat(1, 2)), "empty interval");
  CHECK_THROWS_WITH(interval_cover_time(f, rat(-1, 8), rat(1, 2)),
                    "interval outside the carrier");
  CHECK_THROWS_AS(interval_cover_time(DynMap::rotation(rat(1, 3)), Rat(0), rat(1, 2)),
                  OracleMissingError);
}
