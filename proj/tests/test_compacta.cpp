#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "fuzzdyn/compacta.hpp"
#include "fuzzdyn/errors.hpp"

using namespace fuzzdyn;

namespace {

Compactum on_interval(std::initializer_list<Rat> coords) {
  auto s = GroundSpace::unit_interval();
  std::vector<Point> pts;
  for (const auto& c : coords) pts.push_back(s.point(c));
  return Compactum(s, std::move(pts));
}

GroundSpace tri_space() {
  std::vector<std::vector<Rat>> t(3, std::vector<Rat>(3, rat(1, 2)));
  for (int i = 0; i < 3; ++i) t[i][i] = 0;
  return GroundSpace::finite(t);
}

}  // namespace

TEST_CASE("compacta sort and deduplicate their points") {
  auto a = on_interval({rat(1, 2), Rat(0), rat(1, 2)});
  REQUIRE(a.size() == 2);
  CHECK(a.points()[0].coord() == Rat(0));
  CHECK(a.points()[1].coord() == rat(1, 2));
  CHECK(a.contains(a.space().point(rat(1, 2))));
  CHECK_FALSE(a.contains(a.space().point(rat(1, 4))));
}

TEST_CASE("compacta reject empty and mismatched input") {
  auto s = GroundSpace::unit_interval();
  CHECK_THROWS_WITH(Compactum(s, {}), "empty compactum");
  auto c = GroundSpace::circle();
  CHECK_THROWS_WITH(Compactum(s, {c.point(Rat(0))}), "space mismatch");
}

TEST_CASE("hausdorff distance on the interval") {
  CHECK(hausdorff_distance(on_interval({Rat(0), Rat(1)}), on_interval({rat(1, 2)})) ==
        rat(1, 2));
  CHECK(hausdorff_distance(on_interval({Rat(0)}), on_interval({Rat(0), Rat(1)})) ==
        Rat(1));
  CHECK(hausdorff_distance(on_interval({rat(1, 4)}), on_interval({rat(1, 4)})) == Rat(0));
  // subset at distance zero is still at positive Hausdorff distance
  CHECK(hausdorff_distance(on_interval({Rat(0), rat(1, 2)}), on_interval({Rat(0)})) ==
        rat(1, 2));
}

TEST_CASE("hausdorff distance on the circle") {
  auto s = GroundSpace::circle();
  Compactum a(s, {s.point(Rat(0))});
  Compactum b(s, {s.point(rat(7, 8))});
  CHECK(hausdorff_distance(a, b) == rat(1, 8));
}

TEST_CASE("diameter and unions") {
  CHECK(diameter(on_interval({Rat(0), rat(1, 3), Rat(1)})) == Rat(1));
  CHECK(diameter(on_interval({rat(2, 5)})) == Rat(0));
  auto u = union_of(on_interval({Rat(0)}), on_interval({Rat(1), Rat(0)}));
  REQUIRE(u.size() == 2);
  CHECK(u.points()[1].coord() == Rat(1));
}

TEST_CASE("forward images of compacta") {
  auto f = DynMap::tent();
  auto img = image_compactum(f, on_interval({rat(1, 4), Rat(1)}));
  REQUIRE(img.size() == 2);
  CHECK(img.points()[0].coord() == Rat(0));
  CHECK(img.points()[1].coord() == rat(1, 2));
}

TEST_CASE("relation algebra") {
  Relation r(2);
  r.set(0, 0);
  r.set(1, 1);
  r.set(0, 1);
  CHECK(r.contains_diagonal());
  CHECK_FALSE(r.is_diagonal());
  CHECK(r.inverse().at(1, 0));
  CHECK_FALSE(r.inverse().at(0, 1));
  CHECK(r.compose(r) == r);
  CHECK(r.intersect(r.inverse()).is_diagonal());
  CHECK(r.intersect(r.inverse()).subset_of(r));
  CHECK_FALSE(r.subset_of(r.inverse()));
}

TEST_CASE("uniformity bases are checked against the axioms") {
  auto s = tri_space();
  auto full = [] {
    Relation r(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.set(i, j);
    return r;
  }();
  auto diag = [] {
    Relation r(3);
    for (int i = 0; i < 3; ++i) r.set(i, i);
    return r;
  }();

  CHECK_NOTHROW(FiniteUniformity(s, {full, diag}));
  CHECK_NOTHROW(FiniteUniformity(s, {diag}));

  // missing diagonal
  Relation hollow(3);
  hollow.set(0, 0);
  hollow.set(1, 1);
  CHECK_THROWS_AS(FiniteUniformity(s, {hollow}), std::invalid_argument);

  // asymmetric single member has nothing below its inverse
  Relation skew = diag;
  skew.set(0, 1);
  CHECK_THROWS_AS(FiniteUniformity(s, {skew}), std::invalid_argument);

  // a full-only base never meets down to the diagonal
  CHECK_THROWS_AS(FiniteUniformity(s, {full}), std::invalid_argument);

  CHECK_THROWS_AS(FiniteUniformity(GroundSpace::unit_interval(), {diag}),
                  std::invalid_argument);
}

TEST_CASE("metric thresholds generate a valid base") {
  auto s = tri_space();
  auto u = FiniteUniformity::from_metric(s, Rat(1));
  // distances below 1 everywhere, below 1/2 only on the diagonal
  CHECK(u.base_size() == 2);
  CHECK(u.entourage(0).at(0, 1));
  CHECK(u.entourage(1).is_diagonal());
}

TEST_CASE("metric entourage images use strict inequality") {
  auto a = on_interval({rat(1, 2)});
  auto img = entourage_image(EntourageRef::metric(rat(1, 4)), a);
  CHECK(img.contains(a.space().point(rat(3, 8))));
  CHECK_FALSE(img.contains(a.space().point(rat(3, 4))));
  CHECK_THROWS_AS(EntourageRef::metric(Rat(0)), std::invalid_argument);
}

TEST_CASE("relational entourage images") {
  auto s = tri_space();
  auto u = std::make_shared<FiniteUniformity>(FiniteUniformity::from_metric(s, Rat(1)));
  Compactum a(s, {s.element(0)});
  CHECK(entourage_image(EntourageRef::relational(u, 0), a).contains(s.element(1)));
  CHECK_FALSE(entourage_image(EntourageRef::relational(u, 1), a).contains(s.element(1)));
  CHECK_THROWS_AS(EntourageRef::relational(u, 2), std::invalid_argument);
}

TEST_CASE("mutual entourage containment of compacta") {
  auto a = on_interval({Rat(0), Rat(1)});
  auto b = on_interval({rat(1, 2)});
  CHECK(k_entourage_contains(EntourageRef::metric(rat(3, 4)), a, b));
  // the gap is exactly 1/2, so the strict 1/2 ball misses
  CHECK_FALSE(k_entourage_contains(EntourageRef::metric(rat(1, 2)), a, b));
  CHECK(k_entourage_contains(EntourageRef::metric(rat(1, 100)), a, a));
}

TEST_CASE("tent witness lands inside the requested ball") {
  auto f = DynMap::tent();
  auto s = f.space();
  Compactum k(s, {s.point(rat(1, 2))});
  Compactum l(s, {s.point(rat(1, 2))});
  auto w = compact_witness(f, k, l, Rat(2));
  // ball is the whole interval, so one step suffices and the descent
  // prefers the left inverse branch: tent(1/4) = 1/2
  CHECK(w.iterate == 1);
  REQUIRE(w.set.size() == 1);
  CHECK(w.set.points()[0].coord() == rat(1, 4));
}

TEST_CASE("tent witness across two targets") {
  auto f = DynMap::tent();
  auto s = f.space();
  Compactum k(s, {s.point(Rat(0)), s.point(Rat(1))});
  Compactum l(s, {s.point(Rat(0)), s.point(Rat(1))});
  auto w = compact_witness(f, k, l, rat(1, 4));
  // balls of radius 1/8 around 0 and 1 take 3 steps to cover, and the
  // left-first descent picks 0, 1/8 near 0 and 1, 7/8 near 1:
  //   f(1/8)=1/4, f(1/4)=1/2, f(1/2)=1
  //   f(7/8)=1/4 likewise, f(1)=0 stays put
  CHECK(w.iterate == 3);
  REQUIRE(w.set.size() == 4);
  CHECK(w.set.points()[0].coord() == Rat(0));
  CHECK(w.set.points()[1].coord() == rat(1, 8));
  CHECK(w.set.points()[2].coord() == rat(7, 8));
  CHECK(w.set.points()[3].coord() == Rat(1));
  CHECK(hausdorff_distance(w.set, k) == rat(1, 8));
}

TEST_CASE("doubling witness wraps its ball around zero") {
  auto f = DynMap::doubling();
  auto s = f.space();
  Compactum k(s, {s.point(Rat(0))});
  Compactum l(s, {s.point(rat(1, 3))});
  auto w = compact_witness(f, k, l, rat(1, 2));
  // ball of radius 1/4 around 0 is the arc [3/4,1/4]; one doubling
  // covers the circle, and 1/6 lies in the ball with f(1/6) = 1/3
  CHECK(w.iterate == 1);
  REQUIRE(w.set.size() == 1);
  CHECK(w.set.points()[0].coord() == rat(1, 6));
}

TEST_CASE("witness construction needs a mixing oracle") {
  auto f = DynMap::rotation(rat(1, 3));
  auto s = f.space();
  Compactum k(s, {s.point(Rat(0))});
  CHECK_THROWS_AS(compact_witness(f, k, k, rat(1, 4)), OracleMissingError);
}
