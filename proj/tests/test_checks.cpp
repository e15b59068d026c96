#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "fuzzdyn/checks.hpp"
#include "fuzzdyn/metrics.hpp"

using namespace fuzzdyn;

namespace {

const GroundSpace I = GroundSpace::unit_interval();

Compactum pts(std::initializer_list<Rat> coords) {
  std::vector<Point> v;
  for (const auto& c : coords) v.push_back(I.point(c));
  return Compactum(I, std::move(v));
}

StepFuzzySet chi(std::initializer_list<Rat> coords) {
  return StepFuzzySet::characteristic(pts(coords));
}

long total_failures(const std::vector<CheckReport>& reports) {
  long sum = 0;
  for (const auto& r : reports) sum += r.failures;
  return sum;
}

void dump(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    for (const auto& n : r.notes) MESSAGE(r.name << ": " << n);
  }
}

}  // namespace

TEST_CASE("lattice oracle needs the left side's levels as anchors") {
  // u jumps at 3/5, off the 1/32 lattice; v jumps at 1/2. The value 1/10
  // comes from warping 1/2 onto 3/5 exactly: norm 1/10, no cut mismatch.
  // A pure-lattice warp leaves a mismatch band of cost 1, so the refined
  // candidate set is what lets the brute force reach 1/10.
  StepFuzzySet u(I, {Rat(0), rat(3, 5), Rat(1)}, {pts({0, 1}), pts({0})});
  StepFuzzySet v(I, {Rat(0), rat(1, 2), Rat(1)}, {pts({0, 1}), pts({0})});
  CHECK(d_skorokhod(u, v) == rat(1, 10));
  CHECK(skorokhod_grid_oracle(u, v, 32) == rat(1, 10));
}

TEST_CASE("lattice oracle on dyadic pairs") {
  StepFuzzySet u(I, {Rat(0), rat(1, 2), Rat(1)}, {pts({0, 1}), pts({0})});
  StepFuzzySet v(I, {Rat(0), rat(3, 4), Rat(1)}, {pts({0, 1}), pts({0})});
  // aligning 3/4 onto 1/2 stays on the lattice: norm 1/4, no cut cost
  CHECK(d_skorokhod(u, v) == rat(1, 4));
  CHECK(skorokhod_grid_oracle(u, v, 32) == rat(1, 4));
  // single-piece right side leaves only the identity
  CHECK(skorokhod_grid_oracle(chi({0}), chi({1}), 32) == Rat(1));
  CHECK_THROWS_WITH_AS(skorokhod_grid_oracle(u, v, 0), "grid resolution must be positive",
                       std::invalid_argument);
}

TEST_CASE("metric suite is clean at small scale") {
  auto reports = run_metric_suite(7, 60);
  dump(reports);
  CHECK(reports.size() == 7);
  CHECK(total_failures(reports) == 0);
  for (const auto& r : reports) CHECK(r.cases > 0);
}

TEST_CASE("zadeh suite is clean at small scale") {
  auto reports = run_zadeh_suite(11, 40);
  dump(reports);
  CHECK(reports.size() == 6);
  CHECK(total_failures(reports) == 0);
  for (const auto& r : reports) CHECK(r.cases > 0);
}

TEST_CASE("entourage suite is clean at small scale") {
  auto reports = run_entourage_suite(13, 40);
  dump(reports);
  CHECK(reports.size() == 6);
  CHECK(total_failures(reports) == 0);
  // the exhaustive sweeps do not scale with the case budget
  CHECK(reports[0].cases > 500000);
  CHECK(reports[1].cases > 1000);
}

TEST_CASE("witness suite is clean at small scale") {
  auto reports = run_witness_suite(17, 10);
  dump(reports);
  CHECK(reports.size() == 5);
  CHECK(total_failures(reports) == 0);
  for (const auto& r : reports) CHECK(r.cases > 0);
}

TEST_CASE("suites are deterministic in the seed") {
  auto a = run_metric_suite(42, 12);
  auto b = run_metric_suite(42, 12);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].cases == b[i].cases);
    CHECK(a[i].failures == b[i].failures);
  }
}
