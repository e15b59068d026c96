#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fuzzdyn/fuzzy.hpp"
#include "fuzzdyn/rational.hpp"

namespace fuzzdyn {

// Outcome of one property inside a suite.
struct CheckReport {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::vector<std::string> notes;  // first few failing cases, as text
};

// Brute-force reference for the warped metric: best objective over all warps
// whose knots send the right side's jump levels to strictly increasing values
// drawn from the 1/grid_den lattice refined by the left side's interior
// levels, identity included. Never below the exact alignment value.
Rat skorokhod_grid_oracle(const StepFuzzySet& u, const StepFuzzySet& v, long grid_den);

// Property suites behind the check runner and the acceptance gate. cases
// scales the randomized sample counts; exhaustive blocks ignore it. A suite
// passes when every report comes back with zero failures.
std::vector<CheckReport> run_metric_suite(std::uint64_t seed, long cases);
std::vector<CheckReport> run_zadeh_suite(std::uint64_t seed, long cases);
std::vector<CheckReport> run_entourage_suite(std::uint64_t seed, long cases);
std::vector<CheckReport> run_witness_suite(std::uint64_t seed, long cases);

}  // namespace fuzzdyn
