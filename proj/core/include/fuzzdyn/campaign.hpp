#pragma once

#include <string>

#include "fuzzdyn/io.hpp"

namespace fuzzdyn {

// Everything one hitting campaign produces, as text. Writing files is the
// caller's business. With timing off the texts are a pure function of the
// config and the two input files, byte for byte.
struct TransitOutcome {
  std::string csv_text;
  std::string plot_text;
  std::string summary;
  long rows = 0;
  long hits = 0;
  long certified = 0;
};

// Runs the campaign described by the config: for every radius and every
// trial, one randomized hitting run from a fresh per-row seed, except that
// a radius whose separation certificate proves hitting impossible short
// circuits into certified-impossible rows. The certificate path only
// applies to isometries under the level-wise and warped metrics; the
// sendograph metric always runs empirically.
//
// CSV columns: experiment,epsilon,trial,outcome,n,distance with outcome
// one of hit, miss, certified-impossible; n is empty unless the row hit;
// epsilon and distance are exact rationals. With timing on a wall_us
// column is appended. The plot text holds one "epsilon median_n" line per
// radius that ever hit, with epsilon in decimal for plotting.
TransitOutcome run_transit(const ExperimentConfig& cfg);

}  // namespace fuzzdyn
