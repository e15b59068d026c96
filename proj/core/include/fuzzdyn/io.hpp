#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fuzzdyn/dynamics.hpp"
#include "fuzzdyn/fuzzy.hpp"
#include "fuzzdyn/ground.hpp"
#include "fuzzdyn/rational.hpp"

namespace fuzzdyn {

// Text formats are JSON with every rational written as a canonical "p/q"
// string, never as a float. Serialization is canonical: parsing a
// serialized value and serializing again reproduces the bytes.
//
// A fuzzy set is {"space": ..., "levels": [...], "cuts": [[...], ...]}
// where "space" is "interval", "circle", or {"finite": n, "dist": table};
// "levels" lists the jump levels above zero in increasing order, ending at
// "1"; "cuts" gives one point list per level, decreasing, with rational
// coordinates on the interval and circle and element indices on finite
// spaces. A map is {"kind": ...} plus its parameters. Malformed input
// raises std::invalid_argument.

StepFuzzySet parse_fuzzy(const std::string& text);
std::string serialize_fuzzy(const StepFuzzySet& u);
StepFuzzySet load_fuzzy(const std::string& path);
void save_fuzzy(const std::string& path, const StepFuzzySet& u);

DynMap parse_map(const std::string& text);
std::string serialize_map(const DynMap& f);
DynMap load_map(const std::string& path);
void save_map(const std::string& path, const DynMap& f);

WitnessCertificate parse_certificate(const std::string& text);
std::string serialize_certificate(const WitnessCertificate& cert);
void save_certificate(const std::string& path, const WitnessCertificate& cert);

MetricKind parse_metric_kind(const std::string& name);
std::string metric_kind_name(MetricKind kind);

// One hitting campaign: a map and metric, a list of radii, budgets, the
// source and target set files, and where the outputs go. The epsilon list
// is used for both the source and the target radius of each run.
struct ExperimentConfig {
  std::string experiment_id;
  DynMap map = DynMap::tent();
  MetricKind metric_kind = MetricKind::Infty;
  std::vector<Rat> epsilons;
  int trials = 1;
  long max_iterate = 1;
  std::uint64_t seed = 0;
  std::string source_path;
  std::string target_path;
  std::string csv_path;
  std::string plot_path;
  bool timing = false;
};

ExperimentConfig parse_config(const std::string& text);
std::string serialize_config(const ExperimentConfig& cfg);
ExperimentConfig load_config(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fuzzdyn
