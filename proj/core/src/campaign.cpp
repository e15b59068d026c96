#include "fuzzdyn/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fuzzdyn/dynamics.hpp"
#include "fuzzdyn/rational.hpp"

namespace fuzzdyn {

namespace {

// splitmix64 of the row index over the campaign seed: every row gets an
// independent stream, and row k is the same in every run.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// lower middle on even counts
long median_of(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  return v[(v.size() - 1) / 2];
}

std::string decimal17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

TransitOutcome run_transit(const ExperimentConfig& cfg) {
  if (cfg.epsilons.empty()) throw std::invalid_argument("need at least one epsilon");
  if (cfg.trials < 1) throw std::invalid_argument("need at least one trial");
  if (cfg.max_iterate < 1) throw std::invalid_argument("need at least one iterate");
  for (const Rat& eps : cfg.epsilons) {
    if (!(eps > 0)) throw std::invalid_argument("radius must be positive");
  }

  StepFuzzySet u = load_fuzzy(cfg.source_path);
  StepFuzzySet v = load_fuzzy(cfg.target_path);
  if (!(u.space() == v.space()) || !(u.space() == cfg.map.space())) {
    throw std::invalid_argument("space mismatch");
  }

  TransitOutcome out;
  std::ostringstream csv;
  csv << "experiment,epsilon,trial,outcome,n,distance";
  if (cfg.timing) csv << ",wall_us";
  csv << "\n";

  std::ostringstream plot;
  std::vector<long> all_hit_ns;
  std::uint64_t row_index = 0;

  for (const Rat& eps : cfg.epsilons) {
    bool blocked = false;
    Rat block_bound(0);
    if (cfg.map.is_isometry() && cfg.metric_kind != MetricKind::Sendo) {
      auto cert = isometry_separation_certificate(cfg.map, u, eps, v, eps);
      if (cert.certified) {
        blocked = true;
        block_bound = cert.lower_bound;
      }
    }

    std::vector<long> eps_hit_ns;
    for (int trial = 0; trial < cfg.trials; ++trial, ++row_index) {
      const auto started = std::chrono::steady_clock::now();
      std::string outcome;
      std::string n_field;
      Rat dist(0);
      if (blocked) {
        outcome = "certified-impossible";
        dist = block_bound;
        ++out.certified;
      } else {
        auto res = empirical_hitting(cfg.map, u, eps, v, eps, cfg.max_iterate,
                                     cfg.metric_kind, 3, mix_seed(cfg.seed, row_index));
        dist = res.achieved_distance;
        if (res.found) {
          outcome = "hit";
          n_field = std::to_string(*res.n);
          eps_hit_ns.push_back(*res.n);
          ++out.hits;
        } else {
          outcome = "miss";
        }
      }
      ++out.rows;
      csv << cfg.experiment_id << ',' << rat_str(eps) << ',' << trial << ',' << outcome
          << ',' << n_field << ',' << rat_str(dist);
      if (cfg.timing) {
        const auto wall = std::chrono::duration_cast<std::chrono::microseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
        csv << ',' << wall;
      }
      csv << "\n";
    }

    if (!eps_hit_ns.empty()) {
      all_hit_ns.insert(all_hit_ns.end(), eps_hit_ns.begin(), eps_hit_ns.end());
      plot << decimal17(rat_approx(eps)) << ' ' << median_of(eps_hit_ns) << "\n";
    }
  }

  out.csv_text = csv.str();
  out.plot_text = plot.str();

  std::ostringstream sum;
  sum << cfg.experiment_id << ": rows=" << out.rows << " hits=" << out.hits
      << " hit_rate=" << rat_str(rat(out.hits, out.rows)) << " median_n=";
  if (all_hit_ns.empty()) {
    sum << "none";
  } else {
    sum << median_of(all_hit_ns);
  }
  sum << " certified=" << out.certified;
  out.summary = sum.str();
  return out;
}

}  // namespace fuzzdyn
