#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzdyn/campaign.hpp"
#include "fuzzdyn/checks.hpp"
#include "fuzzdyn/dynamics.hpp"
#include "fuzzdyn/errors.hpp"
#include "fuzzdyn/io.hpp"
#include "fuzzdyn/metrics.hpp"

using namespace fuzzdyn;

namespace {

std::string decimal17(const Rat& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", rat_approx(r));
  return buf;
}

int run_metric(const std::string& kind, bool approx, bool warp, const std::string& lhs_path,
               const std::string& rhs_path) {
  MetricKind k = parse_metric_kind(kind);
  if (warp && k != MetricKind::Skorokhod) {
    throw std::invalid_argument("warp output needs the skorokhod metric");
  }
  StepFuzzySet u = load_fuzzy(lhs_path);
  StepFuzzySet v = load_fuzzy(rhs_path);

  if (warp) {
    auto res = skorokhod_alignment(u, v);
    std::cout << rat_str(res.value);
    if (approx) std::cout << ' ' << decimal17(res.value);
    std::cout << '\n';
    for (const auto& [s, t] : res.warp.knots()) {
      std::cout << rat_str(s) << ' ' << rat_str(t) << '\n';
    }
    return 0;
  }

  Rat d = fuzzy_distance(k, u, v);
  std::cout << rat_str(d);
  if (approx) std::cout << ' ' << decimal17(d);
  std::cout << '\n';
  return 0;
}

int run_witness(const std::string& map_path, const std::string& eps_text,
                const std::string& out_path, const std::string& u_path,
                const std::string& v_path) {
  DynMap f = load_map(map_path);
  StepFuzzySet u = load_fuzzy(u_path);
  StepFuzzySet v = load_fuzzy(v_path);
  Rat eps = parse_rat(eps_text);
  auto cert = fuzzy_witness(f, u, v, eps);
  save_certificate(out_path, cert);
  std::cout << "n " << cert.n << "\n"
            << "d_source " << rat_str(cert.d_source) << "\n"
            << "d_target " << rat_str(cert.d_target) << "\n";
  return 0;
}

int run_transit_cmd(const std::string& config_path, bool timing_flag) {
  ExperimentConfig cfg = load_config(config_path);
  if (timing_flag) cfg.timing = true;
  if (const char* env = std::getenv("FUZZDYN_SEED")) {
    const std::string text = env;
    if (!text.empty()) {
      char* end = nullptr;
      errno = 0;
      const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
      if (*end != '\0' || errno != 0) {
        throw std::invalid_argument("malformed FUZZDYN_SEED: " + text);
      }
      cfg.seed = value;
    }
  }
  auto out = run_transit(cfg);
  write_text_file(cfg.csv_path, out.csv_text);
  write_text_file(cfg.plot_path, out.plot_text);
  std::cout << out.summary << "\n";
  return 0;
}

int run_check(const std::string& suite, std::uint64_t seed, long cases) {
  std::vector<CheckReport> reports;
  if (suite == "metrics") {
    reports = run_metric_suite(seed, cases);
  } else if (suite == "zadeh") {
    reports = run_zadeh_suite(seed, cases);
  } else if (suite == "entourage") {
    reports = run_entourage_suite(seed, cases);
  } else if (suite == "witness") {
    reports = run_witness_suite(seed, cases);
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  long failures = 0;
  for (const auto& r : reports) {
    failures += r.failures;
    std::cout << r.name << ": cases=" << r.cases << " failures=" << r.failures << "\n";
    for (const auto& n : r.notes) std::cout << "  " << n << "\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact metrics, witnesses, and hitting campaigns for step fuzzy sets"};
  app.require_subcommand(1);

  std::string kind = "infty";
  bool approx = false;
  bool warp = false;
  std::string lhs_path, rhs_path;
  auto* metric = app.add_subcommand("metric", "distance between two fuzzy set files");
  metric->add_option("--kind", kind, "infty, skorokhod, or sendo")->capture_default_str();
  metric->add_flag("--approx", approx, "append a decimal approximation");
  metric->add_flag("--warp", warp, "print the aligning warp's knots (skorokhod only)");
  metric->add_option("lhs", lhs_path, "left fuzzy set file")->required();
  metric->add_option("rhs", rhs_path, "right fuzzy set file")->required();

  std::string map_path, eps_text, out_path, u_path, v_path;
  auto* witness = app.add_subcommand("witness", "build a hitting witness certificate");
  witness->add_option("--map", map_path, "map file")->required();
  witness->add_option("--eps", eps_text, "radius, a positive rational")->required();
  witness->add_option("-o,--out", out_path, "certificate output file")->required();
  witness->add_option("source", u_path, "source fuzzy set file")->required();
  witness->add_option("target", v_path, "target fuzzy set file")->required();

  std::string config_path;
  bool timing = false;
  auto* transit = app.add_subcommand("transit", "run a hitting campaign from a config file");
  transit->add_option("config", config_path, "campaign config file")->required();
  transit->add_flag("--timing", timing, "append wall-clock microseconds to csv rows");

  std::string suite;
  std::uint64_t seed = 0;
  long cases = 200;
  auto* check = app.add_subcommand("check", "run a property suite");
  check->add_option("--suite", suite, "metrics, zadeh, entourage, or witness")->required();
  check->add_option("--seed", seed, "seed for the randomized cases")->capture_default_str();
  check->add_option("--cases", cases, "randomized case budget")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    if (*metric) return run_metric(kind, approx, warp, lhs_path, rhs_path);
    if (*witness) return run_witness(map_path, eps_text, out_path, u_path, v_path);
    if (*transit) return run_transit_cmd(config_path, timing);
    return run_check(suite, seed, cases);
  } catch (const OracleMissingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PostCheckError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
