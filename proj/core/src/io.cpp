#include "fuzzdyn/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace fuzzdyn {

namespace {

using nlohmann::json;

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(e.what());
  }
}

json space_to_json(const GroundSpace& sp) {
  switch (sp.kind()) {
    case SpaceKind::UnitInterval:
      return json("interval");
    case SpaceKind::Circle:
      return json("circle");
    default: {
      json j;
      j["finite"] = sp.finite_size();
      json rows = json::array();
      for (int i = 0; i < sp.finite_size(); ++i) {
        json row = json::array();
        for (int k = 0; k < sp.finite_size(); ++k) {
          row.push_back(rat_str(sp.metric_table().at(i, k)));
        }
        rows.push_back(std::move(row));
      }
      j["dist"] = std::move(rows);
      return j;
    }
  }
}

GroundSpace space_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "interval") return GroundSpace::unit_interval();
    if (s == "circle") return GroundSpace::circle();
    throw std::invalid_argument("unknown space");
  }
  if (j.is_object() && j.contains("finite")) {
    const int n = j.at("finite").get<int>();
    const auto& rows = j.at("dist");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
      throw std::invalid_argument("space table size mismatch");
    }
    std::vector<std::vector<Rat>> table;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n) {
        throw std::invalid_argument("space table size mismatch");
      }
      std::vector<Rat> r;
      for (const auto& cell : row) r.push_back(parse_rat(cell.get<std::string>()));
      table.push_back(std::move(r));
    }
    return GroundSpace::finite(std::move(table));
  }
  throw std::invalid_argument("unknown space");
}

json point_to_json(const GroundSpace& sp, const Point& p) {
  if (sp.kind() == SpaceKind::Finite) return json(p.index());
  return json(rat_str(p.coord()));
}

Point point_from_json(const GroundSpace& sp, const json& j) {
  if (sp.kind() == SpaceKind::Finite) return sp.element(j.get<int>());
  return sp.point(parse_rat(j.get<std::string>()));
}

json fuzzy_to_json(const StepFuzzySet& u) {
  json j;
  j["space"] = space_to_json(u.space());
  json levels = json::array();
  for (std::size_t i = 1; i < u.levels().size(); ++i) levels.push_back(rat_str(u.levels()[i]));
  j["levels"] = std::move(levels);
  json cuts = json::array();
  for (const auto& c : u.cuts()) {
    json pts = json::array();
    for (const auto& p : c.points()) pts.push_back(point_to_json(u.space(), p));
    cuts.push_back(std::move(pts));
  }
  j["cuts"] = std::move(cuts);
  return j;
}

StepFuzzySet fuzzy_from_json(const json& j) {
  GroundSpace sp = space_from_json(j.at("space"));
  std::vector<Rat> levels{rat(0)};
  for (const auto& l : j.at("levels")) levels.push_back(parse_rat(l.get<std::string>()));
  const auto& jcuts = j.at("cuts");
  if (!jcuts.is_array() || jcuts.empty()) {
    throw std::invalid_argument("cut list must not be empty");
  }
  if (jcuts.back().empty()) throw std::invalid_argument("not normal");
  std::vector<Compactum> cuts;
  for (const auto& jc : jcuts) {
    std::vector<Point> pts;
    for (const auto& jp : jc) pts.push_back(point_from_json(sp, jp));
    cuts.emplace_back(sp, std::move(pts));
  }
  return StepFuzzySet(sp, std::move(levels), std::move(cuts));
}

json map_to_json(const DynMap& f) {
  json j;
  switch (f.kind()) {
    case MapKind::Tent:
      j["kind"] = "tent";
      break;
    case MapKind::Doubling:
      j["kind"] = "doubling";
      break;
    case MapKind::Rotation:
      j["kind"] = "rotation";
      j["theta"] = rat_str(f.theta());
      break;
    case MapKind::PiecewiseLinear: {
      j["kind"] = "piecewise_linear";
      json b = json::array();
      for (const auto& x : f.breakpoints()) b.push_back(rat_str(x));
      json v = json::array();
      for (const auto& x : f.values()) v.push_back(rat_str(x));
      j["breakpoints"] = std::move(b);
      j["values"] = std::move(v);
      break;
    }
    case MapKind::FiniteTable:
      j["kind"] = "finite_table";
      j["space"] = space_to_json(f.space());
      j["targets"] = f.targets();
      break;
  }
  return j;
}

DynMap map_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "tent") return DynMap::tent();
  if (kind == "doubling") return DynMap::doubling();
  if (kind == "rotation") return DynMap::rotation(parse_rat(j.at("theta").get<std::string>()));
  if (kind == "piecewise_linear") {
    std::vector<Rat> b, v;
    for (const auto& x : j.at("breakpoints")) b.push_back(parse_rat(x.get<std::string>()));
    for (const auto& x : j.at("values")) v.push_back(parse_rat(x.get<std::string>()));
    return DynMap::piecewise_linear(std::move(b), std::move(v));
  }
  if (kind == "finite_table") {
    return DynMap::finite_table(space_from_json(j.at("space")),
                                j.at("targets").get<std::vector<int>>());
  }
  throw std::invalid_argument("unknown map kind");
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

// nlohmann's structural errors (missing keys, wrong types) surface as
// invalid input, not internal failures.
template <class F>
auto translating(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace

StepFuzzySet parse_fuzzy(const std::string& text) {
  return translating([&] { return fuzzy_from_json(parse_json_text(text)); });
}

std::string serialize_fuzzy(const StepFuzzySet& u) { return dump_canonical(fuzzy_to_json(u)); }

StepFuzzySet load_fuzzy(const std::string& path) { return parse_fuzzy(read_text_file(path)); }

void save_fuzzy(const std::string& path, const StepFuzzySet& u) {
  write_text_file(path, serialize_fuzzy(u));
}

DynMap parse_map(const std::string& text) {
  return translating([&] { return map_from_json(parse_json_text(text)); });
}

std::string serialize_map(const DynMap& f) { return dump_canonical(map_to_json(f)); }

DynMap load_map(const std::string& path) { return parse_map(read_text_file(path)); }

void save_map(const std::string& path, const DynMap& f) {
  write_text_file(path, serialize_map(f));
}

WitnessCertificate parse_certificate(const std::string& text) {
  return translating([&] {
    const json j = parse_json_text(text);
    WitnessCertificate cert{fuzzy_from_json(j.at("witness")), j.at("n").get<long>(),
                            parse_rat(j.at("d_source").get<std::string>()),
                            parse_rat(j.at("d_target").get<std::string>()),
                            {}};
    for (const auto& e : j.at("per_level")) {
      cert.per_level_log.emplace_back(parse_rat(e.at("level").get<std::string>()),
                                      e.at("points").get<std::size_t>());
    }
    return cert;
  });
}

std::string serialize_certificate(const WitnessCertificate& cert) {
  json j;
  j["n"] = cert.n;
  j["d_source"] = rat_str(cert.d_source);
  j["d_target"] = rat_str(cert.d_target);
  j["witness"] = fuzzy_to_json(cert.w);
  json pl = json::array();
  for (const auto& [level, points] : cert.per_level_log) {
    json e;
    e["level"] = rat_str(level);
    e["points"] = points;
    pl.push_back(std::move(e));
  }
  j["per_level"] = std::move(pl);
  return dump_canonical(j);
}

void save_certificate(const std::string& path, const WitnessCertificate& cert) {
  write_text_file(path, serialize_certificate(cert));
}

MetricKind parse_metric_kind(const std::string& name) {
  if (name == "infty") return MetricKind::Infty;
  if (name == "skorokhod") return MetricKind::Skorokhod;
  if (name == "sendo") return MetricKind::Sendo;
  throw std::invalid_argument("unknown metric kind");
}

std::string metric_kind_name(MetricKind kind) {
  switch (kind) {
    case MetricKind::Infty:
      return "infty";
    case MetricKind::Skorokhod:
      return "skorokhod";
    default:
      return "sendo";
  }
}

ExperimentConfig parse_config(const std::string& text) {
  return translating([&] {
    const json j = parse_json_text(text);
    ExperimentConfig cfg;
    cfg.experiment_id = j.at("experiment").get<std::string>();
    if (cfg.experiment_id.empty()) {
      throw std::invalid_argument("experiment id must not be empty");
    }
    cfg.map = map_from_json(j.at("map"));
    cfg.metric_kind = parse_metric_kind(j.at("metric").get<std::string>());
    for (const auto& e : j.at("epsilons")) {
      Rat eps = parse_rat(e.get<std::string>());
      if (!(eps > 0)) throw std::invalid_argument("radius must be positive");
      cfg.epsilons.push_back(std::move(eps));
    }
    if (cfg.epsilons.empty()) throw std::invalid_argument("need at least one epsilon");
    cfg.trials = j.at("trials").get<int>();
    if (cfg.trials < 1) throw std::invalid_argument("need at least one trial");
    cfg.max_iterate = j.at("max_iterate").get<long>();
    if (cfg.max_iterate < 1) throw std::invalid_argument("need at least one iterate");
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.source_path = j.at("source").get<std::string>();
    cfg.target_path = j.at("target").get<std::string>();
    cfg.csv_path = j.at("csv").get<std::string>();
    cfg.plot_path = j.at("plot").get<std::string>();
    cfg.timing = j.value("timing", false);
    return cfg;
  });
}

std::string serialize_config(const ExperimentConfig& cfg) {
  json j;
  j["experiment"] = cfg.experiment_id;
  j["map"] = map_to_json(cfg.map);
  j["metric"] = metric_kind_name(cfg.metric_kind);
  json eps = json::array();
  for (const auto& e : cfg.epsilons) eps.push_back(rat_str(e));
  j["epsilons"] = std::move(eps);
  j["trials"] = cfg.trials;
  j["max_iterate"] = cfg.max_iterate;
  j["seed"] = cfg.seed;
  j["source"] = cfg.source_path;
  j["target"] = cfg.target_path;
  j["csv"] = cfg.csv_path;
  j["plot"] = cfg.plot_path;
  j["timing"] = cfg.timing;
  return dump_canonical(j);
}

ExperimentConfig load_config(const std::string& path) {
  return parse_config(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open " + path);
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace fuzzdyn
