#include <fstream>
#include <set>
#include <sstream>

#include "rabi/cli.hpp"
#include "rabi/errors.hpp"

namespace rabi::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ConfigError(where + " must be a number");
  return v.get<double>();
}

int integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ConfigError(where + " must be an integer");
  return v.get<int>();
}

std::string string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ConfigError(where + " must be a string");
  return v.get<std::string>();
}

std::vector<double> sample_list(const json& v) {
  if (v.is_array()) {
    std::vector<double> out;
    for (const auto& x : v) out.push_back(number(x, "times.samples[]"));
    return out;
  }
  reject_unknown(v, {"start", "stop", "count"}, "times.samples");
  const double start = v.contains("start") ? number(v["start"], "times.samples.start") : 0.0;
  const double stop = v.contains("stop") ? number(v["stop"], "times.samples.stop") : 1.0;
  const int count = v.contains("count") ? integer(v["count"], "times.samples.count") : 101;
  if (count < 0) throw ConfigError("times.samples.count must be >= 0");
  std::vector<double> out;
  for (int i = 0; i < count; ++i)
    out.push_back(count == 1 ? start : start + (stop - start) * i / (count - 1));
  return out;
}

DeviceScenario scenario(const json& v, const RunConfig& cfg, std::size_t index) {
  if (v.is_string()) return device_preset(v.get<std::string>());
  reject_unknown(v, {"name", "preset", "omega0", "T_env", "quality_factor", "omega_q", "coupling"},
                 "physical[" + std::to_string(index) + "]");
  DeviceScenario s;
  if (v.contains("preset")) s = device_preset(string(v["preset"], "physical.preset"));
  else {
    s.name = "scenario-" + std::to_string(index);
    s.model = {cfg.omega_q, cfg.couplings.front()};
  }
  if (v.contains("name")) s.name = string(v["name"], "physical.name");
  if (v.contains("omega0")) s.context.omega0 = number(v["omega0"], "physical.omega0");
  if (v.contains("T_env")) s.context.t_env = number(v["T_env"], "physical.T_env");
  if (v.contains("quality_factor"))
    s.context.quality_factor = number(v["quality_factor"], "physical.quality_factor");
  if (v.contains("omega_q")) s.model.omega_q = number(v["omega_q"], "physical.omega_q");
  if (v.contains("coupling")) s.model.coupling = number(v["coupling"], "physical.coupling");
  try {
    s.context.validate();
    s.model.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("physical scenario '") + s.name + "': " + e.what());
  }
  return s;
}

}  // namespace

std::vector<double> default_period_samples() {
  std::vector<double> out;
  for (int i = 0; i <= 100; ++i) out.push_back(i / 100.0);
  return out;
}

RunConfig parse_config(const json& doc) {
  reject_unknown(doc, {"model", "basis", "grid", "times", "levels", "states", "floor", "physical", "output"},
                 "config");
  RunConfig cfg;
  cfg.times.samples = default_period_samples();

  if (doc.contains("model")) {
    const auto& m = doc["model"];
    reject_unknown(m, {"omega_q", "coupling"}, "model");
    if (m.contains("omega_q")) cfg.omega_q = number(m["omega_q"], "model.omega_q");
    if (m.contains("coupling")) {
      cfg.couplings.clear();
      if (m["coupling"].is_array()) {
        for (const auto& c : m["coupling"]) cfg.couplings.push_back(number(c, "model.coupling[]"));
        if (cfg.couplings.empty()) throw ConfigError("model.coupling list is empty");
      } else {
        cfg.couplings.push_back(number(m["coupling"], "model.coupling"));
      }
    }
  }
  if (!(cfg.omega_q > 0.0)) throw ConfigError("model.omega_q must be positive");
  for (double c : cfg.couplings)
    if (!(c >= 0.0)) throw ConfigError("model.coupling must be >= 0");

  if (doc.contains("basis")) {
    const auto& b = doc["basis"];
    reject_unknown(b, {"n_max"}, "basis");
    if (b.contains("n_max")) {
      if (b["n_max"].is_string()) {
        if (b["n_max"].get<std::string>() != "auto") throw ConfigError("basis.n_max must be an integer or \"auto\"");
      } else {
        cfg.n_max = integer(b["n_max"], "basis.n_max");
        if (*cfg.n_max < 2) throw ConfigError("basis.n_max must be >= 2");
      }
    }
  }

  if (doc.contains("grid")) {
    const auto& g = doc["grid"];
    reject_unknown(g, {"q_min", "q_max", "points"}, "grid");
    if (g.contains("q_min")) cfg.grid.q_min = number(g["q_min"], "grid.q_min");
    if (g.contains("q_max")) cfg.grid.q_max = number(g["q_max"], "grid.q_max");
    if (g.contains("points")) cfg.grid.points = integer(g["points"], "grid.points");
  }
  if (cfg.grid.points < 5 || !(cfg.grid.q_max > cfg.grid.q_min))
    throw ConfigError("grid needs points >= 5 and q_max > q_min");

  if (doc.contains("times")) {
    const auto& t = doc["times"];
    reject_unknown(t, {"mode", "samples"}, "times");
    if (t.contains("mode")) {
      const std::string mode = string(t["mode"], "times.mode");
      if (mode == "period-fractions") cfg.times.mode = TimeMode::PeriodFractions;
      else if (mode == "absolute") cfg.times.mode = TimeMode::Absolute;
      else throw ConfigError("times.mode must be \"period-fractions\" or \"absolute\"");
    }
    if (t.contains("samples")) cfg.times.samples = sample_list(t["samples"]);
  }

  if (doc.contains("levels")) cfg.levels = integer(doc["levels"], "levels");
  if (doc.contains("states")) cfg.states = integer(doc["states"], "states");
  if (doc.contains("floor")) cfg.floor = number(doc["floor"], "floor");
  if (cfg.levels < 1) throw ConfigError("levels must be >= 1");
  if (cfg.states < 1) throw ConfigError("states must be >= 1");
  if (!(cfg.floor > 0.0)) throw ConfigError("floor must be positive");

  if (doc.contains("physical")) {
    const auto& p = doc["physical"];
    if (p.is_array()) {
      for (std::size_t i = 0; i < p.size(); ++i) cfg.physical.push_back(scenario(p[i], cfg, i));
    } else {
      cfg.physical.push_back(scenario(p, cfg, 0));
    }
  }

  if (doc.contains("output")) {
    const auto& o = doc["output"];
    reject_unknown(o, {"format", "path"}, "output");
    if (o.contains("format")) cfg.output.format = string(o["format"], "output.format");
    if (o.contains("path")) cfg.output.path = string(o["path"], "output.path");
  }
  if (cfg.output.format != "csv" && cfg.output.format != "json")
    throw ConfigError("output.format must be \"csv\" or \"json\"");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed JSON in '" + path + "': " + e.what());
  }
  return parse_config(doc);
}

}  // namespace rabi::cli
