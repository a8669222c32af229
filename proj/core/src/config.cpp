#include "mdhll/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mdhll/errors.hpp"
#include "mdhll/problems.hpp"

namespace mdhll {

namespace {

using nlohmann::json;

const char* riemann_name(RiemannMode m) { return m == RiemannMode::OneD ? "1d" : "2d"; }
const char* weno_name(WenoMode m) {
  return m == WenoMode::Characteristic ? "characteristic" : "componentwise";
}
const char* format_name(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "vtk"; }

json to_json(const RunConfig& c) {
  json j;
  j["problem"] = c.problem;
  j["nx"] = c.nx;
  j["ny"] = c.ny;
  j["cfl"] = c.cfl;
  j["order"] = c.order;
  j["riemann"] = riemann_name(c.riemann);
  j["alpha"] = c.alpha;
  j["pcp"] = c.pcp;
  j["t_end"] = c.t_end ? json(*c.t_end) : json(nullptr);
  j["snapshot_times"] = c.snapshot_times;
  j["output_dir"] = c.output_dir;
  j["format"] = format_name(c.format);
  j["weno"] = weno_name(c.weno);
  j["quad_nodes"] = c.quad_nodes;
  j["dt_shrink"] = c.dt_shrink;
  j["max_steps"] = c.max_steps;
  return j;
}

template <typename T>
T get(const json& v, const std::string& key) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

int get_int(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ConfigError("config key '" + key + "' must be an integer");
  return v.get<int>();
}

RunConfig from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "problem") {
      c.problem = get<std::string>(v, key);
    } else if (key == "nx") {
      c.nx = get_int(v, key);
    } else if (key == "ny") {
      c.ny = get_int(v, key);
    } else if (key == "cfl") {
      c.cfl = get<double>(v, key);
    } else if (key == "order") {
      c.order = get_int(v, key);
    } else if (key == "riemann") {
      const std::string s = get<std::string>(v, key);
      if (s != "1d" && s != "2d") throw ConfigError("riemann must be '1d' or '2d'");
      c.riemann = s == "1d" ? RiemannMode::OneD : RiemannMode::TwoD;
    } else if (key == "alpha") {
      c.alpha = get<double>(v, key);
    } else if (key == "pcp") {
      c.pcp = get<bool>(v, key);
    } else if (key == "t_end") {
      c.t_end = v.is_null() ? std::nullopt : std::optional<double>(get<double>(v, key));
    } else if (key == "snapshot_times") {
      c.snapshot_times = get<std::vector<double>>(v, key);
    } else if (key == "output_dir") {
      c.output_dir = get<std::string>(v, key);
    } else if (key == "format") {
      const std::string s = get<std::string>(v, key);
      if (s != "csv" && s != "vtk") throw ConfigError("format must be 'csv' or 'vtk'");
      c.format = s == "csv" ? OutputFormat::Csv : OutputFormat::Vtk;
    } else if (key == "weno") {
      const std::string s = get<std::string>(v, key);
      if (s != "characteristic" && s != "componentwise") {
        throw ConfigError("weno must be 'characteristic' or 'componentwise'");
      }
      c.weno = s == "characteristic" ? WenoMode::Characteristic : WenoMode::Componentwise;
    } else if (key == "quad_nodes") {
      c.quad_nodes = get_int(v, key);
    } else if (key == "dt_shrink") {
      c.dt_shrink = get<bool>(v, key);
    } else if (key == "max_steps") {
      if (!v.is_number_integer()) throw ConfigError("config key 'max_steps' must be an integer");
      c.max_steps = v.get<long>();
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  c.validate();
  return c;
}

}  // namespace

void RunConfig::validate() const {
  const std::vector<std::string> ids = problem_ids();
  if (std::find(ids.begin(), ids.end(), problem) == ids.end()) {
    throw ConfigError("unknown problem '" + problem + "'");
  }
  if (order != 1 && order != 5) throw ConfigError("order must be 1 or 5");
  const int min_cells = order == 5 ? 4 : 1;
  if (nx < min_cells || ny < min_cells) {
    throw ConfigError("mesh needs at least " + std::to_string(min_cells) + " cells per direction");
  }
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
  if (!(alpha >= 1.0) || !std::isfinite(alpha)) throw ConfigError("alpha must be >= 1");
  if (t_end && !(*t_end > 0.0 && std::isfinite(*t_end))) throw ConfigError("t_end must be positive");
  for (double t : snapshot_times) {
    if (!(t >= 0.0) || (t_end && t > *t_end)) {
      throw ConfigError("snapshot times must lie in [0, t_end]");
    }
  }
  if (quad_nodes < 2 || quad_nodes > 4) throw ConfigError("quad_nodes must be 2, 3 or 4");
  if (max_steps < 0) throw ConfigError("max_steps must be non-negative");
  if (output_dir.empty()) throw ConfigError("output_dir must not be empty");
}

void RunConfig::apply_override(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("override '" + assignment + "' is not of the form key=value");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json j = to_json(*this);
  if (!j.contains(key)) throw ConfigError("unknown config key '" + key + "'");
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  j[key] = value;
  *this = from_json(j);
}

RunConfig config_from_json(const std::string& text) {
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError("config is not valid JSON");
  return from_json(j);
}

std::string config_to_json(const RunConfig& config, int indent) {
  return to_json(config).dump(indent);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const json j = json::parse(ss.str(), nullptr, false);
  if (j.is_discarded()) throw ConfigError("config file '" + path + "' is not valid JSON");
  if (j.is_object() && j.contains("config") && j["config"].is_object()) return from_json(j["config"]);
  return from_json(j);
}

}  // namespace mdhll
