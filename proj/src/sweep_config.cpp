#include "qdiscord/sweep_config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"
#include "qdiscord/errors.hpp"

namespace qd {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(trim(item));
  return parts;
}

double to_double(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(fmt::format("cannot parse {} from '{}'", what, s));
  }
}

int to_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(fmt::format("cannot parse {} from '{}'", what, s));
  }
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("invalid JSON: {}", e.what()));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config file '{}'", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("bad value for '{}': {}", key, e.what()));
  }
}

Model parse_model(const std::string& name) {
  if (name == "aligned") return Model::Aligned;
  if (name == "cyclic_nn" || name == "chain") return Model::CyclicNN;
  if (name == "fully_connected" || name == "lipkin") return Model::FullyConnected;
  throw UnsupportedSpec(fmt::format("unknown model '{}'", name));
}

}  // namespace

SweepConfig default_sweep_config(Model model) {
  SweepConfig cfg;
  cfg.model = model;
  if (model == Model::Aligned) {
    cfg.grid_min = 0.0;
    cfg.grid_max = M_PI / 2;
    cfg.grid_points = 201;
    cfg.measures = {{MeasureSpec::Kind::D}, {MeasureSpec::Kind::I2}, {MeasureSpec::Kind::I3}};
  } else {
    cfg.n = 50;
    cfg.chi = 0.5;
    cfg.grid_min = 0.0;
    cfg.grid_max = 1.5;
    cfg.grid_points = 151;
    cfg.measures = {{MeasureSpec::Kind::D}, {MeasureSpec::Kind::I2}};
  }
  return cfg;
}

GridSpec parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError(fmt::format("grid '{}' is not min:max:points", text));
  GridSpec g{to_double(parts[0], "grid min"), to_double(parts[1], "grid max"), to_int(parts[2], "grid points")};
  if (g.points < 1) throw ConfigError("grid needs at least one point");
  return g;
}

std::vector<MeasureSpec> parse_measures(const std::string& text) {
  std::vector<MeasureSpec> out;
  std::set<std::string> seen;
  for (const std::string& raw : split(text, ',')) {
    if (raw.empty()) continue;
    MeasureSpec m;
    if (raw == "D") {
      m.kind = MeasureSpec::Kind::D;
    } else if (raw == "I1") {
      m.kind = MeasureSpec::Kind::I1;
    } else if (raw == "I2") {
      m.kind = MeasureSpec::Kind::I2;
    } else if (raw == "I3") {
      m.kind = MeasureSpec::Kind::I3;
    } else if (raw == "C") {
      m.kind = MeasureSpec::Kind::C;
    } else if (raw.rfind("Iq", 0) == 0 && raw.size() > 3) {
      std::string arg = raw.substr(2);
      if (arg.front() == '(' && arg.back() == ')') {
        arg = arg.substr(1, arg.size() - 2);
      } else if (arg.front() == '=' || arg.front() == ':') {
        arg = arg.substr(1);
      } else {
        throw ConfigError(fmt::format("cannot parse measure '{}'", raw));
      }
      m.kind = MeasureSpec::Kind::Iq;
      m.q = to_double(arg, "Tsallis index");
    } else {
      throw ConfigError(fmt::format("unknown measure '{}' (expected D, I1, I2, I3, Iq(q), C)", raw));
    }
    if (!seen.insert(m.label()).second) throw ConfigError(fmt::format("measure '{}' listed twice", raw));
    out.push_back(m);
  }
  if (out.empty()) throw ConfigError("no measures requested");
  return out;
}

void parse_separations(const std::string& text, SweepConfig& cfg) {
  if (trim(text) == "all") {
    cfg.all_separations = true;
    cfg.separations.clear();
    return;
  }
  cfg.all_separations = false;
  cfg.separations.clear();
  for (const std::string& p : split(text, ',')) {
    if (!p.empty()) cfg.separations.push_back(to_int(p, "separation"));
  }
}

OutputFormat parse_format(const std::optional<std::string>& name, const std::string& path) {
  if (name) {
    if (*name == "csv") return OutputFormat::Csv;
    if (*name == "json") return OutputFormat::Json;
    throw ConfigError(fmt::format("unknown output format '{}'", *name));
  }
  const std::string suffix = ".json";
  if (path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return OutputFormat::Json;
  }
  return OutputFormat::Csv;
}

static SweepConfig sweep_config_from_json(const json& j, Model model) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known{"model", "n",  "chi", "Jx", "epsilon", "field_grid", "theta_grid", "grid",
                                           "separations", "measures", "output", "format", "solver", "threads"};
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) throw ConfigError(fmt::format("unknown config key '{}'", item.key()));
  }
  if (j.contains("model") && parse_model(get<std::string>(j, "model")) != model) {
    throw ConfigError(fmt::format("config model '{}' does not match the subcommand", get<std::string>(j, "model")));
  }
  SweepConfig cfg = default_sweep_config(model);
  if (j.contains("n")) cfg.n = get<int>(j, "n");
  if (j.contains("chi")) cfg.chi = get<double>(j, "chi");
  if (j.contains("Jx")) cfg.jx = get<double>(j, "Jx");
  if (j.contains("epsilon")) cfg.epsilon = get<double>(j, "epsilon");
  for (const char* key : {"grid", "field_grid", "theta_grid"}) {
    if (!j.contains(key)) continue;
    const json& g = j.at(key);
    if (g.is_string()) {
      const GridSpec gs = parse_grid(g.get<std::string>());
      cfg.grid_min = gs.min;
      cfg.grid_max = gs.max;
      cfg.grid_points = gs.points;
    } else if (g.is_array() && g.size() == 3) {
      cfg.grid_min = g[0].get<double>();
      cfg.grid_max = g[1].get<double>();
      cfg.grid_points = g[2].get<int>();
    } else if (g.is_object()) {
      cfg.grid_min = get<double>(g, "min");
      cfg.grid_max = get<double>(g, "max");
      cfg.grid_points = get<int>(g, "points");
    } else {
      throw ConfigError(fmt::format("'{}' must be \"min:max:points\", [min, max, points] or an object", key));
    }
  }
  if (j.contains("separations")) {
    const json& s = j.at("separations");
    if (s.is_string()) {
      parse_separations(s.get<std::string>(), cfg);
    } else if (s.is_array()) {
      cfg.all_separations = false;
      cfg.separations = s.get<std::vector<int>>();
    } else {
      throw ConfigError("'separations' must be \"all\" or a list");
    }
  }
  if (j.contains("measures")) {
    const json& m = j.at("measures");
    if (m.is_string()) {
      cfg.measures = parse_measures(m.get<std::string>());
    } else if (m.is_array()) {
      std::string joined;
      for (const auto& e : m) joined += e.get<std::string>() + ",";
      cfg.measures = parse_measures(joined);
    } else {
      throw ConfigError("'measures' must be a string or a list");
    }
  }
  std::optional<std::string> format;
  if (j.contains("output")) {
    const json& o = j.at("output");
    if (o.is_string()) {
      cfg.output = o.get<std::string>();
    } else if (o.is_object()) {
      cfg.output = get<std::string>(o, "path");
      if (o.contains("format")) format = get<std::string>(o, "format");
    } else {
      throw ConfigError("'output' must be a path or {path, format}");
    }
  }
  if (j.contains("format")) format = get<std::string>(j, "format");
  cfg.format = parse_format(format, cfg.output);
  if (j.contains("solver")) {
    const auto s = get<std::string>(j, "solver");
    if (s == "auto") {
      cfg.solver = SolverChoice::Auto;
    } else if (s == "dense") {
      cfg.solver = SolverChoice::Dense;
    } else {
      throw ConfigError(fmt::format("unknown solver '{}'", s));
    }
  }
  if (j.contains("threads")) cfg.threads = get<int>(j, "threads");
  return cfg;
}

SweepConfig sweep_config_from_json_text(const std::string& text, Model model) {
  const json j = parse_json(text);
  try {
    return sweep_config_from_json(j, model);
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("bad config value: {}", e.what()));
  }
}

SweepConfig load_sweep_config(const std::string& path, Model model) {
  return sweep_config_from_json_text(read_file(path), model);
}

Geometry parse_geometry(const std::string& name) {
  if (name == "cyclic_nn") return Geometry::CyclicNN;
  if (name == "open_nn") return Geometry::OpenNN;
  if (name == "fully_connected") return Geometry::FullyConnected;
  throw UnsupportedSpec(fmt::format("unknown geometry '{}' (expected cyclic_nn, open_nn, fully_connected)", name));
}

FactorizeConfig factorize_config_from_json_text(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known{"geometry", "model", "n", "s", "Jx", "Jy", "Jz", "chi", "output", "format"};
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) throw ConfigError(fmt::format("unknown config key '{}'", item.key()));
  }
  FactorizeConfig cfg;
  if (j.contains("geometry")) cfg.geometry = parse_geometry(get<std::string>(j, "geometry"));
  if (j.contains("model")) cfg.geometry = parse_geometry(get<std::string>(j, "model"));
  if (j.contains("n")) cfg.n = get<int>(j, "n");
  if (j.contains("s")) cfg.s = get<double>(j, "s");
  if (j.contains("Jx")) cfg.jx = get<double>(j, "Jx");
  if (j.contains("Jz")) cfg.jz = get<double>(j, "Jz");
  if (j.contains("Jy")) cfg.jy = get<double>(j, "Jy");
  if (j.contains("chi")) {
    if (j.contains("Jy")) throw ConfigError("give either 'Jy' or 'chi', not both");
    cfg.jy = cfg.jz + get<double>(j, "chi") * (cfg.jx - cfg.jz);
  }
  std::optional<std::string> format;
  if (j.contains("output")) cfg.output = get<std::string>(j, "output");
  if (j.contains("format")) format = get<std::string>(j, "format");
  cfg.format = parse_format(format, cfg.output);
  return cfg;
}

FactorizeConfig load_factorize_config(const std::string& path) {
  return factorize_config_from_json_text(read_file(path));
}

}  // namespace qd
