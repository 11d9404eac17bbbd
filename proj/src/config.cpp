#include "ssg/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ssg {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!known.count(it.key())) {
      throw ConfigError("unknown key '" + it.key() + "' in " + where);
    }
  }
}

double number_at(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(std::string(key) + " must be a number");
  return v.get<double>();
}

int int_at(const json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw ConfigError(std::string(key) + " must be an integer");
  }
  return v.get<int>();
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config root must be an object");
  reject_unknown_keys(doc,
                      {"solitons", "grid", "tolerance", "seed",
                       "singular_margin", "samples"},
                      "config");

  RunConfig c;
  if (doc.contains("solitons")) {
    const json& arr = doc.at("solitons");
    if (!arr.is_array()) throw ConfigError("solitons must be a list");
    int index = 0;
    for (const json& s : arr) {
      if (!s.is_object()) throw ConfigError("each soliton must be an object");
      reject_unknown_keys(s, {"sigma", "b", "a"}, "soliton entry");
      SolitonParams p;
      p.sigma = number_at(s, "sigma", 0.0);
      p.b = number_at(s, "b", 0.0);
      p.a = number_at(s, "a", 0.0);
      p.gen = 2 + index;
      c.solitons.push_back(p);
      ++index;
    }
  }
  if (doc.contains("grid")) {
    const json& g = doc.at("grid");
    if (!g.is_object()) throw ConfigError("grid must be an object");
    reject_unknown_keys(g, {"xmin", "xmax", "nx", "tmin", "tmax", "nt"},
                        "grid");
    c.grid.xmin = number_at(g, "xmin", c.grid.xmin);
    c.grid.xmax = number_at(g, "xmax", c.grid.xmax);
    c.grid.nx = int_at(g, "nx", c.grid.nx);
    c.grid.tmin = number_at(g, "tmin", c.grid.tmin);
    c.grid.tmax = number_at(g, "tmax", c.grid.tmax);
    c.grid.nt = int_at(g, "nt", c.grid.nt);
  }
  c.tolerance = number_at(doc, "tolerance", c.tolerance);
  if (doc.contains("seed")) {
    const json& v = doc.at("seed");
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw ConfigError("seed must be a non-negative integer");
    }
    c.seed = v.get<std::uint64_t>();
  }
  c.singular_margin = number_at(doc, "singular_margin", c.singular_margin);
  c.samples = int_at(doc, "samples", c.samples);

  validate_config(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate_config(const RunConfig& c) {
  for (std::size_t i = 0; i < c.solitons.size(); ++i) {
    if (c.solitons[i].sigma == 0.0) {
      throw ConfigError("soliton sigma must be nonzero");
    }
    for (std::size_t j = i + 1; j < c.solitons.size(); ++j) {
      if (c.solitons[i].sigma == c.solitons[j].sigma) {
        throw ConfigError("soliton sigmas must be pairwise distinct");
      }
      if (c.solitons[i].sigma * c.solitons[j].sigma < 0.0) {
        throw ConfigError("soliton sigmas must share a sign");
      }
    }
  }
  if (2 + int(c.solitons.size()) > kMaxGenerators) {
    throw ConfigError("too many solitons for the generator budget");
  }
  if (c.grid.nx < 1 || c.grid.nt < 1) {
    throw ConfigError("grid counts must be at least 1");
  }
  if (!(c.grid.xmax >= c.grid.xmin) || !(c.grid.tmax >= c.grid.tmin)) {
    throw ConfigError("grid bounds are inverted");
  }
  if (c.tolerance < 0.0) throw ConfigError("tolerance must not be negative");
  if (!(c.singular_margin > 0.0)) {
    throw ConfigError("singular_margin must be positive");
  }
  if (c.samples < 1) throw ConfigError("samples must be at least 1");
}

Window config_window(const RunConfig& c) {
  Window w;
  w.xmin = c.grid.xmin;
  w.xmax = c.grid.xmax;
  w.tmin = c.grid.tmin;
  w.tmax = c.grid.tmax;
  return w;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out;
  out.reserve(std::size_t(n));
  if (n == 1) {
    out.push_back(lo);
    return out;
  }
  const double step = (hi - lo) / double(n - 1);
  for (int i = 0; i < n; ++i) out.push_back(lo + step * double(i));
  return out;
}

}  // namespace ssg
