#include "hexaproc/runconfig.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hexaproc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key, "expected a number, got '" + v + "'");
  }
}

long parse_long(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key, "expected an integer, got '" + v + "'");
  }
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
  return {
      {"hbar", fmt_double(hbar)},
      {"mass", fmt_double(mass)},
      {"epsilon", fmt_double(epsilon)},
      {"perm", std::to_string(perm)},
      {"steps", std::to_string(steps)},
      {"blocks", std::to_string(blocks)},
      {"potential", potential},
      {"grid", grid},
      {"vfield", vfield},
      {"vx", fmt_double(vx)},
      {"vy", fmt_double(vy)},
      {"vz", fmt_double(vz)},
      {"format", format},
      {"out", out},
      {"seed", std::to_string(seed)},
      {"speed", fmt_double(speed)},
      {"planck", fmt_double(planck)},
  };
}

void RunConfig::validate() const {
  if (!(hbar > 0.0)) throw ConfigError("hbar", "must be > 0");
  if (!(mass > 0.0)) throw ConfigError("mass", "must be > 0");
  if (!(epsilon > 0.0)) throw ConfigError("epsilon", "must be > 0");
  if (perm < 1 || perm > 8) throw ConfigError("perm", "must be in 1..8");
  if (steps < 1) throw ConfigError("steps", "must be >= 1");
  if (blocks < 1) throw ConfigError("blocks", "must be >= 1");
  if (format != "csv" && format != "json")
    throw ConfigError("format", "must be csv or json");
  if (vfield != "zero" && vfield != "uniform" && vfield != "sine")
    throw ConfigError("vfield", "must be zero, uniform or sine");
  if (!(speed > 0.0)) throw ConfigError("speed", "must be > 0");
  if (planck < 0.0) throw ConfigError("planck", "must be >= 0 (0 = 2*pi*hbar)");

  double x_min, x_max;
  int n;
  parse_grid(x_min, x_max, n);
  std::string kind;
  double coeff;
  parse_potential(kind, coeff);
}

void RunConfig::parse_grid(double& x_min, double& x_max, int& n) const {
  std::istringstream ss(grid);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c))
    throw ConfigError("grid", "expected xmin:xmax:n");
  x_min = parse_double("grid", trim(a));
  x_max = parse_double("grid", trim(b));
  n = static_cast<int>(parse_long("grid", trim(c)));
  if (!(x_max > x_min)) throw ConfigError("grid", "xmax must exceed xmin");
  if (n < 16) throw ConfigError("grid", "need at least 16 nodes");
}

void RunConfig::parse_potential(std::string& kind, double& coeff) const {
  const auto colon = potential.find(':');
  kind = potential.substr(0, colon);
  coeff = 0.0;
  if (colon != std::string::npos)
    coeff = parse_double("potential", potential.substr(colon + 1));
  if (kind == "free") {
    if (colon != std::string::npos)
      throw ConfigError("potential", "free takes no coefficient");
  } else if (kind == "linear" || kind == "harmonic") {
    if (colon == std::string::npos)
      throw ConfigError("potential", kind + " needs a coefficient, e.g. " + kind + ":1.0");
  } else {
    throw ConfigError("potential", "unknown kind '" + kind + "'");
  }
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "hbar") hbar = parse_double(key, value);
  else if (key == "mass") mass = parse_double(key, value);
  else if (key == "epsilon") epsilon = parse_double(key, value);
  else if (key == "perm") perm = static_cast<int>(parse_long(key, value));
  else if (key == "steps") steps = parse_long(key, value);
  else if (key == "blocks") blocks = parse_long(key, value);
  else if (key == "potential") potential = value;
  else if (key == "grid") grid = value;
  else if (key == "vfield") vfield = value;
  else if (key == "vx") vx = parse_double(key, value);
  else if (key == "vy") vy = parse_double(key, value);
  else if (key == "vz") vz = parse_double(key, value);
  else if (key == "format") format = value;
  else if (key == "out") out = value;
  else if (key == "seed") seed = parse_long(key, value);
  else if (key == "speed") speed = parse_double(key, value);
  else if (key == "planck") planck = parse_double(key, value);
  else throw ConfigError(key, "unknown key");
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  RunConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line.substr(0, line.find('#')));
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config", "line " + std::to_string(line_no) + " is not key=value");
    cfg.set(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
  }
  return cfg;
}

}  // namespace hexaproc
