#ifndef HEXAPROC_RUNCONFIG_HPP
#define HEXAPROC_RUNCONFIG_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hexaproc {

/// Invalid or unknown configuration; carries the offending key.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& key_, const std::string& what_)
      : std::runtime_error("config key '" + key_ + "': " + what_), key(key_) {}
  std::string key;
};

/// Reproducible run configuration shared by every subcommand. File format is
/// flat key=value lines ('#' comments); command-line flags override the file.
struct RunConfig {
  double hbar = 1.0;
  double mass = 1.0;
  double epsilon = 0.01;
  int perm = 1;
  long steps = 60;
  long blocks = 10;
  std::string potential = "free";   // free | linear:<g> | harmonic:<k>
  std::string grid = "-16:16:1601"; // xmin:xmax:n
  std::string vfield = "zero";      // zero | uniform | sine
  double vx = 0.0, vy = 0.0, vz = 0.0;
  std::string format = "csv";       // csv | json
  std::string out;                  // empty = stdout
  std::int64_t seed = 1;
  double speed = 1.0;               // epsilon subcommand
  double planck = 0.0;              // 0 = default 2*pi*hbar

  /// Ordered echo of every effective value, for output metadata headers.
  std::vector<std::pair<std::string, std::string>> echo() const;

  /// Throws ConfigError on any out-of-range value.
  void validate() const;

  /// Parsed grid spec.
  void parse_grid(double& x_min, double& x_max, int& n) const;

  /// Parsed potential spec: kind plus coefficient.
  void parse_potential(std::string& kind, double& coeff) const;

  static RunConfig from_file(const std::string& path);

  /// Apply one key=value assignment; unknown keys throw ConfigError.
  void set(const std::string& key, const std::string& value);
};

}  // namespace hexaproc

#endif
