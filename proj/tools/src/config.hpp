#ifndef LAGMULT_TOOLS_CONFIG_HPP
#define LAGMULT_TOOLS_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lagmult::tools {

/// Raised for anything the user typed wrong; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Experiment { verify, wbv_eq, mpinf_embed, embed_sweep, charex, hardy };

std::string_view to_string(Experiment e);
Experiment parse_experiment(std::string_view name);

/// Parameters of one run. Unset optionals fall back to per-experiment defaults.
struct ExperimentConfig {
  Experiment experiment = Experiment::verify;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<int> N;
  std::uint64_t seed = 1;
  std::vector<std::string> bank;
  std::string out;
  int workers = 1;
  int r_density = 1;
  int trials = 32;
  int instances = 1000;
  int length = 256;
  bool sabotage = false;

  /// `key = value` lines in a fixed key order; parse_config_text inverts it.
  std::string to_text() const;
  /// Single-line form for CSV headers.
  std::string to_inline() const;
};

/// Applies `key = value` lines onto cfg. Blank lines and '#' comments are
/// skipped; unknown keys and malformed values raise UsageError.
void apply_config_text(ExperimentConfig& cfg, std::string_view text);
ExperimentConfig parse_config_text(std::string_view text);
ExperimentConfig load_config_file(const std::string& path);

/// Accepts a decimal number or "inf".
double parse_real(std::string_view s, std::string_view key);
std::string format_real(double v);

}  // namespace lagmult::tools

#endif
