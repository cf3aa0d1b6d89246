#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include "config.hpp"
#include "experiments.hpp"
#include "lagmult/errors.hpp"

namespace lagmult::tools {

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path.string() + "'");
  f << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laguerre multiplier experiments"};
  app.set_version_flag("--version", "lagmult 0.1.0");

  std::string command;
  std::string config_path;
  std::optional<std::string> alpha, beta, p, q, bank;
  std::optional<int> N, workers, r_density, trials, instances, length;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_path;
  bool sabotage = false;

  app.add_option("command", command, "verify | wbv-eq | mpinf-embed | embed-sweep | charex | hardy")->required();
  app.add_option("--config", config_path, "key = value config file; flags override it");
  app.add_option("--alpha", alpha, "Laguerre order alpha");
  app.add_option("--beta", beta, "target order beta");
  app.add_option("--p", p, "exponent p (number or inf)");
  app.add_option("--q", q, "exponent q (number or inf)");
  app.add_option("--N", N, "basis size");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--bank", bank, "comma-separated sequence specs");
  app.add_option("--out", out_path, "CSV output path; the JSON summary goes next to it");
  app.add_option("--workers", workers, "worker threads");
  app.add_option("--r-density", r_density, "points per half-octave of 1-r");
  app.add_option("--trials", trials, "random candidates per norm search");
  app.add_option("--instances", instances, "Hardy instances");
  app.add_option("--length", length, "Hardy sequence length");
  app.add_flag("--sabotage", sabotage, "perturb one Parseval coefficient")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    ExperimentConfig cfg;
    if (!config_path.empty()) cfg = load_config_file(config_path);
    cfg.experiment = parse_experiment(command);
    if (alpha) cfg.alpha = parse_real(*alpha, "alpha");
    if (beta) cfg.beta = parse_real(*beta, "beta");
    if (p) cfg.p = parse_real(*p, "p");
    if (q) cfg.q = parse_real(*q, "q");
    if (N) cfg.N = *N;
    if (seed) cfg.seed = *seed;
    if (bank) apply_config_text(cfg, "bank = " + *bank);
    if (out_path) cfg.out = *out_path;
    if (workers) cfg.workers = *workers;
    if (r_density) cfg.r_density = *r_density;
    if (trials) cfg.trials = *trials;
    if (instances) cfg.instances = *instances;
    if (length) cfg.length = *length;
    if (sabotage) cfg.sabotage = true;

    const RunResult res = run_experiment(cfg);
    for (const auto& line : res.report) err << line << '\n';
    if (cfg.out.empty()) {
      out << res.csv;
    } else {
      const std::filesystem::path csv_path(cfg.out);
      write_file(csv_path, res.csv);
      std::filesystem::path json_path = csv_path;
      json_path.replace_extension(".json");
      write_file(json_path, res.summary.dump(2) + "\n");
    }
    return res.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 1;
  } catch (const IdentityViolation& e) {
    err << "identity violated: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace lagmult::tools
