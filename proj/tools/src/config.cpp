#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace lagmult::tools {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long long parse_integer(std::string_view s, std::string_view key) {
  long long v = 0;
  const auto t = trim(s);
  auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw UsageError("config key '" + std::string(key) + "' expects an integer, got '" + std::string(s) + "'");
  }
  return v;
}

bool parse_bool(std::string_view s, std::string_view key) {
  const auto t = trim(s);
  if (t == "true" || t == "1") return true;
  if (t == "false" || t == "0") return false;
  throw UsageError("config key '" + std::string(key) + "' expects true or false");
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(',', start);
    const auto item = trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (!item.empty()) out.emplace_back(item);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += ',';
    s += items[i];
  }
  return s;
}

std::vector<std::pair<std::string, std::string>> entries(const ExperimentConfig& c) {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("experiment", std::string(to_string(c.experiment)));
  if (c.alpha) kv.emplace_back("alpha", format_real(*c.alpha));
  if (c.beta) kv.emplace_back("beta", format_real(*c.beta));
  if (c.p) kv.emplace_back("p", format_real(*c.p));
  if (c.q) kv.emplace_back("q", format_real(*c.q));
  if (c.N) kv.emplace_back("N", std::to_string(*c.N));
  kv.emplace_back("seed", std::to_string(c.seed));
  if (!c.bank.empty()) kv.emplace_back("bank", join(c.bank));
  if (!c.out.empty()) kv.emplace_back("out", c.out);
  kv.emplace_back("workers", std::to_string(c.workers));
  kv.emplace_back("r_density", std::to_string(c.r_density));
  kv.emplace_back("trials", std::to_string(c.trials));
  kv.emplace_back("instances", std::to_string(c.instances));
  kv.emplace_back("length", std::to_string(c.length));
  if (c.sabotage) kv.emplace_back("sabotage", "true");
  return kv;
}

}  // namespace

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::verify:
      return "verify";
    case Experiment::wbv_eq:
      return "wbv-eq";
    case Experiment::mpinf_embed:
      return "mpinf-embed";
    case Experiment::embed_sweep:
      return "embed-sweep";
    case Experiment::charex:
      return "charex";
    case Experiment::hardy:
      return "hardy";
  }
  return "unknown";
}

Experiment parse_experiment(std::string_view name) {
  for (auto e : {Experiment::verify, Experiment::wbv_eq, Experiment::mpinf_embed, Experiment::embed_sweep,
                 Experiment::charex, Experiment::hardy}) {
    if (to_string(e) == name) return e;
  }
  throw UsageError("unknown experiment '" + std::string(name) + "'");
}

double parse_real(std::string_view s, std::string_view key) {
  const auto t = trim(s);
  if (t == "inf" || t == "+inf" || t == "infinity") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw UsageError("'" + std::string(key) + "' expects a number or inf, got '" + std::string(s) + "'");
  }
  return v;
}

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string ExperimentConfig::to_text() const {
  std::string s;
  for (const auto& [k, v] : entries(*this)) s += k + " = " + v + "\n";
  return s;
}

std::string ExperimentConfig::to_inline() const {
  std::string s;
  for (const auto& [k, v] : entries(*this)) {
    if (!s.empty()) s += "; ";
    s += k + "=" + v;
  }
  return s;
}

void apply_config_text(ExperimentConfig& cfg, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("config line " + std::to_string(lineno) + " is not of the form key = value");
    }
    const std::string key(trim(t.substr(0, eq)));
    const std::string_view value = trim(t.substr(eq + 1));
    if (key == "experiment") {
      cfg.experiment = parse_experiment(value);
    } else if (key == "alpha") {
      cfg.alpha = parse_real(value, key);
    } else if (key == "beta") {
      cfg.beta = parse_real(value, key);
    } else if (key == "p") {
      cfg.p = parse_real(value, key);
    } else if (key == "q") {
      cfg.q = parse_real(value, key);
    } else if (key == "N") {
      cfg.N = static_cast<int>(parse_integer(value, key));
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_integer(value, key));
    } else if (key == "bank") {
      cfg.bank = split_list(value);
    } else if (key == "out") {
      cfg.out = std::string(value);
    } else if (key == "workers") {
      cfg.workers = static_cast<int>(parse_integer(value, key));
    } else if (key == "r_density") {
      cfg.r_density = static_cast<int>(parse_integer(value, key));
    } else if (key == "trials") {
      cfg.trials = static_cast<int>(parse_integer(value, key));
    } else if (key == "instances") {
      cfg.instances = static_cast<int>(parse_integer(value, key));
    } else if (key == "length") {
      cfg.length = static_cast<int>(parse_integer(value, key));
    } else if (key == "sabotage") {
      cfg.sabotage = parse_bool(value, key);
    } else {
      throw UsageError("unknown config key '" + key + "' on line " + std::to_string(lineno));
    }
  }
}

ExperimentConfig parse_config_text(std::string_view text) {
  ExperimentConfig cfg;
  apply_config_text(cfg, text);
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace lagmult::tools
