#include "lagmult/sequences.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lagmult/errors.hpp"
#include "lagmult/special.hpp"

namespace lagmult {

namespace {

std::string fmt_num(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s, std::string_view what) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  while (first < last && std::isspace(static_cast<unsigned char>(*first))) ++first;
  while (last > first && std::isspace(static_cast<unsigned char>(*(last - 1)))) --last;
  auto res = std::from_chars(first, last, v);
  if (first == last || res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
    throw std::invalid_argument("cannot parse " + std::string(what) + " from '" + std::string(s) + "'");
  }
  return v;
}

int parse_int(std::string_view s, std::string_view what) {
  const double v = parse_double(s, what);
  if (v != std::floor(v) || v < 0 || v > 1e8) {
    throw std::invalid_argument(std::string(what) + " must be a non-negative integer, got '" +
                                std::string(s) + "'");
  }
  return static_cast<int>(v);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool is_integer(double d) { return d == std::floor(d); }

}  // namespace

MultiplierSeq MultiplierSeq::constant(double c) {
  if (!std::isfinite(c)) throw std::invalid_argument("constant sequence needs a finite value");
  return {Family::constant, c, 0.0};
}

MultiplierSeq MultiplierSeq::abel(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("abel rate must lie in [0, 1)");
  return {Family::abel, r, 0.0};
}

MultiplierSeq MultiplierSeq::riesz(int N, double delta) {
  if (N < 0) throw std::invalid_argument("riesz order N must be non-negative");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw std::invalid_argument("riesz exponent must be positive");
  return {Family::riesz, static_cast<double>(N), delta};
}

MultiplierSeq MultiplierSeq::characteristic(int K) {
  if (K < 0) throw std::invalid_argument("characteristic length must be non-negative");
  return {Family::characteristic, static_cast<double>(K), 0.0};
}

MultiplierSeq MultiplierSeq::oscillating(double a) {
  if (!std::isfinite(a)) throw std::invalid_argument("oscillation frequency must be finite");
  return {Family::oscillating, a, 0.0};
}

MultiplierSeq MultiplierSeq::tabulated(std::vector<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("tabulated sequence contains a non-finite value");
  }
  return {Family::tabulated, 0.0, 0.0, std::move(values)};
}

double MultiplierSeq::operator[](std::size_t k) const {
  const double kk = static_cast<double>(k);
  switch (family_) {
    case Family::constant:
      return a_;
    case Family::abel:
      return std::pow(a_, kk);
    case Family::riesz:
      return kk <= a_ ? std::pow(1.0 - kk / (a_ + 1.0), b_) : 0.0;
    case Family::characteristic:
      return kk < a_ ? 1.0 : 0.0;
    case Family::oscillating:
      return std::cos(a_ * std::log(kk + 1.0));
    case Family::tabulated:
      return k < table_.size() ? table_[k] : 0.0;
  }
  return 0.0;
}

std::vector<double> MultiplierSeq::head(std::size_t n) const {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = (*this)[k];
  return out;
}

double MultiplierSeq::sup_abs() const {
  switch (family_) {
    case Family::constant:
      return std::abs(a_);
    case Family::abel:
    case Family::riesz:
    case Family::oscillating:
      return 1.0;
    case Family::characteristic:
      return a_ >= 1.0 ? 1.0 : 0.0;
    case Family::tabulated: {
      double s = 0.0;
      for (double v : table_) s = std::max(s, std::abs(v));
      return s;
    }
  }
  return 0.0;
}

double MultiplierSeq::tail_deviation(std::size_t k) const {
  const double kk = static_cast<double>(k);
  switch (family_) {
    case Family::constant:
      return 0.0;
    case Family::abel:
      return std::pow(a_, kk);
    case Family::riesz:
      return kk <= a_ ? std::pow(1.0 - kk / (a_ + 1.0), b_) : 0.0;
    case Family::characteristic:
      return kk < a_ ? 1.0 : 0.0;
    case Family::oscillating:
      return a_ == 0.0 ? 0.0 : 1.0;
    case Family::tabulated: {
      double s = 0.0;
      for (std::size_t i = k; i < table_.size(); ++i) s = std::max(s, std::abs(table_[i]));
      return s;
    }
  }
  return 0.0;
}

std::optional<double> MultiplierSeq::limit() const {
  switch (family_) {
    case Family::constant:
      return a_;
    case Family::oscillating:
      if (a_ == 0.0) return 1.0;
      return std::nullopt;
    default:
      return 0.0;
  }
}

std::optional<std::size_t> MultiplierSeq::support() const {
  switch (family_) {
    case Family::riesz:
      return static_cast<std::size_t>(a_) + 1;
    case Family::characteristic:
      return static_cast<std::size_t>(a_);
    case Family::tabulated:
      return table_.size();
    case Family::abel:
      if (a_ == 0.0) return 1;
      return std::nullopt;
    case Family::constant:
      if (a_ == 0.0) return 0;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::string MultiplierSeq::spec() const {
  switch (family_) {
    case Family::constant:
      return "constant:" + fmt_num(a_);
    case Family::abel:
      return "abel:" + fmt_num(a_);
    case Family::riesz:
      return "riesz:" + fmt_num(a_) + ":" + fmt_num(b_);
    case Family::characteristic:
      return "char:" + fmt_num(a_);
    case Family::oscillating:
      return "osc:" + fmt_num(a_);
    case Family::tabulated: {
      std::string s = "tab:";
      for (std::size_t i = 0; i < table_.size(); ++i) {
        if (i) s += ';';
        s += fmt_num(table_[i]);
      }
      return s;
    }
  }
  return {};
}

MultiplierSeq parse_sequence(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("sequence spec '" + std::string(spec) + "' lacks a family prefix");
  }
  const std::string_view family = spec.substr(0, colon);
  const std::string_view rest = spec.substr(colon + 1);

  if (family == "file") {
    std::ifstream in{std::string(rest)};
    if (!in) throw std::invalid_argument("cannot open sequence file '" + std::string(rest) + "'");
    std::vector<double> values;
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      values.push_back(parse_double(line, "sequence value"));
    }
    if (values.empty()) throw std::invalid_argument("sequence file '" + std::string(rest) + "' is empty");
    return MultiplierSeq::tabulated(std::move(values));
  }

  const auto args = split(rest, ':');
  auto expect = [&](std::size_t n) {
    if (args.size() != n) {
      throw std::invalid_argument("sequence spec '" + std::string(spec) + "' expects " +
                                  std::to_string(n) + " argument(s)");
    }
  };
  if (family == "constant") {
    expect(1);
    return MultiplierSeq::constant(parse_double(args[0], "constant"));
  }
  if (family == "abel") {
    expect(1);
    return MultiplierSeq::abel(parse_double(args[0], "abel rate"));
  }
  if (family == "riesz") {
    expect(2);
    return MultiplierSeq::riesz(parse_int(args[0], "riesz N"), parse_double(args[1], "riesz exponent"));
  }
  if (family == "char") {
    expect(1);
    return MultiplierSeq::characteristic(parse_int(args[0], "characteristic length"));
  }
  if (family == "osc") {
    expect(1);
    return MultiplierSeq::oscillating(parse_double(args[0], "oscillation frequency"));
  }
  if (family == "tab") {
    expect(1);
    std::vector<double> values;
    for (auto part : split(args[0], ';')) values.push_back(parse_double(part, "tabulated value"));
    return MultiplierSeq::tabulated(std::move(values));
  }
  throw std::invalid_argument("unknown sequence family '" + std::string(family) + "'");
}

FracDiff frac_diff(const MultiplierSeq& m, double delta, std::size_t k, std::size_t J, double tol) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw std::domain_error("frac_diff: delta must be positive");
  if (J == 0) J = std::max<std::size_t>(4096, 64 * (k + 1));

  FracDiff out;
  const auto support = m.support();
  if (support && k >= *support) {
    out.terms = 0;
    return out;
  }
  bool exact = false;
  if (is_integer(delta)) {
    J = std::min<std::size_t>(J, static_cast<std::size_t>(delta));
    exact = true;
  }
  if (support) {
    const std::size_t last = *support - 1 - k;  // last j with possibly nonzero m_{k+j}
    if (last <= J) {
      J = last;
      exact = true;
    }
  }
  if (!exact) J = std::max<std::size_t>(J, static_cast<std::size_t>(std::ceil(delta)));

  const double lim = m.limit().value_or(0.0);
  double w = 1.0;       // A_j^{-delta-1}
  double a_tail = 1.0;  // A_j^{-delta}
  double sum = 0.0;
  for (std::size_t j = 0; j <= J; ++j) {
    if (j > 0) {
      const double jj = static_cast<double>(j);
      w *= (jj - 1.0 - delta) / jj;
      a_tail *= (jj - delta) / jj;
    }
    sum += w * (m[k + j] - lim);
  }
  out.value = sum;
  out.terms = J + 1;
  if (!exact) {
    out.error_bound = m.tail_deviation(k + J + 1) * std::abs(a_tail);
    if (out.error_bound > tol) {
      throw TruncationError("fractional difference of " + m.spec() + " (delta = " + std::to_string(delta) +
                            ", k = " + std::to_string(k) + ") has tail bound " +
                            std::to_string(out.error_bound) + " above tolerance " + std::to_string(tol));
    }
  }
  return out;
}

std::vector<double> frac_diff_finite(std::span<const double> v, double delta) {
  if (!(delta > 0.0)) throw std::domain_error("frac_diff_finite: delta must be positive");
  const std::size_t n = v.size();
  std::vector<double> w(n);
  if (n) w[0] = 1.0;
  for (std::size_t j = 1; j < n; ++j) {
    w[j] = w[j - 1] * (static_cast<double>(j) - 1.0 - delta) / static_cast<double>(j);
  }
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; k + j < n; ++j) s += w[j] * v[k + j];
    out[k] = s;
  }
  return out;
}

double WbvReport::max_block() const {
  double b = 0.0;
  for (const auto& blk : block_sups) b = std::max(b, blk.value);
  return b;
}

namespace {

double block_value(const MultiplierSeq& m, double q, double delta, std::size_t N, std::size_t* max_terms) {
  double acc = 0.0;
  for (std::size_t k = N; k <= 2 * N; ++k) {
    const FracDiff d = frac_diff(m, delta, k);
    if (max_terms) *max_terms = std::max(*max_terms, d.terms);
    const double t = std::abs(std::pow(static_cast<double>(k) + 1.0, delta) * d.value);
    if (std::isinf(q)) {
      acc = std::max(acc, t);
    } else {
      acc += std::pow(t, q) / (static_cast<double>(k) + 1.0);
    }
  }
  return std::isinf(q) ? acc : std::pow(acc, 1.0 / q);
}

}  // namespace

double wbv_block(const MultiplierSeq& m, double q, double delta, std::size_t N) {
  if (!(q >= 1.0)) throw std::domain_error("wbv: q must be >= 1");
  return block_value(m, q, delta, N, nullptr);
}

WbvReport wbv_norm(const MultiplierSeq& m, double q, double delta, std::size_t Nmax) {
  if (!(q >= 1.0)) throw std::domain_error("wbv_norm: q must be >= 1");
  if (!(delta > 0.0)) throw std::domain_error("wbv_norm: delta must be positive");
  if (Nmax < 1) throw std::domain_error("wbv_norm: Nmax must be >= 1");
  WbvReport rep;
  rep.q = q;
  rep.delta = delta;
  rep.sup_part = m.sup_abs();
  std::size_t terms = 0;
  rep.block_sups.push_back({0, block_value(m, q, delta, 0, &terms)});
  for (std::size_t N = 1; N <= Nmax; N *= 2) {
    rep.block_sups.push_back({N, block_value(m, q, delta, N, &terms)});
  }
  rep.truncation_tail = terms;
  rep.norm = rep.sup_part + rep.max_block();
  return rep;
}

double cutoff_phi(int i, double x) {
  const double y = std::ldexp(x, -i);
  if (y <= 2.0) return 1.0;
  if (y >= 4.0) return 0.0;
  const double t = (4.0 - y) / 2.0;
  const double s_t = std::exp(-1.0 / t);
  const double s_c = std::exp(-1.0 / (1.0 - t));
  return s_t / (s_t + s_c);
}

}  // namespace lagmult
