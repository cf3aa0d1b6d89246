#ifndef LAGMULT_SEQUENCES_HPP
#define LAGMULT_SEQUENCES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lagmult {

/// A bounded multiplier sequence {m_k} given by a closed-form family.
///
/// Every family knows its values for all k, its supremum, and how its tail
/// behaves, so differences and norms never have to guess past a buffer.
/// Values are computed on demand; the object is immutable and thread-safe.
class MultiplierSeq {
 public:
  enum class Family { constant, abel, riesz, characteristic, oscillating, tabulated };

  static MultiplierSeq constant(double c);
  /// m_k = r^k, 0 <= r < 1.
  static MultiplierSeq abel(double r);
  /// m_k = (1 - k/(N+1))^delta for k <= N, zero afterwards.
  static MultiplierSeq riesz(int N, double delta);
  /// m_k = 1 for k < K, zero afterwards.
  static MultiplierSeq characteristic(int K);
  /// m_k = cos(a log(k+1)), the real part of (k+1)^{ia}.
  static MultiplierSeq oscillating(double a);
  /// Finite table, zero beyond its length.
  static MultiplierSeq tabulated(std::vector<double> values);

  Family family() const noexcept { return family_; }

  double operator[](std::size_t k) const;
  std::vector<double> head(std::size_t n) const;

  /// sup_k |m_k|.
  double sup_abs() const;
  /// sup_{i >= k} |m_i - limit|, with limit 0 when the family has none.
  double tail_deviation(std::size_t k) const;
  /// lim m_k when the family has one.
  std::optional<double> limit() const;
  /// One past the last nonzero index, for finitely supported families.
  std::optional<std::size_t> support() const;

  /// Mini-language form: "constant:1", "abel:0.9", "riesz:128:1.5", "char:64",
  /// "osc:2", or "tab:v0;v1;..." for tabulated values.
  std::string spec() const;

 private:
  MultiplierSeq(Family f, double a, double b, std::vector<double> table = {})
      : family_(f), a_(a), b_(b), table_(std::move(table)) {}

  Family family_;
  double a_;
  double b_;
  std::vector<double> table_;
};

/// Parses the mini-language; "file:<path>" reads one decimal value per line.
/// Throws std::invalid_argument on malformed or empty input.
MultiplierSeq parse_sequence(std::string_view spec);

struct FracDiff {
  double value = 0.0;
  double error_bound = 0.0;
  std::size_t terms = 0;
};

/// Delta^delta m_k = sum_j A_j^{-delta-1} m_{k+j}.
///
/// J = 0 selects the default window max(4096, 64(k+1)). Integer delta and
/// finitely supported sequences are summed exactly; a known limit is handled
/// by the telescoped tail limit * (-A_J^{-delta}); anything else carries the
/// bound sup_{i>k+J}|m_i - limit| * |A_J^{-delta}|. Throws TruncationError if
/// that bound exceeds tol.
FracDiff frac_diff(const MultiplierSeq& m, double delta, std::size_t k, std::size_t J = 0,
                   double tol = 1e-9);

/// Fractional difference of a finite vector treated as zero beyond its end.
std::vector<double> frac_diff_finite(std::span<const double> v, double delta);

struct WbvBlock {
  std::size_t N;
  double value;
};

struct WbvReport {
  double q = 2.0;
  double delta = 1.0;
  double sup_part = 0.0;
  std::vector<WbvBlock> block_sups;
  double norm = 0.0;
  std::size_t truncation_tail = 0;

  double max_block() const;
};

/// ||m||_{q,delta} = sup|m_k| + sup_N (sum_{k=N}^{2N} |(k+1)^delta Delta^delta m_k|^q / (k+1))^{1/q},
/// with N restricted to {0, 1, 2, 4, ..., <= Nmax}; q = inf uses the max over each block.
WbvReport wbv_norm(const MultiplierSeq& m, double q, double delta, std::size_t Nmax);

/// Single block value for arbitrary N (used for dense-N spot checks).
double wbv_block(const MultiplierSeq& m, double q, double delta, std::size_t N);

/// Smooth monotone cutoff: 1 on [0, 2^{i+1}], 0 on [2^{i+2}, inf).
double cutoff_phi(int i, double x);

}  // namespace lagmult

#endif
