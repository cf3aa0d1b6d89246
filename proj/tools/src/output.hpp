#ifndef LAGMULT_TOOLS_OUTPUT_HPP
#define LAGMULT_TOOLS_OUTPUT_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace lagmult::tools {

inline constexpr const char* kCsvSchema = "lagmult-csv v1";

/// Build identifier (git describe at configure time).
const char* build_id();

/// Rows of string cells; numbers go through cell() so reruns print the same bytes.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<std::string> row);
  std::size_t rows() const noexcept { return rows_.size(); }

  /// Schema line, config echo and build id as '#' comments, then header and rows.
  std::string render(const std::string& experiment, const std::string& config_line) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

/// %.17g, or "inf"/"nan".
std::string cell(double v);
std::string cell(long long v);
inline std::string cell(int v) { return cell(static_cast<long long>(v)); }
inline std::string cell(std::size_t v) { return cell(static_cast<long long>(v)); }
std::string cell(bool v);

/// Runs job(i) for i in [0, n) on `workers` threads. Results are written by
/// index, so the caller sees the same order whatever the scheduling. The first
/// exception thrown by a job is rethrown after all workers stop.
template <class T>
std::vector<T> run_indexed(std::size_t n, int workers, const std::function<T(std::size_t)>& job) {
  std::vector<T> results(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        results[i] = job(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  const int count = std::max(1, std::min<int>(workers, static_cast<int>(n)));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < count; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace lagmult::tools

#endif
