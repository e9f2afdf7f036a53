#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "dgmzv/exceptional.hpp"
#include "dgmzv/series.hpp"
#include "dgmzv/table.hpp"

namespace dgmzv {

enum ExitCode { exit_ok = 0, exit_domain = 1, exit_usage = 2, exit_internal = 3 };

/// Bad flags or out-of-bounds requests; maps to exit_usage.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::size_t max_weight = 20;
  std::size_t max_depth = 5;
  std::string format = "tsv";
  std::string output;  ///< empty: stdout
  unsigned jobs = 1;
  std::string target = "ls";  ///< bk-check: ls, odd, full-t1
  std::optional<unsigned> weight;
  std::optional<unsigned> depth;
  GeneratorChoice generator = GeneratorChoice::paper;
  std::string left, right;  ///< bracket operands
  std::string ref;          ///< express reference composition

  /// Throws UsageError if a field is out of range.
  void validate() const;
};

struct CommandOutcome {
  int exit_code = exit_ok;
  Table table;
  std::string message;  ///< for stderr; empty when nothing to report
};

CommandOutcome cmd_dims(const RunConfig& cfg);
CommandOutcome cmd_exceptional(const RunConfig& cfg);
CommandOutcome cmd_bk_check(const RunConfig& cfg);
CommandOutcome cmd_bracket(const RunConfig& cfg);
CommandOutcome cmd_express(const RunConfig& cfg);
CommandOutcome cmd_period(const RunConfig& cfg);
CommandOutcome cmd_span(const RunConfig& cfg);

/// Dispatch on cfg.command; throws UsageError for an unknown command.
CommandOutcome run_command(const RunConfig& cfg);

/// dim D_{N,r} for r <= max_depth, r <= N <= max_weight.
DimTable dimension_table(std::size_t max_weight, std::size_t max_depth, unsigned jobs);

/// "x<2a>" for x1^{2a}, or "e<2n>" for the first exceptional element of
/// weight 2n (fixed integral generator when one exists).
DepthPoly named_element(const std::string& name);

/// out[i] = f(i) evaluated on `jobs` threads pulling indices from a shared
/// counter; results land at their own index so the order never depends on
/// scheduling. The first exception thrown by any job is rethrown.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, F&& f) {
  std::vector<std::optional<T>> slots(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
        return;
      }
    }
  };
  const unsigned threads = jobs == 0 ? 1 : jobs;
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace dgmzv
