#pragma once
// Acceptance suites over the fixed corpus, reported as deterministic JSON.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace omegalab {

struct VerifyOptions {
  std::size_t vertex_budget = 1'000'000;
  std::size_t simplex_budget = 10'000'000;
  std::uint64_t node_budget = 50'000'000;
  bool timings = false;
};

struct VerifyOutcome {
  std::string json;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t incomplete = 0;
  /// 0 all pass, 1 some check failed, 2 no failure but some check ran out of budget.
  int exit_code() const { return failed ? 1 : incomplete ? 2 : 0; }
};

/// adjointness, betti, chromatic, squarefree, morse, kunneth, approx.
const std::vector<std::string>& verify_suites();

/// Runs one suite or "all". Throws ParameterError for an unknown suite.
VerifyOutcome run_verify(const std::string& suite, const VerifyOptions& options);

/// Worker count: OMEGALAB_THREADS if set and positive, else hardware concurrency.
std::size_t worker_count();

/// Calls fn(i) for i in [0, n) on up to worker_count() threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace omegalab
