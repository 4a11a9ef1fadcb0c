#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <type_traits>
#include <vector>

#include "mipbs/subset_sum.hpp"

namespace mipbs {

/// Reference: applies f to every item in order.
template <class T, class F>
auto map_serial(const std::vector<T>& items, F f) {
  using R = std::invoke_result_t<F, const T&>;
  std::vector<R> out;
  out.reserve(items.size());
  for (const T& item : items) out.push_back(f(item));
  return out;
}

/// Same result as map_serial; f must be safe to call concurrently.
/// Instance costs vary a lot with n, hence the dynamic schedule.
template <class T, class F>
auto map_parallel(const std::vector<T>& items, F f) {
  using R = std::invoke_result_t<F, const T&>;
  std::vector<R> out(items.size());
  const long count = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) out[i] = f(items[i]);
  return out;
}

// Every instance with 1 <= n <= n_max, a_i in [1, a_max] and
// b in [1, sum(a) + b_extra], in lexicographic order of (n, a, b).
std::vector<SubsetSumInstance> enumerate_instances(int n_max, int a_max, int b_extra);

struct SweepOutcome {
  bool yes = false;   // Subset Sum verdict
  bool pass = false;  // reduction verdict agrees and every side check holds
};

struct SweepRow {
  std::size_t n = 0;
  std::size_t instances = 0;
  std::size_t yes = 0;
  std::size_t passed = 0;
};

struct SweepSummary {
  std::string kind;  // "mip" or "mbs"
  std::vector<SweepRow> rows;
  std::vector<SubsetSumInstance> failures;
  double seconds = 0;

  std::size_t instances() const;
  std::size_t passed() const;
  bool ok() const { return failures.empty(); }
};

// verify_reduction plus equal verdicts at budgets C, C+1/3, C+2/3.
SweepOutcome check_mip_instance(const SubsetSumInstance& inst);
// check_mbs_reduction(inst).holds().
SweepOutcome check_mbs_outcome(const SubsetSumInstance& inst);

// b ranges up to sum(a)+1 for mip and sum(a) for mbs.
SweepSummary sweep_mip(int n_max, int a_max, bool parallel = true);
SweepSummary sweep_mbs(int n_max, int a_max, bool parallel = true);

void write_summary(std::ostream& out, const SweepSummary& summary);

}  // namespace mipbs
