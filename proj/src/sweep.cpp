#include "mipbs/sweep.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>

#include "mipbs/bridge.hpp"
#include "mipbs/error.hpp"
#include "mipbs/reduce.hpp"
#include "mipbs/solve.hpp"

namespace mipbs {

std::vector<SubsetSumInstance> enumerate_instances(int n_max, int a_max, int b_extra) {
  if (n_max < 1 || a_max < 1) throw Error(ErrorCode::kInvalidArgument, "n_max and a_max must be >= 1");
  std::vector<SubsetSumInstance> out;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::int64_t> a(n, 1);
    while (true) {
      SubsetSumInstance inst{a, 0};
      const std::int64_t top = inst.total() + b_extra;
      for (std::int64_t b = 1; b <= top; ++b) {
        inst.b = b;
        out.push_back(inst);
      }
      int pos = n - 1;
      while (pos >= 0 && a[pos] == a_max) a[pos--] = 1;
      if (pos < 0) break;
      ++a[pos];
    }
  }
  return out;
}

std::size_t SweepSummary::instances() const {
  std::size_t total = 0;
  for (const SweepRow& r : rows) total += r.instances;
  return total;
}

std::size_t SweepSummary::passed() const {
  std::size_t total = 0;
  for (const SweepRow& r : rows) total += r.passed;
  return total;
}

SweepOutcome check_mip_instance(const SubsetSumInstance& inst) {
  const ReductionCheck check = check_mip_reduction(inst);
  const Rational c(check.budget);
  const bool at_c = check.optimum <= c;
  const bool robust = at_c == (check.optimum <= c + Rational(1, 3)) &&
                      at_c == (check.optimum <= c + Rational(2, 3));
  return {check.subset_sum_yes, check.holds() && robust};
}

SweepOutcome check_mbs_outcome(const SubsetSumInstance& inst) {
  const MbsCheck check = check_mbs_reduction(inst);
  return {check.subset_sum_yes, check.holds()};
}

namespace {

SweepSummary run(const std::string& kind, const std::vector<SubsetSumInstance>& instances,
                 const std::function<SweepOutcome(const SubsetSumInstance&)>& check, bool parallel) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SweepOutcome> outcomes =
      parallel ? map_parallel(instances, check) : map_serial(instances, check);
  SweepSummary summary;
  summary.kind = kind;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const std::size_t n = instances[i].a.size();
    if (summary.rows.size() < n) summary.rows.resize(n);
    SweepRow& row = summary.rows[n - 1];
    row.n = n;
    ++row.instances;
    row.yes += outcomes[i].yes;
    row.passed += outcomes[i].pass;
    if (!outcomes[i].pass) summary.failures.push_back(instances[i]);
  }
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace

SweepSummary sweep_mip(int n_max, int a_max, bool parallel) {
  return run("mip", enumerate_instances(n_max, a_max, 1), check_mip_instance, parallel);
}

SweepSummary sweep_mbs(int n_max, int a_max, bool parallel) {
  return run("mbs", enumerate_instances(n_max, a_max, 0), check_mbs_outcome, parallel);
}

void write_summary(std::ostream& out, const SweepSummary& summary) {
  out << std::left << std::setw(4) << "n" << std::right << std::setw(10) << "instances"
      << std::setw(8) << "yes" << std::setw(8) << "no" << std::setw(8) << "pass" << '\n';
  for (const SweepRow& r : summary.rows) {
    out << std::left << std::setw(4) << r.n << std::right << std::setw(10) << r.instances
        << std::setw(8) << r.yes << std::setw(8) << r.instances - r.yes << std::setw(8) << r.passed
        << '\n';
  }
  for (const SubsetSumInstance& f : summary.failures) {
    out << "FAIL a=";
    for (std::size_t i = 0; i < f.a.size(); ++i) out << (i ? "," : "") << f.a[i];
    out << " b=" << f.b << '\n';
  }
  out << (summary.ok() ? "PASS " : "FAIL ") << summary.kind << ' ' << summary.passed() << '/'
      << summary.instances() << '\n';
}

}  // namespace mipbs
