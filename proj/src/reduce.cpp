#include "mipbs/reduce.hpp"

#include <algorithm>

#include "mipbs/error.hpp"
#include "mipbs/solve.hpp"

namespace mipbs {

MipReduction build_mip_reduction(const SubsetSumInstance& inst) {
  inst.validate();
  const std::size_t n = inst.a.size();
  const std::int64_t sum = inst.total();
  MipReduction red;
  red.source = inst;
  red.L = 2 * sum + 2;
  red.C = static_cast<std::int64_t>(n) * red.L + 2 * sum + inst.b;

  GraphBuilder builder;
  red.u.push_back(builder.vertex("s"));
  for (std::size_t i = 1; i <= n; ++i) red.u.push_back(builder.vertex("u" + std::to_string(i)));
  red.t = builder.vertex("t");
  for (std::size_t i = 1; i <= n; ++i) red.upper.push_back(builder.vertex("up_" + std::to_string(i)));
  for (std::size_t i = 1; i <= n; ++i) red.lower.push_back(builder.vertex("lo_" + std::to_string(i)));
  for (std::size_t i = 1; i <= n; ++i) {
    const std::int64_t ai = inst.a[i - 1];
    builder.edge(red.u[i - 1], red.upper[i - 1], Rational(red.L + 2 * ai));
    builder.edge(red.upper[i - 1], red.u[i], Rational(red.L + 2 * ai));
    builder.edge(red.u[i - 1], red.lower[i - 1], Rational(red.L + ai));
    builder.edge(red.lower[i - 1], red.u[i], Rational(red.L + 3 * ai));
  }
  builder.edge(red.u[n], red.t, Rational(2 * inst.b));
  builder.terminals("s", "t").budget(Rational(red.C));
  red.graph = builder.build();
  return red;
}

std::vector<PathProfile> enumerate_profiles(const MipReduction& red, std::size_t i) {
  if (i > red.source.a.size()) throw Error(ErrorCode::kInvalidArgument, "block index out of range");
  std::vector<PathProfile> frontier{PathProfile{}};
  for (std::size_t j = 1; j <= i; ++j) {
    const std::int64_t aj = red.source.a[j - 1];
    std::vector<PathProfile> next;
    next.reserve(2 * frontier.size());
    for (const PathProfile& p : frontier) {
      next.push_back(extend(extend(p, Rational(red.L + 2 * aj)), Rational(red.L + 2 * aj)));
      next.push_back(extend(extend(p, Rational(red.L + aj)), Rational(red.L + 3 * aj)));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  return frontier;
}

ReductionCheck check_mip_reduction(const SubsetSumInstance& inst) {
  const MipReduction red = build_mip_reduction(inst);
  ReductionCheck check;
  check.subset_sum_yes = solve_subset_sum(inst).has_value();
  check.optimum = solve_exact_integer(red.graph).cost;
  check.budget = red.C;
  return check;
}

bool verify_reduction(const SubsetSumInstance& inst) { return check_mip_reduction(inst).holds(); }

}  // namespace mipbs
