#include <random>

#include "doctest.h"
#include "mipbs/error.hpp"
#include "mipbs/subset_sum.hpp"

using namespace mipbs;

namespace {

// Every subset, lexicographically smallest index list first.
std::optional<std::vector<std::size_t>> enumerate(const SubsetSumInstance& inst) {
  const std::size_t n = inst.a.size();
  std::optional<std::vector<std::size_t>> best;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::int64_t sum = 0;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        sum += inst.a[i];
        idx.push_back(i + 1);
      }
    }
    if (sum == inst.b && (!best || idx < *best)) best = idx;
  }
  return best;
}

}  // namespace

TEST_CASE("subset sum examples") {
  const auto fig = solve_subset_sum({{2, 3, 3, 2}, 7});
  REQUIRE(fig);
  CHECK(*fig == std::vector<std::size_t>{1, 2, 4});
  CHECK_FALSE(solve_subset_sum({{2}, 1}));
  CHECK(*solve_subset_sum({{1, 2, 4}, 7}) == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("dynamic programme matches enumeration") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    SubsetSumInstance inst;
    inst.a.resize(1 + trial % 8);
    for (auto& x : inst.a) x = std::uniform_int_distribution<int>(1, 9)(rng);
    inst.b = std::uniform_int_distribution<std::int64_t>(1, inst.total() + 2)(rng);
    REQUIRE(solve_subset_sum(inst) == enumerate(inst));
  }
}

TEST_CASE("invalid instances") {
  CHECK_THROWS_AS(solve_subset_sum({{}, 1}), Error);
  CHECK_THROWS_AS(solve_subset_sum({{0, 1}, 1}), Error);
  CHECK_THROWS_AS(solve_subset_sum({{1}, 0}), Error);
}
