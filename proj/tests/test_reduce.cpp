#include <random>
#include <set>

#include "doctest.h"
#include "mipbs/reduce.hpp"
#include "mipbs/solve.hpp"
#include "support.hpp"

using namespace mipbs;
using test::R;

TEST_CASE("gadget constants") {
  const MipReduction fig = build_mip_reduction({{2, 3, 3, 2}, 7});
  CHECK(fig.L == 22);
  CHECK(fig.C == 115);
  CHECK(*fig.graph.budget() == 115);
  const MipReduction one = build_mip_reduction({{1}, 1});
  CHECK(one.L == 4);
  CHECK(one.C == 7);
  CHECK(one.graph.num_vertices() == 5);
  CHECK(one.graph.num_edges() == 5);
  for (std::size_t n = 1; n <= 6; ++n) {
    const MipReduction red = build_mip_reduction({std::vector<std::int64_t>(n, 2), 3});
    CHECK(red.graph.num_vertices() == 3 * n + 2);
    CHECK(red.graph.num_edges() == 4 * n + 1);
  }
}

TEST_CASE("prefix profiles") {
  const MipReduction fig = build_mip_reduction({{2, 3, 3, 2}, 7});
  CHECK(enumerate_profiles(fig, 0) == std::vector<PathProfile>{{0, 0}});
  CHECK(enumerate_profiles(fig, 1) == std::vector<PathProfile>{{26, 0}, {28, 4}});
}

TEST_CASE("prefix profiles follow the subset formula") {
  // Lower choices I within the first i blocks give
  // opt = iL + 2 sum_{j<=i} a_j + sum_I a_j and phi = 2 sum_I a_j.
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    SubsetSumInstance inst;
    inst.a.resize(1 + trial % 5);
    for (auto& x : inst.a) x = std::uniform_int_distribution<int>(1, 6)(rng);
    inst.b = 1;
    const MipReduction red = build_mip_reduction(inst);
    for (std::size_t i = 0; i <= inst.a.size(); ++i) {
      std::set<std::pair<std::int64_t, std::int64_t>> expect;
      std::int64_t base = static_cast<std::int64_t>(i) * red.L;
      for (std::size_t j = 0; j < i; ++j) base += 2 * inst.a[j];
      for (unsigned mask = 0; mask < (1u << i); ++mask) {
        std::int64_t lower = 0;
        for (std::size_t j = 0; j < i; ++j) lower += (mask >> j & 1) ? inst.a[j] : 0;
        expect.insert({base + lower, 2 * lower});
      }
      std::vector<PathProfile> want;
      for (auto [o, p] : expect) want.push_back({R(o), R(p)});
      REQUIRE(enumerate_profiles(red, i) == want);
    }
  }
}

TEST_CASE("equal-sum implication") {
  // A + max(2B - 2A, 0) <= B forces A = B.
  std::mt19937 rng(19);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 6);
  int premise = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const Rational a = R(num(rng), den(rng));
    const Rational b = trial % 4 == 0 ? a : R(num(rng), den(rng));
    const Rational gap = 2 * b - 2 * a;
    if (a + (sgn(gap) > 0 ? gap : Rational(0)) <= b) {
      ++premise;
      REQUIRE(a == b);
    }
  }
  CHECK(premise > 0);
}

TEST_CASE("reduction verdicts") {
  CHECK(verify_reduction({{2, 3, 3, 2}, 7}));
  const ReductionCheck no = check_mip_reduction({{2, 4}, 3});
  CHECK_FALSE(no.subset_sum_yes);
  CHECK(no.optimum > no.budget);
  CHECK(no.holds());
  CHECK(verify_reduction({{1}, 1}));
}

TEST_CASE("optimum on yes-instances is exactly C") {
  for (std::int64_t b = 1; b <= 10; ++b) {
    const ReductionCheck c = check_mip_reduction({{2, 3, 3, 2}, b});
    CHECK(c.holds());
    if (c.subset_sum_yes) CHECK(c.optimum == c.budget);
  }
}
