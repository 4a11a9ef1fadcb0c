#include <random>

#include "doctest.h"
#include "mipbs/error.hpp"
#include "mipbs/greedy.hpp"
#include "mipbs/reduce.hpp"
#include "mipbs/solve.hpp"
#include "support.hpp"

using namespace mipbs;
using test::R;

namespace {

// The witness must activate its own path and cost what it claims.
void check_witness(const WeightedGraph& g, const SolveResult& r) {
  REQUIRE_NOTHROW(check_path(g, r.path));
  REQUIRE(r.path.vertices.front() == g.source());
  REQUIRE(r.path.vertices.back() == g.sink());
  for (EdgeId e : r.path.edges) REQUIRE(is_activated(g.edge(e), r.power));
  REQUIRE(r.power.cost() == r.cost);
}

WeightedGraph triangle() {
  GraphBuilder b;
  b.edge("s", "t", R(10));
  b.edge("s", "a", R(4));
  b.edge("a", "t", R(6));
  b.terminals("s", "t");
  return b.build();
}

std::vector<Rational> range(long hi) {
  std::vector<Rational> d;
  for (long k = 0; k <= hi; ++k) d.push_back(R(k));
  return d;
}

}  // namespace

TEST_CASE("small optima") {
  CHECK(solve_bruteforce(test::path_graph({6})).cost == 6);
  CHECK(solve_bruteforce(test::path_graph({3, 5})).cost == 5);
  CHECK(solve_exact_integer(test::path_graph({9})).cost == 9);
  const SolveResult star = solve_exact_integer(triangle());
  CHECK(star.cost == 6);
  CHECK(star.path.length() == 2);
  CHECK(solve_bruteforce(triangle()).cost == 6);
}

TEST_CASE("gadget graph optimum") {
  const MipReduction red = build_mip_reduction({{2, 3, 3, 2}, 7});
  const SolveResult exact = solve_exact_integer(red.graph);
  CHECK(exact.cost == 115);
  check_witness(red.graph, exact);
  CHECK(solve_bruteforce(red.graph).cost == 115);
}

TEST_CASE("solver errors") {
  GraphBuilder b;
  b.edge("s", "a", R(1));
  b.vertex("t");
  b.terminals("s", "t");
  const WeightedGraph apart = b.build();
  CHECK_THROWS_AS(solve_bruteforce(apart), Error);
  try {
    solve_exact_integer(apart);
    FAIL("expected NoPath");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoPath);
  }
  CHECK_THROWS_AS(compute_lambda(apart), Error);

  GraphBuilder f;
  f.edge("s", "t", R(5, 2));
  f.terminals("s", "t");
  try {
    solve_exact_integer(f.build());
    FAIL("expected NonIntegerWeights");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonIntegerWeights);
  }
}

TEST_CASE("exact label search agrees with enumeration") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const WeightedGraph g = test::random_graph(rng, 7, 15);
    const SolveResult exact = solve_exact_integer(g);
    const SolveResult brute = solve_bruteforce(g);
    REQUIRE(exact.cost == brute.cost);
    check_witness(g, exact);
    check_witness(g, brute);
    REQUIRE(profile(g, exact.path).opt == exact.cost);
  }
}

TEST_CASE("power domains") {
  CHECK_THROWS_AS(PowerDomain({R(1), R(2)}), Error);
  CHECK_THROWS_AS(PowerDomain({R(0), R(2), R(2)}), Error);
  const PowerDomain d = PowerDomain::uniform(R(3, 2), 4);
  CHECK(d.size() == 5);
  CHECK(d[4] == 6);
  CHECK(d.lower_index(R(2)) == 2);
  CHECK(d.lower_index(R(3, 2)) == 1);
  CHECK(d.lower_index(R(7)) == 5);
}

TEST_CASE("discretized search") {
  const WeightedGraph one = test::path_graph({4});
  CHECK(solve_discretized(one, PowerDomain({R(0), R(4)})).cost == 4);
  try {
    solve_discretized(one, PowerDomain({R(0), R(1)}));
    FAIL("expected NoFeasiblePath");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoFeasiblePath);
  }

  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const WeightedGraph g = test::random_graph(rng, 6, 10);
    const Rational exact = solve_exact_integer(g).cost;
    const SolveResult full = solve_discretized(g, PowerDomain(range(10)));
    REQUIRE(full.cost == exact);
    check_witness(g, full);
    // Coarser domain: never better than the finer one.
    std::vector<Rational> even;
    for (long k = 0; k <= 20; k += 2) even.push_back(R(k));
    REQUIRE(solve_discretized(g, PowerDomain(even)).cost >= full.cost);
  }
}

TEST_CASE("discretized search honours activation coefficients") {
  GraphBuilder b;
  b.edge("s", "a", R(4), R(2), R(1));  // 2 p(s) + p(a) >= 4
  b.edge("a", "t", R(3), R(1), R(3));  // p(a) + 3 p(t) >= 3
  b.terminals("s", "t");
  const WeightedGraph g = b.build();
  const SolveResult r = solve_discretized(g, PowerDomain(range(6)));
  CHECK(r.cost == 3);  // p(s) = 2, p(t) = 1
  for (EdgeId e : r.path.edges) CHECK(is_activated(g.edge(e), r.power));
  CHECK(r.power.cost() == r.cost);
}

TEST_CASE("uniform threshold lambda") {
  CHECK(compute_lambda(test::path_graph({8})) == 4);
  CHECK(compute_lambda(test::path_graph({2, 10})) == 5);
  CHECK(compute_lambda(triangle()) == 3);
}

TEST_CASE("fptas") {
  const WeightedGraph one = test::path_graph({6});
  CHECK(fptas(one, R(1)).cost == 6);
  const MipReduction red = build_mip_reduction({{2, 3, 3, 2}, 7});
  CHECK(fptas(red.graph, R(1)).cost <= 230);
  const SolveResult tight = fptas(red.graph, R(1, 10));
  CHECK(tight.cost <= R(1265, 10));
  check_witness(red.graph, tight);
  CHECK_THROWS_AS(fptas(one, R(0)), Error);
}

TEST_CASE("scaling weights scales the optimum") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const WeightedGraph g = test::random_graph(rng, 6, 12);
    const long sigma = 2 + trial % 5;
    REQUIRE(solve_exact_integer(g.scaled(R(sigma))).cost == sigma * solve_exact_integer(g).cost);
  }
}

TEST_CASE("loop erasure") {
  const Path walk{{0, 1, 2, 1, 3}, {0, 1, 1, 2}};
  CHECK(erase_loops(walk) == Path{{0, 1, 3}, {0, 2}});
}
