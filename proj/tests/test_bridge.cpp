#include <random>

#include "doctest.h"
#include "mipbs/bridge.hpp"
#include "mipbs/error.hpp"
#include "mipbs/solve.hpp"
#include "support.hpp"

using namespace mipbs;
using test::R;

namespace {

Disk disk(const std::string& id, long x, const Rational& y, long r) {
  Disk d;
  d.id = id;
  d.role = DiskRole::kCorridor;
  d.center = Point{R(x), y};
  d.radius = R(r);
  return d;
}

MbsInstance triangle_scene(const Point& x, const Point& y) {
  MbsInstance inst;
  inst.disks = {disk("P1_1", 0, R(0), 2), disk("P1_2", 3, R(0), 2), disk("P1_3", 0, R(0), 2)};
  inst.disks[2].center = Point{R(3, 2), R(13, 5)};
  inst.x = x;
  inst.y = y;
  inst.lambda = 1;
  inst.budget = 0;
  return inst;
}

}  // namespace

TEST_CASE("ideal G' weights are the gadget weights") {
  const MbsInstance inst = build_mbs_instance({{1, 3}, 2}, MbsBuildOptions{false});
  const GPrime gp = build_gprime(inst);
  const long L = inst.construction->L;
  const std::vector<long> want{L + 2, L + 2, L + 1, L + 3, L + 6, L + 6, L + 3, L + 9, 4, 4};
  REQUIRE(gp.graph.num_edges() == want.size());
  for (EdgeId e = 0; e < want.size(); ++e) {
    CHECK(to_double(gp.graph.edge(e).weight) == doctest::Approx(want[e]).epsilon(1e-9));
    CHECK(gp.graph.edge(e).weight >= want[e] - R(1, 1000000));
  }
  CHECK(gp.graph.name(gp.graph.source()) == "x");
  CHECK(gp.graph.name(gp.graph.sink()) == "y");
}

TEST_CASE("rounded G' weights stay within two scaled units") {
  const MbsInstance inst = build_mbs_instance({{2, 3, 3, 2}, 7});
  const GPrime gp = build_gprime(inst);
  for (EdgeId e = 0; e < gp.graph.num_edges(); ++e) {
    const Gap& g = gp.gaps[e];
    const Rational target = inst.gap_target(inst.disks[g.first], inst.disks[g.second]);
    CHECK(abs(Rational(gp.graph.edge(e).weight - target)) <= 2);
  }
}

TEST_CASE("lifting powers to shrinks") {
  const MbsInstance inst = build_mbs_instance({{1}, 1}, MbsBuildOptions{false});
  const GPrime gp = build_gprime(inst);
  try {
    lift_to_shrinks(inst, gp, PowerAssignment(gp.graph.num_vertices()));
    FAIL("expected InfeasiblePower");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInfeasiblePower);
  }
  CHECK(zero_shrinks(inst).cost() == 0);

  // Route through B1: greedy powers w(x,beta_1), then the deficit on y_1.
  const Rational w_in = gp.graph.edge(2).weight;
  const Rational w_out = gp.graph.edge(3).weight;
  PowerAssignment p(gp.graph.num_vertices());
  p.set(*gp.graph.find("beta_1"), w_in);
  p.set(*gp.graph.find("y_1"), w_out - w_in);
  p.set(*gp.graph.find("y"), R(4));  // opens both final gaps of depth 2b = 2
  const ShrinkVector s = lift_to_shrinks(inst, gp, p);
  CHECK(to_double(s.at(inst.at("B1"))) == doctest::Approx(5));
  CHECK(to_double(s.at(inst.at("D1"))) == doctest::Approx(2));
  CHECK(s.at(inst.at("A2")) == 4);  // ties between the final gaps go to A
  CHECK(s.cost() == w_out + 4);
}

TEST_CASE("route certificates") {
  const MbsInstance inst = build_mbs_instance({{2, 3, 3, 2}, 7});
  const GPrime gp = build_gprime(inst);
  const SolveResult sol = solve_bruteforce(gp.graph);
  // 115 construction units at scale 30, up to the rounding drift.
  CHECK(abs(Rational(sol.cost - 3450)) < 10);
  const ShrinkVector s = lift_to_shrinks(inst, gp, sol.power);
  const RouteCertificate route = route_from_path(inst, gp, sol.path);
  CHECK(check_route(inst, s, route, inst.budget));
  CHECK_FALSE(check_route(inst, zero_shrinks(inst), route, inst.budget));
  CHECK_FALSE(check_route(inst, s, route, s.cost() - 1));

  RouteCertificate skipping = route;
  skipping.crossings.erase(skipping.crossings.begin() + 1);
  CHECK_FALSE(check_route(inst, s, skipping, inst.budget));
  RouteCertificate unknown = route;
  unknown.crossings[0].first = "Z1";
  CHECK_THROWS_AS(check_route(inst, s, unknown, inst.budget), Error);
  // No barrier can exist while the route is open.
  CHECK_FALSE(find_barrier(inst, s));
}

TEST_CASE("barrier parity on a triangle of disks") {
  const MbsInstance split = triangle_scene({R(3, 2), R(1)}, {R(10), R(10)});
  const BarrierCertificate cycle{{"P1_1", "P1_2", "P1_3"}};
  CHECK(check_barrier(split, zero_shrinks(split), cycle));
  const MbsInstance same = triangle_scene({R(11), R(10)}, {R(10), R(10)});
  CHECK_FALSE(check_barrier(same, zero_shrinks(same), cycle));
  ShrinkVector thin = zero_shrinks(split);
  thin.delta[0] = 1;  // P1_1,P1_2 penetration 1 is used up
  CHECK_FALSE(check_barrier(split, thin, cycle));
  CHECK_THROWS_AS(check_barrier(split, zero_shrinks(split), BarrierCertificate{{"P1_1", "X", "P1_3"}}), Error);
}

TEST_CASE("no-instances admit barriers against budget-bounded shrinks") {
  const MbsInstance inst = build_mbs_instance({{2, 4}, 3});
  const GPrime gp = build_gprime(inst);
  const SolveResult sol = solve_bruteforce(gp.graph);
  REQUIRE(sol.cost > inst.budget);
  // Random shrinks on the block disks with cost at most the budget.
  std::mt19937 rng(23);
  std::vector<std::size_t> blocks;
  for (std::size_t i = 0; i < inst.disks.size(); ++i) {
    const DiskRole r = inst.disks[i].role;
    if (r == DiskRole::kD || r == DiskRole::kA || r == DiskRole::kB) blocks.push_back(i);
  }
  for (int trial = 0; trial < 200; ++trial) {
    ShrinkVector s = zero_shrinks(inst);
    Rational left = inst.budget;
    for (int k = 0; k < 4; ++k) {
      const std::size_t d = blocks[rng() % blocks.size()];
      const Rational take = left * R(static_cast<long>(rng() % 100), 100);
      s.delta[d] += take;
      left -= take;
    }
    const auto barrier = find_barrier(inst, s);
    REQUIRE(barrier);
    REQUIRE(check_barrier(inst, s, *barrier));
  }
}

TEST_CASE("end-to-end checks") {
  const MbsCheck fig = check_mbs_reduction({{2, 3, 3, 2}, 7});
  CHECK(fig.holds());
  CHECK(fig.route);
  CHECK(fig.shrinks.cost() <= fig.budget);
  const MbsCheck no = check_mbs_reduction({{2, 4}, 3});
  CHECK(no.holds());
  CHECK(no.barrier);
  CHECK_FALSE(no.shrinkage_yes());
  CHECK(verify_mbs_reduction({{1}, 1}));
  CHECK(check_mbs_reduction({{1}, 1}).drift_ok);
}

TEST_CASE("gap structure lists every crossing once") {
  const MbsInstance inst = build_mbs_instance({{1, 1, 1}, 2});
  const std::vector<Gap> gaps = gap_structure(inst);
  CHECK(gaps.size() == 4 * 3 + 2);
  CHECK(gaps.front().from == "x");
  CHECK(gaps.back().to == "y");
  CHECK(inst.disks[gaps[4].first].id == "D1");
}

TEST_CASE("perturbed thick pair is a structure mismatch") {
  MbsInstance inst = build_mbs_instance({{1}, 1});
  inst.disks[inst.at("Dp1")].radius = inst.lambda / 2;
  try {
    build_gprime(inst);
    FAIL("expected StructureMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kStructureMismatch);
  }
}
