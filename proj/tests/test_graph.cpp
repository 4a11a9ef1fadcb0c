#include <sstream>

#include "doctest.h"
#include "mipbs/error.hpp"
#include "mipbs/graph.hpp"
#include "mipbs/greedy.hpp"
#include "mipbs/reduce.hpp"
#include "support.hpp"

using namespace mipbs;
using test::R;

namespace {

PowerAssignment powers(std::initializer_list<long> values) {
  PowerAssignment p(values.size());
  VertexId v = 0;
  for (long x : values) p.set(v++, R(x));
  return p;
}

}  // namespace

TEST_CASE("activation needs the sum of endpoint powers to reach the weight") {
  const WeightedGraph g = test::path_graph({4});
  CHECK(activated_edges(g, powers({2, 2})) == std::vector<EdgeId>{0});
  CHECK(activated_edges(g, powers({0, 0})).empty());
  CHECK(activated_edges(g, powers({2, 1})).empty());
  CHECK(is_feasible(g, powers({4, 0})));
}

TEST_CASE("final gadget edge is activated by the power 2b on u_n alone") {
  const MipReduction red = build_mip_reduction({{2, 3, 3, 2}, 7});
  const EdgeId last = red.graph.num_edges() - 1;
  PowerAssignment p(red.graph.num_vertices());
  p.set(red.u.back(), R(14));
  CHECK(is_activated(red.graph.edge(last), p));
  p.set(red.u.back(), R(13));
  CHECK_FALSE(is_activated(red.graph.edge(last), p));
}

TEST_CASE("a dead edge breaks feasibility") {
  const WeightedGraph g = test::path_graph({3, 5});
  CHECK_FALSE(is_feasible(g, powers({0, 3, 0})));
  CHECK(is_feasible(g, powers({0, 3, 2})));
}

TEST_CASE("greedy assignment on the optimal gadget path is feasible") {
  const MipReduction red = build_mip_reduction({{2, 3, 3, 2}, 7});
  // Lower choice at blocks 1, 2, 4 (sum 7), upper at block 3.
  Path path{{red.u[0]}, {}};
  const bool lower[] = {true, true, false, true};
  for (std::size_t i = 0; i < 4; ++i) {
    const VertexId mid = lower[i] ? red.lower[i] : red.upper[i];
    path.edges.push_back(static_cast<EdgeId>(4 * i + (lower[i] ? 2 : 0)));
    path.vertices.push_back(mid);
    path.edges.push_back(static_cast<EdgeId>(4 * i + (lower[i] ? 3 : 1)));
    path.vertices.push_back(red.u[i + 1]);
  }
  path.edges.push_back(16);
  path.vertices.push_back(red.t);
  const PowerAssignment p = greedy_assign(red.graph, path);
  CHECK(is_feasible(red.graph, p));
  CHECK(p.cost() == 115);
}

TEST_CASE("builder rejects malformed graphs") {
  SUBCASE("self loop") {
    GraphBuilder b;
    b.edge("a", "a", R(1));
    b.vertex("b");
    b.terminals("a", "b");
    CHECK_THROWS_AS(b.build(), Error);
  }
  SUBCASE("non-positive weight") {
    GraphBuilder b;
    b.edge("a", "b", R(0));
    b.terminals("a", "b");
    CHECK_THROWS_AS(b.build(), Error);
  }
  SUBCASE("equal terminals") {
    GraphBuilder b;
    b.edge("a", "b", R(1));
    b.terminals("a", "a");
    CHECK_THROWS_AS(b.build(), Error);
  }
  SUBCASE("negative power") {
    PowerAssignment p(2);
    CHECK_THROWS_AS(p.set(0, R(-1)), Error);
  }
}

TEST_CASE("check_path rejects paths outside the graph") {
  const WeightedGraph g = test::path_graph({1, 2, 3});
  CHECK_NOTHROW(check_path(g, test::whole_path(g)));
  try {
    check_path(g, Path{{0, 2}, {0}});
    FAIL("expected PathNotInGraph");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPathNotInGraph);
  }
  CHECK_THROWS_AS(check_path(g, Path{{0, 1, 0}, {0, 0}}), Error);
}

TEST_CASE("scaling multiplies weights and budget") {
  GraphBuilder b;
  b.edge("s", "t", R(3, 2));
  b.terminals("s", "t").budget(R(2));
  const WeightedGraph g = b.build().scaled(R(4));
  CHECK(g.edge(0).weight == 6);
  CHECK(*g.budget() == 8);
  CHECK(g.has_integer_weights());
}
