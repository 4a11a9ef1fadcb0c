#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mipbs/graph.hpp"
#include "mipbs/rational.hpp"

namespace test {

using mipbs::Rational;

inline Rational R(long p, long q = 1) { return mipbs::make_rational(p, q); }

// v0 - v1 - ... - vk with the given weights; terminals v0, vk.
inline mipbs::WeightedGraph path_graph(const std::vector<long>& weights) {
  mipbs::GraphBuilder b;
  b.vertex("v0");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    b.edge("v" + std::to_string(i), "v" + std::to_string(i + 1), R(weights[i]));
  }
  b.terminals("v0", "v" + std::to_string(weights.size()));
  return b.build();
}

inline mipbs::Path whole_path(const mipbs::WeightedGraph& g) {
  mipbs::Path p{{0}, {}};
  for (mipbs::EdgeId e = 0; e < g.num_edges(); ++e) {
    p.edges.push_back(e);
    p.vertices.push_back(e + 1);
  }
  return p;
}

// Connected multigraph on 2..max_n vertices: a random spanning tree plus a
// few extra edges (parallel edges allowed), integer weights in [1, max_w].
inline mipbs::WeightedGraph random_graph(std::mt19937& rng, int max_n, int max_w) {
  std::uniform_int_distribution<int> nv(2, max_n), w(1, max_w);
  const int n = nv(rng);
  mipbs::GraphBuilder b;
  for (int v = 0; v < n; ++v) b.vertex("v" + std::to_string(v));
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    b.edge(static_cast<mipbs::VertexId>(u), static_cast<mipbs::VertexId>(v), R(w(rng)));
  }
  const int extra = std::uniform_int_distribution<int>(0, n)(rng);
  for (int k = 0; k < extra; ++k) {
    int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (u == v) continue;
    b.edge(static_cast<mipbs::VertexId>(u), static_cast<mipbs::VertexId>(v), R(w(rng)));
  }
  b.terminals("v0", "v" + std::to_string(n - 1));
  return b.build();
}

// Cheapest integer powers p_0..p_k in [0, max w] with p_{i} + p_{i+1} >= w_i,
// by exhaustive search over the grid (branch and bound on the running cost).
inline long grid_minimum(const std::vector<long>& w) {
  const long top = *std::max_element(w.begin(), w.end());
  long best = top * static_cast<long>(w.size() + 1) + 1;
  std::vector<long> p(w.size() + 1);
  std::function<void(std::size_t, long)> go = [&](std::size_t i, long cost) {
    if (cost >= best) return;
    if (i == p.size()) {
      best = cost;
      return;
    }
    for (long v = 0; v <= top; ++v) {
      if (i > 0 && p[i - 1] + v < w[i - 1]) continue;
      p[i] = v;
      go(i + 1, cost + v);
    }
  };
  go(0, 0);
  return best;
}

}  // namespace test
