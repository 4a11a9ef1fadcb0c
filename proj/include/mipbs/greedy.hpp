#pragma once

#include "mipbs/graph.hpp"

namespace mipbs {

/// Summary of a path: its minimum activation cost and the power the
/// greedy assignment leaves at its last vertex.
struct PathProfile {
  Rational opt = 0;
  Rational phi = 0;

  bool operator==(const PathProfile&) const = default;
  auto operator<=>(const PathProfile& o) const {
    if (auto c = cmp(opt, o.opt); c != 0) return c <=> 0;
    return cmp(phi, o.phi) <=> 0;
  }
};

// Pushes power forward along the path: p(v0) = 0 and each later vertex
// receives exactly the deficit of its incoming edge. Off-path vertices get 0.
// Requires unit coefficients on the path edges.
PowerAssignment greedy_assign(const WeightedGraph& g, const Path& path);

PathProfile profile(const WeightedGraph& g, const Path& path);

// Profile of the path prolonged by one edge of weight w_new (> 0).
PathProfile extend(const PathProfile& prof, const Rational& w_new);

}  // namespace mipbs
