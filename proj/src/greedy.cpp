#include "mipbs/greedy.hpp"

#include <algorithm>

#include "mipbs/error.hpp"

namespace mipbs {

namespace {

void require_unit(const WeightedGraph& g, const Path& path) {
  for (EdgeId id : path.edges) {
    const Edge& e = g.edge(id);
    if (e.alpha != 1 || e.beta != 1) {
      throw Error(ErrorCode::kNonUnitCoefficients,
                  "greedy assignment needs alpha = beta = 1 on " + g.name(e.u) + "-" + g.name(e.v));
    }
  }
}

}  // namespace

PowerAssignment greedy_assign(const WeightedGraph& g, const Path& path) {
  check_path(g, path);
  require_unit(g, path);
  PowerAssignment p(g.num_vertices());
  Rational prev = 0;
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    Rational cur = g.edge(path.edges[i]).weight - prev;
    if (sgn(cur) < 0) cur = 0;
    p.set(path.vertices[i + 1], cur);
    prev = std::move(cur);
  }
  return p;
}

PathProfile profile(const WeightedGraph& g, const Path& path) {
  check_path(g, path);
  require_unit(g, path);
  PathProfile prof;
  for (EdgeId id : path.edges) prof = extend(prof, g.edge(id).weight);
  return prof;
}

PathProfile extend(const PathProfile& prof, const Rational& w_new) {
  if (sgn(w_new) <= 0) throw Error(ErrorCode::kInvalidArgument, "edge weight must be positive");
  PathProfile next;
  next.phi = w_new - prof.phi;
  if (sgn(next.phi) < 0) next.phi = 0;
  next.opt = prof.opt + next.phi;
  return next;
}

}  // namespace mipbs
