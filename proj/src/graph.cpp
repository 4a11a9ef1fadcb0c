#include "mipbs/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>

#include "mipbs/error.hpp"
#include "text.hpp"

namespace mipbs {

std::optional<VertexId> WeightedGraph::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

bool WeightedGraph::has_unit_coefficients() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.alpha == 1 && e.beta == 1; });
}

bool WeightedGraph::has_integer_weights() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return is_integer(e.weight); });
}

Rational WeightedGraph::max_weight() const {
  Rational m = 0;
  for (const Edge& e : edges_) m = std::max(m, e.weight);
  return m;
}

WeightedGraph WeightedGraph::scaled(const Rational& factor) const {
  if (sgn(factor) <= 0) throw Error(ErrorCode::kInvalidArgument, "scale factor must be positive");
  WeightedGraph g = *this;
  for (Edge& e : g.edges_) e.weight *= factor;
  if (g.budget_) *g.budget_ *= factor;
  return g;
}

WeightedGraph WeightedGraph::with_budget(std::optional<Rational> budget) const {
  WeightedGraph g = *this;
  g.budget_ = std::move(budget);
  return g;
}

VertexId GraphBuilder::vertex(const std::string& name) {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it != names_.end()) return static_cast<VertexId>(it - names_.begin());
  names_.push_back(name);
  return names_.size() - 1;
}

EdgeId GraphBuilder::edge(const std::string& u, const std::string& v, Rational weight,
                          Rational alpha, Rational beta) {
  VertexId iu = vertex(u);
  VertexId iv = vertex(v);
  return edge(iu, iv, std::move(weight), std::move(alpha), std::move(beta));
}

EdgeId GraphBuilder::edge(VertexId u, VertexId v, Rational weight, Rational alpha,
                          Rational beta) {
  edges_.push_back(Edge{u, v, std::move(weight), std::move(alpha), std::move(beta)});
  return edges_.size() - 1;
}

GraphBuilder& GraphBuilder::terminals(const std::string& s, const std::string& t) {
  source_ = vertex(s);
  sink_ = vertex(t);
  return *this;
}

GraphBuilder& GraphBuilder::budget(Rational c) {
  budget_ = std::move(c);
  return *this;
}

WeightedGraph GraphBuilder::build() const {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::kInvalidArgument, what); };
  if (!source_ || !sink_) bad("terminals not set");
  if (*source_ == *sink_) bad("source and sink must differ");
  WeightedGraph g;
  g.names_ = names_;
  g.edges_ = edges_;
  g.source_ = *source_;
  g.sink_ = *sink_;
  g.budget_ = budget_;
  g.incident_.resize(names_.size());
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    if (e.u >= names_.size() || e.v >= names_.size()) bad("edge endpoint out of range");
    if (e.u == e.v) bad("self-loop at " + names_[e.u]);
    if (sgn(e.weight) <= 0) bad("non-positive weight on edge " + names_[e.u] + "-" + names_[e.v]);
    if (sgn(e.alpha) <= 0 || sgn(e.beta) <= 0) bad("activation coefficients must be positive");
    g.incident_[e.u].push_back(id);
    g.incident_[e.v].push_back(id);
  }
  if (budget_ && sgn(*budget_) < 0) bad("negative budget");
  return g;
}

void PowerAssignment::set(VertexId v, Rational p) {
  if (sgn(p) < 0) throw Error(ErrorCode::kInvalidArgument, "negative power");
  if (v >= power_.size()) power_.resize(v + 1);
  power_[v] = std::move(p);
}

Rational PowerAssignment::cost() const {
  Rational total = 0;
  for (const Rational& p : power_) total += p;
  return total;
}

void check_path(const WeightedGraph& g, const Path& path) {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::kPathNotInGraph, what); };
  if (path.vertices.empty()) bad("empty vertex sequence");
  if (path.edges.size() + 1 != path.vertices.size()) bad("edge/vertex count mismatch");
  std::vector<bool> seen(g.num_vertices(), false);
  for (VertexId v : path.vertices) {
    if (v >= g.num_vertices()) bad("unknown vertex");
    if (seen[v]) bad("repeated vertex " + g.name(v));
    seen[v] = true;
  }
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    if (path.edges[i] >= g.num_edges()) bad("unknown edge");
    const Edge& e = g.edge(path.edges[i]);
    VertexId a = path.vertices[i];
    VertexId b = path.vertices[i + 1];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) {
      bad("edge does not join " + g.name(a) + " and " + g.name(b));
    }
  }
}

namespace {

const Rational& power_or_zero(const PowerAssignment& p, VertexId v) {
  static const Rational zero = 0;
  return v < p.size() ? p[v] : zero;
}

}  // namespace

bool is_activated(const Edge& e, const PowerAssignment& p) {
  return e.alpha * power_or_zero(p, e.u) + e.beta * power_or_zero(p, e.v) >= e.weight;
}

std::vector<EdgeId> activated_edges(const WeightedGraph& g, const PowerAssignment& p) {
  std::vector<EdgeId> out;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (is_activated(g.edge(id), p)) out.push_back(id);
  }
  return out;
}

bool is_feasible(const WeightedGraph& g, const PowerAssignment& p) {
  std::vector<bool> live(g.num_edges(), false);
  for (EdgeId id : activated_edges(g, p)) live[id] = true;
  std::vector<bool> seen(g.num_vertices(), false);
  std::queue<VertexId> queue;
  queue.push(g.source());
  seen[g.source()] = true;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    if (v == g.sink()) return true;
    for (EdgeId id : g.incident(v)) {
      if (!live[id]) continue;
      VertexId w = g.edge(id).other(v);
      if (!seen[w]) {
        seen[w] = true;
        queue.push(w);
      }
    }
  }
  return false;
}

WeightedGraph read_graph(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok) || tok[0] != "mip") reader.fail("expected 'mip <num_vertices> <num_edges>'");
  reader.expect_arity(tok, 3);
  const long nv = reader.integer(tok[1]);
  const long ne = reader.integer(tok[2]);
  if (!reader.next(tok) || tok[0] != "terminals") reader.fail("expected 'terminals <s> <t>'");
  reader.expect_arity(tok, 3);
  GraphBuilder builder;
  builder.terminals(tok[1], tok[2]);
  long edges = 0;
  bool seen_budget = false;
  while (reader.next(tok)) {
    if (tok[0] == "budget") {
      reader.expect_arity(tok, 2);
      if (seen_budget || edges > 0) reader.fail("budget must precede edges and appear once");
      seen_budget = true;
      builder.budget(reader.number(tok[1]));
    } else if (tok[0] == "edge") {
      if (tok.size() != 4 && tok.size() != 6) reader.fail("'edge' expects 3 or 5 fields");
      Rational alpha = tok.size() == 6 ? reader.number(tok[4]) : Rational(1);
      Rational beta = tok.size() == 6 ? reader.number(tok[5]) : Rational(1);
      builder.edge(tok[1], tok[2], reader.number(tok[3]), alpha, beta);
      ++edges;
    } else {
      reader.fail("unknown record '" + tok[0] + "'");
    }
  }
  WeightedGraph g = [&] {
    try {
      return builder.build();
    } catch (const Error& e) {
      reader.fail(e.what());
    }
  }();
  if (edges != ne) reader.fail("header declares " + std::to_string(ne) + " edges, found " + std::to_string(edges));
  if (static_cast<long>(g.num_vertices()) != nv) {
    reader.fail("header declares " + std::to_string(nv) + " vertices, found " +
                std::to_string(g.num_vertices()));
  }
  return g;
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << "mip " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  out << "terminals " << g.name(g.source()) << ' ' << g.name(g.sink()) << '\n';
  if (g.budget()) out << "budget " << format_rational(*g.budget()) << '\n';
  for (const Edge& e : g.edges()) {
    out << "edge " << g.name(e.u) << ' ' << g.name(e.v) << ' ' << format_rational(e.weight);
    if (e.alpha != 1 || e.beta != 1) {
      out << ' ' << format_rational(e.alpha) << ' ' << format_rational(e.beta);
    }
    out << '\n';
  }
}

}  // namespace mipbs
