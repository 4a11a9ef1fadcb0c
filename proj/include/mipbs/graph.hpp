#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mipbs/rational.hpp"

namespace mipbs {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Undirected edge uv, activated when alpha*p(u) + beta*p(v) >= weight.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Rational weight;
  Rational alpha = 1;
  Rational beta = 1;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  // Coefficient multiplying the power of endpoint x.
  const Rational& coef(VertexId x) const { return x == u ? alpha : beta; }
};

/// Undirected multigraph with positive weights and two terminals.
/// Immutable once built; use GraphBuilder.
class WeightedGraph {
 public:
  WeightedGraph() = default;  // empty; only useful as an assignment target

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<EdgeId>& incident(VertexId v) const { return incident_.at(v); }
  VertexId source() const { return source_; }
  VertexId sink() const { return sink_; }
  const std::optional<Rational>& budget() const { return budget_; }

  std::optional<VertexId> find(std::string_view name) const;
  bool has_unit_coefficients() const;
  bool has_integer_weights() const;
  Rational max_weight() const;

  // Same topology with every weight multiplied by factor (> 0).
  WeightedGraph scaled(const Rational& factor) const;
  WeightedGraph with_budget(std::optional<Rational> budget) const;

 private:
  friend class GraphBuilder;

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  VertexId source_ = 0;
  VertexId sink_ = 0;
  std::optional<Rational> budget_;
};

class GraphBuilder {
 public:
  // Returns the existing id if the name is already known.
  VertexId vertex(const std::string& name);
  EdgeId edge(const std::string& u, const std::string& v, Rational weight,
              Rational alpha = 1, Rational beta = 1);
  EdgeId edge(VertexId u, VertexId v, Rational weight, Rational alpha = 1,
              Rational beta = 1);
  GraphBuilder& terminals(const std::string& s, const std::string& t);
  GraphBuilder& budget(Rational c);

  // Validates every invariant; throws Error(kInvalidArgument).
  WeightedGraph build() const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::optional<VertexId> source_;
  std::optional<VertexId> sink_;
  std::optional<Rational> budget_;
};

/// Nonnegative power per vertex; unset vertices hold 0.
class PowerAssignment {
 public:
  PowerAssignment() = default;
  explicit PowerAssignment(std::size_t num_vertices) : power_(num_vertices) {}

  std::size_t size() const { return power_.size(); }
  const Rational& operator[](VertexId v) const { return power_.at(v); }
  void set(VertexId v, Rational p);
  Rational cost() const;
  bool operator==(const PowerAssignment&) const = default;

 private:
  std::vector<Rational> power_;
};

/// Simple path; edges[i] joins vertices[i] and vertices[i+1].
struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  bool operator==(const Path&) const = default;
};

// Throws Error(kPathNotInGraph) unless the path is simple and lies in g.
void check_path(const WeightedGraph& g, const Path& path);

bool is_activated(const Edge& e, const PowerAssignment& p);
std::vector<EdgeId> activated_edges(const WeightedGraph& g, const PowerAssignment& p);
bool is_feasible(const WeightedGraph& g, const PowerAssignment& p);

// Line-based text format: "mip <nv> <ne>", "terminals <s> <t>",
// optional "budget <C>", then "edge <u> <v> <w> [<alpha> <beta>]".
WeightedGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const WeightedGraph& g);

}  // namespace mipbs
