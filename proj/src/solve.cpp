#include "mipbs/solve.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "mipbs/error.hpp"
#include "mipbs/greedy.hpp"

namespace mipbs {

PowerDomain::PowerDomain(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty() || values_.front() != 0) {
    throw Error(ErrorCode::kInvalidArgument, "power domain must start at 0");
  }
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (!(values_[i - 1] < values_[i])) {
      throw Error(ErrorCode::kInvalidArgument, "power domain must be strictly increasing");
    }
  }
}

PowerDomain PowerDomain::uniform(const Rational& step, long k_max) {
  if (sgn(step) <= 0 || k_max < 0) throw Error(ErrorCode::kInvalidArgument, "bad uniform domain");
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(k_max) + 1);
  for (long k = 0; k <= k_max; ++k) values.emplace_back(step * k);
  return PowerDomain(std::move(values));
}

std::size_t PowerDomain::lower_index(const Rational& threshold) const {
  return static_cast<std::size_t>(
      std::lower_bound(values_.begin(), values_.end(), threshold) - values_.begin());
}

Path erase_loops(const Path& walk) {
  Path out;
  std::vector<std::size_t> pos;  // pos[v] + 1 = index in out.vertices, 0 = absent
  auto mark = [&](VertexId v, std::size_t value) {
    if (v >= pos.size()) pos.resize(v + 1, 0);
    pos[v] = value;
  };
  auto at = [&](VertexId v) -> std::size_t { return v < pos.size() ? pos[v] : 0; };
  for (std::size_t i = 0; i < walk.vertices.size(); ++i) {
    VertexId v = walk.vertices[i];
    if (std::size_t j = at(v); j != 0) {
      while (out.vertices.size() > j) {
        mark(out.vertices.back(), 0);
        out.vertices.pop_back();
        out.edges.pop_back();
      }
      continue;
    }
    if (i > 0) out.edges.push_back(walk.edges[i - 1]);
    out.vertices.push_back(v);
    mark(v, out.vertices.size());
  }
  return out;
}

namespace {

void require_unit(const WeightedGraph& g) {
  if (!g.has_unit_coefficients()) {
    throw Error(ErrorCode::kNonUnitCoefficients, "solver needs alpha = beta = 1 on every edge");
  }
}

[[noreturn]] void no_path(const WeightedGraph& g) {
  throw Error(ErrorCode::kNoPath, "no path between " + g.name(g.source()) + " and " + g.name(g.sink()));
}

struct BruteForce {
  const WeightedGraph& g;
  std::vector<bool> on_path;
  Path current;
  std::optional<SolveResult> best;

  void dfs(VertexId v, const PathProfile& prof) {
    if (v == g.sink()) {
      if (!best || prof.opt < best->cost) best = SolveResult{prof.opt, current, {}};
      return;
    }
    for (EdgeId id : g.incident(v)) {
      const Edge& e = g.edge(id);
      VertexId w = e.other(v);
      if (on_path[w]) continue;
      on_path[w] = true;
      current.vertices.push_back(w);
      current.edges.push_back(id);
      dfs(w, extend(prof, e.weight));
      current.vertices.pop_back();
      current.edges.pop_back();
      on_path[w] = false;
    }
  }
};

}  // namespace

SolveResult solve_bruteforce(const WeightedGraph& g) {
  require_unit(g);
  BruteForce search{g, std::vector<bool>(g.num_vertices(), false), {}, std::nullopt};
  search.on_path[g.source()] = true;
  search.current.vertices.push_back(g.source());
  search.dfs(g.source(), PathProfile{});
  if (!search.best) no_path(g);
  SolveResult result = std::move(*search.best);
  result.power = greedy_assign(g, result.path);
  return result;
}

SolveResult solve_exact_integer(const WeightedGraph& g) {
  require_unit(g);
  if (!g.has_integer_weights()) {
    throw Error(ErrorCode::kNonIntegerWeights, "solve_exact_integer needs integer weights");
  }
  const std::size_t n = g.num_vertices();
  std::vector<std::int64_t> weight(g.num_edges());
  std::int64_t max_w = 0;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    weight[id] = to_int64(g.edge(id).weight);
    max_w = std::max(max_w, weight[id]);
  }
  const std::size_t width = static_cast<std::size_t>(max_w) + 1;
  auto state = [width](VertexId v, std::int64_t r) { return v * width + static_cast<std::size_t>(r); };

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::int64_t> dist(n * width, kInf);
  std::vector<std::size_t> pred(n * width, kNone);
  std::vector<EdgeId> pred_edge(n * width, 0);
  std::vector<bool> done(n * width, false);

  // (cost, vertex, residual) ordered lexicographically for deterministic witnesses.
  using Label = std::tuple<std::int64_t, VertexId, std::int64_t>;
  std::priority_queue<Label, std::vector<Label>, std::greater<>> queue;
  dist[state(g.source(), 0)] = 0;
  queue.emplace(0, g.source(), 0);
  std::size_t goal = kNone;
  while (!queue.empty()) {
    auto [cost, u, r] = queue.top();
    queue.pop();
    const std::size_t su = state(u, r);
    if (done[su]) continue;
    done[su] = true;
    if (u == g.sink()) {
      goal = su;
      break;
    }
    for (EdgeId id : g.incident(u)) {
      const std::int64_t step = std::max<std::int64_t>(0, weight[id] - r);
      const VertexId v = g.edge(id).other(u);
      const std::size_t sv = state(v, step);
      if (cost + step < dist[sv]) {
        dist[sv] = cost + step;
        pred[sv] = su;
        pred_edge[sv] = id;
        queue.emplace(cost + step, v, step);
      }
    }
  }
  if (goal == kNone) no_path(g);

  Path walk;
  for (std::size_t s = goal; s != kNone; s = pred[s]) {
    walk.vertices.push_back(s / width);
    if (pred[s] != kNone) walk.edges.push_back(pred_edge[s]);
  }
  std::reverse(walk.vertices.begin(), walk.vertices.end());
  std::reverse(walk.edges.begin(), walk.edges.end());

  SolveResult result;
  result.path = erase_loops(walk);
  result.power = greedy_assign(g, result.path);
  result.cost = result.power.cost();
  if (result.cost != dist[goal]) {
    throw std::logic_error("loop-erased witness does not match label optimum");
  }
  return result;
}

SolveResult solve_discretized(const WeightedGraph& g, const PowerDomain& domain) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = domain.size();
  const std::size_t states = n * m;
  // Nodes [0, states) are (v, k) with power domain[k] paid on entry; nodes
  // [states, 2*states) are "entry(v, k)": may settle at any index >= k.
  auto node = [m](VertexId v, std::size_t k) { return v * m + k; };
  auto entry = [m, states](VertexId v, std::size_t k) { return states + v * m + k; };
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::vector<std::optional<Rational>> dist(2 * states);
  std::vector<std::size_t> pred(2 * states, kNone);
  std::vector<EdgeId> pred_edge(2 * states, 0);
  std::vector<bool> done(2 * states, false);

  struct Label {
    Rational cost;
    VertexId v;
    std::size_t k;
    bool is_entry;
    bool operator>(const Label& o) const {
      if (int c = cmp(cost, o.cost); c != 0) return c > 0;
      return std::tie(v, k, is_entry) > std::tie(o.v, o.k, o.is_entry);
    }
  };
  std::priority_queue<Label, std::vector<Label>, std::greater<>> queue;

  auto relax = [&](std::size_t to, const Rational& cost, std::size_t from, EdgeId via,
                   VertexId v, std::size_t k, bool is_entry) {
    if (!dist[to] || cost < *dist[to]) {
      dist[to] = cost;
      pred[to] = from;
      pred_edge[to] = via;
      queue.push(Label{cost, v, k, is_entry});
    }
  };

  relax(entry(g.source(), 0), Rational(0), kNone, 0, g.source(), 0, true);
  std::size_t goal = kNone;
  while (!queue.empty()) {
    Label top = queue.top();
    queue.pop();
    const std::size_t id = top.is_entry ? entry(top.v, top.k) : node(top.v, top.k);
    if (done[id]) continue;
    done[id] = true;
    if (top.is_entry) {
      relax(node(top.v, top.k), top.cost + domain[top.k], id, 0, top.v, top.k, false);
      if (top.k + 1 < m) relax(entry(top.v, top.k + 1), top.cost, id, 0, top.v, top.k + 1, true);
      continue;
    }
    if (top.v == g.sink()) {
      goal = id;
      break;
    }
    for (EdgeId eid : g.incident(top.v)) {
      const Edge& e = g.edge(eid);
      const VertexId w = e.other(top.v);
      Rational need = (e.weight - e.coef(top.v) * domain[top.k]) / e.coef(w);
      const std::size_t k = sgn(need) <= 0 ? 0 : domain.lower_index(need);
      if (k == m) continue;
      relax(entry(w, k), top.cost, id, eid, w, k, true);
    }
  }
  if (goal == kNone) {
    throw Error(ErrorCode::kNoFeasiblePath, "power domain cannot activate any s-t path");
  }

  // Walk back through settled (v, k) nodes; entries only carry the edge.
  Path walk;
  std::vector<std::size_t> level;
  std::size_t cur = goal;
  while (cur != kNone) {
    if (cur < states) {
      walk.vertices.push_back(cur / m);
      level.push_back(cur % m);
    } else if (pred[cur] != kNone && pred[cur] < states) {
      walk.edges.push_back(pred_edge[cur]);
    }
    cur = pred[cur];
  }
  std::reverse(walk.vertices.begin(), walk.vertices.end());
  std::reverse(walk.edges.begin(), walk.edges.end());
  std::reverse(level.begin(), level.end());

  SolveResult result;
  result.path = erase_loops(walk);
  std::vector<bool> keep(n, false);
  for (VertexId v : result.path.vertices) keep[v] = true;
  result.power = PowerAssignment(n);
  for (std::size_t i = 0; i < walk.vertices.size(); ++i) {
    VertexId v = walk.vertices[i];
    if (keep[v] && result.power[v] < domain[level[i]]) result.power.set(v, domain[level[i]]);
  }
  result.cost = result.power.cost();
  if (result.cost != *dist[goal]) {
    throw std::logic_error("merged witness does not match state-graph optimum");
  }
  return result;
}

Rational compute_lambda(const WeightedGraph& g) {
  struct Candidate {
    Rational value;
    EdgeId id;
  };
  std::vector<Candidate> cands;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    cands.push_back({e.weight / (e.alpha + e.beta), id});
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& a, const Candidate& b) { return a.value < b.value; });

  std::vector<VertexId> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  std::function<VertexId(VertexId)> root = [&](VertexId v) {
    return parent[v] == v ? v : parent[v] = root(parent[v]);
  };
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const Edge& e = g.edge(cands[i].id);
    parent[root(e.u)] = root(e.v);
    const bool last_of_value = i + 1 == cands.size() || cands[i + 1].value != cands[i].value;
    if (last_of_value && root(g.source()) == root(g.sink())) return cands[i].value;
  }
  no_path(g);
}

PowerDomain fptas_domain(const WeightedGraph& g, const Rational& eps) {
  if (sgn(eps) <= 0) throw Error(ErrorCode::kInvalidArgument, "eps must be positive");
  const Rational lambda = compute_lambda(g);
  const long n = static_cast<long>(g.num_vertices());
  const Rational k_max = Rational(n * n) / eps;
  return PowerDomain::uniform(eps * lambda / n, ceil_of(k_max).get_si());
}

SolveResult fptas(const WeightedGraph& g, const Rational& eps) {
  return solve_discretized(g, fptas_domain(g, eps));
}

void write_solution(std::ostream& out, const WeightedGraph& g, const SolveResult& result) {
  out << "cost " << format_rational(result.cost) << '\n';
  for (VertexId v = 0; v < result.power.size(); ++v) {
    if (sgn(result.power[v]) > 0) {
      out << "power " << g.name(v) << ' ' << format_rational(result.power[v]) << '\n';
    }
  }
  out << "path";
  for (VertexId v : result.path.vertices) out << ' ' << g.name(v);
  out << '\n';
}

}  // namespace mipbs
