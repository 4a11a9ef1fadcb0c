#include "mipbs/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "mipbs/error.hpp"
#include "mipbs/solve.hpp"
#include "mipbs/subset_sum.hpp"
#include "text.hpp"

namespace mipbs {

namespace {

std::string tunnel(std::size_t i, std::size_t n) {
  if (i == 0) return "x";
  if (i == n + 1) return "y";
  return "y_" + std::to_string(i);
}

std::size_t index_of(const MbsInstance& inst, DiskRole role, int i) {
  return inst.at(inst.disk(role, i).id);
}

}  // namespace

std::vector<Gap> gap_structure(const MbsInstance& inst) {
  const std::size_t n = inst.n();
  std::vector<Gap> gaps;
  for (std::size_t i = 1; i <= n; ++i) {
    const int k = static_cast<int>(i);
    const std::size_t left = index_of(inst, DiskRole::kD, k - 1);
    const std::size_t right = index_of(inst, DiskRole::kD, k);
    const std::size_t a = index_of(inst, DiskRole::kA, k);
    const std::size_t b = index_of(inst, DiskRole::kB, k);
    const std::string alpha = "alpha_" + std::to_string(i);
    const std::string beta = "beta_" + std::to_string(i);
    gaps.push_back({left, a, tunnel(i - 1, n), alpha});
    gaps.push_back({a, right, alpha, tunnel(i, n)});
    gaps.push_back({left, b, tunnel(i - 1, n), beta});
    gaps.push_back({b, right, beta, tunnel(i, n)});
  }
  const int last = static_cast<int>(n);
  const std::size_t dn = index_of(inst, DiskRole::kD, last);
  gaps.push_back({dn, index_of(inst, DiskRole::kA, last + 1), tunnel(n, n), "y"});
  gaps.push_back({dn, index_of(inst, DiskRole::kB, last + 1), tunnel(n, n), "y"});
  return gaps;
}

GPrime build_gprime(const MbsInstance& inst) {
  const std::size_t n = inst.n();
  const int last = static_cast<int>(n);
  auto mismatch = [](const std::string& what) { throw Error(ErrorCode::kStructureMismatch, what); };
  auto require_thick = [&](std::size_t p, std::size_t q) {
    if (compare_penetration(inst.disks[p], inst.disks[q], inst.lambda) < 0) {
      mismatch("thick pair " + inst.disks[p].id + "," + inst.disks[q].id + " below lambda");
    }
  };
  for (int i = 1; i <= last + 1; ++i) {
    if (i <= last) {
      require_thick(index_of(inst, DiskRole::kD, i - 1), index_of(inst, DiskRole::kDprime, i));
      require_thick(index_of(inst, DiskRole::kD, i), index_of(inst, DiskRole::kDprime, i));
    }
    require_thick(index_of(inst, DiskRole::kA, i), index_of(inst, DiskRole::kAprime, i));
    require_thick(index_of(inst, DiskRole::kB, i), index_of(inst, DiskRole::kBprime, i));
    const auto chain = inst.corridor_chain(i);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) require_thick(chain[k], chain[k + 1]);
  }

  GPrime gp;
  gp.gaps = gap_structure(inst);
  GraphBuilder builder;
  builder.vertex("x");
  for (std::size_t i = 1; i <= n; ++i) {
    builder.vertex("alpha_" + std::to_string(i));
    builder.vertex("beta_" + std::to_string(i));
    builder.vertex(tunnel(i, n));
  }
  builder.vertex("y");
  for (const Gap& g : gp.gaps) {
    const Disk& p = inst.disks[g.first];
    const Disk& q = inst.disks[g.second];
    if (compare_penetration(p, q, Rational(0)) <= 0 || compare_penetration(p, q, inst.lambda) >= 0) {
      mismatch("gap " + p.id + "," + q.id + " not in (0, lambda)");
    }
    Rational w = p.radius + q.radius - sqrt_floor(dist2(p.center, q.center), kGPrimeBits);
    builder.edge(g.from, g.to, std::move(w));
  }
  builder.terminals("x", "y");
  gp.graph = builder.build();
  return gp;
}

Rational ShrinkVector::cost() const {
  Rational total = 0;
  for (const Rational& d : delta) total += d;
  return total;
}

ShrinkVector zero_shrinks(const MbsInstance& inst) {
  return ShrinkVector{std::vector<Rational>(inst.disks.size(), Rational(0))};
}

namespace {

// Disk whose radius decrease carries the power of a G' node; for "y"
// the caller picks between A_{n+1} and B_{n+1}.
std::size_t node_disk(const MbsInstance& inst, const std::string& node) {
  if (node == "x") return index_of(inst, DiskRole::kD, 0);
  auto suffix = [&](std::size_t prefix) { return std::stoi(node.substr(prefix)); };
  if (node.rfind("alpha_", 0) == 0) return index_of(inst, DiskRole::kA, suffix(6));
  if (node.rfind("beta_", 0) == 0) return index_of(inst, DiskRole::kB, suffix(5));
  if (node.rfind("y_", 0) == 0) return index_of(inst, DiskRole::kD, suffix(2));
  throw Error(ErrorCode::kStructureMismatch, "no disk for node " + node);
}

std::size_t sink_disk(const GPrime& gp, const PowerAssignment& p) {
  // The two parallel y_n-y edges are the last two.
  const EdgeId ea = gp.graph.num_edges() - 2;
  const EdgeId eb = gp.graph.num_edges() - 1;
  const bool on_a = is_activated(gp.graph.edge(ea), p);
  const bool on_b = is_activated(gp.graph.edge(eb), p);
  const std::size_t a = gp.gaps[ea].second;
  const std::size_t b = gp.gaps[eb].second;
  if (on_a && on_b) return gp.graph.edge(eb).weight > gp.graph.edge(ea).weight ? b : a;
  return on_b ? b : a;
}

}  // namespace

ShrinkVector lift_to_shrinks(const MbsInstance& inst, const GPrime& gp, const PowerAssignment& p) {
  if (!is_feasible(gp.graph, p)) {
    throw Error(ErrorCode::kInfeasiblePower, "power assignment activates no x-y path in G'");
  }
  ShrinkVector s = zero_shrinks(inst);
  for (VertexId v = 0; v < gp.graph.num_vertices(); ++v) {
    const Rational& power = v < p.size() ? p[v] : Rational(0);
    if (sgn(power) == 0) continue;
    const std::string& node = gp.graph.name(v);
    const std::size_t disk = node == "y" ? sink_disk(gp, p) : node_disk(inst, node);
    s.delta[disk] += power;
  }
  return s;
}

int residual_sign(const MbsInstance& inst, const ShrinkVector& s, std::size_t p, std::size_t q) {
  return compare_penetration(inst.disks[p], inst.disks[q], s.at(p) + s.at(q));
}

namespace {

void require_shape(const MbsInstance& inst, const ShrinkVector& s) {
  if (s.delta.size() != inst.disks.size()) {
    throw Error(ErrorCode::kInvalidArgument, "shrink vector does not match the instance");
  }
}

bool shrinks_admissible(const MbsInstance& inst, const ShrinkVector& s) {
  for (std::size_t i = 0; i < s.delta.size(); ++i) {
    if (sgn(s.delta[i]) < 0 || s.delta[i] > inst.disks[i].radius) return false;
  }
  return true;
}

}  // namespace

bool check_route(const MbsInstance& inst, const ShrinkVector& s, const RouteCertificate& cert,
                 const Rational& budget) {
  require_shape(inst, s);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [a, b] : cert.crossings) pairs.emplace_back(inst.at(a), inst.at(b));
  if (!shrinks_admissible(inst, s) || s.cost() > budget) return false;
  const std::vector<Gap> gaps = gap_structure(inst);
  std::string region = "x";
  for (auto [p, q] : pairs) {
    auto it = std::find_if(gaps.begin(), gaps.end(), [&](const Gap& g) {
      const bool same = (g.first == p && g.second == q) || (g.first == q && g.second == p);
      return same && (g.from == region || g.to == region);
    });
    if (it == gaps.end()) return false;
    if (residual_sign(inst, s, p, q) > 0) return false;
    region = it->from == region ? it->to : it->from;
  }
  return region == "y";
}

namespace {

struct Vec {
  Rational x, y;
};

Rational cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
Vec sub(const Point& a, const Point& b) { return Vec{a.x - b.x, a.y - b.y}; }

// Crossing parity of the ray p + s*dir (s > 0) with the closed polygon, or
// nullopt if the ray touches a vertex or p lies on the polygon.
std::optional<bool> ray_parity(const std::vector<Point>& poly, const Point& p, const Vec& dir) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec v = sub(poly[i], p);
    if (sgn(cross(dir, v)) == 0 && sgn(Rational(dir.x * v.x + dir.y * v.y)) >= 0) return std::nullopt;
  }
  bool inside = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    const Vec ab = sub(b, a);
    const int side_p = sgn(cross(ab, sub(p, a)));
    if (side_p == 0) {
      const bool within = std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
                          std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
      if (within) return std::nullopt;
    }
    const int sa = sgn(cross(dir, sub(a, p)));
    const int sb = sgn(cross(dir, sub(b, p)));
    if (sa * sb >= 0) continue;
    const int toward = sgn(cross(ab, dir));
    if (side_p != 0 && toward != 0 && side_p != toward) inside = !inside;
  }
  return inside;
}

bool parity(const std::vector<Point>& poly, const Point& p) {
  static const int kDirs[][2] = {{1, 0}, {1, 1}, {1, -1}, {0, 1}, {2, 1}, {1, 2},
                                 {3, 1}, {1, 3}, {-1, 2}, {2, -3}, {5, 2}, {-3, 5},
                                 {7, 3}, {3, -7}, {11, 4}, {-4, 11}};
  for (const auto& d : kDirs) {
    if (auto r = ray_parity(poly, p, Vec{Rational(d[0]), Rational(d[1])})) return *r;
  }
  throw Error(ErrorCode::kDegeneratePolygon, "every probe ray meets a polygon vertex");
}

}  // namespace

bool check_barrier(const MbsInstance& inst, const ShrinkVector& s, const BarrierCertificate& cert) {
  require_shape(inst, s);
  std::vector<std::size_t> ids;
  for (const std::string& id : cert.cycle) ids.push_back(inst.at(id));
  if (ids.size() < 3 || !shrinks_admissible(inst, s)) return false;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (residual_sign(inst, s, ids[i], ids[(i + 1) % ids.size()]) <= 0) return false;
  }
  std::vector<Point> poly;
  for (std::size_t id : ids) poly.push_back(inst.disks[id].center);
  return parity(poly, inst.x) != parity(poly, inst.y);
}

RouteCertificate route_from_path(const MbsInstance& inst, const GPrime& gp, const Path& path) {
  RouteCertificate cert;
  for (EdgeId e : path.edges) {
    const Gap& g = gp.gaps.at(e);
    cert.crossings.emplace_back(inst.disks[g.first].id, inst.disks[g.second].id);
  }
  return cert;
}

std::optional<BarrierCertificate> find_barrier(const MbsInstance& inst, const ShrinkVector& s) {
  require_shape(inst, s);
  const std::size_t n = inst.n();
  const std::vector<Gap> gaps = gap_structure(inst);
  std::set<std::string> reached{"x"};
  std::deque<std::string> queue{"x"};
  std::map<std::pair<std::size_t, std::size_t>, bool> open;
  for (const Gap& g : gaps) open[{g.first, g.second}] = residual_sign(inst, s, g.first, g.second) <= 0;
  while (!queue.empty()) {
    const std::string cur = queue.front();
    queue.pop_front();
    for (const Gap& g : gaps) {
      if (!open[{g.first, g.second}]) continue;
      const std::string* next = g.from == cur ? &g.to : g.to == cur ? &g.from : nullptr;
      if (next && reached.insert(*next).second) queue.push_back(*next);
    }
  }
  if (reached.count("y")) return std::nullopt;

  std::size_t k = 1;
  while (k <= n && reached.count(tunnel(k, n))) ++k;
  const int blk = static_cast<int>(k);
  auto id = [&](DiskRole role, int i) { return inst.disk(role, i).id; };
  BarrierCertificate cert;
  std::string left_a, left_b;
  if (k <= n) {
    left_a = reached.count("alpha_" + std::to_string(k)) ? id(DiskRole::kD, blk) : id(DiskRole::kD, blk - 1);
    left_b = reached.count("beta_" + std::to_string(k)) ? id(DiskRole::kD, blk) : id(DiskRole::kD, blk - 1);
  } else {
    left_a = left_b = id(DiskRole::kD, blk - 1);
  }
  cert.cycle.push_back(left_a);
  cert.cycle.push_back(id(DiskRole::kA, blk));
  for (std::size_t c : inst.corridor_chain(blk)) cert.cycle.push_back(inst.disks[c].id);
  cert.cycle.push_back(id(DiskRole::kB, blk));
  if (left_b != left_a) {
    cert.cycle.push_back(left_b);
    cert.cycle.push_back(id(DiskRole::kDprime, blk));
  }
  return cert;
}

}  // namespace mipbs

namespace mipbs {

namespace {

// Spends the budget on the lifted shrinks in crossing order and stops when
// it runs out; used to produce a budget-respecting adversary on no-instances.
ShrinkVector truncate_along(const MbsInstance& inst, const GPrime& gp, const SolveResult& sol,
                            const Rational& budget) {
  const ShrinkVector full = lift_to_shrinks(inst, gp, sol.power);
  ShrinkVector out = zero_shrinks(inst);
  Rational left = budget;
  for (VertexId v : sol.path.vertices) {
    const std::string& node = gp.graph.name(v);
    const std::size_t disk = node == "y" ? sink_disk(gp, sol.power) : node_disk(inst, node);
    Rational take = std::min<Rational>(full.delta[disk] - out.delta[disk], left);
    if (sgn(take) <= 0) continue;
    out.delta[disk] += take;
    left -= take;
  }
  return out;
}

}  // namespace

MbsCheck check_mbs_instance(const MbsInstance& inst) {
  if (!inst.construction) {
    throw Error(ErrorCode::kInvalidArgument, "reduction check needs a constructed instance");
  }
  const MbsConstruction& con = *inst.construction;
  validate(inst);
  const GPrime gp = build_gprime(inst);

  MbsCheck check;
  check.subset_sum_yes = solve_subset_sum(con.source).has_value();
  check.budget = inst.budget;
  const SolveResult sol = solve_bruteforce(gp.graph);
  check.optimum = sol.cost;

  // Weight drift per edge and along the worst simple x-y path.
  std::vector<double> drift;
  for (EdgeId e = 0; e < gp.graph.num_edges(); ++e) {
    const Gap& g = gp.gaps[e];
    const Rational target = inst.gap_target(inst.disks[g.first], inst.disks[g.second]);
    drift.push_back(std::abs(to_double(Rational(gp.graph.edge(e).weight - target))));
    check.max_weight_drift = std::max(check.max_weight_drift, drift.back());
  }
  const std::size_t n = inst.n();
  for (std::size_t i = 0; i < n; ++i) {
    check.max_route_drift += std::max(drift[4 * i] + drift[4 * i + 1], drift[4 * i + 2] + drift[4 * i + 3]);
  }
  check.max_route_drift += std::max(drift[4 * n], drift[4 * n + 1]);
  if (sgn(con.eps) > 0) {
    const double unit = to_double(Rational(con.scale * con.eps));
    check.drift_ok = check.max_weight_drift <= 2 * unit &&
                     check.max_route_drift <= to_double(con.scale) / 3;
  } else {
    check.drift_ok = check.max_weight_drift <= 1e-6 * to_double(con.scale);
  }

  if (check.shrinkage_yes()) {
    check.shrinks = lift_to_shrinks(inst, gp, sol.power);
    check.route = route_from_path(inst, gp, sol.path);
    check.certificate_ok = check_route(inst, check.shrinks, *check.route, check.budget);
  } else {
    check.shrinks = truncate_along(inst, gp, sol, check.budget);
    check.barrier = find_barrier(inst, check.shrinks);
    check.certificate_ok = check.barrier && check.shrinks.cost() <= check.budget &&
                           check_barrier(inst, check.shrinks, *check.barrier);
  }
  return check;
}

MbsCheck check_mbs_reduction(const SubsetSumInstance& inst) {
  return check_mbs_instance(build_mbs_instance(inst));
}

bool verify_mbs_reduction(const SubsetSumInstance& inst) { return check_mbs_reduction(inst).holds(); }

void write_shrinks(std::ostream& out, const MbsInstance& inst, const ShrinkVector& s) {
  require_shape(inst, s);
  for (std::size_t i = 0; i < s.delta.size(); ++i) {
    if (sgn(s.delta[i]) != 0) out << "shrink " << inst.disks[i].id << ' ' << format_rational(s.delta[i]) << '\n';
  }
  out << "cost " << format_rational(s.cost()) << '\n';
}

ShrinkVector read_shrinks(std::istream& in, const MbsInstance& inst) {
  detail::LineReader reader(in);
  std::vector<std::string> tok;
  ShrinkVector s = zero_shrinks(inst);
  std::optional<Rational> declared;
  while (reader.next(tok)) {
    if (tok[0] == "shrink") {
      reader.expect_arity(tok, 3);
      auto idx = inst.find(tok[1]);
      if (!idx) throw Error(ErrorCode::kUnknownDiskId, "line " + std::to_string(reader.line()) + ": " + tok[1]);
      Rational v = reader.number(tok[2]);
      if (sgn(v) < 0) reader.fail("negative shrink");
      s.delta[*idx] = v;
    } else if (tok[0] == "cost") {
      reader.expect_arity(tok, 2);
      declared = reader.number(tok[1]);
    } else {
      reader.fail("unknown record '" + tok[0] + "'");
    }
  }
  if (declared && *declared != s.cost()) reader.fail("declared cost does not match the shrinks");
  return s;
}

void write_certificate(std::ostream& out, const RouteCertificate& cert) {
  out << "route";
  for (const auto& [a, b] : cert.crossings) out << ' ' << a << ':' << b;
  out << '\n';
}

void write_certificate(std::ostream& out, const BarrierCertificate& cert) {
  out << "barrier";
  for (const std::string& id : cert.cycle) out << ' ' << id;
  out << '\n';
}

Certificate read_certificate(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok)) reader.fail("empty certificate");
  Certificate cert;
  if (tok[0] == "route") {
    RouteCertificate route;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      auto colon = tok[i].find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == tok[i].size()) {
        reader.fail("crossing '" + tok[i] + "' is not <id>:<id>");
      }
      route.crossings.emplace_back(tok[i].substr(0, colon), tok[i].substr(colon + 1));
    }
    cert.route = std::move(route);
  } else if (tok[0] == "barrier") {
    cert.barrier = BarrierCertificate{std::vector<std::string>(tok.begin() + 1, tok.end())};
  } else {
    reader.fail("expected 'route' or 'barrier'");
  }
  if (reader.next(tok)) reader.fail("trailing record '" + tok[0] + "'");
  return cert;
}

}  // namespace mipbs
