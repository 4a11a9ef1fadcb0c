#pragma once

#include <iosfwd>
#include <vector>

#include "mipbs/graph.hpp"

namespace mipbs {

/// Optimum of a Minimum Installation Path instance with a witness.
/// The witness assignment activates every edge of the witness path and
/// its cost equals `cost`.
struct SolveResult {
  Rational cost;
  Path path;
  PowerAssignment power;
};

/// Finite, strictly increasing set of allowed powers starting at 0.
class PowerDomain {
 public:
  explicit PowerDomain(std::vector<Rational> values);
  // {k * step : k = 0..k_max}
  static PowerDomain uniform(const Rational& step, long k_max);

  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t k) const { return values_[k]; }
  // Smallest index whose value is >= threshold, or size() if none.
  std::size_t lower_index(const Rational& threshold) const;

 private:
  std::vector<Rational> values_;
};

// Ground truth: enumerates every simple s-t path (edge instances
// distinguished) and keeps the one with the smallest greedy cost.
// Unit coefficients only. Exponential; meant for small graphs.
SolveResult solve_bruteforce(const WeightedGraph& g);

// Label-setting search over (vertex, residual power) for integer weights.
SolveResult solve_exact_integer(const WeightedGraph& g);

// Minimum cost over assignments with every power drawn from the domain.
// General activation coefficients allowed.
SolveResult solve_discretized(const WeightedGraph& g, const PowerDomain& domain);

// Smallest uniform power activating some s-t path.
Rational compute_lambda(const WeightedGraph& g);

PowerDomain fptas_domain(const WeightedGraph& g, const Rational& eps);

// (1 + eps)-approximation.
SolveResult fptas(const WeightedGraph& g, const Rational& eps);

// Loop erasure of a walk given as vertices/edges; the result is simple.
Path erase_loops(const Path& walk);

// "cost <c>", "power <v> <p>" for every positive power, "path <v0> ...".
void write_solution(std::ostream& out, const WeightedGraph& g, const SolveResult& result);

}  // namespace mipbs
