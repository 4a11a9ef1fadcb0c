#pragma once

#include <cstdint>
#include <vector>

#include "mipbs/graph.hpp"
#include "mipbs/greedy.hpp"
#include "mipbs/subset_sum.hpp"

namespace mipbs {

/// Gadget graph encoding a Subset Sum instance: between u_{i-1} and u_i an
/// upper choice (L+2a_i, L+2a_i) through up_i and a lower choice
/// (L+a_i, L+3a_i) through lo_i, then u_n t with weight 2b.
struct MipReduction {
  SubsetSumInstance source;
  WeightedGraph graph;  // carries budget C
  std::int64_t L = 0;
  std::int64_t C = 0;
  std::vector<VertexId> u;  // u[0] = s, ..., u[n]
  VertexId t = 0;
  std::vector<VertexId> upper;  // upper[i-1] = up_i
  std::vector<VertexId> lower;  // lower[i-1] = lo_i
};

// L = 2*sum(a) + 2, C = n*L + 2*sum(a) + b.
MipReduction build_mip_reduction(const SubsetSumInstance& inst);

// Distinct (opt, phi) pairs over all s -> u_i paths, sorted.
std::vector<PathProfile> enumerate_profiles(const MipReduction& red, std::size_t i);

struct ReductionCheck {
  bool subset_sum_yes = false;
  Rational optimum;  // Minimum Installation Path optimum on the gadget graph
  std::int64_t budget = 0;
  bool installation_yes() const { return optimum <= budget; }
  bool holds() const { return subset_sum_yes == installation_yes(); }
};

ReductionCheck check_mip_reduction(const SubsetSumInstance& inst);
bool verify_reduction(const SubsetSumInstance& inst);

}  // namespace mipbs
