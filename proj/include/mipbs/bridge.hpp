#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mipbs/graph.hpp"
#include "mipbs/mbs.hpp"

namespace mipbs {

// Weights of G' are r + r' - |c - c'| with the distance rounded down to this
// many fractional bits, so they never underestimate the true penetration.
inline constexpr unsigned kGPrimeBits = 40;

/// One passage between two regions of the construction: crossing it means
/// routing the curve between disks `first` and `second`.
struct Gap {
  std::size_t first = 0;   // disk index
  std::size_t second = 0;  // disk index
  std::string from;        // G' node names
  std::string to;
};

// Passages in G' edge order: per block i the pairs (D_{i-1},A_i),
// (A_i,D_i), (D_{i-1},B_i), (B_i,D_i); then (D_n,A_{n+1}), (D_n,B_{n+1}).
// Nodes: x, alpha_i, beta_i, y_i, y (y_0 is x).
std::vector<Gap> gap_structure(const MbsInstance& inst);

/// Routing graph rebuilt from the geometry, sharing edge ids with gap_structure.
struct GPrime {
  WeightedGraph graph;
  std::vector<Gap> gaps;
};

// Throws Error(kStructureMismatch) if a gap is not in (0, lambda) or a
// designated thick pair is below lambda.
GPrime build_gprime(const MbsInstance& inst);

/// Radius decrease per disk, indexed like MbsInstance::disks.
struct ShrinkVector {
  std::vector<Rational> delta;

  Rational cost() const;
  const Rational& at(std::size_t disk) const { return delta.at(disk); }
};

ShrinkVector zero_shrinks(const MbsInstance& inst);

// Power on G' -> shrinks of equal cost (D_i <- p(y_i), A_i <- p(alpha_i),
// B_i <- p(beta_i), D_0 <- p(x), A_{n+1} or B_{n+1} <- p(y)).
// Throws Error(kInfeasiblePower) if p activates no x-y path.
ShrinkVector lift_to_shrinks(const MbsInstance& inst, const GPrime& gp, const PowerAssignment& p);

struct RouteCertificate {
  std::vector<std::pair<std::string, std::string>> crossings;
};

struct BarrierCertificate {
  std::vector<std::string> cycle;
};

// Residual penetration pen - delta - delta' compared with 0, exactly.
int residual_sign(const MbsInstance& inst, const ShrinkVector& s, std::size_t p, std::size_t q);

bool check_route(const MbsInstance& inst, const ShrinkVector& s, const RouteCertificate& cert,
                 const Rational& budget);

bool check_barrier(const MbsInstance& inst, const ShrinkVector& s, const BarrierCertificate& cert);

RouteCertificate route_from_path(const MbsInstance& inst, const GPrime& gp, const Path& path);

// Separating cycle for a shrink vector under which no x-y route is open,
// or nullopt if some route is open.
std::optional<BarrierCertificate> find_barrier(const MbsInstance& inst, const ShrinkVector& s);

struct MbsCheck {
  bool subset_sum_yes = false;
  Rational optimum;  // Minimum Installation Path optimum on G'
  Rational budget;   // (C + 1/3) / eps
  double max_weight_drift = 0;   // output units
  double max_route_drift = 0;    // output units, worst simple x-y path
  bool drift_ok = false;
  bool certificate_ok = false;
  std::optional<RouteCertificate> route;
  std::optional<BarrierCertificate> barrier;
  ShrinkVector shrinks;

  bool shrinkage_yes() const { return optimum <= budget; }
  bool holds() const { return subset_sum_yes == shrinkage_yes() && drift_ok && certificate_ok; }
};

// Builds, validates, rebuilds G' and compares against the Subset Sum oracle.
MbsCheck check_mbs_reduction(const SubsetSumInstance& inst);
// Same pipeline on an already-built instance (e.g. after uniform scaling).
MbsCheck check_mbs_instance(const MbsInstance& inst);
bool verify_mbs_reduction(const SubsetSumInstance& inst);

void write_shrinks(std::ostream& out, const MbsInstance& inst, const ShrinkVector& s);
ShrinkVector read_shrinks(std::istream& in, const MbsInstance& inst);

// "route a:b c:d ..." or "barrier a b c ...".
void write_certificate(std::ostream& out, const RouteCertificate& cert);
void write_certificate(std::ostream& out, const BarrierCertificate& cert);
struct Certificate {
  std::optional<RouteCertificate> route;
  std::optional<BarrierCertificate> barrier;
};
Certificate read_certificate(std::istream& in);

}  // namespace mipbs
