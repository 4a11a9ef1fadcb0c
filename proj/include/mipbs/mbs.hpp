#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mipbs/geom.hpp"
#include "mipbs/subset_sum.hpp"

namespace mipbs {

/// Provenance of a constructed instance; absent when read from a file.
struct MbsConstruction {
  SubsetSumInstance source;
  std::int64_t L = 0;
  std::int64_t C = 0;       // n*L + 2*sum(a) + b, construction units
  Rational scale = 1;       // output units per construction unit (1/eps when rounded)
  Rational eps = 0;         // rounding grid in construction units, 0 = unrounded
};

/// Minimum Barrier Shrinkage instance encoding Subset Sum. Disk ids:
/// D<i>, Dp<i>, A<i>, B<i>, Ap<i>, Bp<i>, P<i>_<k> (corridor i, position k).
struct MbsInstance {
  std::vector<Disk> disks;
  Point x;
  Point y;
  std::vector<Point> markers;  // markers[i-1] = y_i
  Rational budget;             // decision budget in output units
  Rational lambda;             // thick-pair threshold in output units
  std::optional<MbsConstruction> construction;

  std::size_t n() const;  // number of Subset Sum items encoded
  std::optional<std::size_t> find(const std::string& id) const;
  // Throws Error(kUnknownDiskId).
  std::size_t at(const std::string& id) const;
  const Disk& disk(DiskRole role, int index) const;
  // A'_i, corridor disks of Pi_i in order, B'_i.
  std::vector<std::size_t> corridor_chain(int i) const;

  // Ideal penetration of each block gap before rounding, in output units:
  // (D_{i-1},A_i),(A_i,D_i) -> L+2a_i; (D_{i-1},B_i) -> L+a_i; (B_i,D_i) ->
  // L+3a_i; (D_n,A_{n+1}),(D_n,B_{n+1}) -> 2b. Needs construction data.
  Rational gap_target(const Disk& p, const Disk& q) const;
};

struct MbsBuildOptions {
  // false: keep the float circle placements for A/B (no grid, no scaling).
  bool round = true;
};

MbsInstance build_mbs_instance(const SubsetSumInstance& inst, MbsBuildOptions options = {});

// Multiplies all coordinates, radii, budget and lambda by factor.
MbsInstance scale_mbs(const MbsInstance& inst, const Rational& factor);

struct ValidationCheck {
  std::string name;
  bool pass = false;
  double margin = 0;  // in units of lambda, positive means satisfied
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
  const ValidationCheck* first_failure() const;
};

// Every structural claim of the construction, evaluated with exact sign
// tests; never throws on a failed check.
ValidationReport validation_report(const MbsInstance& inst);

// Throws Error(kValidationFailure) naming the first violated check.
ValidationReport validate(const MbsInstance& inst);

// "mbs <num_disks>", "budget", "lambda", "point x|y", "marker y<i>", "disk ...".
void write_mbs(std::ostream& out, const MbsInstance& inst);
MbsInstance read_mbs(std::istream& in);

}  // namespace mipbs
