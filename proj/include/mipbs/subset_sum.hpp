#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace mipbs {

struct SubsetSumInstance {
  std::vector<std::int64_t> a;
  std::int64_t b = 0;

  // Throws Error(kInvalidArgument) unless n >= 1, every a_i >= 1 and b >= 1.
  void validate() const;
  std::int64_t total() const;
};

// 1-based indices of the lexicographically smallest subset summing to b,
// or nullopt for a no-instance.
std::optional<std::vector<std::size_t>> solve_subset_sum(const SubsetSumInstance& inst);

// "subsetsum <n> <b>" then "a <a1> ... <an>".
SubsetSumInstance read_subset_sum(std::istream& in);
void write_subset_sum(std::ostream& out, const SubsetSumInstance& inst);

}  // namespace mipbs
