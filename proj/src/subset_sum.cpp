#include "mipbs/subset_sum.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "mipbs/error.hpp"
#include "text.hpp"

namespace mipbs {

void SubsetSumInstance::validate() const {
  if (a.empty()) throw Error(ErrorCode::kInvalidArgument, "subset sum needs n >= 1");
  if (b < 1) throw Error(ErrorCode::kInvalidArgument, "subset sum target must be >= 1");
  for (std::int64_t x : a) {
    if (x < 1) throw Error(ErrorCode::kInvalidArgument, "subset sum items must be >= 1");
  }
  total();
}

std::int64_t SubsetSumInstance::total() const {
  std::int64_t sum = 0;
  for (std::int64_t x : a) {
    if (x > std::numeric_limits<std::int64_t>::max() - sum) {
      throw Error(ErrorCode::kInvalidArgument, "item sum overflows 64 bits");
    }
    sum += x;
  }
  return sum;
}

std::optional<std::vector<std::size_t>> solve_subset_sum(const SubsetSumInstance& inst) {
  inst.validate();
  const std::size_t n = inst.a.size();
  const std::int64_t cap = std::min(inst.b, inst.total());
  if (inst.b > cap) return std::nullopt;
  const auto width = static_cast<std::size_t>(cap) + 1;
  // reach[i][t]: some subset of items i..n-1 sums to t.
  std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(width, false));
  reach[n][0] = true;
  for (std::size_t i = n; i-- > 0;) {
    const auto ai = static_cast<std::size_t>(std::min<std::int64_t>(inst.a[i], cap + 1));
    for (std::size_t t = 0; t < width; ++t) {
      reach[i][t] = reach[i + 1][t] || (t >= ai && reach[i + 1][t - ai]);
    }
  }
  auto rem = static_cast<std::size_t>(inst.b);
  if (!reach[0][rem]) return std::nullopt;
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < n && rem > 0; ++i) {
    const auto ai = static_cast<std::size_t>(inst.a[i]);
    if (ai <= rem && reach[i + 1][rem - ai]) {
      picked.push_back(i + 1);
      rem -= ai;
    }
  }
  return picked;
}

SubsetSumInstance read_subset_sum(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok) || tok[0] != "subsetsum") reader.fail("expected 'subsetsum <n> <b>'");
  reader.expect_arity(tok, 3);
  const long n = reader.integer(tok[1]);
  SubsetSumInstance inst;
  inst.b = reader.integer(tok[2]);
  if (!reader.next(tok) || tok[0] != "a") reader.fail("expected 'a <a1> ... <an>'");
  if (n < 1 || static_cast<long>(tok.size()) != n + 1) {
    reader.fail("expected " + std::to_string(n) + " items");
  }
  for (std::size_t i = 1; i < tok.size(); ++i) inst.a.push_back(reader.integer(tok[i]));
  if (reader.next(tok)) reader.fail("trailing record '" + tok[0] + "'");
  try {
    inst.validate();
  } catch (const Error& e) {
    reader.fail(e.what());
  }
  return inst;
}

void write_subset_sum(std::ostream& out, const SubsetSumInstance& inst) {
  out << "subsetsum " << inst.a.size() << ' ' << inst.b << "\na";
  for (std::int64_t x : inst.a) out << ' ' << x;
  out << '\n';
}

}  // namespace mipbs
