#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "mipbs/error.hpp"
#include "mipbs/rational.hpp"

namespace mipbs::detail {

// Splits a stream into whitespace tokens per line; '#' starts a comment.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty line; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      tokens.clear();
      std::istringstream ss(line);
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  int line() const { return line_no_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no_) + ": " + what);
  }

  void expect_arity(const std::vector<std::string>& tokens, std::size_t n) const {
    if (tokens.size() != n) {
      fail("'" + tokens.front() + "' expects " + std::to_string(n - 1) + " fields");
    }
  }

  Rational number(const std::string& tok) const {
    try {
      return parse_rational(tok);
    } catch (const Error&) {
      fail("not a number: '" + tok + "'");
    }
  }

  long integer(const std::string& tok) const {
    Rational q = number(tok);
    if (!is_integer(q) || !q.get_num().fits_slong_p()) fail("expected integer: '" + tok + "'");
    return q.get_num().get_si();
  }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

}  // namespace mipbs::detail
