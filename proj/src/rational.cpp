#include "mipbs/rational.hpp"

#include <cmath>
#include <limits>

#include "mipbs/error.hpp"

namespace mipbs {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kPathNotInGraph: return "PathNotInGraph";
    case ErrorCode::kNonUnitCoefficients: return "NonUnitCoefficients";
    case ErrorCode::kNoPath: return "NoPath";
    case ErrorCode::kNonIntegerWeights: return "NonIntegerWeights";
    case ErrorCode::kNoFeasiblePath: return "NoFeasiblePath";
    case ErrorCode::kNoIntersection: return "NoIntersection";
    case ErrorCode::kNonIntegerOutput: return "NonIntegerOutput";
    case ErrorCode::kValidationFailure: return "ValidationFailure";
    case ErrorCode::kStructureMismatch: return "StructureMismatch";
    case ErrorCode::kInfeasiblePower: return "InfeasiblePower";
    case ErrorCode::kUnknownDiskId: return "UnknownDiskId";
    case ErrorCode::kDegeneratePolygon: return "DegeneratePolygon";
  }
  return "Error";
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

bool is_signed_int(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return is_digits(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_signed_int(num) || (slash != std::string_view::npos && !is_digits(den))) {
    throw Error(ErrorCode::kParse, "not a number: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  Rational q;
  q.get_num() = Integer(std::string(num));
  q.get_den() = den.empty() ? Integer(1) : Integer(std::string(den));
  if (q.get_den() == 0) {
    throw Error(ErrorCode::kParse, "zero denominator: '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) {
  Rational q(value);
  q.canonicalize();
  return q.get_str();
}

Integer floor_of(const Rational& value) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& value) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return r;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer round_half_away(const Rational& value) {
  const Rational half(1, 2);
  if (sgn(value) >= 0) return floor_of(value + half);
  return -floor_of(-value + half);
}

std::int64_t to_int64(const Rational& value) {
  if (!is_integer(value) || !value.get_num().fits_slong_p()) {
    throw Error(ErrorCode::kNonIntegerWeights,
                "expected a machine integer, got " + format_rational(value));
  }
  return value.get_num().get_si();
}

Rational from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidArgument, "non-finite double");
  }
  Rational q(value);
  q.canonicalize();
  return q;
}

int sign_minus_sqrt(const Rational& a, const Rational& d2) {
  if (sgn(a) < 0) return -1;
  return sgn(Rational(a * a - d2));
}

Rational sqrt_floor(const Rational& d2, unsigned bits) {
  if (sgn(d2) < 0) throw Error(ErrorCode::kInvalidArgument, "square root of a negative value");
  // floor(sqrt(floor(v))) == floor(sqrt(v)) for v >= 0.
  Rational scaled = d2 * Rational(Integer(1) << (2 * bits));
  Integer root;
  mpz_sqrt(root.get_mpz_t(), floor_of(scaled).get_mpz_t());
  Rational out(root, Integer(1) << bits);
  out.canonicalize();
  return out;
}

int sign_with_sqrt(const Rational& x, const Rational& y, const Rational& z) {
  if (sgn(z) < 0) throw Error(ErrorCode::kInvalidArgument, "square root of a negative value");
  const int sx = sgn(x);
  const int sy = sgn(z) == 0 ? 0 : sgn(y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // Opposite signs: compare magnitudes x^2 and y^2 z.
  const int c = cmp(Rational(x * x), Rational(y * y * z));
  if (c == 0) return 0;
  return c > 0 ? sx : sy;
}

}  // namespace mipbs
