#include "qsing/integer.hpp"

#include "qsing/errors.hpp"

namespace qsing {

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<Integer> parse_canonical_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  if (digits.empty()) return std::nullopt;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  if (digits.size() > 1 && digits.front() == '0') return std::nullopt;
  if (negative && digits == "0") return std::nullopt;
  Integer value{std::string(digits)};
  return negative ? Integer(-value) : value;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer mod_floor(const Integer& value, const Integer& modulus) {
  Integer r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer quotient = a / b;
  if (quotient * b < a) ++quotient;
  return quotient;
}

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::QOutOfRange: return "QOutOfRange";
    case Errc::TableTwoConditionViolated: return "TableTwoConditionViolated";
    case Errc::ChainInvariantViolation: return "ChainInvariantViolation";
    case Errc::NoIntegerSolution: return "NoIntegerSolution";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::MinimalityViolation: return "MinimalityViolation";
    case Errc::ArmCountError: return "ArmCountError";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::HyperkahlerInput: return "HyperkahlerInput";
    case Errc::DivisorDataRequired: return "DivisorDataRequired";
    case Errc::ResidueClassInvalid: return "ResidueClassInvalid";
    case Errc::TableThreeDisagreement: return "TableThreeDisagreement";
    case Errc::NoEmbeddingRelation: return "NoEmbeddingRelation";
    case Errc::DataError: return "DataError";
  }
  return "Unknown";
}

}  // namespace qsing
