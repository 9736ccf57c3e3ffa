#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsing {

enum class Errc {
  ParseError,
  NotCoprime,
  QOutOfRange,
  TableTwoConditionViolated,
  ChainInvariantViolation,
  NoIntegerSolution,
  IndexOutOfRange,
  MinimalityViolation,
  ArmCountError,
  ShapeMismatch,
  HyperkahlerInput,
  DivisorDataRequired,
  ResidueClassInvalid,
  TableThreeDisagreement,
  NoEmbeddingRelation,
  DataError,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qsing
