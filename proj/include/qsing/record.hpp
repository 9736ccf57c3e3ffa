#pragma once

#include "qsing/divisor.hpp"
#include "qsing/integer.hpp"
#include "qsing/moduli.hpp"
#include "qsing/toric.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsing {

inline constexpr int kSchemaVersion = 1;

struct RecordSections {
  bool lattice = false;
  bool monomials = false;
  bool charts = false;
};

/// Flat, serializable view of a ModuliReport plus optional toric data.
struct OutputRecord {
  int schema = kSchemaVersion;
  std::string group;
  Integer order;
  std::string dispatch;
  std::string route;
  Integer mGamma;
  Integer orbitDim;
  std::optional<Integer> jGamma;
  std::optional<Integer> kGamma;
  std::optional<Integer> dGamma;
  std::optional<Integer> h1Theta;
  std::optional<Integer> embeddingDim;
  std::optional<Integer> residue;
  std::optional<std::vector<Integer>> hj;
  std::optional<std::vector<Integer>> dual;
  std::optional<ExceptionalDivisor> divisor;
  std::optional<std::vector<ScaledPoint>> lattice;
  std::optional<std::vector<LaurentMonomial>> monomials;
  std::optional<std::vector<Chart>> charts;
  std::optional<std::vector<TransitionCheck>> transitions;

  bool operator==(const OutputRecord&) const = default;
};

OutputRecord make_record(const ModuliReport& report, const RecordSections& sections);

/// Integers are JSON numbers when they fit in 64 bits, decimal strings otherwise.
nlohmann::json integer_to_json(const Integer& value);
Integer integer_from_json(const nlohmann::json& value);

nlohmann::json to_json(const OutputRecord& record);
OutputRecord record_from_json(const nlohmann::json& doc);

/// One line of JSON, keys sorted.
std::string format_record(const OutputRecord& record);
/// Throws Error{ParseError}.
OutputRecord parse_record(std::string_view line);

std::string format_record_markdown(const OutputRecord& record);

}  // namespace qsing
