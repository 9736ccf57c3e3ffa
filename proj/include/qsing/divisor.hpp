#pragma once

#include "qsing/group.hpp"
#include "qsing/integer.hpp"

#include <json.hpp>

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qsing {

/// Hirzebruch-Jung string of curves with self-intersections -e_1, ..., -e_k.
struct Chain {
  std::vector<Integer> selfIntersections;
  bool operator==(const Chain&) const = default;
};

/// Central curve with self-intersection -b and three HJ strings attached.
struct Star {
  Integer central;
  std::array<std::vector<Integer>, 3> arms;
  bool operator==(const Star&) const = default;
};

struct ExceptionalDivisor {
  std::variant<Chain, Star> shape;
  std::string label;

  bool operator==(const ExceptionalDivisor&) const = default;
  bool is_star() const { return std::holds_alternative<Star>(shape); }
};

struct DivisorCounts {
  Integer jGamma;
  Integer kGamma;
  Integer dGamma;
  Integer h1Theta;
  bool operator==(const DivisorCounts&) const = default;
};

/// Throws Error{MinimalityViolation} for a curve with self-intersection > -2
/// and Error{ArmCountError} for an empty chain or arm.
void check_divisor(const ExceptionalDivisor& divisor);

ExceptionalDivisor cyclic_divisor(const Integer& p, const Integer& q);

/// e_i over every curve of the divisor (central curve first for a star).
std::vector<Integer> curve_weights(const ExceptionalDivisor& divisor);

DivisorCounts counts(const ExceptionalDivisor& divisor);

/// (b - 1) + sum over arms of sum(e_i - 1); Error{ShapeMismatch} on a chain.
Integer star_split_h1(const ExceptionalDivisor& divisor);

/// e = sum over all curves of (e_i - 2) + 3; Error{ShapeMismatch} on a chain.
Integer dihedral_embedding_dimension(const ExceptionalDivisor& divisor);

/// Reads one record: {"chain": [...]} or {"central": b, "arms": [[...],[...],[...]]},
/// optionally with "label" and "source". Throws Error{ParseError} on malformed
/// records, plus the check_divisor errors.
ExceptionalDivisor load_divisor(const nlohmann::json& record);
ExceptionalDivisor parse_divisor(std::string_view text);
nlohmann::json to_json(const ExceptionalDivisor& divisor);

/// Label under which divisor data for a group is stored: the ADE name for
/// binary polyhedral groups (l = 1), the descriptor string otherwise.
std::string divisor_label(const GroupDescriptor& desc);

class DivisorCatalog {
 public:
  DivisorCatalog() = default;
  explicit DivisorCatalog(std::vector<ExceptionalDivisor> records)
      : records_(std::move(records)) {}

  /// Accepts a single record or a JSON array of records.
  static DivisorCatalog from_json(const nlohmann::json& doc);
  static DivisorCatalog load(const std::filesystem::path& path);

  std::optional<ExceptionalDivisor> find(std::string_view label) const;
  const std::vector<ExceptionalDivisor>& records() const { return records_; }

 private:
  std::vector<ExceptionalDivisor> records_;
};

}  // namespace qsing
