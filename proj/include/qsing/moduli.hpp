#pragma once

#include "qsing/divisor.hpp"
#include "qsing/group.hpp"
#include "qsing/integer.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

namespace qsing {

/// l = lSlope * b + lIntercept and e = eSlope * b + eIntercept, b the
/// central-curve weight.
struct EmbeddingRelation {
  Integer lSlope;
  Integer lIntercept;
  Integer eSlope;
  Integer eIntercept;
};

/// m = (l - offset) / divisor + constant for l = residue (mod modulus).
struct Table3Row {
  ToiFamily family;
  Integer modulus;
  Integer residue;
  Integer offset;
  Integer divisor;
  Integer constant;
  std::optional<EmbeddingRelation> relation;

  bool matches(const Integer& l) const { return mod_floor(l - residue, modulus) == 0; }
  /// Throws Error{ResidueClassInvalid} if l is not in this row's class or
  /// (l - offset) is not divisible by `divisor`.
  Integer evaluate(const Integer& l) const;
  /// Smallest l > 1 in the residue class that also passes group validation.
  Integer smallest_instance() const;
  std::string formula() const;
};

class Table3 {
 public:
  Table3() = default;
  explicit Table3(std::vector<Table3Row> rows) : rows_(std::move(rows)) {}

  /// Schema: array of {family, modulus, residue, offset, divisor, constant,
  /// relation?: {l: [slope, intercept], e: [slope, intercept]}}.
  static Table3 from_json(const nlohmann::json& doc);
  static Table3 load(const std::filesystem::path& path);

  const Table3Row* find(ToiFamily family, const Integer& l) const;
  const Table3Row* find_residue(ToiFamily family, const Integer& residue) const;
  const std::vector<Table3Row>& rows() const { return rows_; }

 private:
  std::vector<Table3Row> rows_;
};

enum class Route {
  Table1Row1,
  Table1Row2,
  Table1Row3,
  Table1Row4,
  Table3Formula,
  HyperkahlerA1,
  HyperkahlerADE,
};

std::string_view route_name(Route route);
std::optional<Route> parse_route(std::string_view name);

struct ModuliReport {
  GroupDescriptor group;
  std::optional<ExceptionalDivisor> divisor;
  std::optional<DivisorCounts> counts;
  std::optional<Integer> embeddingDim;
  Integer orbitDim;
  Integer mGamma;
  Route route;
  /// Residue of l for the Table 3 route.
  std::optional<Integer> residue;
};

/// Table 1 rows 1-3. Throws Error{HyperkahlerInput} for q = p - 1.
ModuliReport moduli_dimension_cyclic(const Integer& p, const Integer& q);

/// 1 for k = 1, 3k - 3 for k >= 2.
Integer moduli_dimension_hyperkahler(const Integer& k);

/// l > 1 non-cyclic groups. Dihedral families need a star divisor
/// (Error{DivisorDataRequired}); T*/O*/I* use the closed forms and, when a
/// divisor is supplied, cross-check j + k - 1 (Error{TableThreeDisagreement}).
ModuliReport moduli_dimension_noncyclic(const ValidatedGroup& group,
                                        const std::optional<ExceptionalDivisor>& divisor,
                                        const Table3& table);

struct Table3Consistency {
  /// k solved from 2e + 3k - 7 = m(l) is kSlope * b + impliedK.
  Rational impliedK;
  Rational kSlope;
  bool isConstantInteger = false;
};

/// Throws Error{NoEmbeddingRelation} if the row carries no (l, e) relation.
Table3Consistency table3_consistency(const Table3Row& row);

/// Dispatches on classify(). Non-cyclic l = 1 groups need divisor data to
/// know k.
ModuliReport full_report(const GroupDescriptor& desc,
                         const std::optional<ExceptionalDivisor>& divisor,
                         const Table3& table);

}  // namespace qsing
