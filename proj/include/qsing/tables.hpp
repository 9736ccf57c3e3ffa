#pragma once

#include "qsing/divisor.hpp"
#include "qsing/integer.hpp"
#include "qsing/moduli.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qsing {

/// One instantiated line of the moduli dimension table. `dCheck` and
/// `mCheck` are the row's second evaluation (closed form or double count).
struct Table1Entry {
  int row = 0;
  std::string group;
  Integer jGamma;
  Integer kGamma;
  Integer embeddingDim;
  Integer dGamma;
  Integer dCheck;
  Integer mGamma;
  Integer mCheck;
  Integer orbitDim;

  bool agrees() const { return dGamma == dCheck && mGamma == mCheck; }
};

/// Rows 1-3 for every cyclic (p,q), p <= pMax, q != p-1; row 4 for every
/// catalog record labelled with a valid l > 1 dihedral-family descriptor.
/// e for cyclic rows is the number of invariant generators.
std::vector<Table1Entry> build_table1(const Integer& pMax, const DivisorCatalog& catalog,
                                      const Table3& table);

std::string table1_formula_d(int row);
std::string table1_formula_m(int row);

nlohmann::json to_json(const Table1Entry& entry);
std::string table1_markdown(const std::vector<Table1Entry>& entries);

struct Table3Entry {
  ToiFamily family;
  Integer modulus;
  Integer residue;
  std::string formula;
  Integer smallestL;
  Integer mGamma;
};

/// One entry per closed-form row, evaluated at the smallest valid l > 1
/// through full_report.
std::vector<Table3Entry> build_table3(const Table3& table);

nlohmann::json to_json(const Table3Entry& entry);
std::string table3_markdown(const std::vector<Table3Entry>& entries);

}  // namespace qsing
