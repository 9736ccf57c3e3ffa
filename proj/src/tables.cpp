#include "qsing/tables.hpp"

#include "qsing/errors.hpp"
#include "qsing/group.hpp"
#include "qsing/hj.hpp"
#include "qsing/record.hpp"
#include "qsing/toric.hpp"

#include <sstream>

namespace qsing {

std::string table1_formula_d(int row) {
  switch (row) {
    case 1: return "5";
    case 2: return "2p-1";
    default: return "j+k";
  }
}

std::string table1_formula_m(int row) {
  switch (row) {
    case 1: return "2";
    case 2: return "2p-5";
    case 3: return "2e+3k-8";
    default: return "2e+3k-7";
  }
}

std::vector<Table1Entry> build_table1(const Integer& pMax, const DivisorCatalog& catalog,
                                      const Table3& table) {
  std::vector<Table1Entry> entries;
  for (Integer p = 3; p <= pMax; ++p) {
    for (Integer q = 1; q < p - 1; ++q) {
      if (gcd(p, q) != 1) continue;
      const ModuliReport report = moduli_dimension_cyclic(p, q);
      const auto& c = *report.counts;
      Table1Entry entry;
      entry.group = format_descriptor(report.group);
      entry.jGamma = c.jGamma;
      entry.kGamma = c.kGamma;
      entry.embeddingDim = invariant_monomials(p, q).size();
      entry.dGamma = c.dGamma;
      entry.mGamma = report.mGamma;
      entry.orbitDim = report.orbitDim;
      switch (report.route) {
        case Route::Table1Row1:
          entry.row = 1;
          entry.dCheck = 5;
          entry.mCheck = 2;
          break;
        case Route::Table1Row2:
          entry.row = 2;
          entry.dCheck = 2 * p - 1;
          entry.mCheck = 2 * p - 5;
          break;
        default:
          entry.row = 3;
          entry.dCheck = c.jGamma + c.kGamma;
          entry.mCheck = 2 * entry.embeddingDim + 3 * c.kGamma - 8;
          break;
      }
      entries.push_back(std::move(entry));
    }
  }

  for (const auto& record : catalog.records()) {
    GroupDescriptor desc;
    try {
      desc = parse_descriptor(record.label);
      const auto klass = classify(validate(desc));
      if (klass.kind != DispatchKind::DihedralFamily) continue;
    } catch (const Error&) {
      continue;
    }
    const ModuliReport report = full_report(desc, record, table);
    const auto& c = *report.counts;
    Table1Entry entry;
    entry.row = 4;
    entry.group = record.label;
    entry.jGamma = c.jGamma;
    entry.kGamma = c.kGamma;
    entry.embeddingDim = *report.embeddingDim;
    entry.dGamma = c.dGamma;
    entry.dCheck = c.jGamma + c.kGamma;
    entry.mGamma = report.mGamma;
    entry.mCheck = 2 * entry.embeddingDim + 3 * c.kGamma - 7;
    entry.orbitDim = report.orbitDim;
    entries.push_back(std::move(entry));
  }
  return entries;
}

nlohmann::json to_json(const Table1Entry& e) {
  return {
      {"schema", kSchemaVersion},
      {"kind", "table1"},
      {"row", e.row},
      {"group", e.group},
      {"jGamma", integer_to_json(e.jGamma)},
      {"kGamma", integer_to_json(e.kGamma)},
      {"embeddingDim", integer_to_json(e.embeddingDim)},
      {"dGamma", integer_to_json(e.dGamma)},
      {"dFormula", table1_formula_d(e.row)},
      {"dCheck", integer_to_json(e.dCheck)},
      {"mGamma", integer_to_json(e.mGamma)},
      {"mFormula", table1_formula_m(e.row)},
      {"mCheck", integer_to_json(e.mCheck)},
      {"orbitDim", integer_to_json(e.orbitDim)},
      {"agrees", e.agrees()},
  };
}

std::string table1_markdown(const std::vector<Table1Entry>& entries) {
  std::ostringstream out;
  out << "| row | group | j | k | e | d | d formula | m | m formula | formula value | agrees |\n";
  out << "|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& e : entries) {
    out << "| " << e.row << " | " << e.group << " | " << e.jGamma << " | " << e.kGamma << " | "
        << e.embeddingDim << " | " << e.dGamma << " | " << table1_formula_d(e.row) << " | "
        << e.mGamma << " | " << table1_formula_m(e.row) << " | " << e.mCheck << " | "
        << (e.agrees() ? "yes" : "NO") << " |\n";
  }
  return out.str();
}

std::vector<Table3Entry> build_table3(const Table3& table) {
  std::vector<Table3Entry> entries;
  for (const auto& row : table.rows()) {
    Table3Entry entry{row.family, row.modulus, row.residue, row.formula(), row.smallest_instance(), 0};
    GroupDescriptor desc;
    switch (row.family) {
      case ToiFamily::Tetrahedral: desc = make_tetrahedral(entry.smallestL); break;
      case ToiFamily::Index3Tetrahedral: desc = make_index3_tetrahedral(entry.smallestL); break;
      case ToiFamily::Octahedral: desc = make_octahedral(entry.smallestL); break;
      case ToiFamily::Icosahedral: desc = make_icosahedral(entry.smallestL); break;
    }
    entry.mGamma = full_report(desc, std::nullopt, table).mGamma;
    entries.push_back(std::move(entry));
  }
  return entries;
}

nlohmann::json to_json(const Table3Entry& e) {
  return {
      {"schema", kSchemaVersion},
      {"kind", "table3"},
      {"family", std::string(toi_family_name(e.family))},
      {"modulus", integer_to_json(e.modulus)},
      {"residue", integer_to_json(e.residue)},
      {"formula", e.formula},
      {"smallestL", integer_to_json(e.smallestL)},
      {"mGamma", integer_to_json(e.mGamma)},
  };
}

std::string table3_markdown(const std::vector<Table3Entry>& entries) {
  std::ostringstream out;
  out << "| family | class of l | m | smallest l > 1 | m at smallest l |\n";
  out << "|---|---|---|---|---|\n";
  for (const auto& e : entries) {
    out << "| " << toi_family_name(e.family) << " | " << e.residue << " mod " << e.modulus
        << " | " << e.formula << " | " << e.smallestL << " | " << e.mGamma << " |\n";
  }
  return out.str();
}

}  // namespace qsing
