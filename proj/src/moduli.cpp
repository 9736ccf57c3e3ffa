#include "qsing/moduli.hpp"

#include "qsing/errors.hpp"
#include "qsing/hj.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qsing {
namespace {

using nlohmann::json;

[[noreturn]] void table_error(const std::string& what) {
  throw Error(Errc::DataError, "table3 data: " + what);
}

Integer json_integer(const json& value, const char* field) {
  if (!value.is_number_integer()) table_error(std::string("'") + field + "' must be an integer");
  return Integer(value.get<std::int64_t>());
}

std::pair<Integer, Integer> json_affine(const json& value, const char* field) {
  if (!value.is_array() || value.size() != 2) {
    table_error(std::string("'") + field + "' must be [slope, intercept]");
  }
  return {json_integer(value[0], field), json_integer(value[1], field)};
}

ToiFamily toi_family_of(const ValidatedGroup& group) {
  const auto klass = classify(group);
  if (!klass.family) throw std::logic_error("not a T*/O*/I* family");
  return *klass.family;
}

void internal_check(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("moduli cross-check failed: " + what);
}

ModuliReport hyperkahler_report(const GroupDescriptor& desc, const ExceptionalDivisor& divisor) {
  for (const auto& w : curve_weights(divisor)) {
    if (w != 2) {
      throw Error(Errc::ShapeMismatch, "hyperkahler configuration needs only -2 curves");
    }
  }
  ModuliReport report{desc, divisor, counts(divisor), {}, 0, 0, Route::HyperkahlerADE, {}};
  const Integer& k = report.counts->kGamma;
  report.route = k == 1 ? Route::HyperkahlerA1 : Route::HyperkahlerADE;
  report.mGamma = moduli_dimension_hyperkahler(k);
  report.orbitDim = report.counts->dGamma - report.mGamma;
  // All curves are -2, so both embedding dimension formulas give 3.
  report.embeddingDim = Integer(3);
  return report;
}

}  // namespace

Integer Table3Row::evaluate(const Integer& l) const {
  if (!matches(l)) {
    throw Error(Errc::ResidueClassInvalid, "l = " + to_string(l) + " is not " +
                                               to_string(residue) + " mod " + to_string(modulus));
  }
  const Integer shifted = l - offset;
  if (shifted % divisor != 0) {
    throw Error(Errc::ResidueClassInvalid,
                "(l - " + to_string(offset) + ") not divisible by " + to_string(divisor));
  }
  return shifted / divisor + constant;
}

Integer Table3Row::smallest_instance() const {
  for (Integer l = 2;; ++l) {
    if (!matches(l)) continue;
    GroupDescriptor desc;
    switch (family) {
      case ToiFamily::Tetrahedral: desc = make_tetrahedral(l); break;
      case ToiFamily::Index3Tetrahedral: desc = make_index3_tetrahedral(l); break;
      case ToiFamily::Octahedral: desc = make_octahedral(l); break;
      case ToiFamily::Icosahedral: desc = make_icosahedral(l); break;
    }
    try {
      validate(desc);
      return l;
    } catch (const Error&) {
      if (l > modulus * 4) throw Error(Errc::ResidueClassInvalid, "residue class has no valid l");
    }
  }
}

std::string Table3Row::formula() const {
  return "(1/" + to_string(divisor) + ")(l-" + to_string(offset) + ")+" + to_string(constant);
}

Table3 Table3::from_json(const json& doc) {
  if (!doc.is_array()) table_error("expected an array of rows");
  std::vector<Table3Row> rows;
  for (const auto& item : doc) {
    if (!item.is_object()) table_error("row must be an object");
    Table3Row row{};
    if (!item.contains("family") || !item["family"].is_string()) table_error("missing family");
    const auto family = parse_toi_family(item["family"].get<std::string>());
    if (!family) table_error("unknown family " + item["family"].dump());
    row.family = *family;
    for (const char* field : {"modulus", "residue", "offset", "divisor", "constant"}) {
      if (!item.contains(field)) table_error(std::string("missing ") + field);
    }
    row.modulus = json_integer(item["modulus"], "modulus");
    row.residue = json_integer(item["residue"], "residue");
    row.offset = json_integer(item["offset"], "offset");
    row.divisor = json_integer(item["divisor"], "divisor");
    row.constant = json_integer(item["constant"], "constant");
    if (row.modulus != toi_modulus(row.family)) table_error("modulus does not match family");
    if (row.divisor <= 0) table_error("divisor must be positive");
    if (item.contains("relation")) {
      const json& rel = item["relation"];
      if (!rel.is_object() || !rel.contains("l") || !rel.contains("e")) {
        table_error("relation needs 'l' and 'e'");
      }
      auto [ls, li] = json_affine(rel["l"], "l");
      auto [es, ei] = json_affine(rel["e"], "e");
      row.relation = EmbeddingRelation{ls, li, es, ei};
    }
    rows.push_back(std::move(row));
  }
  return Table3(std::move(rows));
}

Table3 Table3::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::DataError, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  json doc = json::parse(buffer.str(), nullptr, false);
  if (doc.is_discarded()) table_error(path.string() + " is not valid JSON");
  return from_json(doc);
}

const Table3Row* Table3::find(ToiFamily family, const Integer& l) const {
  for (const auto& row : rows_) {
    if (row.family == family && row.matches(l)) return &row;
  }
  return nullptr;
}

const Table3Row* Table3::find_residue(ToiFamily family, const Integer& residue) const {
  for (const auto& row : rows_) {
    if (row.family == family && row.residue == residue) return &row;
  }
  return nullptr;
}

std::string_view route_name(Route route) {
  switch (route) {
    case Route::Table1Row1: return "Table1Row1";
    case Route::Table1Row2: return "Table1Row2";
    case Route::Table1Row3: return "Table1Row3";
    case Route::Table1Row4: return "Table1Row4";
    case Route::Table3Formula: return "Table3Formula";
    case Route::HyperkahlerA1: return "HyperkahlerA1";
    case Route::HyperkahlerADE: return "HyperkahlerADE";
  }
  return "";
}

std::optional<Route> parse_route(std::string_view name) {
  for (auto r : {Route::Table1Row1, Route::Table1Row2, Route::Table1Row3, Route::Table1Row4,
                 Route::Table3Formula, Route::HyperkahlerA1, Route::HyperkahlerADE}) {
    if (route_name(r) == name) return r;
  }
  return std::nullopt;
}

ModuliReport moduli_dimension_cyclic(const Integer& p, const Integer& q) {
  require_cyclic_pair(p, q);
  if (q == p - 1) {
    throw Error(Errc::HyperkahlerInput,
                "1/" + to_string(p) + "(1," + to_string(q) + ") is in SU(2)");
  }
  const HJExpansion expansion = hj_expand(p, q);
  ModuliReport report{make_cyclic(p, q), cyclic_divisor(p, q), {}, {}, 0, 0,
                      Route::Table1Row3, {}};
  report.counts = counts(*report.divisor);
  report.embeddingDim = embedding_dimension(expansion);
  const auto& c = *report.counts;
  const Integer& e = *report.embeddingDim;

  if (q == 1 && p == 3) {
    report.route = Route::Table1Row1;
    report.orbitDim = 3;
    report.mGamma = c.dGamma - report.orbitDim;
    internal_check(c.dGamma == 5 && report.mGamma == 2, "1/3(1,1)");
  } else if (q == 1) {
    report.route = Route::Table1Row2;
    report.orbitDim = 4;
    report.mGamma = c.dGamma - report.orbitDim;
    internal_check(c.dGamma == 2 * p - 1 && report.mGamma == 2 * p - 5, "1/p(1,1)");
  } else {
    report.route = Route::Table1Row3;
    report.orbitDim = 2;
    report.mGamma = c.jGamma + c.kGamma - 2;
    internal_check(report.mGamma == 2 * e + 3 * c.kGamma - 8, "j+k-2 vs 2e+3k-8");
  }
  return report;
}

Integer moduli_dimension_hyperkahler(const Integer& k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  return k == 1 ? Integer(1) : Integer(3 * k - 3);
}

ModuliReport moduli_dimension_noncyclic(const ValidatedGroup& group,
                                        const std::optional<ExceptionalDivisor>& divisor,
                                        const Table3& table) {
  const auto klass = classify(group);
  const std::string name = format_descriptor(group.descriptor());
  if (klass.kind == DispatchKind::HyperkahlerADE) {
    throw Error(Errc::HyperkahlerInput, name + " lies in SU(2)");
  }
  if (klass.kind != DispatchKind::DihedralFamily && klass.kind != DispatchKind::TOIFamily) {
    throw std::invalid_argument(name + " is cyclic");
  }
  if (divisor && !divisor->is_star()) {
    throw Error(Errc::ShapeMismatch, "non-cyclic groups need a star-shaped divisor");
  }

  ModuliReport report{group.descriptor(), divisor, {}, {}, 1, 0, Route::Table1Row4, {}};
  if (divisor) report.counts = counts(*divisor);

  if (klass.kind == DispatchKind::DihedralFamily) {
    if (!divisor) {
      throw Error(Errc::DivisorDataRequired,
                  "no divisor data for " + name + " (label '" +
                      divisor_label(group.descriptor()) + "')");
    }
    const auto& c = *report.counts;
    report.embeddingDim = dihedral_embedding_dimension(*divisor);
    report.mGamma = c.jGamma + c.kGamma - 1;
    internal_check(report.mGamma == 2 * *report.embeddingDim + 3 * c.kGamma - 7,
                   "j+k-1 vs 2e+3k-7");
    return report;
  }

  const Integer l = *l_parameter(group.descriptor());
  const Table3Row* row = table.find(toi_family_of(group), l);
  if (row == nullptr) {
    throw Error(Errc::ResidueClassInvalid, "no Table 3 row for " + name);
  }
  report.route = Route::Table3Formula;
  report.residue = row->residue;
  report.mGamma = row->evaluate(l);
  if (report.counts) {
    const Integer from_divisor = report.counts->jGamma + report.counts->kGamma - 1;
    if (from_divisor != report.mGamma) {
      throw Error(Errc::TableThreeDisagreement,
                  "divisor data gives j+k-1 = " + to_string(from_divisor) +
                      " but the closed form gives " + to_string(report.mGamma));
    }
  }
  return report;
}

Table3Consistency table3_consistency(const Table3Row& row) {
  if (!row.relation) {
    throw Error(Errc::NoEmbeddingRelation,
                std::string("no (l, e) relation for ") + std::string(toi_family_name(row.family)) +
                    " residue " + to_string(row.residue));
  }
  const auto& rel = *row.relation;
  // 3k = m(l(b)) - 2 e(b) + 7, affine in b.
  const Rational slope3 = Rational(rel.lSlope, row.divisor) - 2 * Rational(rel.eSlope);
  const Rational const3 = Rational(rel.lIntercept - row.offset, row.divisor) +
                          Rational(row.constant) - 2 * Rational(rel.eIntercept) + 7;
  Table3Consistency out;
  out.kSlope = slope3 / 3;
  out.impliedK = const3 / 3;
  out.isConstantInteger = out.kSlope == 0 &&
                          boost::multiprecision::denominator(out.impliedK) == 1 &&
                          out.impliedK > 0;
  return out;
}

ModuliReport full_report(const GroupDescriptor& desc,
                         const std::optional<ExceptionalDivisor>& divisor, const Table3& table) {
  const ValidatedGroup group = validate(desc);
  const DispatchClass klass = classify(group);
  switch (klass.kind) {
    case DispatchKind::HyperkahlerA1:
    case DispatchKind::HyperkahlerADE: {
      if (const auto* cyc = std::get_if<Cyclic>(&desc.kind)) {
        return hyperkahler_report(desc, cyclic_divisor(cyc->p, cyc->q));
      }
      if (!divisor) {
        throw Error(Errc::DivisorDataRequired,
                    "no divisor data for " + format_descriptor(desc) + " (label '" +
                        divisor_label(desc) + "')");
      }
      return hyperkahler_report(desc, *divisor);
    }
    case DispatchKind::CyclicQ1P3:
    case DispatchKind::CyclicQ1:
    case DispatchKind::CyclicGeneric: {
      const auto& cyc = std::get<Cyclic>(desc.kind);
      return moduli_dimension_cyclic(cyc.p, cyc.q);
    }
    case DispatchKind::DihedralFamily:
    case DispatchKind::TOIFamily:
      return moduli_dimension_noncyclic(group, divisor, table);
  }
  throw std::logic_error("unreachable dispatch");
}

}  // namespace qsing
