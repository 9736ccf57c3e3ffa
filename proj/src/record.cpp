#include "qsing/record.hpp"

#include "qsing/errors.hpp"
#include "qsing/group.hpp"
#include "qsing/hj.hpp"

#include <limits>
#include <sstream>

namespace qsing {
namespace {

using nlohmann::json;

[[noreturn]] void bad_record(const std::string& what) {
  throw Error(Errc::ParseError, "output record: " + what);
}

json integers(const std::vector<Integer>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(integer_to_json(v));
  return out;
}

std::vector<Integer> integers_from(const json& value) {
  if (!value.is_array()) bad_record("expected a list");
  std::vector<Integer> out;
  for (const auto& v : value) out.push_back(integer_from_json(v));
  return out;
}

json pair(const Integer& a, const Integer& b) {
  return json::array({integer_to_json(a), integer_to_json(b)});
}

std::pair<Integer, Integer> pair_from(const json& value) {
  if (!value.is_array() || value.size() != 2) bad_record("expected a pair");
  return {integer_from_json(value[0]), integer_from_json(value[1])};
}

LaurentMonomial monomial_from(const json& value) {
  auto [x, y] = pair_from(value);
  return {x, y};
}

const json& field(const json& doc, const char* name) {
  if (!doc.contains(name)) bad_record(std::string("missing field '") + name + "'");
  return doc.at(name);
}

std::string string_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_string()) bad_record(std::string("'") + name + "' must be a string");
  return v.get<std::string>();
}

template <typename T, typename F>
std::optional<T> optional_field(const json& doc, const char* name, F&& read) {
  if (!doc.contains(name)) return std::nullopt;
  return read(doc.at(name));
}

std::string list_text(const std::vector<Integer>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(values[i]);
  }
  return out + "]";
}

}  // namespace

json integer_to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return json(static_cast<std::int64_t>(value));
  }
  return json(to_string(value));
}

Integer integer_from_json(const json& value) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer(value.get<std::uint64_t>());
    return Integer(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    if (auto parsed = parse_canonical_integer(value.get<std::string>())) return *parsed;
  }
  bad_record("expected an integer, got " + value.dump());
}

OutputRecord make_record(const ModuliReport& report, const RecordSections& sections) {
  const ValidatedGroup group = validate(report.group);
  OutputRecord record;
  record.group = format_descriptor(report.group);
  record.order = order(group);
  record.dispatch = std::string(dispatch_name(classify(group).kind));
  record.route = std::string(route_name(report.route));
  record.mGamma = report.mGamma;
  record.orbitDim = report.orbitDim;
  if (report.counts) {
    record.jGamma = report.counts->jGamma;
    record.kGamma = report.counts->kGamma;
    record.dGamma = report.counts->dGamma;
    record.h1Theta = report.counts->h1Theta;
  }
  record.embeddingDim = report.embeddingDim;
  record.residue = report.residue;
  record.divisor = report.divisor;

  if (const auto* cyc = std::get_if<Cyclic>(&report.group.kind)) {
    const HJExpansion expansion = hj_expand(cyc->p, cyc->q);
    record.hj = expansion.entries;
    record.dual = dual_expand(cyc->p, cyc->q).entries;
    const LatticeChain chain = lattice_chain(expansion);
    if (sections.lattice) record.lattice = chain.points;
    if (sections.monomials) record.monomials = invariant_monomials(cyc->p, cyc->q);
    if (sections.charts) {
      const ChartAtlas atlas = chart_atlas(chain, cyc->q);
      record.charts = atlas.charts;
      record.transitions = verify_transitions(atlas, expansion).perIndex;
    }
  }
  return record;
}

json to_json(const OutputRecord& r) {
  json doc = json::object();
  doc["schema"] = r.schema;
  doc["group"] = r.group;
  doc["order"] = integer_to_json(r.order);
  doc["dispatch"] = r.dispatch;
  doc["route"] = r.route;
  doc["mGamma"] = integer_to_json(r.mGamma);
  doc["orbitDim"] = integer_to_json(r.orbitDim);
  const auto put = [&](const char* name, const std::optional<Integer>& v) {
    if (v) doc[name] = integer_to_json(*v);
  };
  put("jGamma", r.jGamma);
  put("kGamma", r.kGamma);
  put("dGamma", r.dGamma);
  put("h1Theta", r.h1Theta);
  put("embeddingDim", r.embeddingDim);
  put("residue", r.residue);
  if (r.hj) doc["hj"] = integers(*r.hj);
  if (r.dual) doc["dual"] = integers(*r.dual);
  if (r.divisor) doc["divisor"] = to_json(*r.divisor);
  if (r.lattice) {
    json pts = json::array();
    for (const auto& pt : *r.lattice) pts.push_back(pair(pt.s, pt.t));
    doc["lattice"] = std::move(pts);
  }
  if (r.monomials) {
    json ms = json::array();
    for (const auto& m : *r.monomials) ms.push_back(pair(m.x, m.y));
    doc["monomials"] = std::move(ms);
  }
  if (r.charts) {
    json cs = json::array();
    for (const auto& c : *r.charts) {
      cs.push_back({{"eta", pair(c.eta.x, c.eta.y)}, {"xi", pair(c.xi.x, c.xi.y)}});
    }
    doc["charts"] = std::move(cs);
  }
  if (r.transitions) {
    json ts = json::array();
    for (const auto& t : *r.transitions) {
      ts.push_back({{"inverseHolds", t.inverseHolds},
                    {"recursionHolds", t.recursionHolds},
                    {"coefficient", integer_to_json(t.coefficient)}});
    }
    doc["transitions"] = std::move(ts);
  }
  return doc;
}

OutputRecord record_from_json(const json& doc) {
  if (!doc.is_object()) bad_record("expected an object");
  OutputRecord r;
  const json& schema = field(doc, "schema");
  if (!schema.is_number_integer() || schema.get<int>() != kSchemaVersion) {
    bad_record("unsupported schema " + schema.dump());
  }
  r.group = string_field(doc, "group");
  r.order = integer_from_json(field(doc, "order"));
  r.dispatch = string_field(doc, "dispatch");
  r.route = string_field(doc, "route");
  r.mGamma = integer_from_json(field(doc, "mGamma"));
  r.orbitDim = integer_from_json(field(doc, "orbitDim"));
  const auto read_int = [](const json& v) { return integer_from_json(v); };
  r.jGamma = optional_field<Integer>(doc, "jGamma", read_int);
  r.kGamma = optional_field<Integer>(doc, "kGamma", read_int);
  r.dGamma = optional_field<Integer>(doc, "dGamma", read_int);
  r.h1Theta = optional_field<Integer>(doc, "h1Theta", read_int);
  r.embeddingDim = optional_field<Integer>(doc, "embeddingDim", read_int);
  r.residue = optional_field<Integer>(doc, "residue", read_int);
  r.hj = optional_field<std::vector<Integer>>(doc, "hj", integers_from);
  r.dual = optional_field<std::vector<Integer>>(doc, "dual", integers_from);
  r.divisor = optional_field<ExceptionalDivisor>(
      doc, "divisor", [](const json& v) { return load_divisor(v); });
  r.lattice = optional_field<std::vector<ScaledPoint>>(doc, "lattice", [](const json& v) {
    if (!v.is_array()) bad_record("lattice must be a list");
    std::vector<ScaledPoint> pts;
    for (const auto& item : v) {
      auto [s, t] = pair_from(item);
      pts.push_back({s, t});
    }
    return pts;
  });
  r.monomials = optional_field<std::vector<LaurentMonomial>>(doc, "monomials", [](const json& v) {
    if (!v.is_array()) bad_record("monomials must be a list");
    std::vector<LaurentMonomial> ms;
    for (const auto& item : v) ms.push_back(monomial_from(item));
    return ms;
  });
  r.charts = optional_field<std::vector<Chart>>(doc, "charts", [](const json& v) {
    if (!v.is_array()) bad_record("charts must be a list");
    std::vector<Chart> cs;
    for (const auto& item : v) {
      cs.push_back({monomial_from(field(item, "eta")), monomial_from(field(item, "xi"))});
    }
    return cs;
  });
  r.transitions = optional_field<std::vector<TransitionCheck>>(doc, "transitions", [](const json& v) {
    if (!v.is_array()) bad_record("transitions must be a list");
    std::vector<TransitionCheck> ts;
    for (const auto& item : v) {
      const json& inv = field(item, "inverseHolds");
      const json& rec = field(item, "recursionHolds");
      if (!inv.is_boolean() || !rec.is_boolean()) bad_record("transition flags must be booleans");
      ts.push_back({inv.get<bool>(), rec.get<bool>(), integer_from_json(field(item, "coefficient"))});
    }
    return ts;
  });
  return r;
}

std::string format_record(const OutputRecord& record) { return to_json(record).dump(); }

OutputRecord parse_record(std::string_view line) {
  json doc = json::parse(line, nullptr, false);
  if (doc.is_discarded()) bad_record("not valid JSON");
  return record_from_json(doc);
}

std::string format_record_markdown(const OutputRecord& r) {
  std::ostringstream out;
  out << "## " << r.group << "\n\n";
  out << "| field | value |\n|---|---|\n";
  out << "| order | " << r.order << " |\n";
  out << "| dispatch | " << r.dispatch << " |\n";
  out << "| route | " << r.route << " |\n";
  const auto row = [&](const char* name, const std::optional<Integer>& v) {
    if (v) out << "| " << name << " | " << *v << " |\n";
  };
  row("j", r.jGamma);
  row("k", r.kGamma);
  row("d", r.dGamma);
  row("h1", r.h1Theta);
  row("embedding dimension", r.embeddingDim);
  row("l residue", r.residue);
  out << "| orbit dimension | " << r.orbitDim << " |\n";
  out << "| m | " << r.mGamma << " |\n";
  if (r.hj) out << "| HJ expansion | " << list_text(*r.hj) << " |\n";
  if (r.dual) out << "| dual expansion | " << list_text(*r.dual) << " |\n";
  if (r.divisor) out << "| divisor | `" << to_json(*r.divisor).dump() << "` |\n";
  if (r.lattice) {
    out << "\n### Lattice chain (scaled by p)\n\n";
    for (const auto& pt : *r.lattice) out << "- (" << pt.s << ", " << pt.t << ")\n";
  }
  if (r.monomials) {
    out << "\n### Invariant monomials\n\n";
    for (const auto& m : *r.monomials) out << "- x^" << m.x << " y^" << m.y << "\n";
  }
  if (r.charts) {
    out << "\n### Charts\n\n| i | eta | xi |\n|---|---|---|\n";
    for (std::size_t i = 0; i < r.charts->size(); ++i) {
      const auto& c = (*r.charts)[i];
      out << "| " << i << " | (" << c.eta.x << ", " << c.eta.y << ") | (" << c.xi.x << ", "
          << c.xi.y << ") |\n";
    }
  }
  if (r.transitions) {
    out << "\n### Transitions\n\n| i | inverse | recursion | coefficient |\n|---|---|---|---|\n";
    for (std::size_t i = 0; i < r.transitions->size(); ++i) {
      const auto& t = (*r.transitions)[i];
      out << "| " << i << " | " << (t.inverseHolds ? "yes" : "no") << " | "
          << (t.recursionHolds ? "yes" : "no") << " | " << t.coefficient << " |\n";
    }
  }
  return out.str();
}

}  // namespace qsing
