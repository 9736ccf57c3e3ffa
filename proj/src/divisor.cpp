#include "qsing/divisor.hpp"

#include "qsing/errors.hpp"
#include "qsing/hj.hpp"

#include <fstream>
#include <sstream>

namespace qsing {
namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(Errc::ParseError, "divisor record: " + what);
}

Integer read_integer(const json& value) {
  if (value.is_number_integer()) return Integer(value.get<std::int64_t>());
  if (value.is_string()) {
    if (auto parsed = parse_canonical_integer(value.get<std::string>())) return *parsed;
  }
  parse_error("expected an integer, got " + value.dump());
}

std::vector<Integer> read_list(const json& value) {
  if (!value.is_array()) parse_error("expected a list, got " + value.dump());
  std::vector<Integer> out;
  for (const auto& item : value) out.push_back(read_integer(item));
  return out;
}

json write_integer(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return json(static_cast<std::int64_t>(value));
  }
  return json(to_string(value));
}

json write_list(const std::vector<Integer>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(write_integer(v));
  return out;
}

void check_curve(const Integer& self_intersection) {
  if (self_intersection > -2) {
    throw Error(Errc::MinimalityViolation,
                "curve with self-intersection " + to_string(self_intersection) +
                    " in a minimal resolution");
  }
}

}  // namespace

void check_divisor(const ExceptionalDivisor& divisor) {
  if (const auto* chain = std::get_if<Chain>(&divisor.shape)) {
    if (chain->selfIntersections.empty()) {
      throw Error(Errc::ArmCountError, "empty chain");
    }
    for (const auto& c : chain->selfIntersections) check_curve(c);
    return;
  }
  const auto& star = std::get<Star>(divisor.shape);
  check_curve(star.central);
  for (const auto& arm : star.arms) {
    if (arm.empty()) throw Error(Errc::ArmCountError, "star with an empty arm");
    for (const auto& c : arm) check_curve(c);
  }
}

ExceptionalDivisor cyclic_divisor(const Integer& p, const Integer& q) {
  const HJExpansion expansion = hj_expand(p, q);
  Chain chain;
  for (const auto& e : expansion.entries) chain.selfIntersections.push_back(-e);
  return {std::move(chain), "cyclic:" + to_string(p) + "/" + to_string(q)};
}

std::vector<Integer> curve_weights(const ExceptionalDivisor& divisor) {
  std::vector<Integer> weights;
  if (const auto* chain = std::get_if<Chain>(&divisor.shape)) {
    for (const auto& c : chain->selfIntersections) weights.push_back(-c);
    return weights;
  }
  const auto& star = std::get<Star>(divisor.shape);
  weights.push_back(-star.central);
  for (const auto& arm : star.arms) {
    for (const auto& c : arm) weights.push_back(-c);
  }
  return weights;
}

DivisorCounts counts(const ExceptionalDivisor& divisor) {
  const auto weights = curve_weights(divisor);
  DivisorCounts out;
  out.h1Theta = sum_minus_one(weights);
  out.jGamma = 2 * out.h1Theta;
  out.kGamma = weights.size();
  out.dGamma = out.jGamma + out.kGamma;
  return out;
}

Integer star_split_h1(const ExceptionalDivisor& divisor) {
  const auto* star = std::get_if<Star>(&divisor.shape);
  if (star == nullptr) throw Error(Errc::ShapeMismatch, "expected a star-shaped divisor");
  Integer total = -star->central - 1;
  for (const auto& arm : star->arms) {
    for (const auto& c : arm) total += -c - 1;
  }
  return total;
}

Integer dihedral_embedding_dimension(const ExceptionalDivisor& divisor) {
  if (!divisor.is_star()) throw Error(Errc::ShapeMismatch, "expected a star-shaped divisor");
  Integer e = 3;
  for (const auto& w : curve_weights(divisor)) e += w - 2;
  return e;
}

ExceptionalDivisor load_divisor(const json& record) {
  if (!record.is_object()) parse_error("expected an object");
  for (const auto& [key, value] : record.items()) {
    if (key != "chain" && key != "central" && key != "arms" && key != "label" &&
        key != "source") {
      parse_error("unknown key '" + key + "'");
    }
  }
  ExceptionalDivisor divisor;
  if (record.contains("label")) {
    if (!record["label"].is_string()) parse_error("label must be a string");
    divisor.label = record["label"].get<std::string>();
  }
  const bool has_chain = record.contains("chain");
  const bool has_star = record.contains("central") || record.contains("arms");
  if (has_chain == has_star) parse_error("need exactly one of 'chain' or 'central'/'arms'");

  if (has_chain) {
    divisor.shape = Chain{read_list(record["chain"])};
  } else {
    if (!record.contains("central") || !record.contains("arms")) {
      parse_error("a star needs both 'central' and 'arms'");
    }
    const json& arms = record["arms"];
    if (!arms.is_array()) parse_error("'arms' must be a list");
    if (arms.size() != 3) {
      throw Error(Errc::ArmCountError,
                  "star has " + std::to_string(arms.size()) + " arms, expected 3");
    }
    Star star;
    star.central = read_integer(record["central"]);
    for (std::size_t i = 0; i < 3; ++i) star.arms[i] = read_list(arms[i]);
    divisor.shape = std::move(star);
  }
  check_divisor(divisor);
  return divisor;
}

ExceptionalDivisor parse_divisor(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) parse_error("not valid JSON");
  return load_divisor(doc);
}

json to_json(const ExceptionalDivisor& divisor) {
  json out = json::object();
  if (const auto* chain = std::get_if<Chain>(&divisor.shape)) {
    out["chain"] = write_list(chain->selfIntersections);
  } else {
    const auto& star = std::get<Star>(divisor.shape);
    out["central"] = write_integer(star.central);
    json arms = json::array();
    for (const auto& arm : star.arms) arms.push_back(write_list(arm));
    out["arms"] = std::move(arms);
  }
  if (!divisor.label.empty()) out["label"] = divisor.label;
  return out;
}

std::string divisor_label(const GroupDescriptor& desc) {
  if (const auto* phi = std::get_if<PhiProduct>(&desc.kind); phi != nullptr && phi->l == 1) {
    switch (phi->factor) {
      case Polyhedral::Dihedral: return "D" + to_string(phi->n + 2);
      case Polyhedral::Tetrahedral: return "E6";
      case Polyhedral::Octahedral: return "E7";
      case Polyhedral::Icosahedral: return "E8";
    }
  }
  return format_descriptor(desc);
}

DivisorCatalog DivisorCatalog::from_json(const json& doc) {
  std::vector<ExceptionalDivisor> records;
  if (doc.is_array()) {
    for (const auto& item : doc) records.push_back(load_divisor(item));
  } else {
    records.push_back(load_divisor(doc));
  }
  return DivisorCatalog(std::move(records));
}

DivisorCatalog DivisorCatalog::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::DataError, "cannot open divisor file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  json doc = json::parse(buffer.str(), nullptr, false);
  if (doc.is_discarded()) parse_error(path.string() + " is not valid JSON");
  return from_json(doc);
}

std::optional<ExceptionalDivisor> DivisorCatalog::find(std::string_view label) const {
  for (const auto& record : records_) {
    if (record.label == label) return record;
  }
  return std::nullopt;
}

}  // namespace qsing
