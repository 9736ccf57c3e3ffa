#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qsing/dataset.hpp"
#include "qsing/errors.hpp"
#include "qsing/hj.hpp"
#include "qsing/moduli.hpp"

using namespace qsing;

namespace {

const Dataset& data() {
  static const Dataset d = Dataset::load_default();
  return d;
}

template <class F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& ex) {
    return ex.code();
  }
  FAIL("no error");
  return Errc::DataError;
}

ModuliReport report(std::string_view text) {
  const auto desc = parse_descriptor(text);
  std::optional<ExceptionalDivisor> divisor;
  if (!desc.is_cyclic()) divisor = data().divisors.find(divisor_label(desc));
  return full_report(desc, divisor, data().table3);
}

}  // namespace

TEST_CASE("cyclic examples") {
  const auto r31 = moduli_dimension_cyclic(3, 1);
  CHECK(r31.route == Route::Table1Row1);
  CHECK(r31.mGamma == 2);
  CHECK(r31.counts->dGamma == 5);
  CHECK(r31.orbitDim == 3);

  const auto r51 = moduli_dimension_cyclic(5, 1);
  CHECK(r51.route == Route::Table1Row2);
  CHECK(r51.mGamma == 5);
  CHECK(r51.counts->dGamma == 9);
  CHECK(r51.orbitDim == 4);

  const auto r73 = moduli_dimension_cyclic(7, 3);
  CHECK(r73.route == Route::Table1Row3);
  CHECK(r73.mGamma == 9);
  CHECK(r73.counts->dGamma == 11);
  CHECK(r73.orbitDim == 2);
  CHECK(*r73.embeddingDim == 4);

  CHECK(error_of([] { moduli_dimension_cyclic(7, 6); }) == Errc::HyperkahlerInput);
  CHECK(error_of([] { moduli_dimension_cyclic(2, 1); }) == Errc::HyperkahlerInput);
  CHECK(error_of([] { moduli_dimension_cyclic(6, 3); }) == Errc::NotCoprime);
}

TEST_CASE("cyclic rows: m and d agree with closed forms in e, k") {
  for (std::int64_t p = 3; p <= 120; ++p) {
    for (std::int64_t q = 1; q < p - 1; ++q) {
      if (oracle::gcd64(p, q) != 1) continue;
      const auto r = moduli_dimension_cyclic(p, q);
      const auto e = embedding_dimension(p, q);
      const auto& c = *r.counts;
      const Integer expectedM = p == 3 ? Integer(2) : q == 1 ? Integer(2 * p - 5) : 2 * e + 3 * c.kGamma - 8;
      const bool generic = p > 3 && q > 1;
      if (r.mGamma != expectedM || (generic && r.mGamma != c.jGamma + c.kGamma - 2) ||
          r.orbitDim != c.dGamma - r.mGamma) {
        FAIL_CHECK("p=" << p << " q=" << q);
      }
    }
  }
}

TEST_CASE("hyperkahler") {
  CHECK(moduli_dimension_hyperkahler(1) == 1);
  CHECK(moduli_dimension_hyperkahler(3) == 6);
  CHECK(moduli_dimension_hyperkahler(4) == 9);
  for (int k = 2; k <= 50; ++k) CHECK(moduli_dimension_hyperkahler(k) == 3 * k - 3);

  const auto a1 = report("cyclic:2/1");
  CHECK(a1.route == Route::HyperkahlerA1);
  CHECK(a1.mGamma == 1);
  const auto a4 = report("cyclic:5/4");
  CHECK(a4.route == Route::HyperkahlerADE);
  CHECK(a4.mGamma == 9);
  CHECK(report("dihedral:1,2").mGamma == 9);
  CHECK(report("tetra:1").mGamma == 15);
  CHECK(report("octa:1").mGamma == 18);
  CHECK(report("icosa:1").mGamma == 21);
  for (const auto& r : {a1, a4, report("icosa:1")}) CHECK(r.orbitDim == r.counts->dGamma - r.mGamma);

  CHECK(error_of([] { full_report(parse_descriptor("tetra:1"), std::nullopt, data().table3); }) ==
        Errc::DivisorDataRequired);
  CHECK(error_of([] {
          full_report(parse_descriptor("tetra:1"), data().divisors.find("dihedral:3,2"),
                      data().table3);
        }) == Errc::ShapeMismatch);
}

TEST_CASE("table 3 anchors") {
  CHECK(report("tetra:7").mGamma == 19);
  CHECK(report("octa:5").mGamma == 19);
  CHECK(report("icosa:29").mGamma == 19);
  CHECK(report("tetra:7").route == Route::Table3Formula);
  CHECK(*report("icosa:29").residue == 29);
}

TEST_CASE("table 3 rows match the reference") {
  const auto& rows = data().table3.rows();
  const auto& reference = oracle::table3_reference();
  REQUIRE(rows.size() == reference.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const auto& ref = reference[i];
    CHECK(toi_family_name(row.family) == std::string_view(ref.family));
    CHECK(row.modulus == ref.modulus);
    CHECK(row.residue == ref.residue);
    CHECK(row.offset == ref.offset);
    CHECK(row.divisor == ref.divisor);
    CHECK(row.constant == ref.constant);
  }
}

TEST_CASE("table 3 evaluation matches a direct oracle for l <= 1000") {
  struct Family {
    const char* prefix;
    int modulus;
  };
  for (const Family f : {Family{"tetra", 6}, Family{"idx3tetra", 6}, Family{"octa", 12},
                         Family{"icosa", 30}}) {
    for (std::int64_t l = 2; l <= 1000; ++l) {
      const auto desc = parse_descriptor(std::string(f.prefix) + ":" + std::to_string(l));
      try {
        validate(desc);
      } catch (const Error&) {
        continue;
      }
      const auto r = report(std::string(f.prefix) + ":" + std::to_string(l));
      const auto residue = l % f.modulus;
      bool found = false;
      for (const auto& ref : oracle::table3_reference()) {
        if (std::string_view(ref.family) != f.prefix || ref.residue != residue) continue;
        found = true;
        REQUIRE((l - ref.offset) % ref.divisor == 0);
        if (r.mGamma != (l - ref.offset) / ref.divisor + ref.constant) {
          FAIL_CHECK(f.prefix << ":" << l);
        }
      }
      if (!found) FAIL_CHECK("no reference row for " << f.prefix << ":" << l);
    }
  }
}

TEST_CASE("table 3 errors") {
  const auto* row = data().table3.find_residue(ToiFamily::Tetrahedral, 1);
  REQUIRE(row != nullptr);
  CHECK(error_of([&] { row->evaluate(5); }) == Errc::ResidueClassInvalid);
  CHECK(row->evaluate(7) == 19);
  CHECK(row->smallest_instance() == 7);
  CHECK(row->formula() == "(1/3)(l-1)+17");

  CHECK(error_of([] {
          full_report(parse_descriptor("tetra:7"), data().divisors.find("E6"), data().table3);
        }) == Errc::TableThreeDisagreement);
  CHECK(error_of([] { full_report(parse_descriptor("dihedral:9,2"), std::nullopt, data().table3); }) ==
        Errc::DivisorDataRequired);
  CHECK(error_of([] { Table3::from_json(nlohmann::json::parse(R"([{"family":"tetra"}])")); }) ==
        Errc::DataError);
  CHECK(error_of([] {
          Table3::from_json(nlohmann::json::parse(
              R"([{"family":"tetra","modulus":12,"residue":1,"offset":1,"divisor":3,"constant":17}])"));
        }) == Errc::DataError);
}

TEST_CASE("table 3 consistency") {
  const auto* i7 = data().table3.find_residue(ToiFamily::Icosahedral, 7);
  REQUIRE(i7 != nullptr);
  REQUIRE(i7->relation.has_value());
  const auto c = table3_consistency(*i7);
  CHECK(c.isConstantInteger);
  CHECK(c.kSlope == 0);
  CHECK(c.impliedK == 6);
  for (int b = 2; b <= 12; ++b) {
    const Integer l = 30 * b - 53;
    const Integer e = b + 2;
    const Integer m = i7->evaluate(l);
    CHECK((m - 2 * e + 7) % 3 == 0);
    CHECK((m - 2 * e + 7) / 3 == 6);
  }
  const auto* t1 = data().table3.find_residue(ToiFamily::Tetrahedral, 1);
  CHECK(error_of([&] { table3_consistency(*t1); }) == Errc::NoEmbeddingRelation);
}

TEST_CASE("dihedral families use divisor data") {
  const auto r = report("idx2dihedral:4,3");
  REQUIRE(r.divisor.has_value());
  CHECK(r.route == Route::Table1Row4);
  CHECK(*r.embeddingDim == 4);
  CHECK(r.counts->kGamma == 5);
  CHECK(r.mGamma == 2 * 4 + 3 * 5 - 7);
  CHECK(r.mGamma == r.counts->jGamma + r.counts->kGamma - 1);
  CHECK(r.orbitDim == 1);
  for (const auto& record : data().divisors.records()) {
    const auto desc = parse_descriptor(record.label.starts_with("D") || record.label.starts_with("E")
                                           ? "cyclic:2/1"
                                           : record.label);
    if (desc.is_cyclic()) continue;
    const auto rr = full_report(desc, record, data().table3);
    CHECK(rr.mGamma == 2 * *rr.embeddingDim + 3 * rr.counts->kGamma - 7);
  }
}

TEST_CASE("D4 through the bundled label") {
  const auto r = report("dihedral:1,2");
  CHECK(r.mGamma == 9);
  CHECK(r.counts->kGamma == 4);
  CHECK(*r.embeddingDim == 3);
}

TEST_CASE("route names round-trip") {
  for (auto route : {Route::Table1Row1, Route::Table1Row2, Route::Table1Row3, Route::Table1Row4,
                     Route::Table3Formula, Route::HyperkahlerA1, Route::HyperkahlerADE}) {
    CHECK(parse_route(route_name(route)) == route);
  }
  CHECK_FALSE(parse_route("nope").has_value());
}
