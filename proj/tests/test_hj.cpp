#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qsing/errors.hpp"
#include "qsing/hj.hpp"

using namespace qsing;

namespace {

std::vector<Integer> ints(std::initializer_list<int> values) {
  return {values.begin(), values.end()};
}

template <typename F>
void for_coprime_pairs(std::int64_t p_max, F&& f) {
  for (std::int64_t p = 2; p <= p_max; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (oracle::gcd64(p, q) == 1) f(Integer(p), Integer(q));
    }
  }
}

}  // namespace

TEST_CASE("hj_expand examples") {
  CHECK(hj_expand(7, 3).entries == ints({3, 2, 2}));
  CHECK(oracle::convergent_value(ints({3, 2, 2})) == Rational(7, 3));
  CHECK(hj_expand(5, 1).entries == ints({5}));
  CHECK(hj_expand(5, 4).entries == ints({2, 2, 2, 2}));
  CHECK(oracle::convergent_value(ints({2, 2, 2, 2})) == Rational(5, 4));
  CHECK(hj_expand(12, 5).entries == ints({3, 2, 3}));
}

TEST_CASE("dual_expand examples") {
  CHECK(dual_expand(7, 3).entries == ints({2, 4}));
  CHECK(oracle::convergent_value(ints({2, 4})) == Rational(7, 4));
  CHECK(dual_expand(3, 2).entries == ints({3}));
  CHECK(dual_expand(5, 1).entries == ints({2, 2, 2, 2}));
}

TEST_CASE("invalid pairs are rejected") {
  CHECK_THROWS_AS(hj_expand(6, 3), Error);
  try {
    hj_expand(6, 3);
  } catch (const Error& ex) {
    CHECK(ex.code() == Errc::NotCoprime);
  }
  for (auto [p, q] : {std::pair{7, 0}, std::pair{7, 7}, std::pair{7, 8}}) {
    try {
      hj_expand(p, q);
      FAIL("accepted");
    } catch (const Error& ex) {
      CHECK(ex.code() == Errc::QOutOfRange);
    }
  }
  CHECK_THROWS_AS(dual_expand(9, 6), Error);
}

TEST_CASE("embedding dimension examples") {
  CHECK(embedding_dimension(7, 3) == 4);
  CHECK(embedding_dimension(7, 3) == dual_expand(7, 3).length() + 2);
  CHECK(embedding_dimension(3, 2) == 3);
  // 1/p(1,1): invariants are the p+1 monomials of degree p.
  for (int p = 2; p <= 40; ++p) {
    int degree_p_monomials = 0;
    for (int a = 0; a <= p; ++a) ++degree_p_monomials;
    CHECK(embedding_dimension(p, 1) == degree_p_monomials);
  }
}

TEST_CASE("embedding dimension equals the number of minimal invariant generators") {
  for (std::int64_t p = 2; p <= 18; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (oracle::gcd64(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      CHECK(embedding_dimension(p, q) == oracle::semigroup_generators(p, q).size());
    }
  }
}

TEST_CASE("riemenschneider_check examples") {
  const auto r73 = riemenschneider_check(7, 3);
  CHECK(r73.sumE == 4);
  CHECK(r73.sumEprime == 4);
  CHECK(r73.kPrime == 2);
  CHECK(r73.e == 4);
  CHECK(r73.holds);
  const auto r21 = riemenschneider_check(2, 1);
  CHECK(r21.sumE == 1);
  CHECK(r21.sumEprime == 1);
  CHECK(r21.kPrime == 1);
  CHECK(r21.e == 3);
  CHECK(r21.holds);
  const auto r125 = riemenschneider_check(12, 5);
  CHECK(r125.sumE == 5);
  CHECK(r125.sumEprime == 5);
  CHECK(r125.kPrime == 3);
  CHECK(r125.e == 5);
  CHECK(r125.holds);
}

TEST_CASE("a perturbed expansion breaks the identities") {
  HJExpansion bad = hj_expand(7, 3);
  bad.entries.front() += 1;
  CHECK_FALSE(riemenschneider_check(bad, dual_expand(7, 3)).holds);
  CHECK(evaluate(bad.entries) != Rational(7, 3));
}

TEST_CASE("expansion soundness, duality and riemenschneider sweep to p = 500") {
  std::size_t pairs = 0;
  for_coprime_pairs(500, [&](const Integer& p, const Integer& q) {
    const auto expansion = hj_expand(p, q);
    bool ok = evaluate(expansion.entries) == Rational(p, q);
    for (const auto& e : expansion.entries) ok = ok && e >= 2;
    ok = ok && dual_expand(p, p - q).entries == expansion.entries;
    ok = ok && riemenschneider_check(p, q).holds;
    if (!ok) FAIL_CHECK("failed at p=" << p << " q=" << q);
    ++pairs;
  });
  CHECK(pairs > 75000);
}

TEST_CASE("construction agrees with an exact-rational oracle") {
  for_coprime_pairs(120, [](const Integer& p, const Integer& q) {
    const auto expansion = hj_expand(p, q);
    if (expansion.entries != oracle::rational_expansion(p, q)) {
      FAIL_CHECK("p=" << p << " q=" << q);
    }
    if (oracle::convergent_value(expansion.entries) != Rational(p, q)) {
      FAIL_CHECK("convergents p=" << p << " q=" << q);
    }
  });
}

TEST_CASE("table 1 row-3 identity follows from the riemenschneider relations") {
  for_coprime_pairs(200, [](const Integer& p, const Integer& q) {
    if (q == 1 || q == p - 1) return;
    const auto expansion = hj_expand(p, q);
    const Integer k = expansion.length();
    const Integer e = embedding_dimension(expansion);
    if (2 * sum_minus_one(expansion.entries) + k - 2 != 2 * e + 3 * k - 8) {
      FAIL_CHECK("p=" << p << " q=" << q);
    }
  });
}

TEST_CASE("arbitrary precision") {
  // Build p/q from chosen large entries; the expansion must recover them.
  std::vector<Integer> entries;
  Integer big = Integer(1) << 90;
  for (int i = 0; i < 40; ++i) entries.push_back(big + 3 * i + 2);
  const Rational value = oracle::convergent_value(entries);
  const Integer p = boost::multiprecision::numerator(value);
  const Integer q = boost::multiprecision::denominator(value);
  CHECK(p > Integer(1) << 3000);
  const auto expansion = hj_expand(p, q);
  CHECK(expansion.entries == entries);
  CHECK(evaluate(expansion.entries) == Rational(p, q));
  // The dual has about 2^96 entries here, so only the closed form is checked.
  CHECK(embedding_dimension(expansion) == 3 + 40 * big + 3 * (39 * 40 / 2));
}

TEST_CASE("evaluate rejects degenerate input") {
  CHECK_THROWS_AS(evaluate(std::vector<Integer>{}), std::domain_error);
  CHECK_THROWS_AS(evaluate(ints({2, 1, 1})), std::domain_error);
}
