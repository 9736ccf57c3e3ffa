#include "qsing/hj.hpp"

#include "qsing/errors.hpp"

#include <stdexcept>

namespace qsing {

void require_cyclic_pair(const Integer& p, const Integer& q) {
  if (q < 1 || q >= p) {
    throw Error(Errc::QOutOfRange,
                "need 1 <= q < p, got p=" + to_string(p) + " q=" + to_string(q));
  }
  if (gcd(p, q) != 1) {
    throw Error(Errc::NotCoprime, "gcd(" + to_string(p) + ", " + to_string(q) + ") != 1");
  }
}

HJExpansion hj_expand(const Integer& p, const Integer& q) {
  require_cyclic_pair(p, q);
  HJExpansion out{p, q, {}};
  Integer num = p;
  Integer den = q;
  while (den != 0) {
    Integer e = ceil_div(num, den);
    Integer next = e * den - num;
    out.entries.push_back(std::move(e));
    num = std::move(den);
    den = std::move(next);
  }
  return out;
}

HJExpansion dual_expand(const Integer& p, const Integer& q) {
  require_cyclic_pair(p, q);
  return hj_expand(p, p - q);
}

Rational evaluate(std::span<const Integer> entries) {
  if (entries.empty()) throw std::domain_error("empty continued fraction");
  Rational value(entries.back());
  for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) {
    if (value == 0) throw std::domain_error("vanishing partial denominator");
    value = Rational(*it) - 1 / value;
  }
  return value;
}

Integer sum_minus_one(std::span<const Integer> entries) {
  Integer total = 0;
  for (const auto& e : entries) total += e - 1;
  return total;
}

Integer embedding_dimension(const HJExpansion& expansion) {
  Integer e = 3;
  for (const auto& entry : expansion.entries) e += entry - 2;
  return e;
}

Integer embedding_dimension(const Integer& p, const Integer& q) {
  return embedding_dimension(hj_expand(p, q));
}

RiemenschneiderReport riemenschneider_check(const HJExpansion& expansion,
                                            const HJExpansion& dual) {
  RiemenschneiderReport r;
  r.sumE = sum_minus_one(expansion.entries);
  r.sumEprime = sum_minus_one(dual.entries);
  r.kPrime = dual.length();
  r.e = embedding_dimension(expansion);
  const Integer k = expansion.length();
  r.holds = r.sumE == r.sumEprime && r.kPrime == r.e - 2 && r.sumE == r.e + k - 3;
  return r;
}

RiemenschneiderReport riemenschneider_check(const Integer& p, const Integer& q) {
  return riemenschneider_check(hj_expand(p, q), dual_expand(p, q));
}

}  // namespace qsing
