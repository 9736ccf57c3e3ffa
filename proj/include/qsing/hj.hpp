#pragma once

#include "qsing/integer.hpp"

#include <span>
#include <vector>

namespace qsing {

/// p/q = e_1 - 1/(e_2 - 1/(... - 1/e_k)), every e_i >= 2.
struct HJExpansion {
  Integer p;
  Integer q;
  std::vector<Integer> entries;

  std::size_t length() const { return entries.size(); }
  bool operator==(const HJExpansion&) const = default;
};

/// Throws Error{QOutOfRange} unless 1 <= q < p, Error{NotCoprime} unless gcd = 1.
void require_cyclic_pair(const Integer& p, const Integer& q);

HJExpansion hj_expand(const Integer& p, const Integer& q);

/// Expansion of p/(p-q).
HJExpansion dual_expand(const Integer& p, const Integer& q);

/// Exact value of [e_1, ..., e_k]. Throws std::domain_error if a partial
/// denominator vanishes (only possible when some entry is < 2).
Rational evaluate(std::span<const Integer> entries);

/// sum of (e_i - 1) over the entries.
Integer sum_minus_one(std::span<const Integer> entries);

/// e = 3 + sum (e_i - 2).
Integer embedding_dimension(const HJExpansion& expansion);
Integer embedding_dimension(const Integer& p, const Integer& q);

struct RiemenschneiderReport {
  Integer sumE;
  Integer sumEprime;
  Integer kPrime;
  Integer e;
  bool holds = false;
};

/// Checks sum(e_i - 1) = sum(e'_i - 1), k' = e - 2 and sum(e_i - 1) = e + k - 3
/// for an expansion of p/q and one of p/(p-q).
RiemenschneiderReport riemenschneider_check(const HJExpansion& expansion,
                                            const HJExpansion& dual);
RiemenschneiderReport riemenschneider_check(const Integer& p, const Integer& q);

}  // namespace qsing
