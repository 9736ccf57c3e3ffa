#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's construction paths.

#include "qsing/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace qsing::oracle {

/// Continued fraction by repeated x -> 1/(ceil(x) - x) on exact rationals.
inline std::vector<Integer> rational_expansion(const Integer& p, const Integer& q) {
  std::vector<Integer> out;
  Rational x(p, q);
  for (;;) {
    const Integer num = boost::multiprecision::numerator(x);
    const Integer den = boost::multiprecision::denominator(x);
    Integer e = num / den;
    if (e * den != num) ++e;
    out.push_back(e);
    const Rational rest = Rational(e) - x;
    if (rest == 0) return out;
    x = 1 / rest;
  }
}

/// Exact value of [e_1, ..., e_k], evaluated front to back with convergents.
inline Rational convergent_value(const std::vector<Integer>& entries) {
  // h_n = e_n h_{n-1} - h_{n-2}, starting h_{-1} = 1, h_{-2} = 0.
  Integer h_prev2 = 0, h_prev = 1, k_prev2 = -1, k_prev = 0;
  for (const auto& e : entries) {
    Integer h = e * h_prev - h_prev2;
    Integer k = e * k_prev - k_prev2;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return Rational(h_prev, k_prev);
}

/// Minimal generators of the semigroup {(a,b) >= 0 : a + q b = 0 mod p},
/// by exhaustive search in [0,p]^2. Sorted by decreasing a.
inline std::vector<std::pair<std::int64_t, std::int64_t>> semigroup_generators(std::int64_t p,
                                                                             std::int64_t q) {
  std::set<std::pair<std::int64_t, std::int64_t>> members;
  for (std::int64_t a = 0; a <= p; ++a) {
    for (std::int64_t b = 0; b <= p; ++b) {
      if ((a + b) == 0) continue;
      if ((a + q * b) % p == 0) members.insert({a, b});
    }
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> gens;
  for (const auto& m : members) {
    bool decomposable = false;
    for (const auto& n : members) {
      if (n == m) continue;
      const std::pair<std::int64_t, std::int64_t> rest{m.first - n.first, m.second - n.second};
      if (rest.first < 0 || rest.second < 0) continue;
      if (members.count(rest) != 0) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) gens.push_back(m);
  }
  std::sort(gens.begin(), gens.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  return gens;
}

/// Lattice points on the compact boundary of the convex hull of the nonzero points of the lattice
/// Z^2 + Z (1,q)/p in the closed first quadrant, scaled by p, running from
/// (0,p) to (p,0); points interior to an edge are kept. Exhaustive over the box [0,p]^2.
inline std::vector<std::pair<std::int64_t, std::int64_t>> hull_boundary(std::int64_t p,
                                                                      std::int64_t q) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (std::int64_t s = 0; s <= p; ++s) {
    for (std::int64_t t = 0; t <= p; ++t) {
      if (s == 0 && t == 0) continue;
      if ((t - q * s) % p == 0) pts.push_back({s, t});
    }
  }
  std::sort(pts.begin(), pts.end());
  // Lower hull (monotone chain), which bounds the quadrant region from the origin side.
  std::vector<std::pair<std::int64_t, std::int64_t>> hull;
  auto cross = [](auto o, auto a, auto b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  for (const auto& pt : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) < 0) hull.pop_back();
    hull.push_back(pt);
  }
  // Keep the part from (0, min t at s=0) to the first point on t = 0.
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& v : hull) {
    out.push_back(v);
    if (v.second == 0) break;
  }
  return out;
}

/// Closed forms typed in directly from the published table.
struct Table3Reference {
  const char* family;
  int modulus;
  int residue;
  int offset;
  int divisor;
  int constant;
};

inline const std::vector<Table3Reference>& table3_reference() {
  static const std::vector<Table3Reference> rows = {
      {"tetra", 6, 1, 1, 3, 17},     {"tetra", 6, 5, 5, 3, 15},     {"idx3tetra", 6, 3, 3, 3, 16},
      {"octa", 12, 1, 1, 6, 20},     {"octa", 12, 5, 5, 6, 19},     {"octa", 12, 7, 7, 6, 18},
      {"octa", 12, 11, 11, 6, 17},   {"icosa", 30, 1, 1, 15, 23},   {"icosa", 30, 7, 7, 15, 19},
      {"icosa", 30, 11, 11, 15, 22}, {"icosa", 30, 13, 13, 15, 19}, {"icosa", 30, 17, 17, 15, 18},
      {"icosa", 30, 19, 19, 15, 20}, {"icosa", 30, 23, 23, 15, 18}, {"icosa", 30, 29, 29, 15, 19},
  };
  return rows;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace qsing::oracle
