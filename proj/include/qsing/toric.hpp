#pragma once

#include "qsing/hj.hpp"
#include "qsing/integer.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace qsing {

/// A lattice point c_i = (s_i, t_i), stored multiplied by p so that both
/// coordinates are integers.
struct ScaledPoint {
  Integer s;
  Integer t;
  bool operator==(const ScaledPoint&) const = default;
};

/// Points p*c_0, ..., p*c_{k+1}, running from (0, p) to (p, 0).
struct LatticeChain {
  Integer p;
  std::vector<ScaledPoint> points;
};

/// x^x y^y as an exponent pair; negative exponents allowed.
struct LaurentMonomial {
  Integer x;
  Integer y;

  bool operator==(const LaurentMonomial&) const = default;
  LaurentMonomial operator-() const { return {-x, -y}; }
  friend LaurentMonomial operator+(const LaurentMonomial& a, const LaurentMonomial& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend LaurentMonomial operator-(const LaurentMonomial& a, const LaurentMonomial& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend LaurentMonomial operator*(const Integer& m, const LaurentMonomial& a) {
    return {m * a.x, m * a.y};
  }
};

/// Weight of the monomial under 1/p(1,q), reduced to [0, p).
Integer gamma_weight(const LaurentMonomial& monomial, const Integer& p, const Integer& q);

/// <c, (a, b)> = s a + t b for the unscaled point c = scaled / p.
Rational pairing(const ScaledPoint& scaled, const Integer& p, const LaurentMonomial& monomial);

/// Builds P_0 = (0,p), P_1 = (1,q), P_{i+1} = e_i P_i - P_{i-1} and checks the
/// endpoint, monotonicity and determinant invariants. Throws
/// Error{ChainInvariantViolation} if any of them fails.
LatticeChain lattice_chain(const HJExpansion& expansion);
LatticeChain lattice_chain(const Integer& p, const Integer& q);

/// t_i s_{i+1} - t_{i+1} s_i in scaled coordinates (equals p on a valid chain).
Integer scaled_determinant(const ScaledPoint& a, const ScaledPoint& b);

/// Exponents of the invariants u_0 = x^p, u_1 = x^{p-q} y, ..., u_{k'+1} = y^p,
/// with u_{i+1} = a_i u_i - u_{i-1} over the dual entries a_i.
std::vector<LaurentMonomial> invariant_monomials(const Integer& p, const Integer& q,
                                                 const HJExpansion& dual);
std::vector<LaurentMonomial> invariant_monomials(const Integer& p, const Integer& q);

struct Chart {
  LaurentMonomial eta;
  LaurentMonomial xi;
  bool operator==(const Chart&) const = default;
};

/// Charts (eta_i, xi_i), i = 0..k, with xi_i = (p t_i, -p s_i) and
/// eta_i = (-p t_{i+1}, p s_{i+1}).
struct ChartAtlas {
  Integer p;
  Integer q;
  std::vector<Chart> charts;
};

ChartAtlas chart_atlas(const LatticeChain& chain, const Integer& q);
ChartAtlas chart_atlas(const Integer& p, const Integer& q);

struct TransitionCheck {
  bool inverseHolds = false;
  bool recursionHolds = false;
  Integer coefficient;
  bool operator==(const TransitionCheck&) const = default;
};

struct TransitionReport {
  std::vector<TransitionCheck> perIndex;

  bool all_hold() const;
};

/// For i = 0..k-1: eta_i == -xi_{i+1}, and the unique m with
/// eta_{i+1} = m eta_i + xi_i equals e_{i+1}. Throws Error{NoIntegerSolution}
/// when no integer m solves the exponent equation.
TransitionReport verify_transitions(const ChartAtlas& atlas, const HJExpansion& expansion);
TransitionReport verify_transitions(const Integer& p, const Integer& q);

using RationalMatrix2 = std::array<std::array<Rational, 2>, 2>;

RationalMatrix2 multiply(const RationalMatrix2& a, const RationalMatrix2& b);
RationalMatrix2 identity2();

/// Change of frame on chart i between the logarithmic frames
/// {x d/dx, y d/dy} and {eta_i d/deta_i, xi_i d/dxi_i}.
///
/// forward row 0: eta_i d/deta_i = s_i x d/dx + t_i y d/dy
/// forward row 1: xi_i d/dxi_i   = s_{i+1} x d/dx + t_{i+1} y d/dy
/// inverse row 0: x d/dx = p(-t_{i+1} eta_i d/deta_i + t_i xi_i d/dxi_i)
/// inverse row 1: y d/dy = p(s_{i+1} eta_i d/deta_i - s_i xi_i d/dxi_i)
///
/// Dividing each forward row by eta_i (resp. xi_i) gives d/deta_i and d/dxi_i.
struct FrameChange {
  RationalMatrix2 forward;
  RationalMatrix2 inverse;
};

/// Throws Error{IndexOutOfRange} unless 0 <= index <= k.
FrameChange derivation_change_of_frame(const LatticeChain& chain, std::size_t index);
FrameChange derivation_change_of_frame(const Integer& p, const Integer& q, std::size_t index);

}  // namespace qsing
