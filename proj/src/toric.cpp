#include "qsing/toric.hpp"

#include "qsing/errors.hpp"

namespace qsing {
namespace {

[[noreturn]] void chain_violation(const LatticeChain& chain, const std::string& what) {
  throw Error(Errc::ChainInvariantViolation,
              "lattice chain for p=" + to_string(chain.p) + ": " + what);
}

void check_chain(const LatticeChain& chain, const Integer& q) {
  const auto& pts = chain.points;
  const Integer& p = chain.p;
  if (pts.size() < 3) chain_violation(chain, "fewer than three points");
  if (pts.front() != ScaledPoint{0, p}) chain_violation(chain, "first point is not (0,p)");
  if (pts[1] != ScaledPoint{1, q}) chain_violation(chain, "second point is not (1,q)");
  if (pts.back() != ScaledPoint{p, 0}) {
    chain_violation(chain, "last point is (" + to_string(pts.back().s) + "," +
                               to_string(pts.back().t) + "), not (p,0)");
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto& a = pts[i];
    const auto& b = pts[i + 1];
    if (a.s < 0 || a.t < 0) chain_violation(chain, "negative coordinate");
    if (!(b.s > a.s) || !(b.t < a.t)) chain_violation(chain, "not strictly monotone");
    if (scaled_determinant(a, b) != p) {
      chain_violation(chain, "determinant at " + std::to_string(i) + " is " +
                                 to_string(scaled_determinant(a, b)));
    }
  }
}

}  // namespace

Integer gamma_weight(const LaurentMonomial& monomial, const Integer& p, const Integer& q) {
  return mod_floor(monomial.x + q * monomial.y, p);
}

Rational pairing(const ScaledPoint& scaled, const Integer& p, const LaurentMonomial& monomial) {
  return Rational(scaled.s * monomial.x + scaled.t * monomial.y, p);
}

Integer scaled_determinant(const ScaledPoint& a, const ScaledPoint& b) {
  return a.t * b.s - b.t * a.s;
}

LatticeChain lattice_chain(const HJExpansion& expansion) {
  LatticeChain chain{expansion.p, {}};
  chain.points.reserve(expansion.length() + 2);
  chain.points.push_back({0, expansion.p});
  chain.points.push_back({1, expansion.q});
  for (const auto& e : expansion.entries) {
    const auto& prev = chain.points[chain.points.size() - 2];
    const auto& cur = chain.points.back();
    chain.points.push_back({e * cur.s - prev.s, e * cur.t - prev.t});
  }
  check_chain(chain, expansion.q);
  return chain;
}

LatticeChain lattice_chain(const Integer& p, const Integer& q) {
  return lattice_chain(hj_expand(p, q));
}

std::vector<LaurentMonomial> invariant_monomials(const Integer& p, const Integer& q,
                                                 const HJExpansion& dual) {
  std::vector<LaurentMonomial> out;
  out.reserve(dual.length() + 2);
  out.push_back({p, 0});
  out.push_back({p - q, 1});
  for (const auto& a : dual.entries) {
    const auto& prev = out[out.size() - 2];
    const auto& cur = out.back();
    out.push_back(a * cur - prev);
  }
  return out;
}

std::vector<LaurentMonomial> invariant_monomials(const Integer& p, const Integer& q) {
  return invariant_monomials(p, q, dual_expand(p, q));
}

ChartAtlas chart_atlas(const LatticeChain& chain, const Integer& q) {
  ChartAtlas atlas{chain.p, q, {}};
  for (std::size_t i = 0; i + 1 < chain.points.size(); ++i) {
    const auto& c = chain.points[i];
    const auto& next = chain.points[i + 1];
    atlas.charts.push_back({LaurentMonomial{-next.t, next.s}, LaurentMonomial{c.t, -c.s}});
  }
  return atlas;
}

ChartAtlas chart_atlas(const Integer& p, const Integer& q) {
  return chart_atlas(lattice_chain(p, q), q);
}

bool TransitionReport::all_hold() const {
  for (const auto& check : perIndex) {
    if (!check.inverseHolds || !check.recursionHolds) return false;
  }
  return true;
}

TransitionReport verify_transitions(const ChartAtlas& atlas, const HJExpansion& expansion) {
  TransitionReport report;
  const auto& charts = atlas.charts;
  for (std::size_t i = 0; i + 1 < charts.size(); ++i) {
    TransitionCheck check;
    check.inverseHolds = charts[i].eta == -charts[i + 1].xi;

    // Solve eta_{i+1} - xi_i = m * eta_i for integer m.
    const LaurentMonomial& base = charts[i].eta;
    const LaurentMonomial target = charts[i + 1].eta - charts[i].xi;
    const Integer& pivot = base.y != 0 ? base.y : base.x;
    const Integer& pivot_target = base.y != 0 ? target.y : target.x;
    if (pivot == 0 || pivot_target % pivot != 0) {
      throw Error(Errc::NoIntegerSolution,
                  "no integer transition coefficient at index " + std::to_string(i));
    }
    check.coefficient = pivot_target / pivot;
    if (check.coefficient * base != target) {
      throw Error(Errc::NoIntegerSolution,
                  "no integer transition coefficient at index " + std::to_string(i));
    }
    check.recursionHolds =
        i < expansion.entries.size() && check.coefficient == expansion.entries[i];
    report.perIndex.push_back(std::move(check));
  }
  return report;
}

TransitionReport verify_transitions(const Integer& p, const Integer& q) {
  const HJExpansion expansion = hj_expand(p, q);
  return verify_transitions(chart_atlas(lattice_chain(expansion), q), expansion);
}

RationalMatrix2 multiply(const RationalMatrix2& a, const RationalMatrix2& b) {
  RationalMatrix2 out;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
    }
  }
  return out;
}

RationalMatrix2 identity2() {
  RationalMatrix2 id;
  id[0] = {Rational(1), Rational(0)};
  id[1] = {Rational(0), Rational(1)};
  return id;
}

FrameChange derivation_change_of_frame(const LatticeChain& chain, std::size_t index) {
  if (index + 1 >= chain.points.size()) {
    throw Error(Errc::IndexOutOfRange, "chart index " + std::to_string(index) +
                                           " out of range 0.." +
                                           std::to_string(chain.points.size() - 2));
  }
  const Integer& p = chain.p;
  const auto& c = chain.points[index];
  const auto& next = chain.points[index + 1];

  FrameChange frame;
  frame.forward[0] = {Rational(c.s, p), Rational(c.t, p)};
  frame.forward[1] = {Rational(next.s, p), Rational(next.t, p)};
  // p * t_{i+1} is the scaled coordinate itself.
  frame.inverse[0] = {Rational(-next.t), Rational(c.t)};
  frame.inverse[1] = {Rational(next.s), Rational(-c.s)};
  return frame;
}

FrameChange derivation_change_of_frame(const Integer& p, const Integer& q, std::size_t index) {
  return derivation_change_of_frame(lattice_chain(p, q), index);
}

}  // namespace qsing
