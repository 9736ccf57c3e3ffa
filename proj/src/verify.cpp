#include "qsing/verify.hpp"

#include "qsing/errors.hpp"
#include "qsing/hj.hpp"
#include "qsing/toric.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>

namespace qsing {
namespace {

enum CheckIndex : std::size_t {
  kSoundness,
  kDuality,
  kRiemenschneider,
  kDeterminant,
  kMonomials,
  kTransitions,
  kDualBasis,
  kFrames,
  kRow3,
  kH1Identity,
  kCheckCount,
};

struct Outcome {
  bool ok = true;
  std::string detail;
};

using PairOutcome = std::array<Outcome, kCheckCount>;

std::string pair_name(const Integer& p, const Integer& q) {
  return "cyclic:" + to_string(p) + "/" + to_string(q);
}

std::string entries_text(const std::vector<Integer>& entries) {
  std::string out = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(entries[i]);
  }
  return out + "]";
}

// Runs `body`; a false return or an exception marks the check failed.
void run_check(Outcome& out, const std::function<bool(std::string&)>& body) {
  try {
    std::string detail;
    out.ok = body(detail);
    if (!out.ok) out.detail = detail;
  } catch (const std::exception& ex) {
    out.ok = false;
    out.detail = ex.what();
  }
}

PairOutcome check_pair(const Integer& p, const Integer& q, const std::optional<SeededFault>& fault) {
  PairOutcome out;
  HJExpansion expansion = hj_expand(p, q);
  if (fault && fault->p == p && fault->q == q) expansion.entries.front() += 1;
  const HJExpansion dual = dual_expand(p, q);

  run_check(out[kSoundness], [&](std::string& detail) {
    const bool entries_ok = std::all_of(expansion.entries.begin(), expansion.entries.end(),
                                        [](const Integer& e) { return e >= 2; });
    const Rational value = evaluate(expansion.entries);
    detail = entries_text(expansion.entries) + " evaluates to " + to_string(value);
    return entries_ok && value == Rational(p, q);
  });

  run_check(out[kDuality], [&](std::string& detail) {
    const HJExpansion back = dual_expand(p, p - q);
    detail = "dual of dual is " + entries_text(back.entries) + ", expansion is " +
             entries_text(expansion.entries);
    return back.entries == expansion.entries;
  });

  run_check(out[kRiemenschneider], [&](std::string& detail) {
    const auto r = riemenschneider_check(expansion, dual);
    detail = "sumE=" + to_string(r.sumE) + " sumE'=" + to_string(r.sumEprime) +
             " k'=" + to_string(r.kPrime) + " e=" + to_string(r.e);
    return r.holds;
  });

  std::optional<LatticeChain> chain;
  run_check(out[kDeterminant], [&](std::string&) {
    chain = lattice_chain(expansion);
    return true;
  });

  std::size_t monomial_count = 0;
  run_check(out[kMonomials], [&](std::string& detail) {
    const auto monomials = invariant_monomials(p, q, dual);
    monomial_count = monomials.size();
    const Integer e = embedding_dimension(expansion);
    bool ok = monomials.front() == LaurentMonomial{p, 0} &&
              monomials.back() == LaurentMonomial{0, p} && Integer(monomials.size()) == e;
    for (const auto& m : monomials) {
      ok = ok && m.x >= 0 && m.y >= 0 && gamma_weight(m, p, q) == 0;
    }
    detail = std::to_string(monomials.size()) + " monomials, embedding dimension " + to_string(e);
    return ok;
  });

  const auto need_chain = [&](std::string& detail) {
    if (!chain) detail = "no valid lattice chain";
    return chain.has_value();
  };

  std::optional<ChartAtlas> atlas;
  run_check(out[kTransitions], [&](std::string& detail) {
    if (!need_chain(detail)) return false;
    atlas = chart_atlas(*chain, q);
    const auto report = verify_transitions(*atlas, expansion);
    for (std::size_t i = 0; i < report.perIndex.size(); ++i) {
      const auto& c = report.perIndex[i];
      if (!c.inverseHolds || !c.recursionHolds) {
        detail = "index " + std::to_string(i) + " coefficient " + to_string(c.coefficient);
        return false;
      }
    }
    bool weights_ok = true;
    for (const auto& chart : atlas->charts) {
      weights_ok = weights_ok && gamma_weight(chart.eta, p, q) == 0 &&
                   gamma_weight(chart.xi, p, q) == 0;
    }
    detail = "chart monomial not invariant";
    return weights_ok && report.perIndex.size() == expansion.length();
  });

  run_check(out[kDualBasis], [&](std::string& detail) {
    if (!need_chain(detail)) return false;
    const auto local = chart_atlas(*chain, q);
    for (std::size_t i = 0; i < local.charts.size(); ++i) {
      const auto& c = chain->points[i];
      const auto& next = chain->points[i + 1];
      const auto& chart = local.charts[i];
      if (pairing(c, p, chart.eta) != 1 || pairing(c, p, chart.xi) != 0 ||
          pairing(next, p, chart.eta) != 0 || pairing(next, p, chart.xi) != 1) {
        detail = "pairing pattern broken at chart " + std::to_string(i);
        return false;
      }
    }
    return true;
  });

  run_check(out[kFrames], [&](std::string& detail) {
    if (!need_chain(detail)) return false;
    for (std::size_t i = 0; i + 1 < chain->points.size(); ++i) {
      const auto frame = derivation_change_of_frame(*chain, i);
      if (multiply(frame.forward, frame.inverse) != identity2()) {
        detail = "frame change at chart " + std::to_string(i) + " is not invertible";
        return false;
      }
    }
    return true;
  });

  // Double counts use the number of invariant generators as e, which is an
  // independent route to the embedding dimension.
  const Integer k = expansion.length();
  const Integer h1 = sum_minus_one(expansion.entries);
  const Integer e_generators = monomial_count;

  run_check(out[kRow3], [&](std::string& detail) {
    if (q == 1 || q == p - 1) return true;
    const Integer j = 2 * h1;
    detail = "j+k-2=" + to_string(j + k - 2) + " 2e+3k-8=" + to_string(2 * e_generators + 3 * k - 8);
    return j + k - 2 == 2 * e_generators + 3 * k - 8;
  });

  run_check(out[kH1Identity], [&](std::string& detail) {
    detail = "h1=" + to_string(h1) + " e+k-3=" + to_string(e_generators + k - 3);
    return h1 == e_generators + k - 3;
  });

  return out;
}

std::vector<CheckResult> empty_results() {
  std::vector<CheckResult> results;
  for (const auto& name : cyclic_check_names()) results.push_back({name, 0, 0, {}});
  return results;
}

}  // namespace

bool VerifySummary::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok(); });
}

const CheckResult* VerifySummary::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const std::vector<std::string>& cyclic_check_names() {
  static const std::vector<std::string> names = {
      "hj-soundness",        "hj-duality",      "riemenschneider",   "lattice-determinant",
      "invariant-monomials", "chart-transitions", "dual-basis-pairing", "frame-inverse",
      "row3-double-count",   "h1-embedding-identity",
  };
  return names;
}

std::vector<CheckResult> sweep_cyclic(const SweepOptions& options) {
  std::vector<CheckResult> results = empty_results();
  if (options.pMax < 2) return results;
  const std::size_t p_max = static_cast<std::size_t>(options.pMax);

  // One slot per p; workers fill disjoint slots, merged afterwards in p order.
  std::vector<std::vector<std::pair<Integer, PairOutcome>>> per_p(p_max + 1);
  unsigned workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(p_max)));

  auto work = [&](unsigned worker) {
    for (std::size_t p = 2 + worker; p <= p_max; p += workers) {
      const Integer P(p);
      for (Integer q = 1; q < P; ++q) {
        if (gcd(P, q) != 1) continue;
        per_p[p].emplace_back(q, check_pair(P, q, options.fault));
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  for (std::size_t p = 2; p <= p_max; ++p) {
    for (const auto& [q, outcome] : per_p[p]) {
      for (std::size_t c = 0; c < kCheckCount; ++c) {
        auto& result = results[c];
        if (outcome[c].ok) {
          ++result.passed;
        } else {
          ++result.failed;
          if (!result.counterexample) {
            result.counterexample = pair_name(Integer(p), q) + ": " + outcome[c].detail;
          }
        }
      }
    }
  }
  return results;
}

std::vector<CheckResult> sweep_stars(const DivisorCatalog& catalog) {
  CheckResult split{"star-split-count", 0, 0, {}};
  CheckResult row4{"row4-double-count", 0, 0, {}};
  for (const auto& record : catalog.records()) {
    if (!record.is_star()) continue;
    const auto c = counts(record);
    if (star_split_h1(record) == c.h1Theta) {
      ++split.passed;
    } else {
      ++split.failed;
      if (!split.counterexample) split.counterexample = record.label;
    }
    const Integer e = dihedral_embedding_dimension(record);
    if (2 * e + 3 * c.kGamma - 7 == c.jGamma + c.kGamma - 1) {
      ++row4.passed;
    } else {
      ++row4.failed;
      if (!row4.counterexample) row4.counterexample = record.label;
    }
  }
  return {split, row4};
}

CheckResult sweep_table3(const Table3& table, const Integer& lMax) {
  CheckResult result{"table3-integrality", 0, 0, {}};
  for (const auto& row : table.rows()) {
    for (Integer l = 2; l <= lMax; ++l) {
      if (!row.matches(l)) continue;
      bool ok = false;
      try {
        ok = row.evaluate(l) > 0;
      } catch (const Error&) {
        ok = false;
      }
      if (ok) {
        ++result.passed;
      } else {
        ++result.failed;
        if (!result.counterexample) {
          result.counterexample = std::string(toi_family_name(row.family)) + ":" + to_string(l);
        }
      }
    }
  }
  return result;
}

VerifySummary run_verify(const SweepOptions& options, const DivisorCatalog& catalog,
                         const Table3& table) {
  VerifySummary summary;
  summary.checks = sweep_cyclic(options);
  for (auto& c : sweep_stars(catalog)) summary.checks.push_back(std::move(c));
  summary.checks.push_back(sweep_table3(table, options.lMax));
  return summary;
}

}  // namespace qsing
