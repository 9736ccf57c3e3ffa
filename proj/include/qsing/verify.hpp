#pragma once

#include "qsing/divisor.hpp"
#include "qsing/integer.hpp"
#include "qsing/moduli.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qsing {

/// Test hook: adds one to e_1 of the expansion of p/q before the checks run.
struct SeededFault {
  Integer p;
  Integer q;
};

struct SweepOptions {
  Integer pMax = 100;
  Integer lMax = 300;
  std::optional<SeededFault> fault;
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct CheckResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// First failure in sweep order.
  std::optional<std::string> counterexample;

  bool ok() const { return failed == 0; }
};

struct VerifySummary {
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* find(std::string_view name) const;
};

/// Names of the per-(p,q) checks, in reporting order.
const std::vector<std::string>& cyclic_check_names();

/// Runs the per-(p,q) checks over every coprime 1 <= q < p <= pMax.
std::vector<CheckResult> sweep_cyclic(const SweepOptions& options);

/// Star identities over every star record in the catalog.
std::vector<CheckResult> sweep_stars(const DivisorCatalog& catalog);

/// Every closed form is a positive integer on its residue class, 1 < l <= lMax.
CheckResult sweep_table3(const Table3& table, const Integer& lMax);

VerifySummary run_verify(const SweepOptions& options, const DivisorCatalog& catalog,
                         const Table3& table);

}  // namespace qsing
