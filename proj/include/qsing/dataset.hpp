#pragma once

#include "qsing/divisor.hpp"
#include "qsing/moduli.hpp"

#include <filesystem>

namespace qsing {

/// $QSING_DATA_DIR if set, otherwise the data/ directory of the source tree.
std::filesystem::path data_directory();

/// Bundled divisor records and Table 3 closed forms.
struct Dataset {
  DivisorCatalog divisors;
  Table3 table3;

  /// Reads divisors.json and table3.json from `dir`.
  static Dataset load(const std::filesystem::path& dir);
  static Dataset load_default() { return load(data_directory()); }
};

}  // namespace qsing
