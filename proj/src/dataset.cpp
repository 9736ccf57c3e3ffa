#include "qsing/dataset.hpp"

#include <cstdlib>

#ifndef QSING_DEFAULT_DATA_DIR
#define QSING_DEFAULT_DATA_DIR "data"
#endif

namespace qsing {

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("QSING_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return QSING_DEFAULT_DATA_DIR;
}

Dataset Dataset::load(const std::filesystem::path& dir) {
  return {DivisorCatalog::load(dir / "divisors.json"), Table3::load(dir / "table3.json")};
}

}  // namespace qsing
