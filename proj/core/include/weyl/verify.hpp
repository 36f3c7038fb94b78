#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weyl/branching.hpp"
#include "weyl/catalog.hpp"

namespace weyl {

struct VerifyItem {
  std::string key;
  bool subjoining = false;
  size_t probes = 0;
  bool conservation_ok = false;
  std::optional<Rat> gamma_value;     // computed (semisimple targets)
  std::optional<Rat> gamma_expected;  // tabulated, when known
  bool ok = false;
  std::string detail;                 // failure description
};

struct VerifyReport {
  std::vector<VerifyItem> items;
  size_t failures = 0;
};

/// Runs every catalog pair with source rank <= max_rank through the three
/// fundamental-type probes at (a,b,c) = (2,3,5): exact size conservation on
/// each branching, and for semisimple non-subjoining targets the index
/// ratio, probe independence and agreement with the tabulated value where
/// one is known. Failures become report entries, never exceptions.
VerifyReport verify_catalog(int max_rank);

}  // namespace weyl
