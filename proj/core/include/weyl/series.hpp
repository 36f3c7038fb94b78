#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weyl/projection.hpp"

namespace weyl {

/// The general-rank algebra-subalgebra families. `n` is always the source
/// rank; `k` is the split parameter of the two-block families.
enum class SeriesId {
  BtoBU1,   // B_n > B_{n-1} x U1,        n >= 3
  BtoD,     // B_n > D_n,                 n >= 4
  BtoDA1,   // B_n > D_{n-1} x A1,        n >= 5
  BtoB2A1,  // B_n > B_{n-2} x 2A1,       n >= 4
  BtoBA3,   // B_n > B_{n-3} x A3,        n >= 6
  BtoBD,    // B_n > B_{n-k} x D_k,       n-k >= k >= 4
  BtoDB,    // B_n > D_{n-k} x B_k,       n-k > k >= 2, n-k >= 4
  BtoA1,    // B_n > A1,                  n >= 3 (n = 3 equals the chain through G2)
  CtoAU1,   // C_n > A_{n-1} x U1,        n >= 2
  CtoCA1,   // C_n > C_{n-1} x A1,        n >= 2 (the rank-1 factor enters as A1)
  CtoCC,    // C_n > C_{n-k} x C_k,       n-k >= k >= 2
  CtoA1,    // C_n > A1,                  n >= 2
  DtoAU1,   // D_n > A_{n-1} x U1,        n >= 4
  DtoDU1,   // D_n > D_{n-1} x U1,        n >= 5
  DtoB,     // D_n > B_{n-1},             n >= 4
  DtoBA1,   // D_n > B_{n-2} x A1,        n >= 4
  DtoBB,    // D_n > B_{n-k-1} x B_k,     n-k-1 >= k >= 2, n >= 5
  DtoD2A1,  // D_n > D_{n-2} x 2A1,       n >= 6
  DtoDA3,   // D_n > D_{n-3} x A3,        n >= 7
  DtoDD,    // D_n > D_{n-k} x D_k,       n-k >= k >= 4
};

struct SeriesKey {
  SeriesId id;
  int n;
  int k = 0;

  std::string str() const;
};

const char* series_name(SeriesId id);

/// Validates the key's parameter range and throws with the stated range on
/// violation.
void check_series_key(const SeriesKey& key);

/// Constructs the series projection matrix. Where a rank <= 8 instance is
/// also printed in the fixed tables under the same target name, the result
/// is identical entrywise.
ProjectionMap series_matrix(const SeriesKey& key);

/// Closed-form index ratio of the pair, when the target is semisimple.
std::optional<Rat> series_gamma(const SeriesKey& key);

/// All valid keys with source rank <= max_rank.
std::vector<SeriesKey> series_instances(int max_rank);

}  // namespace weyl
