#pragma once

#include "weyl/metric.hpp"
#include "weyl/projection.hpp"

namespace weyl {

/// One term of an orbit decomposition: a dominant weight per target factor
/// (a single rational label for U1 factors) with its multiplicity.
struct BranchEntry {
  std::vector<Weight> factors;
  long long multiplicity = 1;

  Weight flat() const;  // concatenated coordinates
};

/// Decomposition of a projected source orbit into target orbits. Entries
/// are sorted by squared length over the simple factors descending, then by
/// concatenated coordinates descending, which keeps rendered output stable.
struct BranchingResult {
  Simple source;
  ProductAlgebra target;
  Weight dominant;
  unsigned long long source_orbit_size = 0;
  std::vector<BranchEntry> entries;
  unsigned long long decomposed_size = 0;  // sum of mult * suborbit size

  /// Second degree index of the right-hand side: sum over entries of
  /// multiplicity times the product-orbit index. Target must be semisimple.
  Rat target_index_sum() const;
};

/// Assembles a result from raw entries: sorts them, fills in both sides of
/// the conservation record and requires them to agree exactly.
BranchingResult make_branching_result(const Simple& source,
                                      const ProductAlgebra& target,
                                      const Weight& dominant,
                                      unsigned long long source_orbit_size,
                                      std::vector<BranchEntry> entries);

/// Projects every point of the source orbit, keeps the points dominant on
/// every simple factor, and reads multiplicities off the dominant-point
/// counts. Size conservation is verified before returning.
BranchingResult branch(const ProjectionMap& p, const Weight& dominant);

/// Index ratio I_source / sum(I_target) computed for each probe; all probes
/// must agree exactly and the common value is returned. Requires a
/// semisimple target, at least two nonzero probes, and no subjoining.
Rat gamma(const ProjectionMap& p, const std::vector<Weight>& probes);

/// The three fundamental-type probes (a,0,...,0), (0,b,0,...,0),
/// (0,...,0,c) at a=2, b=3, c=5, deduplicated for small ranks.
std::vector<Weight> standard_probes(const Simple& source);

}  // namespace weyl
