#pragma once

#include <utility>

#include "weyl/algebra.hpp"
#include "weyl/matrix.hpp"
#include "weyl/weight.hpp"

namespace weyl {

/// Integer matrix carrying weights of a simple source algebra onto weights
/// of a reductive target. Rows partition into the target's factor blocks in
/// order; U1 rows sit in place. `subjoining` marks the non-inclusion
/// relations that still admit a projection matrix; those are kept out of
/// index-invariant checks.
struct ProjectionMap {
  Simple source;
  ProductAlgebra target;
  IntMat matrix;
  bool subjoining = false;

  ProjectionMap(Simple src, ProductAlgebra tgt, IntMat m, bool subj = false);

  Weight apply(const Weight& w) const;
  std::string key() const { return source.str() + ">" + target.str(); }
};

/// Chain composition: outer maps L' into L'', inner maps L into L'. The
/// intermediate L' must be the unique simple factor of inner's target.
ProjectionMap compose(const ProjectionMap& outer, const ProjectionMap& inner);

/// Exact rational inverse of an equal-rank map.
RatMat invert(const ProjectionMap& p);

/// The relation matrix P(L''<-L') = P(L > L'') * P(L > L')^-1 between two
/// maximal subalgebras of the same L. Not an inclusion map.
RatMat relate(const ProjectionMap& equal_rank, const ProjectionMap& other);

/// Reconstructs the unique integer matrix carrying each source weight of
/// `pairs` to its target weight. Needs the source weights to span; any
/// redundant pairs are verified for consistency. A fractional solution is
/// reported, never rounded.
ProjectionMap from_branching_pairs(
    const Simple& source, const ProductAlgebra& target,
    const std::vector<std::pair<Weight, Weight>>& pairs);

}  // namespace weyl
