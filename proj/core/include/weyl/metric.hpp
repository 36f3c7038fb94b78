#pragma once

#include "weyl/orbits.hpp"

namespace weyl {

/// Block-diagonal inner product on weight space, long roots normalized to
/// squared length 2 in every simple factor. Rejects algebras with U1
/// factors, whose labels carry no intrinsic norm.
Rat inner_product(const ProductAlgebra& alg, const Weight& u, const Weight& v);

inline Rat norm_sq(const ProductAlgebra& alg, const Weight& w) {
  return inner_product(alg, w, w);
}

/// Second degree index of an orbit: (dominant|dominant) * |orbit|. The
/// equivalent sum of (p|p) over all points is evaluated as well and the two
/// are required to agree. Zero exactly for the zero orbit.
Rat orbit_index(const Orbit& orbit);

/// Index of a union of two orbits.
Rat index_of_sum(const Rat& i1, const Rat& i2);

/// Index of a product orbit: I1*|W2| + I2*|W1|, checked against the closed
/// form |W1|*|W2|*((l1|l1)+(l2|l2)).
Rat index_of_product(const Orbit& o1, const Orbit& o2);

}  // namespace weyl
