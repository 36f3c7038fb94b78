#pragma once

#include "weyl/algebra.hpp"
#include "weyl/weight.hpp"

namespace weyl {

/// Orbits predicted beyond this bound are refused with an error.
inline constexpr unsigned long long kOrbitPointGuard = 20'000'000ULL;
/// Orbits at or beyond this bound are generated but flagged as large.
inline constexpr unsigned long long kOrbitPointFlag = 10'000'000ULL;

/// A full Weyl group orbit: the dominant representative plus every point,
/// sorted lexicographically descending. dominant is always a member and the
/// unique member with nonnegative coordinates on every simple block.
struct Orbit {
  ProductAlgebra algebra;
  Weight dominant;
  std::vector<Weight> points;
  bool large = false;  // predicted size >= kOrbitPointFlag

  size_t size() const { return points.size(); }
};

/// Simple reflection r_i (1-based node index i) acting on omega coordinates:
/// subtracts w_i times row i of the Cartan matrix. Involution; fixes w when
/// w_i = 0.
Weight reflect(const Simple& alg, const Weight& w, int i);

bool is_dominant(const ProductAlgebra& alg, const Weight& w);

/// The unique dominant point of w's orbit (identity on U1 blocks).
Weight dominant_of(const ProductAlgebra& alg, const Weight& w);

/// Orbit size from the stabilizer formula: |W| divided by the order of the
/// reflection subgroup generated by the nodes where the dominant weight
/// vanishes. No enumeration.
unsigned long long orbit_size(const ProductAlgebra& alg, const Weight& dominant);

/// Breadth-first closure under the simple reflections of every simple
/// factor; U1 coordinates ride along unchanged. Requires a dominant input
/// (use dominant_of first) and refuses predicted sizes beyond the guard.
Orbit orbit_points(const ProductAlgebra& alg, const Weight& dominant);

/// Independent enumeration for families B, C, D through the orthonormal
/// basis: all coordinate permutations combined with sign changes (only even
/// numbers of sign changes for D). Used as a test oracle against
/// orbit_points; other families are rejected.
std::vector<Weight> signed_permutation_orbit(const Simple& alg,
                                             const Weight& dominant);

}  // namespace weyl
