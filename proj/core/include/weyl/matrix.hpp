#pragma once

#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

using IntMat = std::vector<std::vector<long long>>;
using RatMat = std::vector<std::vector<Rat>>;

IntMat int_identity(int n);
IntMat int_mul(const IntMat& a, const IntMat& b);
RatMat rat_from_int(const IntMat& m);
RatMat rat_mul(const RatMat& a, const RatMat& b);
RatMat rat_identity(int n);

/// Exact inverse by Gauss-Jordan elimination. Throws weyl::Error ("singular
/// matrix") when not invertible, or on a non-square input.
RatMat rat_inverse(const RatMat& m);

bool rat_equal(const RatMat& a, const RatMat& b);

}  // namespace weyl
