#pragma once

#include <string>

#include "weyl/branching.hpp"
#include "weyl/matrix.hpp"

namespace weyl {

/// "(2,0)+(0,2)" / "(2)(0)+(0)(2)+(0)(-2)" / "3(1,1)" style rendering of a
/// decomposition, in the result's stored entry order.
std::string render_branching(const BranchingResult& result);

/// One entry without its multiplicity prefix: factor tuples side by side.
std::string render_entry(const BranchEntry& entry);

/// Integer matrix as space separated rows, one per line.
std::string render_matrix(const IntMat& m);

/// Rational matrix as space separated rows, entries "p/q".
std::string render_matrix(const RatMat& m);

}  // namespace weyl
