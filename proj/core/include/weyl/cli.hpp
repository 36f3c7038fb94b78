#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weyl {

/// Runs one weylbranch command. Exit status 0 on success, 1 on domain
/// errors, 2 on usage errors. Grammar:
///
///   weylbranch orbit          <ALGEBRA> <WEIGHT> [--json] [--params ...]
///   weylbranch branch         <ALGEBRA> <SUBALGEBRA> <WEIGHT> [--json] [--params ...]
///   weylbranch projmat        <ALGEBRA> <SUBALGEBRA> [--json]
///   weylbranch gamma          <ALGEBRA> <SUBALGEBRA> [--json]
///   weylbranch index          <ALGEBRA> <WEIGHT> [--json] [--params ...]
///   weylbranch relate         <ALGEBRA> <SUBALGEBRA> <SUBALGEBRA2> [--json]
///   weylbranch verify-catalog [--max-rank N] [--json]
///
/// WEIGHT is comma separated rationals without spaces ("1,0,-2", "1/2,3");
/// single letters are parameters, bound by --params "a=2,b=3" and defaulting
/// to a=2, b=3, c=5, d=7.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace weyl
