#pragma once

#include "weyl/algebra.hpp"
#include "weyl/matrix.hpp"

namespace weyl {

/// Cartan matrix under the convention C_ij = 2(a_i|a_j)/(a_j|a_j), so that
/// the reflection r_i subtracts w_i times row i from a weight written in the
/// omega basis. Node numbering: B_n has its unique short node at n, C_n its
/// unique long node at n, D_n forks at nodes n-1 and n (for D3 the fork
/// hangs off node 1), G2 has the long node first.
///
/// Throws for U1, which carries no Cartan matrix.
IntMat cartan_matrix(const Simple& alg);

/// Half squared lengths (a_i|a_i)/2 of the simple roots, long roots
/// normalized to squared length 2.
std::vector<Rat> root_half_norms(const Simple& alg);

/// Gram matrix G_ij = (omega_i|omega_j) of the fundamental weights,
/// G = C^-1 * diag((a_i|a_i)/2). Throws for U1.
RatMat quadratic_form(const Simple& alg);

/// |W|: (n+1)! for A_n, 2^n n! for B_n/C_n, 2^(n-1) n! for D_n, 12 for G2,
/// 1 for U1.
unsigned long long weyl_order(const Simple& alg);
unsigned long long weyl_order(const ProductAlgebra& alg);

}  // namespace weyl
