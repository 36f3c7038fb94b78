#include "weyl/rootdata.hpp"

namespace weyl {

IntMat cartan_matrix(const Simple& alg) {
  if (alg.is_u1()) throw Error("U1 carries no Cartan matrix");
  int n = alg.rank;
  IntMat c(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) {
      c[i][i + 1] = -1;
      c[i + 1][i] = -1;
    }
  };
  switch (alg.family) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
      chain(n);
      c[n - 2][n - 1] = -2;  // node n is short
      break;
    case Family::C:
      chain(n);
      c[n - 1][n - 2] = -2;  // node n is long
      break;
    case Family::D:
      chain(n - 1);
      c[n - 3][n - 1] = -1;  // fork: node n attached to node n-2
      c[n - 1][n - 3] = -1;
      break;
    case Family::G2:
      c[0][1] = -3;  // node 1 long, node 2 short
      c[1][0] = -1;
      break;
    case Family::U1:
      break;
  }
  return c;
}

std::vector<Rat> root_half_norms(const Simple& alg) {
  if (alg.is_u1()) throw Error("U1 carries no root data");
  int n = alg.rank;
  std::vector<Rat> d(n, Rat(1));
  switch (alg.family) {
    case Family::B:
      d[n - 1] = Rat(1, 2);
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) d[i] = Rat(1, 2);
      break;
    case Family::G2:
      d[1] = Rat(1, 3);
      break;
    default:
      break;
  }
  return d;
}

RatMat quadratic_form(const Simple& alg) {
  if (alg.is_u1()) {
    throw Error("U1 carries no intrinsic norm; inner products reject U1 blocks");
  }
  RatMat cinv = rat_inverse(rat_from_int(cartan_matrix(alg)));
  std::vector<Rat> d = root_half_norms(alg);
  int n = alg.rank;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) cinv[i][j] *= d[j];
  }
  return cinv;
}

unsigned long long weyl_order(const Simple& alg) {
  auto factorial = [](int k) {
    unsigned long long f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<unsigned long long>(i);
    return f;
  };
  int n = alg.rank;
  switch (alg.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return factorial(n) << n;
    case Family::D: return factorial(n) << (n - 1);
    case Family::G2: return 12;
    case Family::U1: return 1;
  }
  return 1;
}

unsigned long long weyl_order(const ProductAlgebra& alg) {
  unsigned __int128 w = 1;
  for (const Simple& f : alg.factors()) {
    w *= weyl_order(f);
    if (w > ~0ULL) throw Error("Weyl order of " + alg.str() + " exceeds 64 bits");
  }
  return static_cast<unsigned long long>(w);
}

}  // namespace weyl
