#include "weyl/metric.hpp"

#include "weyl/rootdata.hpp"

namespace weyl {

Rat inner_product(const ProductAlgebra& alg, const Weight& u, const Weight& v) {
  if (static_cast<int>(u.size()) != alg.rank() ||
      static_cast<int>(v.size()) != alg.rank()) {
    throw Error("weight length does not match rank of " + alg.str());
  }
  if (!alg.is_semisimple()) {
    throw Error("inner product is defined on semisimple algebras only; '" +
                alg.str() + "' contains U1");
  }
  Rat total(0);
  for (size_t f = 0; f < alg.factors().size(); ++f) {
    const Simple& s = alg.factors()[f];
    int off = alg.block_offset(f);
    RatMat g = quadratic_form(s);
    for (int i = 0; i < s.rank; ++i) {
      if (u[off + i].is_zero()) continue;
      for (int j = 0; j < s.rank; ++j) {
        if (v[off + j].is_zero()) continue;
        total += u[off + i] * g[i][j] * v[off + j];
      }
    }
  }
  return total;
}

Rat orbit_index(const Orbit& orbit) {
  Rat closed = norm_sq(orbit.algebra, orbit.dominant) *
               Rat(static_cast<long long>(orbit.points.size()));
  Rat summed(0);
  for (const Weight& p : orbit.points) summed += norm_sq(orbit.algebra, p);
  if (summed != closed) {
    throw Error("second degree index mismatch: sum over points " +
                summed.str() + " vs closed form " + closed.str());
  }
  return closed;
}

Rat index_of_sum(const Rat& i1, const Rat& i2) { return i1 + i2; }

Rat index_of_product(const Orbit& o1, const Orbit& o2) {
  Rat s1(static_cast<long long>(o1.points.size()));
  Rat s2(static_cast<long long>(o2.points.size()));
  Rat value = orbit_index(o1) * s2 + orbit_index(o2) * s1;
  Rat closed = s1 * s2 *
               (norm_sq(o1.algebra, o1.dominant) + norm_sq(o2.algebra, o2.dominant));
  if (value != closed) {
    throw Error("product index forms disagree: " + value.str() + " vs " +
                closed.str());
  }
  return value;
}

}  // namespace weyl
