#include "weyl/orbits.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "weyl/rootdata.hpp"

namespace weyl {

namespace {

/// Order of the reflection subgroup generated by the sub-diagram on `nodes`.
/// Components are classified from the Cartan entries: a triple bond means
/// G2, a double bond a B/C chain, a branch node a D diagram, anything else
/// an A chain.
unsigned long long parabolic_order(const Simple& alg,
                                   const std::vector<int>& nodes) {
  if (nodes.empty()) return 1;
  IntMat c = cartan_matrix(alg);
  std::vector<char> wanted(alg.rank, 0), seen(alg.rank, 0);
  for (int v : nodes) wanted[v] = 1;

  auto factorial = [](int k) {
    unsigned long long f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<unsigned long long>(i);
    return f;
  };

  unsigned long long order = 1;
  for (int start : nodes) {
    if (seen[start]) continue;
    // flood fill one component
    std::vector<int> comp{start};
    seen[start] = 1;
    for (size_t q = 0; q < comp.size(); ++q) {
      int u = comp[q];
      for (int v = 0; v < alg.rank; ++v) {
        if (v != u && wanted[v] && !seen[v] && c[u][v] != 0) {
          seen[v] = 1;
          comp.push_back(v);
        }
      }
    }
    int k = static_cast<int>(comp.size());
    bool triple = false, dbl = false, fork = false;
    for (int u : comp) {
      int deg = 0;
      for (int v : comp) {
        if (v == u || c[u][v] == 0) continue;
        ++deg;
        if (c[u][v] == -3 || c[v][u] == -3) triple = true;
        if (c[u][v] == -2 || c[v][u] == -2) dbl = true;
      }
      if (deg >= 3) fork = true;
    }
    if (triple) {
      order *= 12;
    } else if (dbl) {
      order *= factorial(k) << k;  // B/C type
    } else if (fork) {
      order *= factorial(k) << (k - 1);  // D type
    } else {
      order *= factorial(k + 1);  // A chain
    }
  }
  return order;
}

unsigned long long simple_orbit_size(const Simple& alg, const Weight& block) {
  if (alg.is_u1()) return 1;
  std::vector<int> zeros;
  for (int i = 0; i < alg.rank; ++i) {
    if (block[i].is_zero()) zeros.push_back(i);
  }
  return weyl_order(alg) / parabolic_order(alg, zeros);
}

void check_length(const ProductAlgebra& alg, const Weight& w) {
  if (static_cast<int>(w.size()) != alg.rank()) {
    throw Error("weight length " + std::to_string(w.size()) +
                " does not match rank " + std::to_string(alg.rank()) + " of " +
                alg.str());
  }
}

}  // namespace

Weight reflect(const Simple& alg, const Weight& w, int i) {
  if (i < 1 || i > alg.rank) {
    throw Error("reflection index " + std::to_string(i) + " out of range for " +
                alg.str());
  }
  IntMat c = cartan_matrix(alg);
  Weight r = w;
  Rat coeff = w[i - 1];
  if (coeff.is_zero()) return r;
  for (int j = 0; j < alg.rank; ++j) {
    if (c[i - 1][j] != 0) r[j] -= coeff * Rat(c[i - 1][j]);
  }
  return r;
}

bool is_dominant(const ProductAlgebra& alg, const Weight& w) {
  check_length(alg, w);
  for (size_t f = 0; f < alg.factors().size(); ++f) {
    const Simple& s = alg.factors()[f];
    if (s.is_u1()) continue;
    int off = alg.block_offset(f);
    for (int i = 0; i < s.rank; ++i) {
      if (w[off + i].is_negative()) return false;
    }
  }
  return true;
}

Weight dominant_of(const ProductAlgebra& alg, const Weight& w) {
  check_length(alg, w);
  Weight cur = w;
  for (size_t f = 0; f < alg.factors().size(); ++f) {
    const Simple& s = alg.factors()[f];
    if (s.is_u1()) continue;
    int off = alg.block_offset(f);
    IntMat c = cartan_matrix(s);
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i < s.rank; ++i) {
        if (!cur[off + i].is_negative()) continue;
        Rat coeff = cur[off + i];
        for (int j = 0; j < s.rank; ++j) {
          if (c[i][j] != 0) cur[off + j] -= coeff * Rat(c[i][j]);
        }
        moved = true;
      }
    }
  }
  return cur;
}

unsigned long long orbit_size(const ProductAlgebra& alg, const Weight& dominant) {
  check_length(alg, dominant);
  if (!is_dominant(alg, dominant)) {
    throw Error("weight " + render_weight(dominant) +
                " is not dominant; apply dominant_of first");
  }
  unsigned __int128 total = 1;
  for (size_t f = 0; f < alg.factors().size(); ++f) {
    const Simple& s = alg.factors()[f];
    int off = alg.block_offset(f);
    Weight block(dominant.begin() + off, dominant.begin() + off + s.rank);
    total *= simple_orbit_size(s, block);
    if (total > ~0ULL) {
      throw Error("orbit size of " + render_weight(dominant) +
                  " exceeds 64 bits");
    }
  }
  return static_cast<unsigned long long>(total);
}

Orbit orbit_points(const ProductAlgebra& alg, const Weight& dominant) {
  unsigned long long predicted = orbit_size(alg, dominant);  // also validates
  if (predicted > kOrbitPointGuard) {
    throw Error("orbit of " + render_weight(dominant) + " has " +
                std::to_string(predicted) + " points, beyond the guard of " +
                std::to_string(kOrbitPointGuard));
  }

  // Precompute nonzero Cartan row entries of every simple generator.
  struct Gen {
    int coord;                                  // reflecting coordinate
    std::vector<std::pair<int, long long>> row; // (coordinate, Cartan entry)
  };
  std::vector<Gen> gens;
  for (size_t f = 0; f < alg.factors().size(); ++f) {
    const Simple& s = alg.factors()[f];
    if (s.is_u1()) continue;
    int off = alg.block_offset(f);
    IntMat c = cartan_matrix(s);
    for (int i = 0; i < s.rank; ++i) {
      Gen g;
      g.coord = off + i;
      for (int j = 0; j < s.rank; ++j) {
        if (c[i][j] != 0) g.row.emplace_back(off + j, c[i][j]);
      }
      gens.push_back(std::move(g));
    }
  }

  std::unordered_set<Weight, WeightHash> seen;
  seen.reserve(predicted * 2);
  std::deque<Weight> queue;
  seen.insert(dominant);
  queue.push_back(dominant);
  while (!queue.empty()) {
    Weight w = std::move(queue.front());
    queue.pop_front();
    for (const Gen& g : gens) {
      // Walking down from the dominant point: reflecting a positive
      // coordinate reaches every orbit member.
      if (!(w[g.coord] > Rat(0))) continue;
      Weight next = w;
      Rat coeff = w[g.coord];
      for (const auto& [j, entry] : g.row) next[j] -= coeff * Rat(entry);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }

  Orbit orbit{alg, dominant, std::vector<Weight>(seen.begin(), seen.end()),
              predicted >= kOrbitPointFlag};
  std::sort(orbit.points.begin(), orbit.points.end(),
            [](const Weight& a, const Weight& b) { return lex_less(b, a); });
  if (orbit.points.size() != predicted) {
    throw Error("orbit enumeration mismatch for " + render_weight(dominant) +
                ": got " + std::to_string(orbit.points.size()) + ", expected " +
                std::to_string(predicted));
  }
  return orbit;
}

std::vector<Weight> signed_permutation_orbit(const Simple& alg,
                                             const Weight& dominant) {
  Family fam = alg.family;
  if (fam != Family::B && fam != Family::C && fam != Family::D) {
    throw Error("signed permutation enumeration covers families B, C, D only");
  }
  int n = alg.rank;
  if (static_cast<int>(dominant.size()) != n) {
    throw Error("weight length does not match rank");
  }

  // omega coordinates -> orthonormal coordinates
  Weight x(n, Rat(0));
  Rat half(1, 2);
  if (fam == Family::B) {
    for (int j = 0; j < n; ++j) {
      for (int i = j; i < n - 1; ++i) x[j] += dominant[i];
      x[j] += dominant[n - 1] * half;
    }
  } else if (fam == Family::C) {
    for (int j = 0; j < n; ++j) {
      for (int i = j; i < n; ++i) x[j] += dominant[i];
    }
  } else {
    Rat tail = (dominant[n - 2] + dominant[n - 1]) * half;
    for (int j = 0; j < n - 1; ++j) {
      for (int i = j; i < n - 2; ++i) x[j] += dominant[i];
      x[j] += tail;
    }
    x[n - 1] = (dominant[n - 1] - dominant[n - 2]) * half;
  }

  auto to_omega = [&](const Weight& y) {
    Weight w(n, Rat(0));
    if (fam == Family::B) {
      for (int i = 0; i < n - 1; ++i) w[i] = y[i] - y[i + 1];
      w[n - 1] = y[n - 1] + y[n - 1];
    } else if (fam == Family::C) {
      for (int i = 0; i < n - 1; ++i) w[i] = y[i] - y[i + 1];
      w[n - 1] = y[n - 1];
    } else {
      for (int i = 0; i < n - 2; ++i) w[i] = y[i] - y[i + 1];
      w[n - 2] = y[n - 2] - y[n - 1];
      w[n - 1] = y[n - 2] + y[n - 1];
    }
    return w;
  };

  std::sort(x.begin(), x.end());
  std::unordered_set<Weight, WeightHash> out;
  do {
    unsigned masks = 1u << n;
    for (unsigned m = 0; m < masks; ++m) {
      if (fam == Family::D && (__builtin_popcount(m) & 1)) continue;
      Weight y = x;
      for (int i = 0; i < n; ++i) {
        if (m & (1u << i)) y[i] = -y[i];
      }
      out.insert(to_omega(y));
    }
  } while (std::next_permutation(x.begin(), x.end()));

  std::vector<Weight> points(out.begin(), out.end());
  std::sort(points.begin(), points.end(),
            [](const Weight& a, const Weight& b) { return lex_less(b, a); });
  return points;
}

}  // namespace weyl
