#include "weyl/branching.hpp"

#include <algorithm>
#include <map>

#include "weyl/rootdata.hpp"

namespace weyl {

namespace {

std::vector<Weight> split_blocks(const ProductAlgebra& alg, const Weight& w) {
  std::vector<Weight> blocks;
  blocks.reserve(alg.factors().size());
  for (size_t f = 0; f < alg.factors().size(); ++f) {
    int off = alg.block_offset(f);
    int r = alg.factors()[f].rank;
    blocks.emplace_back(w.begin() + off, w.begin() + off + r);
  }
  return blocks;
}

/// Squared length over the simple factors only; U1 labels carry no norm.
Rat simple_norm_sq(const ProductAlgebra& alg, const std::vector<Weight>& blocks) {
  Rat total(0);
  for (size_t f = 0; f < alg.factors().size(); ++f) {
    const Simple& s = alg.factors()[f];
    if (s.is_u1()) continue;
    RatMat g = quadratic_form(s);
    const Weight& b = blocks[f];
    for (int i = 0; i < s.rank; ++i) {
      if (b[i].is_zero()) continue;
      for (int j = 0; j < s.rank; ++j) {
        if (!b[j].is_zero()) total += b[i] * g[i][j] * b[j];
      }
    }
  }
  return total;
}

unsigned long long entry_orbit_size(const ProductAlgebra& alg,
                                    const std::vector<Weight>& blocks) {
  unsigned long long size = 1;
  for (size_t f = 0; f < alg.factors().size(); ++f) {
    const Simple& s = alg.factors()[f];
    if (s.is_u1()) continue;
    size *= orbit_size(ProductAlgebra(s), blocks[f]);
  }
  return size;
}

}  // namespace

Weight BranchEntry::flat() const {
  Weight w;
  for (const Weight& b : factors) w.insert(w.end(), b.begin(), b.end());
  return w;
}

Rat BranchingResult::target_index_sum() const {
  if (!target.is_semisimple()) {
    throw Error("second degree indices need a semisimple target; '" +
                target.str() + "' contains U1");
  }
  Rat total(0);
  for (const BranchEntry& e : entries) {
    Rat norm = simple_norm_sq(target, e.factors);
    Rat size(static_cast<long long>(entry_orbit_size(target, e.factors)));
    total += Rat(e.multiplicity) * norm * size;
  }
  return total;
}

BranchingResult make_branching_result(const Simple& source,
                                      const ProductAlgebra& target,
                                      const Weight& dominant,
                                      unsigned long long source_orbit_size,
                                      std::vector<BranchEntry> entries) {
  BranchingResult result{source, target, dominant, source_orbit_size,
                         std::move(entries), 0};
  struct SortKey {
    Rat norm;
    Weight flat;
  };
  std::vector<SortKey> keys;
  keys.reserve(result.entries.size());
  for (const BranchEntry& e : result.entries) {
    keys.push_back({simple_norm_sq(target, e.factors), e.flat()});
  }
  std::vector<size_t> order(result.entries.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (keys[a].norm != keys[b].norm) return keys[b].norm < keys[a].norm;
    return lex_less(keys[b].flat, keys[a].flat);
  });
  std::vector<BranchEntry> sorted;
  sorted.reserve(result.entries.size());
  for (size_t i : order) sorted.push_back(std::move(result.entries[i]));
  result.entries = std::move(sorted);

  for (const BranchEntry& e : result.entries) {
    if (e.multiplicity <= 0) throw Error("nonpositive multiplicity in decomposition");
    result.decomposed_size += static_cast<unsigned long long>(e.multiplicity) *
                              entry_orbit_size(target, e.factors);
  }
  if (result.decomposed_size != result.source_orbit_size) {
    throw Error("orbit size conservation failed for " + source.str() + ">" +
                target.str() + " at " + render_weight(dominant) + ": " +
                std::to_string(result.decomposed_size) + " decomposed vs " +
                std::to_string(result.source_orbit_size) + " source points");
  }
  return result;
}

BranchingResult branch(const ProjectionMap& p, const Weight& dominant) {
  ProductAlgebra source_alg(p.source);
  if (!is_dominant(source_alg, dominant)) {
    throw Error("weight " + render_weight(dominant) +
                " is not dominant for " + p.source.str() +
                "; apply dominant_of first");
  }
  Orbit orbit = orbit_points(source_alg, dominant);

  std::map<Weight, long long, decltype(&lex_less)> counts(&lex_less);
  for (const Weight& point : orbit.points) {
    Weight image = p.apply(point);
    if (is_dominant(p.target, image)) ++counts[image];
  }

  std::vector<BranchEntry> entries;
  entries.reserve(counts.size());
  for (const auto& [image, count] : counts) {
    entries.push_back({split_blocks(p.target, image), count});
  }
  return make_branching_result(p.source, p.target, dominant,
                               orbit.points.size(), std::move(entries));
}

Rat gamma(const ProjectionMap& p, const std::vector<Weight>& probes) {
  if (p.subjoining) {
    throw Error(p.key() + " is a subjoining; the index ratio is not tracked");
  }
  if (!p.target.is_semisimple()) {
    throw Error("index ratio needs a semisimple target; '" + p.target.str() +
                "' contains U1");
  }
  ProductAlgebra source_alg(p.source);
  std::vector<Rat> values;
  for (const Weight& probe : probes) {
    bool zero = true;
    for (const Rat& v : probe) zero = zero && v.is_zero();
    if (zero) continue;
    BranchingResult result = branch(p, probe);
    Rat source_index = norm_sq(source_alg, probe) *
                       Rat(static_cast<long long>(result.source_orbit_size));
    Rat target_sum = result.target_index_sum();
    if (target_sum.is_zero()) {
      throw Error("degenerate probe " + render_weight(probe) + " for " + p.key());
    }
    values.push_back(source_index / target_sum);
  }
  if (values.size() < 2) {
    throw Error("index ratio needs at least two nonzero probe orbits");
  }
  for (const Rat& v : values) {
    if (v != values.front()) {
      throw Error("index ratio is probe dependent for " + p.key() + ": " +
                  values.front().str() + " vs " + v.str());
    }
  }
  return values.front();
}

std::vector<Weight> standard_probes(const Simple& source) {
  int n = source.rank;
  std::vector<Weight> probes;
  auto add = [&](int pos, long long v) {
    Weight w(n, Rat(0));
    w[pos] = Rat(v);
    for (const Weight& seen : probes) {
      if (seen == w) return;
    }
    probes.push_back(std::move(w));
  };
  add(0, 2);
  if (n >= 2) add(1, 3);
  add(n - 1, 5);
  return probes;
}

}  // namespace weyl
