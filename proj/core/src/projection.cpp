#include "weyl/projection.hpp"

namespace weyl {

ProjectionMap::ProjectionMap(Simple src, ProductAlgebra tgt, IntMat m, bool subj)
    : source(std::move(src)),
      target(std::move(tgt)),
      matrix(std::move(m)),
      subjoining(subj) {
  if (static_cast<int>(matrix.size()) != target.rank()) {
    throw Error(key() + ": matrix has " + std::to_string(matrix.size()) +
                " rows, target rank is " + std::to_string(target.rank()));
  }
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != source.rank) {
      throw Error(key() + ": row width " + std::to_string(row.size()) +
                  " does not match source rank " + std::to_string(source.rank));
    }
  }
}

Weight ProjectionMap::apply(const Weight& w) const {
  if (static_cast<int>(w.size()) != source.rank) {
    throw Error(key() + ": weight length does not match source rank");
  }
  Weight out(matrix.size(), Rat(0));
  for (size_t i = 0; i < matrix.size(); ++i) {
    for (size_t j = 0; j < w.size(); ++j) {
      if (matrix[i][j] != 0 && !w[j].is_zero()) {
        out[i] += Rat(matrix[i][j]) * w[j];
      }
    }
  }
  return out;
}

ProjectionMap compose(const ProjectionMap& outer, const ProjectionMap& inner) {
  if (inner.target.factors().size() != 1 ||
      inner.target.single() != outer.source) {
    throw Error("cannot compose " + outer.key() + " after " + inner.key() +
                ": intermediate must be the unique simple factor of the inner target");
  }
  return ProjectionMap(inner.source, outer.target,
                       int_mul(outer.matrix, inner.matrix),
                       outer.subjoining || inner.subjoining);
}

RatMat invert(const ProjectionMap& p) {
  if (p.target.rank() != p.source.rank) {
    throw Error(p.key() + " is not an equal-rank map; cannot invert");
  }
  return rat_inverse(rat_from_int(p.matrix));
}

RatMat relate(const ProjectionMap& equal_rank, const ProjectionMap& other) {
  if (equal_rank.source != other.source) {
    throw Error("relate needs maps sharing the source algebra; got " +
                equal_rank.key() + " and " + other.key());
  }
  return rat_mul(rat_from_int(other.matrix), invert(equal_rank));
}

ProjectionMap from_branching_pairs(
    const Simple& source, const ProductAlgebra& target,
    const std::vector<std::pair<Weight, Weight>>& pairs) {
  int n = source.rank;
  int m = target.rank();
  if (static_cast<int>(pairs.size()) < n) {
    throw Error("need at least " + std::to_string(n) +
                " branching pairs to determine the matrix");
  }
  for (const auto& [src, tgt] : pairs) {
    if (static_cast<int>(src.size()) != n || static_cast<int>(tgt.size()) != m) {
      throw Error("branching pair lengths do not match " + source.str() + ">" +
                  target.str());
    }
  }

  // Select n linearly independent source weights by rational elimination.
  RatMat basis;          // reduced rows
  std::vector<size_t> chosen;
  for (size_t idx = 0; idx < pairs.size() && basis.size() < size_t(n); ++idx) {
    std::vector<Rat> row = pairs[idx].first;
    std::vector<Rat> work = row;
    for (const auto& b : basis) {
      int lead = -1;
      for (int j = 0; j < n; ++j) {
        if (!b[j].is_zero()) {
          lead = j;
          break;
        }
      }
      if (lead >= 0 && !work[lead].is_zero()) {
        Rat f = work[lead] / b[lead];
        for (int j = 0; j < n; ++j) work[j] -= f * b[j];
      }
    }
    bool nonzero = false;
    for (const Rat& v : work) nonzero = nonzero || !v.is_zero();
    if (nonzero) {
      basis.push_back(work);
      chosen.push_back(idx);
    }
  }
  if (basis.size() < size_t(n)) {
    throw Error("branching pairs are span deficient: need " + std::to_string(n) +
                " independent source weights, found " +
                std::to_string(basis.size()));
  }

  // Solve row-by-row: P * S = T with S columns the chosen source weights.
  RatMat s(n, std::vector<Rat>(n));
  for (int col = 0; col < n; ++col) {
    for (int r = 0; r < n; ++r) s[r][col] = pairs[chosen[col]].first[r];
  }
  RatMat sinv = rat_inverse(s);
  IntMat result(m, std::vector<long long>(n, 0));
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) {
      Rat entry(0);
      for (int col = 0; col < n; ++col) {
        entry += pairs[chosen[col]].second[r] * sinv[col][j];
      }
      if (!entry.is_integer()) {
        throw Error("branching pairs give a non-integer matrix entry " +
                    entry.str() + " at row " + std::to_string(r + 1) +
                    ", column " + std::to_string(j + 1));
      }
      result[r][j] = entry.num();
    }
  }

  ProjectionMap map(source, target, std::move(result));
  for (const auto& [src, tgt] : pairs) {
    if (map.apply(src) != tgt) {
      throw Error("branching pairs are inconsistent: " + render_weight(src) +
                  " does not map onto " + render_weight(tgt));
    }
  }
  return map;
}

}  // namespace weyl
