#include "weyl/matrix.hpp"

#include "weyl/algebra.hpp"

namespace weyl {

IntMat int_identity(int n) {
  IntMat m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
  size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  if (!a.empty() && a[0].size() != inner) throw Error("matrix shape mismatch");
  IntMat r(rows, std::vector<long long>(cols, 0));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k)
      for (size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

RatMat rat_from_int(const IntMat& m) {
  RatMat r(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    r[i].reserve(m[i].size());
    for (long long v : m[i]) r[i].emplace_back(v);
  }
  return r;
}

RatMat rat_identity(int n) {
  RatMat m(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
  size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  if (!a.empty() && a[0].size() != inner) throw Error("matrix shape mismatch");
  RatMat r(rows, std::vector<Rat>(cols, Rat(0)));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

RatMat rat_inverse(const RatMat& m) {
  size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error("cannot invert a non-square matrix");
  }
  RatMat a = m;
  RatMat inv = rat_identity(static_cast<int>(n));
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw Error("singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rat p = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      Rat f = a[i][col];
      for (size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

bool rat_equal(const RatMat& a, const RatMat& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace weyl
