#include "weyl/series.hpp"

namespace weyl {

namespace {

/// Rows of a leading m x m identity padded to width n, followed by the tail
/// block placed in the last `width(tail)` columns.
IntMat with_leading_identity(int n, int m, const IntMat& tail) {
  IntMat out;
  for (int i = 0; i < m; ++i) {
    std::vector<long long> row(n, 0);
    row[i] = 1;
    out.push_back(std::move(row));
  }
  for (const auto& trow : tail) {
    std::vector<long long> row(n, 0);
    int shift = n - static_cast<int>(trow.size());
    for (size_t j = 0; j < trow.size(); ++j) row[shift + j] = trow[j];
    out.push_back(std::move(row));
  }
  return out;
}

/// Staircase row of width `w` with given entries starting at 1-based
/// position `pos`.
std::vector<long long> at(int w, int pos, std::initializer_list<long long> vals) {
  std::vector<long long> row(w, 0);
  int j = pos - 1;
  for (long long v : vals) row[j++] = v;
  return row;
}

Simple simple_or_a1(Family fam, int rank) {
  // C1 and B1 coincide with A1 (same Cartan matrix and normalization).
  if (rank == 1) return Simple(Family::A, 1);
  return Simple(fam, rank);
}

void require(bool ok, const SeriesKey& key, const char* range) {
  if (!ok) {
    throw Error(std::string("series ") + series_name(key.id) + " needs " +
                range + "; got n=" + std::to_string(key.n) +
                (key.k ? ", k=" + std::to_string(key.k) : ""));
  }
}

}  // namespace

const char* series_name(SeriesId id) {
  switch (id) {
    case SeriesId::BtoBU1: return "Bn>Bn-1xU1";
    case SeriesId::BtoD: return "Bn>Dn";
    case SeriesId::BtoDA1: return "Bn>Dn-1xA1";
    case SeriesId::BtoB2A1: return "Bn>Bn-2x2A1";
    case SeriesId::BtoBA3: return "Bn>Bn-3xA3";
    case SeriesId::BtoBD: return "Bn>Bn-kxDk";
    case SeriesId::BtoDB: return "Bn>Dn-kxBk";
    case SeriesId::BtoA1: return "Bn>A1";
    case SeriesId::CtoAU1: return "Cn>An-1xU1";
    case SeriesId::CtoCA1: return "Cn>Cn-1xA1";
    case SeriesId::CtoCC: return "Cn>Cn-kxCk";
    case SeriesId::CtoA1: return "Cn>A1";
    case SeriesId::DtoAU1: return "Dn>An-1xU1";
    case SeriesId::DtoDU1: return "Dn>Dn-1xU1";
    case SeriesId::DtoB: return "Dn>Bn-1";
    case SeriesId::DtoBA1: return "Dn>Bn-2xA1";
    case SeriesId::DtoBB: return "Dn>Bn-k-1xBk";
    case SeriesId::DtoD2A1: return "Dn>Dn-2x2A1";
    case SeriesId::DtoDA3: return "Dn>Dn-3xA3";
    case SeriesId::DtoDD: return "Dn>Dn-kxDk";
  }
  return "?";
}

std::string SeriesKey::str() const {
  std::string s = series_name(id);
  s += " n=" + std::to_string(n);
  if (k) s += " k=" + std::to_string(k);
  return s;
}

void check_series_key(const SeriesKey& key) {
  int n = key.n, k = key.k;
  switch (key.id) {
    case SeriesId::BtoBU1: require(n >= 3, key, "n >= 3"); break;
    case SeriesId::BtoD: require(n >= 4, key, "n >= 4"); break;
    case SeriesId::BtoDA1: require(n >= 5, key, "n >= 5"); break;
    case SeriesId::BtoB2A1: require(n >= 4, key, "n >= 4"); break;
    case SeriesId::BtoBA3: require(n >= 6, key, "n >= 6"); break;
    case SeriesId::BtoBD: require(k >= 4 && n - k >= k, key, "n-k >= k >= 4"); break;
    case SeriesId::BtoDB:
      require(k >= 2 && n - k > k && n - k >= 4, key, "n-k > k >= 2, n-k >= 4");
      break;
    case SeriesId::BtoA1: require(n >= 3, key, "n >= 3"); break;
    case SeriesId::CtoAU1: require(n >= 2, key, "n >= 2"); break;
    case SeriesId::CtoCA1: require(n >= 2, key, "n >= 2"); break;
    case SeriesId::CtoCC: require(k >= 2 && n - k >= k, key, "n-k >= k >= 2"); break;
    case SeriesId::CtoA1: require(n >= 2, key, "n >= 2"); break;
    case SeriesId::DtoAU1: require(n >= 4, key, "n >= 4"); break;
    case SeriesId::DtoDU1: require(n >= 5, key, "n >= 5"); break;
    case SeriesId::DtoB: require(n >= 4, key, "n >= 4"); break;
    case SeriesId::DtoBA1: require(n >= 4, key, "n >= 4"); break;
    case SeriesId::DtoBB:
      require(k >= 2 && n - k - 1 >= k && n >= 5, key, "n-k-1 >= k >= 2, n >= 5");
      break;
    case SeriesId::DtoD2A1: require(n >= 6, key, "n >= 6"); break;
    case SeriesId::DtoDA3: require(n >= 7, key, "n >= 7"); break;
    case SeriesId::DtoDD: require(k >= 4 && n - k >= k, key, "n-k >= k >= 4"); break;
  }
}

ProjectionMap series_matrix(const SeriesKey& key) {
  check_series_key(key);
  int n = key.n, k = key.k;
  auto B = [](int r) { return simple_or_a1(Family::B, r); };
  auto C = [](int r) { return simple_or_a1(Family::C, r); };
  auto D = [](int r) { return Simple(Family::D, r); };
  auto A = [](int r) { return Simple(Family::A, r); };
  Simple u1(Family::U1, 1);
  Simple a1(Family::A, 1);

  switch (key.id) {
    case SeriesId::BtoBU1:
      return {B(n), ProductAlgebra({B(n - 1), u1}),
              with_leading_identity(n, n - 2, {{2, 1}, {0, 1}})};
    case SeriesId::BtoD:
      return {B(n), ProductAlgebra({D(n)}),
              with_leading_identity(n, n - 2, {{1, 0}, {1, 1}})};
    case SeriesId::BtoDA1:
      return {B(n), ProductAlgebra({D(n - 1), a1}),
              with_leading_identity(n, n - 3, {{1, 1, 0}, {1, 1, 1}, {0, 2, 1}})};
    case SeriesId::BtoB2A1:
      return {B(n), ProductAlgebra({B(n - 2), a1, a1}),
              with_leading_identity(
                  n, n - 4,
                  {{1, 1, 0, 0}, {0, 0, 2, 1}, {0, 1, 1, 0}, {0, 1, 1, 1}})};
    case SeriesId::BtoBA3:
      return {B(n), ProductAlgebra({B(n - 3), A(3)}),
              with_leading_identity(n, n - 6,
                                    {{1, 1, 0, 0, 0, 0},
                                     {0, 0, 1, 1, 0, 0},
                                     {0, 0, 0, 0, 2, 1},
                                     {0, 0, 0, 1, 1, 0},
                                     {0, 1, 1, 0, 0, 0},
                                     {0, 0, 0, 1, 1, 1}})};
    case SeriesId::BtoBD: {
      int w = 2 * k;
      IntMat tail;
      for (int j = 1; j <= k - 1; ++j) tail.push_back(at(w, 2 * j - 1, {1, 1}));
      tail.push_back(at(w, 2 * k - 1, {2, 1}));
      for (int j = 1; j <= k - 1; ++j) tail.push_back(at(w, 2 * j, {1, 1}));
      tail.push_back(at(w, 2 * k - 2, {1, 1, 1}));
      return {B(n), ProductAlgebra({B(n - k), D(k)}),
              with_leading_identity(n, n - 2 * k, tail)};
    }
    case SeriesId::BtoDB: {
      int w = 2 * k + 1;
      IntMat tail;
      for (int j = 1; j <= k - 1; ++j) tail.push_back(at(w, 2 * j - 1, {1, 1}));
      tail.push_back(at(w, 2 * k - 1, {1, 1}));
      tail.push_back(at(w, 2 * k - 1, {1, 1, 1}));
      for (int j = 1; j <= k - 1; ++j) tail.push_back(at(w, 2 * j, {1, 1}));
      tail.push_back(at(w, 2 * k, {2, 1}));
      return {B(n), ProductAlgebra({D(n - k), B(k)}),
              with_leading_identity(n, n - 2 * k - 1, tail)};
    }
    case SeriesId::BtoA1: {
      std::vector<long long> row(n);
      for (int i = 1; i <= n - 1; ++i) {
        row[i - 1] = static_cast<long long>(i) * (2 * n - i + 1);
      }
      row[n - 1] = static_cast<long long>(n + 2) * (n - 1) / 2 + 1;
      return {B(n), ProductAlgebra({a1}), {row}};
    }
    case SeriesId::CtoAU1: {
      IntMat rows;
      if (n % 2 == 0) {
        int m = n / 2;
        for (int j = 1; j <= m - 1; ++j) rows.push_back(at(n, 2 * j - 1, {1, 1}));
        rows.push_back(at(n, 2 * m - 1, {1, 2}));
        for (int j = 1; j <= m - 1; ++j) {
          rows.push_back(at(n, 2 * m - 2 * j, {1, 1}));
        }
        std::vector<long long> u(n, 0);
        for (int p = 1; p <= 2 * m - 1; p += 2) u[p - 1] = 1;
        rows.push_back(u);
      } else {
        int m = (n - 1) / 2;
        for (int j = 1; j <= m; ++j) rows.push_back(at(n, 2 * j - 1, {1, 1}));
        rows.push_back(at(n, 2 * m, {1, 2}));
        for (int j = 1; j <= m - 1; ++j) {
          rows.push_back(at(n, 2 * m - 2 * j, {1, 1}));
        }
        std::vector<long long> u(n, 0);
        for (int p = 1; p <= 2 * m + 1; p += 2) u[p - 1] = 1;
        rows.push_back(u);
      }
      return {C(n), ProductAlgebra({A(n - 1), u1}), rows};
    }
    case SeriesId::CtoCA1:
      return {C(n), ProductAlgebra({C(n - 1), a1}),
              with_leading_identity(n, n - 2, {{1, 1}, {0, 1}})};
    case SeriesId::CtoCC: {
      int w = 2 * k;
      IntMat tail;
      for (int j = 1; j <= k - 1; ++j) tail.push_back(at(w, 2 * j - 1, {1, 1}));
      tail.push_back(at(w, 2 * k - 1, {1, 1}));
      for (int j = 1; j <= k - 1; ++j) tail.push_back(at(w, 2 * j, {1, 1}));
      tail.push_back(at(w, 2 * k, {1}));
      return {C(n), ProductAlgebra({C(n - k), C(k)}),
              with_leading_identity(n, n - 2 * k, tail)};
    }
    case SeriesId::CtoA1: {
      std::vector<long long> row(n);
      for (int i = 1; i <= n; ++i) row[i - 1] = static_cast<long long>(i) * (2 * n - i);
      return {C(n), ProductAlgebra({a1}), {row}};
    }
    case SeriesId::DtoAU1: {
      IntMat rows;
      if (n % 2 == 0) {
        int m = n / 2;
        for (int j = 1; j <= m - 1; ++j) rows.push_back(at(n, 2 * j - 1, {1, 1}));
        rows.push_back(at(n, 2 * m, {1}));
        for (int j = 1; j <= m - 1; ++j) {
          rows.push_back(at(n, 2 * m - 2 * j, {1, 1}));
        }
        std::vector<long long> u(n, 0);
        for (int p = 1; p <= 2 * m - 1; p += 2) u[p - 1] = 1;
        rows.push_back(u);
      } else {
        int m = (n - 1) / 2;
        for (int j = 1; j <= m; ++j) rows.push_back(at(n, 2 * j - 1, {1, 1}));
        rows.push_back(at(n, 2 * m + 1, {1}));
        for (int j = 1; j <= m - 1; ++j) {
          rows.push_back(at(n, 2 * m - 2 * j, {1, 1}));
        }
        std::vector<long long> u(n, 0);
        for (int p = 1; p <= 2 * m - 1; p += 2) u[p - 1] = 2;
        u[2 * m - 1] = -1;
        u[2 * m] = 1;
        rows.push_back(u);
      }
      return {D(n), ProductAlgebra({A(n - 1), u1}), rows};
    }
    case SeriesId::DtoDU1:
      return {D(n), ProductAlgebra({D(n - 1), u1}),
              with_leading_identity(n, n - 3, {{1, 0, 0}, {1, 1, 1}, {0, 1, -1}})};
    case SeriesId::DtoB:
      return {D(n), ProductAlgebra({B(n - 1)}),
              with_leading_identity(n, n - 2, {{1, 1}})};
    case SeriesId::DtoBA1:
      return {D(n), ProductAlgebra({B(n - 2), a1}),
              with_leading_identity(n, n - 3, {{2, 1, 1}, {0, 1, 1}})};
    case SeriesId::DtoBB: {
      int w = 2 * k + 1;
      IntMat tail;
      for (int j = 1; j <= k - 1; ++j) tail.push_back(at(w, 2 * j - 1, {1, 1}));
      tail.push_back(at(w, 2 * k - 1, {2, 1, 1}));
      for (int j = 1; j <= k - 1; ++j) tail.push_back(at(w, 2 * j, {1, 1}));
      tail.push_back(at(w, 2 * k, {1, 1}));
      return {D(n), ProductAlgebra({B(n - k - 1), B(k)}),
              with_leading_identity(n, n - 2 * k - 1, tail)};
    }
    case SeriesId::DtoD2A1:
      return {D(n), ProductAlgebra({D(n - 2), a1, a1}),
              with_leading_identity(n, n - 5,
                                    {{1, 1, 0, 0, 0},
                                     {0, 0, 1, 1, 0},
                                     {0, 0, 1, 0, 1},
                                     {0, 1, 1, 1, 1},
                                     {0, 1, 1, 0, 0}})};
    case SeriesId::DtoDA3:
      return {D(n), ProductAlgebra({D(n - 3), A(3)}),
              with_leading_identity(n, n - 7,
                                    {{1, 1, 0, 0, 0, 0, 0},
                                     {0, 0, 1, 1, 0, 0, 0},
                                     {0, 0, 0, 0, 1, 1, 0},
                                     {0, 0, 0, 0, 1, 0, 1},
                                     {0, 0, 0, 1, 1, 0, 0},
                                     {0, 1, 1, 0, 0, 0, 0},
                                     {0, 0, 0, 1, 1, 1, 1}})};
    case SeriesId::DtoDD: {
      int w = 2 * k;
      IntMat tail;
      for (int j = 1; j <= k - 1; ++j) tail.push_back(at(w, 2 * j - 1, {1, 1}));
      tail.push_back(at(w, 2 * k - 3, {1, 1, 1, 1}));
      for (int j = 1; j <= k - 1; ++j) tail.push_back(at(w, 2 * j, {1, 1}));
      tail.push_back(at(w, 2 * k - 2, {1, 0, 1}));
      return {D(n), ProductAlgebra({D(n - k), D(k)}),
              with_leading_identity(n, n - 2 * k, tail)};
    }
  }
  throw Error("unknown series id");
}

std::optional<Rat> series_gamma(const SeriesKey& key) {
  check_series_key(key);
  long long n = key.n;
  switch (key.id) {
    case SeriesId::BtoBU1:
    case SeriesId::CtoAU1:
    case SeriesId::DtoAU1:
    case SeriesId::DtoDU1:
      return std::nullopt;
    case SeriesId::BtoD:
    case SeriesId::BtoB2A1:
    case SeriesId::BtoBA3:
    case SeriesId::BtoBD:
    case SeriesId::BtoDB:
    case SeriesId::CtoCA1:
    case SeriesId::CtoCC:
    case SeriesId::DtoBA1:
    case SeriesId::DtoD2A1:
    case SeriesId::DtoDA3:
    case SeriesId::DtoDD:
      return Rat(1);
    case SeriesId::BtoDA1:
      return Rat(n, n + 1);
    case SeriesId::DtoB:
    case SeriesId::DtoBB:
      return Rat(n, n - 1);
    case SeriesId::BtoA1: {
      long long s = 0;
      for (long long i = 1; i <= n; ++i) s += i * i;
      return Rat(n, 2 * s);
    }
    case SeriesId::CtoA1: {
      long long s = 0;
      for (long long i = 1; i <= n; ++i) s += (2 * i - 1) * (2 * i - 1);
      return Rat(n, s);
    }
  }
  return std::nullopt;
}

std::vector<SeriesKey> series_instances(int max_rank) {
  std::vector<SeriesKey> keys;
  auto add_range = [&](SeriesId id, int lo) {
    for (int n = lo; n <= max_rank; ++n) keys.push_back({id, n});
  };
  auto add_split = [&](SeriesId id, int lo) {
    for (int n = lo; n <= max_rank; ++n) {
      for (int k = 2; k <= n; ++k) {
        SeriesKey key{id, n, k};
        try {
          check_series_key(key);
        } catch (const Error&) {
          continue;
        }
        keys.push_back(key);
      }
    }
  };
  add_range(SeriesId::BtoBU1, 3);
  add_range(SeriesId::BtoD, 4);
  add_range(SeriesId::BtoDA1, 5);
  add_range(SeriesId::BtoB2A1, 4);
  add_range(SeriesId::BtoBA3, 6);
  add_split(SeriesId::BtoBD, 8);
  add_split(SeriesId::BtoDB, 6);
  add_range(SeriesId::BtoA1, 3);
  add_range(SeriesId::CtoAU1, 2);
  add_range(SeriesId::CtoCA1, 2);
  add_split(SeriesId::CtoCC, 4);
  add_range(SeriesId::CtoA1, 2);
  add_range(SeriesId::DtoAU1, 4);
  add_range(SeriesId::DtoDU1, 5);
  add_range(SeriesId::DtoB, 4);
  add_range(SeriesId::DtoBA1, 4);
  add_split(SeriesId::DtoBB, 5);
  add_range(SeriesId::DtoD2A1, 6);
  add_range(SeriesId::DtoDA3, 7);
  add_split(SeriesId::DtoDD, 8);
  return keys;
}

}  // namespace weyl
