#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weyl {

/// Domain error raised by the engine (bad input, unsupported operation,
/// resource guard). The CLI maps it to exit status 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class Family { A, B, C, D, G2, U1 };

char family_letter(Family f);

/// A simple Lie algebra tag (or the one-parameter U1 ideal).
///
/// Admissible ranks: A >= 1, B >= 2, C >= 2, D >= 3, G2 == 2, U1 == 1.
/// D3 is accepted as the renumbered image of A3; its Cartan matrix carries
/// the fork numbering (node 3 attached to node 1).
struct Simple {
  Family family;
  int rank;

  Simple(Family f, int r);

  bool is_u1() const { return family == Family::U1; }
  std::string str() const;

  friend bool operator==(const Simple& a, const Simple& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  friend bool operator!=(const Simple& a, const Simple& b) { return !(a == b); }
};

/// An ordered product of simple factors and U1 factors. Weight coordinate
/// blocks are assigned to factors left to right.
class ProductAlgebra {
 public:
  explicit ProductAlgebra(std::vector<Simple> factors);
  ProductAlgebra(const Simple& s) : ProductAlgebra(std::vector<Simple>{s}) {}  // NOLINT

  /// Grammar: FACTOR ("x" FACTOR)*, FACTOR = [multiplicity]LETTER rank,
  /// e.g. "B3", "C2xU1", "3A1", "C2x2A1".
  static ProductAlgebra parse(std::string_view text);

  const std::vector<Simple>& factors() const { return factors_; }
  int rank() const { return rank_; }
  bool is_simple() const { return factors_.size() == 1 && !factors_[0].is_u1(); }
  bool is_semisimple() const;  // no U1 factor
  const Simple& single() const;  // the unique factor; throws if not simple

  /// Offset of factor i's coordinate block.
  int block_offset(size_t i) const { return offsets_[i]; }

  /// Renders with multiplicity compression of equal consecutive factors:
  /// [A1,A1,A1] -> "3A1", [C2,A1,A1] -> "C2x2A1".
  std::string str() const;

  friend bool operator==(const ProductAlgebra& a, const ProductAlgebra& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const ProductAlgebra& a, const ProductAlgebra& b) {
    return !(a == b);
  }

 private:
  std::vector<Simple> factors_;
  std::vector<int> offsets_;
  int rank_ = 0;
};

}  // namespace weyl
