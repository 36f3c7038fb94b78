#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weyl {

/// Exact rational number on 64-bit numerator/denominator.
///
/// Every value is kept normalized: denominator > 0 and gcd(|num|, den) == 1.
/// Intermediate products are evaluated in 128 bits; a result that does not
/// fit back into 64 bits after reduction throws std::overflow_error. All
/// quantities in this library (weight coordinates, norms, indices) stay far
/// below that bound.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(long long n, long long d);

  /// Parses "p", "-p", "p/q". Throws std::invalid_argument on bad input.
  static Rat parse(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  size_t hash() const {
    auto mix = [](uint64_t x) {
      x += 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      return x ^ (x >> 31);
    };
    return static_cast<size_t>(mix(static_cast<uint64_t>(num_)) ^
                               mix(static_cast<uint64_t>(den_) << 1));
  }

 private:
  static Rat make_reduced(__int128 n, __int128 d);

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace weyl

template <>
struct std::hash<weyl::Rat> {
  size_t operator()(const weyl::Rat& r) const { return r.hash(); }
};
