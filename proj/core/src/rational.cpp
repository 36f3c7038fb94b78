#include "weyl/rational.hpp"

#include <charconv>
#include <limits>

namespace weyl {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(__int128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<long long>(v);
}

long long parse_ll(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad rational: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Rat Rat::make_reduced(__int128 n, __int128 d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rat r;
  r.num_ = narrow(n);
  r.den_ = narrow(d);
  return r;
}

Rat::Rat(long long n, long long d) { *this = make_reduced(n, d); }

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_ll(text));
  long long n = parse_ll(text.substr(0, slash));
  long long d = parse_ll(text.substr(slash + 1));
  return Rat(n, d);
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  *this = make_reduced(static_cast<__int128>(num_) * o.den_ +
                           static_cast<__int128>(o.num_) * den_,
                       static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  *this = make_reduced(static_cast<__int128>(num_) * o.num_,
                       static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw std::domain_error("division by zero rational");
  *this = make_reduced(static_cast<__int128>(num_) * o.den_,
                       static_cast<__int128>(den_) * o.num_);
  return *this;
}

bool operator<(const Rat& a, const Rat& b) {
  return static_cast<__int128>(a.num_) * b.den_ <
         static_cast<__int128>(b.num_) * a.den_;
}

std::string Rat::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) {
    s += '/';
    s += std::to_string(den_);
  }
  return s;
}

}  // namespace weyl
