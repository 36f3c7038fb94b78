#include "weyl/algebra.hpp"

#include <cctype>
#include <charconv>

namespace weyl {

namespace {

// 2^16 * 16! still fits the 64-bit Weyl orders the orbit engine relies on.
constexpr int kMaxRank = 16;

void check_rank(Family f, int r) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 3; break;
    case Family::G2: ok = r == 2; break;
    case Family::U1: ok = r == 1; break;
  }
  if (!ok || r > kMaxRank) {
    throw Error("rank " + std::to_string(r) + " out of range for family " +
                std::string(1, family_letter(f)));
  }
}

}  // namespace

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::G2: return 'G';
    case Family::U1: return 'U';
  }
  return '?';
}

Simple::Simple(Family f, int r) : family(f), rank(r) { check_rank(f, r); }

std::string Simple::str() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

ProductAlgebra::ProductAlgebra(std::vector<Simple> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error("empty algebra product");
  offsets_.reserve(factors_.size());
  for (const Simple& f : factors_) {
    offsets_.push_back(rank_);
    rank_ += f.rank;
  }
}

bool ProductAlgebra::is_semisimple() const {
  for (const Simple& f : factors_) {
    if (f.is_u1()) return false;
  }
  return true;
}

const Simple& ProductAlgebra::single() const {
  if (factors_.size() != 1) {
    throw Error("'" + str() + "' is not a single simple factor");
  }
  return factors_[0];
}

ProductAlgebra ProductAlgebra::parse(std::string_view text) {
  std::vector<Simple> factors;
  size_t pos = 0;
  auto fail = [&]() -> void {
    throw Error("cannot parse algebra '" + std::string(text) + "'");
  };
  while (pos < text.size()) {
    size_t end = text.find('x', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    if (tok.empty()) fail();

    int count = 1;
    size_t i = 0;
    if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
      size_t j = 0;
      while (j < tok.size() && std::isdigit(static_cast<unsigned char>(tok[j]))) ++j;
      if (j == tok.size()) fail();
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + j, count);
      if (ec != std::errc{} || count < 1 || count > kMaxRank) fail();
      i = j;
    }

    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[i])));
    ++i;
    Family fam;
    switch (letter) {
      case 'A': fam = Family::A; break;
      case 'B': fam = Family::B; break;
      case 'C': fam = Family::C; break;
      case 'D': fam = Family::D; break;
      case 'G': fam = Family::G2; break;
      case 'U': fam = Family::U1; break;
      default: fail(); return ProductAlgebra(std::vector<Simple>{});
    }

    if (i == tok.size()) fail();
    int rank = 0;
    auto [p, ec] = std::from_chars(tok.data() + i, tok.data() + tok.size(), rank);
    if (ec != std::errc{} || p != tok.data() + tok.size()) fail();

    for (int c = 0; c < count; ++c) factors.emplace_back(fam, rank);
    pos = end + (end < text.size() ? 1 : 0);
    if (end == text.size()) break;
    if (pos >= text.size()) fail();  // trailing 'x'
  }
  return ProductAlgebra(std::move(factors));
}

std::string ProductAlgebra::str() const {
  std::string out;
  size_t i = 0;
  while (i < factors_.size()) {
    size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (!out.empty()) out += 'x';
    size_t count = j - i;
    if (count > 1) out += std::to_string(count);
    out += factors_[i].str();
    i = j;
  }
  return out;
}

}  // namespace weyl
