#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

/// A point of weight space in the omega basis: exact rational coordinates,
/// one block per factor of the owning (product) algebra. U1 coordinates are
/// plain rational labels.
using Weight = std::vector<Rat>;

/// Parses "1,0,-2" or "1/2,0,c" style text. Single-letter symbols are
/// substituted from `params` (pairs like {"a", 2}); an unknown symbol or a
/// malformed coordinate throws.
Weight parse_weight(std::string_view text,
                    const std::vector<std::pair<std::string, Rat>>& params = {});

/// "(1,0,-2)" — comma separated rationals in parentheses.
std::string render_weight(const Weight& w);

struct WeightHash {
  size_t operator()(const Weight& w) const {
    size_t h = 0x243f6a8885a308d3ULL;
    for (const Rat& r : w) h = (h * 0x100000001b3ULL) ^ r.hash();
    return h;
  }
};

/// Lexicographic comparison; orbit listings are sorted descending.
bool lex_less(const Weight& a, const Weight& b);

}  // namespace weyl
