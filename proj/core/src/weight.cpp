#include "weyl/weight.hpp"

#include "weyl/algebra.hpp"

namespace weyl {

Weight parse_weight(std::string_view text,
                    const std::vector<std::pair<std::string, Rat>>& params) {
  Weight w;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    if (tok.empty()) throw Error("empty weight coordinate in '" + std::string(text) + "'");
    bool symbolic = tok.size() == 1 && tok[0] >= 'a' && tok[0] <= 'z';
    if (symbolic) {
      const Rat* found = nullptr;
      for (const auto& [name, value] : params) {
        if (name == tok) found = &value;
      }
      if (!found) throw Error("unbound parameter '" + std::string(tok) + "'");
      w.push_back(*found);
    } else {
      try {
        w.push_back(Rat::parse(tok));
      } catch (const std::exception&) {
        throw Error("bad weight coordinate '" + std::string(tok) + "'");
      }
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return w;
}

std::string render_weight(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += w[i].str();
  }
  s += ')';
  return s;
}

bool lex_less(const Weight& a, const Weight& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

}  // namespace weyl
