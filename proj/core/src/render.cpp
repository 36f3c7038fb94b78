#include "weyl/render.hpp"

namespace weyl {

std::string render_entry(const BranchEntry& entry) {
  std::string s;
  for (const Weight& block : entry.factors) s += render_weight(block);
  return s;
}

std::string render_branching(const BranchingResult& result) {
  std::string s;
  for (const BranchEntry& e : result.entries) {
    if (!s.empty()) s += '+';
    if (e.multiplicity != 1) s += std::to_string(e.multiplicity);
    s += render_entry(e);
  }
  return s;
}

std::string render_matrix(const IntMat& m) {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += '\n';
    for (size_t j = 0; j < m[i].size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(m[i][j]);
    }
  }
  return s;
}

std::string render_matrix(const RatMat& m) {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += '\n';
    for (size_t j = 0; j < m[i].size(); ++j) {
      if (j) s += ' ';
      s += m[i][j].str();
    }
  }
  return s;
}

}  // namespace weyl
