#include "weyl/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace weyl {

namespace {

struct KeyParts {
  Simple source;
  ProductAlgebra target;
};

KeyParts split_key(const std::string& key) {
  auto gt = key.find('>');
  if (gt == std::string::npos) throw Error("catalog key '" + key + "' lacks '>'");
  ProductAlgebra src = ProductAlgebra::parse(key.substr(0, gt));
  return {src.single(), ProductAlgebra::parse(key.substr(gt + 1))};
}

}  // namespace

Catalog::Catalog() {
  std::istringstream in(catalog_text());
  std::string line;
  std::string pending_key;
  bool pending_subjoining = false;
  IntMat rows;

  auto flush = [&]() {
    if (pending_key.empty()) return;
    KeyParts parts = split_key(pending_key);
    ProjectionMap map(parts.source, parts.target, rows, pending_subjoining);
    if (find(pending_key) != nullptr) {
      throw Error("duplicate catalog key " + pending_key);
    }
    entries_.push_back({pending_key, std::move(map)});
    pending_key.clear();
    pending_subjoining = false;
    rows.clear();
  };

  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank
    if (first.find('>') != std::string::npos) {
      flush();
      pending_key = first;
      std::string flag;
      while (ls >> flag) {
        if (flag == "subjoining") {
          pending_subjoining = true;
        } else {
          throw Error("unknown catalog flag '" + flag + "' on " + pending_key);
        }
      }
    } else {
      if (pending_key.empty()) {
        throw Error("catalog row outside any record: '" + line + "'");
      }
      std::vector<long long> row;
      std::istringstream rs(line);
      long long v;
      while (rs >> v) row.push_back(v);
      if (rs.fail() && !rs.eof()) {
        throw Error("bad catalog row '" + line + "' in " + pending_key);
      }
      rows.push_back(std::move(row));
    }
  }
  flush();
}

const Catalog& Catalog::instance() {
  static const Catalog catalog;
  return catalog;
}

const ProjectionMap* Catalog::find(const std::string& key) const {
  for (const CatalogEntry& e : entries_) {
    if (e.key == key) return &e.map;
  }
  return nullptr;
}

const ProjectionMap& Catalog::lookup(const Simple& source,
                                     const ProductAlgebra& target) const {
  std::string key = source.str() + ">" + target.str();
  if (const ProjectionMap* map = find(key)) return *map;

  std::vector<std::string> near;
  std::string prefix = source.str() + ">";
  for (const CatalogEntry& e : entries_) {
    if (e.key.rfind(prefix, 0) == 0) near.push_back(e.key);
  }
  if (near.empty()) {
    char letter = family_letter(source.family);
    for (const CatalogEntry& e : entries_) {
      if (e.key[0] == letter) near.push_back(e.key);
    }
  }
  std::string msg = "pair " + key + " is not in the catalog";
  if (!near.empty()) {
    msg += "; nearest keys:";
    size_t shown = std::min<size_t>(near.size(), 12);
    for (size_t i = 0; i < shown; ++i) msg += " " + near[i];
  }
  throw NotInCatalog(msg);
}

std::vector<std::string> Catalog::keys() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const CatalogEntry& e : entries_) out.push_back(e.key);
  return out;
}

std::optional<Rat> tabulated_gamma(const std::string& key) {
  // Values printed beside the rank tables, plus the closed forms of the
  // general-rank series instantiated at the tabulated ranks.
  static const std::map<std::string, Rat>* table = new std::map<std::string, Rat>{
      // B2 and its C2 relabeling
      {"B2>A1", Rat(1, 5)},
      {"B2>2A1", Rat(1)},
      {"C2>A1", Rat(1, 5)},
      {"C2>2A1", Rat(1)},
      // B3
      {"B3>A3", Rat(1)},
      {"B3>G2", Rat(3, 2)},
      {"B3>3A1", Rat(3, 4)},
      {"B3>A1", Rat(3, 28)},
      {"G2>A1", Rat(1, 14)},
      // B4
      {"B4>D4", Rat(1)},
      {"B4>A3xA1", Rat(4, 5)},
      {"B4>C2x2A1", Rat(1)},
      {"B4>A1", Rat(1, 15)},
      {"B4>2A1", Rat(1, 3)},
      // B5
      {"B5>D5", Rat(1)},
      {"B5>B3x2A1", Rat(1)},
      {"B5>D4xA1", Rat(5, 6)},
      {"B5>A3xC2", Rat(1)},
      {"B5>A1", Rat(1, 22)},
      // B6
      {"B6>D6", Rat(1)},
      {"B6>B4x2A1", Rat(1)},
      {"B6>D5xA1", Rat(6, 7)},
      {"B6>B3xA3", Rat(1)},
      {"B6>D4xC2", Rat(1)},
      {"B6>A1", Rat(3, 91)},
      // B7
      {"B7>D7", Rat(1)},
      {"B7>D6xA1", Rat(7, 8)},
      {"B7>B5x2A1", Rat(1)},
      {"B7>D5xC2", Rat(1)},
      {"B7>B4xA3", Rat(1)},
      {"B7>D4xB3", Rat(1)},
      {"B7>A1", Rat(1, 40)},
      {"B7>A3", Rat(7, 12)},
      {"B7>C2xA1", Rat(7, 16)},
      // B8
      {"B8>D8", Rat(1)},
      {"B8>D7xA1", Rat(8, 9)},
      {"B8>B6x2A1", Rat(1)},
      {"B8>D6xC2", Rat(1)},
      {"B8>B5xA3", Rat(1)},
      {"B8>D5xB3", Rat(1)},
      {"B8>B4xD4", Rat(1)},
      {"B8>A1", Rat(1, 51)},
      // C3
      {"C3>C2xA1", Rat(1)},
      {"C3>A1", Rat(3, 35)},
      {"C3>2A1", Rat(3, 11)},
      // C4
      {"C4>C3xA1", Rat(1)},
      {"C4>2C2", Rat(1)},
      {"C4>A1", Rat(1, 21)},
      {"C4>3A1", Rat(1, 3)},
      // C5
      {"C5>C4xA1", Rat(1)},
      {"C5>C3xC2", Rat(1)},
      {"C5>A1", Rat(1, 33)},
      {"C5>C2xA1", Rat(5, 13)},
      // C6
      {"C6>C5xA1", Rat(1)},
      {"C6>C4xC2", Rat(1)},
      {"C6>2C3", Rat(1)},
      {"C6>A1", Rat(3, 143)},
      {"C6>A3xA1", Rat(1, 3)},
      {"C6>C2xA1", Rat(3, 11)},
      // C7
      {"C7>C6xA1", Rat(1)},
      {"C7>C5xC2", Rat(1)},
      {"C7>C4xC3", Rat(1)},
      {"C7>A1", Rat(1, 65)},
      {"C7>B3xA1", Rat(7, 19)},
      // C8
      {"C8>C7xA1", Rat(1)},
      {"C8>C6xC2", Rat(1)},
      {"C8>C5xC3", Rat(1)},
      {"C8>2C4", Rat(1)},
      {"C8>A1", Rat(1, 85)},
      {"C8>D4xA1", Rat(1, 3)},
      {"C8>C2", Rat(1, 3)},
      // D4
      {"D4>B3", Rat(4, 3)},
      {"D4>C2xA1", Rat(1)},
      {"D4>4A1", Rat(1)},
      {"D4>A2", Rat(2, 3)},
      // D5
      {"D5>B4", Rat(5, 4)},
      {"D5>B3xA1", Rat(1)},
      {"D5>2C2", Rat(5, 4)},
      {"D5>A3x2A1", Rat(1)},
      {"D5>C2", Rat(5, 6)},
      // D6
      {"D6>B5", Rat(6, 5)},
      {"D6>B4xA1", Rat(1)},
      {"D6>B3xC2", Rat(6, 5)},
      {"D6>D4x2A1", Rat(1)},
      {"D6>2A3", Rat(1)},
      {"D6>3A1", Rat(3, 7)},
      {"D6>C3xA1", Rat(1)},
      // D7
      {"D7>B6", Rat(7, 6)},
      {"D7>B5xA1", Rat(1)},
      {"D7>B4xC2", Rat(7, 6)},
      {"D7>2B3", Rat(7, 6)},
      {"D7>D5x2A1", Rat(1)},
      {"D7>D4xA3", Rat(1)},
      {"D7>C2", Rat(1, 2)},
      {"D7>C3", Rat(7, 6)},
      {"D7>G2", Rat(7, 8)},
      // D8
      {"D8>B7", Rat(8, 7)},
      {"D8>B6xA1", Rat(1)},
      {"D8>B5xC2", Rat(8, 7)},
      {"D8>B4xB3", Rat(8, 7)},
      {"D8>D6x2A1", Rat(1)},
      {"D8>D5xA3", Rat(1)},
      {"D8>2D4", Rat(1)},
      {"D8>B4", Rat(1)},
      {"D8>2C2", Rat(1)},
      {"D8>C4xA1", Rat(1)},
  };
  auto it = table->find(key);
  if (it == table->end()) return std::nullopt;
  return it->second;
}

}  // namespace weyl
