#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weyl/projection.hpp"

namespace weyl {

/// Thrown by lookups for unknown source/target pairs; carries suggestions.
class NotInCatalog : public Error {
 public:
  explicit NotInCatalog(const std::string& what) : Error(what) {}
};

struct CatalogEntry {
  std::string key;  // "SOURCE>TARGET"
  ProjectionMap map;
};

/// The fixed table of projection matrices for ranks up to 8, embedded as a
/// structured text block (see catalog_text()): a key line, optionally
/// followed by flags, then the integer rows; '#' starts a comment. Loaded
/// once, immutable afterwards.
class Catalog {
 public:
  static const Catalog& instance();

  const std::vector<CatalogEntry>& entries() const { return entries_; }

  /// Exact key lookup; nullptr when absent.
  const ProjectionMap* find(const std::string& key) const;

  /// Throws NotInCatalog listing the nearest keys when the pair is unknown.
  const ProjectionMap& lookup(const Simple& source,
                              const ProductAlgebra& target) const;

  std::vector<std::string> keys() const;

 private:
  Catalog();
  std::vector<CatalogEntry> entries_;
};

/// Raw embedded catalog text.
const char* catalog_text();

/// Index value ratio gamma tabulated for a catalog pair, when known: printed
/// next to the matrix, fixed by the general-rank series the entry
/// instantiates, or (for the exceptional chain) by multiplicativity of the
/// ratio along compositions. Subjoining entries and U1 targets have none.
std::optional<Rat> tabulated_gamma(const std::string& key);

}  // namespace weyl
