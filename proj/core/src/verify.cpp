#include "weyl/verify.hpp"

namespace weyl {

VerifyReport verify_catalog(int max_rank) {
  VerifyReport report;
  for (const CatalogEntry& entry : Catalog::instance().entries()) {
    const ProjectionMap& map = entry.map;
    if (map.source.rank > max_rank) continue;

    VerifyItem item;
    item.key = entry.key;
    item.subjoining = map.subjoining;
    item.ok = true;

    std::vector<Weight> probes = standard_probes(map.source);
    item.probes = probes.size();
    try {
      for (const Weight& probe : probes) {
        branch(map, probe);  // throws on conservation failure
      }
      item.conservation_ok = true;
    } catch (const Error& e) {
      item.ok = false;
      item.detail = e.what();
    }

    if (item.conservation_ok && !map.subjoining && map.target.is_semisimple()) {
      try {
        item.gamma_value = gamma(map, probes);
        item.gamma_expected = tabulated_gamma(entry.key);
        if (item.gamma_expected && *item.gamma_value != *item.gamma_expected) {
          item.ok = false;
          item.detail = "index ratio " + item.gamma_value->str() +
                        " differs from tabulated " + item.gamma_expected->str();
        }
      } catch (const Error& e) {
        item.ok = false;
        item.detail = e.what();
      }
    }

    if (!item.ok) ++report.failures;
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace weyl
