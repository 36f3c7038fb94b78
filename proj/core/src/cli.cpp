#include "weyl/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "weyl/catalog.hpp"
#include "weyl/render.hpp"
#include "weyl/rootdata.hpp"
#include "weyl/verify.hpp"

namespace weyl {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::pair<std::string, Rat>> parse_params(const std::string& text) {
  std::vector<std::pair<std::string, Rat>> params = {
      {"a", Rat(2)}, {"b", Rat(3)}, {"c", Rat(5)}, {"d", Rat(7)}};
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error("bad parameter binding '" + item + "'; expected name=value");
    }
    std::string name = item.substr(0, eq);
    Rat value = Rat::parse(item.substr(eq + 1));
    bool found = false;
    for (auto& [n, v] : params) {
      if (n == name) {
        v = value;
        found = true;
      }
    }
    if (!found) params.emplace_back(name, value);
    pos = end + 1;
  }
  return params;
}

Json weight_json(const Weight& w) {
  Json arr = Json::array();
  for (const Rat& r : w) arr.push_back(r.str());
  return arr;
}

Json branching_json(const BranchingResult& result) {
  Json entries = Json::array();
  for (const BranchEntry& e : result.entries) {
    Json factors = Json::array();
    for (const Weight& block : e.factors) factors.push_back(weight_json(block));
    entries.push_back(Json{{"factors", factors}, {"multiplicity", e.multiplicity}});
  }
  return Json{{"entries", entries}, {"text", render_branching(result)}};
}

const ProjectionMap& lookup(const std::string& algebra, const std::string& sub) {
  return Catalog::instance().lookup(ProductAlgebra::parse(algebra).single(),
                                    ProductAlgebra::parse(sub));
}

struct Options {
  std::string algebra, subalgebra, subalgebra2, weight, params;
  bool json = false;
  int max_rank = 8;
};

void emit(std::ostream& out, bool json, const Json& doc, const std::string& text) {
  if (json) {
    out << doc.dump(2) << '\n';
  } else {
    out << text << '\n';
  }
}

int cmd_orbit(const Options& opt, std::ostream& out, std::ostream& err) {
  ProductAlgebra alg = ProductAlgebra::parse(opt.algebra);
  Weight w = parse_weight(opt.weight, parse_params(opt.params));
  Orbit orbit = orbit_points(alg, dominant_of(alg, w));
  if (orbit.large) err << "note: large orbit (" << orbit.points.size() << " points)\n";
  std::string text;
  Json points = Json::array();
  for (const Weight& p : orbit.points) {
    if (!text.empty()) text += '\n';
    text += render_weight(p);
    points.push_back(weight_json(p));
  }
  Json doc{{"query", Json{{"verb", "orbit"},
                          {"algebra", opt.algebra},
                          {"weight", opt.weight}}},
           {"result", Json{{"dominant", weight_json(orbit.dominant)},
                           {"size", orbit.points.size()},
                           {"points", points}}}};
  emit(out, opt.json, doc, text);
  return 0;
}

int cmd_branch(const Options& opt, std::ostream& out) {
  const ProjectionMap& map = lookup(opt.algebra, opt.subalgebra);
  Weight w = parse_weight(opt.weight, parse_params(opt.params));
  BranchingResult result = branch(map, dominant_of(ProductAlgebra(map.source), w));
  Json doc{{"query", Json{{"verb", "branch"},
                          {"algebra", opt.algebra},
                          {"subalgebra", opt.subalgebra},
                          {"weight", opt.weight}}},
           {"result", branching_json(result)},
           {"conservation",
            Json{{"source_orbit_size", result.source_orbit_size},
                 {"decomposed_size", result.decomposed_size}}}};
  if (!map.subjoining && map.target.is_semisimple()) {
    doc["gamma"] = gamma(map, standard_probes(map.source)).str();
  }
  emit(out, opt.json, doc, render_branching(result));
  return 0;
}

int cmd_projmat(const Options& opt, std::ostream& out) {
  const ProjectionMap& map = lookup(opt.algebra, opt.subalgebra);
  Json rows = Json::array();
  for (const auto& row : map.matrix) rows.push_back(row);
  Json doc{{"query", Json{{"verb", "projmat"},
                          {"algebra", opt.algebra},
                          {"subalgebra", opt.subalgebra}}},
           {"result", Json{{"matrix", rows}, {"subjoining", map.subjoining}}}};
  emit(out, opt.json, doc, render_matrix(map.matrix));
  return 0;
}

int cmd_gamma(const Options& opt, std::ostream& out) {
  const ProjectionMap& map = lookup(opt.algebra, opt.subalgebra);
  std::vector<Weight> probes = standard_probes(map.source);
  Rat value = gamma(map, probes);
  Json probe_json = Json::array();
  for (const Weight& p : probes) probe_json.push_back(weight_json(p));
  Json doc{{"query", Json{{"verb", "gamma"},
                          {"algebra", opt.algebra},
                          {"subalgebra", opt.subalgebra}}},
           {"result", Json{{"gamma", value.str()}, {"probes", probe_json}}}};
  emit(out, opt.json, doc, value.str());
  return 0;
}

int cmd_index(const Options& opt, std::ostream& out, std::ostream& err) {
  ProductAlgebra alg = ProductAlgebra::parse(opt.algebra);
  Weight w = parse_weight(opt.weight, parse_params(opt.params));
  Orbit orbit = orbit_points(alg, dominant_of(alg, w));
  if (orbit.large) err << "note: large orbit (" << orbit.points.size() << " points)\n";
  Rat value = orbit_index(orbit);
  Json doc{{"query", Json{{"verb", "index"},
                          {"algebra", opt.algebra},
                          {"weight", opt.weight}}},
           {"result", Json{{"index", value.str()},
                           {"orbit_size", orbit.points.size()},
                           {"norm_sq", norm_sq(alg, orbit.dominant).str()}}}};
  emit(out, opt.json, doc, value.str());
  return 0;
}

int cmd_relate(const Options& opt, std::ostream& out) {
  const ProjectionMap& first = lookup(opt.algebra, opt.subalgebra);
  const ProjectionMap& second = lookup(opt.algebra, opt.subalgebra2);
  RatMat m = relate(first, second);
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const Rat& v : row) r.push_back(v.str());
    rows.push_back(r);
  }
  Json doc{{"query", Json{{"verb", "relate"},
                          {"algebra", opt.algebra},
                          {"subalgebra", opt.subalgebra},
                          {"subalgebra2", opt.subalgebra2}}},
           {"result", Json{{"matrix", rows}}}};
  emit(out, opt.json, doc, render_matrix(m));
  return 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  VerifyReport report = verify_catalog(opt.max_rank);
  std::string text;
  Json items = Json::array();
  for (const VerifyItem& item : report.items) {
    std::string line = (item.ok ? "PASS " : "FAIL ") + item.key;
    Json j{{"key", item.key}, {"ok", item.ok}};
    if (item.subjoining) {
      line += " subjoining";
      j["subjoining"] = true;
    }
    line += " probes=" + std::to_string(item.probes);
    line += item.conservation_ok ? " conservation=ok" : " conservation=FAIL";
    j["conservation_ok"] = item.conservation_ok;
    if (item.gamma_value) {
      line += " gamma=" + item.gamma_value->str();
      j["gamma"] = item.gamma_value->str();
      if (item.gamma_expected) {
        line += (*item.gamma_value == *item.gamma_expected) ? "=tabulated" : "!=tabulated";
        j["gamma_tabulated"] = item.gamma_expected->str();
      }
    }
    if (!item.detail.empty()) {
      line += " [" + item.detail + "]";
      j["detail"] = item.detail;
    }
    text += line + '\n';
    items.push_back(std::move(j));
  }
  text += "checked " + std::to_string(report.items.size()) + " pairs, " +
          std::to_string(report.failures) + " failures";
  Json doc{{"query", Json{{"verb", "verify-catalog"}, {"max_rank", opt.max_rank}}},
           {"result", Json{{"pairs", items},
                           {"checked", report.items.size()},
                           {"failures", report.failures}}}};
  emit(out, opt.json, doc, text);
  return report.failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Weyl group orbits of B/C/D algebras and their reduction to "
               "maximal reductive subalgebra orbits"};
  app.require_subcommand(1);
  Options opt;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", opt.json); };
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--params", opt.params,
                    "parameter bindings like a=2,b=3 (defaults a=2,b=3,c=5,d=7)");
  };

  CLI::App* orbit = app.add_subcommand("orbit", "list the orbit of a weight");
  orbit->add_option("algebra", opt.algebra)->required();
  orbit->add_option("weight", opt.weight)->required();
  add_json(orbit);
  add_params(orbit);

  CLI::App* br = app.add_subcommand("branch", "decompose an orbit into subalgebra orbits");
  br->add_option("algebra", opt.algebra)->required();
  br->add_option("subalgebra", opt.subalgebra)->required();
  br->add_option("weight", opt.weight)->required();
  add_json(br);
  add_params(br);

  CLI::App* pm = app.add_subcommand("projmat", "print a catalog projection matrix");
  pm->add_option("algebra", opt.algebra)->required();
  pm->add_option("subalgebra", opt.subalgebra)->required();
  add_json(pm);

  CLI::App* gm = app.add_subcommand("gamma", "index ratio of a catalog pair");
  gm->add_option("algebra", opt.algebra)->required();
  gm->add_option("subalgebra", opt.subalgebra)->required();
  add_json(gm);

  CLI::App* ix = app.add_subcommand("index", "second degree index of an orbit");
  ix->add_option("algebra", opt.algebra)->required();
  ix->add_option("weight", opt.weight)->required();
  add_json(ix);
  add_params(ix);

  CLI::App* rel = app.add_subcommand(
      "relate", "combine two maps of one algebra into the relation matrix");
  rel->add_option("algebra", opt.algebra)->required();
  rel->add_option("subalgebra", opt.subalgebra, "the equal-rank pair to invert")->required();
  rel->add_option("subalgebra2", opt.subalgebra2)->required();
  add_json(rel);

  CLI::App* vc = app.add_subcommand("verify-catalog",
                                    "conservation and index checks over the catalog");
  vc->add_option("--max-rank", opt.max_rank)->check(CLI::Range(2, 8));
  add_json(vc);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    err << app.help();
    return 2;
  }

  try {
    if (orbit->parsed()) return cmd_orbit(opt, out, err);
    if (br->parsed()) return cmd_branch(opt, out);
    if (pm->parsed()) return cmd_projmat(opt, out);
    if (gm->parsed()) return cmd_gamma(opt, out);
    if (ix->parsed()) return cmd_index(opt, out, err);
    if (rel->parsed()) return cmd_relate(opt, out);
    if (vc->parsed()) return cmd_verify(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace weyl
