// cgraph: commuting graphs of finite groups from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cgraph.hpp"

using namespace cgraph;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupSpec {
  std::string name;
  std::optional<long long> param;
  std::string file;

  void attach(CLI::App* app) {
    auto* n = app->add_option("--name", name, "catalog name or family (D, Q, SD, S, A, Z, GL2, PSL2)");
    app->add_option("--param", param, "family parameter (group order for D, Q, SD; field size for GL2, PSL2)")
        ->needs(n);
    app->add_option("--file", file, "group file (order/table or order/perm-generators)")->excludes(n);
  }

  std::string display() const {
    if (!file.empty()) return file;
    return param ? name + std::to_string(*param) : name;
  }

  FiniteGroup load() const {
    if (!file.empty()) return read_group_file(file);
    if (name.empty()) throw usage_error("give --name or --file");
    return build(name, param);
  }
};

std::size_t oracle_cap_from_env(std::size_t fallback) {
  if (const char* env = std::getenv("CGRAPH_ORACLE_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw usage_error(std::string("CGRAPH_ORACLE_CAP is not a number: ") + env);
    }
  }
  return fallback;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting graphs of finite groups: construction, genus and verification"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "human-readable summary on stderr");

  GroupSpec info_spec;
  auto* info = app.add_subcommand("info", "order, center, AC flag and element statistics");
  info_spec.attach(info);

  GroupSpec genus_spec;
  std::optional<std::size_t> cap_flag;
  bool genus_json = false;
  auto* genus = app.add_subcommand("genus", "commuting-graph genus report");
  genus_spec.attach(genus);
  genus->add_option("--oracle-cap", cap_flag, "largest block (in edges) handed to the rotation oracle");
  genus->add_flag("--json", genus_json, "full JSON report (default prints a one-line summary)");

  GroupSpec dot_spec;
  std::string dot_out;
  auto* dot = app.add_subcommand("export-dot", "write the commuting graph in DOT format");
  dot_spec.attach(dot);
  dot->add_option("--out", dot_out, "output path (stdout when omitted)");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite over the catalog");
  verify->add_option("suite", suite, "acyclic | planar | toroidal | formulas | bounds | lemmas | all")->required();

  std::string catalog_out;
  auto* cat = app.add_subcommand("catalog", "list catalog entries as JSON");
  cat->add_option("--out", catalog_out, "write to a file instead of stdout");

  std::string edges_path;
  std::optional<std::size_t> graph_cap_flag;
  auto* graph_genus = app.add_subcommand("graph-genus", "genus of a graph given as an edge list");
  graph_genus->add_option("--edges", edges_path, "edge-list file ('V E' header, then 'u v' lines)")->required();
  graph_genus->add_option("--oracle-cap", graph_cap_flag, "largest block (in edges) handed to the rotation oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*info) {
      const FiniteGroup g = info_spec.load();
      const json j = group_info_json(info_spec.display(), g);
      print(j);
      if (verbose)
        std::cerr << info_spec.display() << ": order " << g.order() << ", center " << j["center_order"]
                  << ", AC " << (j["is_ac"].get<bool>() ? "yes" : "no") << "\n";
      return exit_ok;
    }

    if (*genus) {
      const std::size_t cap = cap_flag ? *cap_flag : oracle_cap_from_env(default_oracle_cap);
      const FiniteGroup g = genus_spec.load();
      if (g.is_abelian()) throw usage_error("group is abelian: its commuting graph is empty");
      const CommutingGraphReport r = commuting_graph(g, cap);
      const json j = to_json(genus_spec.display(), g, r);
      if (genus_json) {
        print(j);
      } else {
        std::cout << json{{"name", genus_spec.display()}, {"genus", j["genus"]}}.dump() << "\n";
      }
      if (verbose)
        std::cerr << genus_spec.display() << ": " << r.graph.vertex_count() << " vertices, " << r.graph.edge_count()
                  << " edges, " << r.genus.blocks.size() << " blocks, genus " << describe(r.total()) << "\n";
      return exit_ok;
    }

    if (*dot) {
      const FiniteGroup g = dot_spec.load();
      if (g.is_abelian()) throw usage_error("group is abelian: its commuting graph is empty");
      const SimpleGraph gr = build_commuting_graph(g);
      if (dot_out.empty()) {
        write_dot(std::cout, gr);
      } else {
        std::ofstream out(dot_out);
        if (!out) throw usage_error("cannot write '" + dot_out + "'");
        write_dot(out, gr);
        if (!out) throw usage_error("write to '" + dot_out + "' failed");
      }
      if (verbose) std::cerr << gr.vertex_count() << " nodes, " << gr.edge_count() << " edges\n";
      return exit_ok;
    }

    if (*verify) {
      CatalogAnalysis cache;
      const auto reports = run_suite(suite, cache, oracle_cap_from_env(default_oracle_cap));
      if (!reports) throw usage_error("unknown suite '" + suite + "'");
      json out = json::array();
      bool ok = true;
      for (const auto& rep : *reports) {
        json checks = json::array();
        for (const auto& c : rep.checks)
          checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        out.push_back({{"suite", rep.suite}, {"passed", rep.passed()}, {"checks", std::move(checks)}});
        ok = ok && rep.passed();
        if (verbose)
          std::cerr << rep.suite << ": " << rep.checks.size() - rep.failures() << "/" << rep.checks.size()
                    << " checks passed\n";
      }
      print(json{{"suites", std::move(out)}, {"passed", ok}});
      return ok ? exit_ok : exit_failed;
    }

    if (*cat) {
      const json j = catalog_json();
      if (catalog_out.empty()) {
        print(j);
      } else {
        std::ofstream out(catalog_out);
        if (!out) throw usage_error("cannot write '" + catalog_out + "'");
        out << j.dump(2) << "\n";
      }
      if (verbose) std::cerr << catalog().size() << " entries\n";
      return exit_ok;
    }

    if (*graph_genus) {
      std::ifstream in(edges_path);
      if (!in) throw usage_error("cannot open '" + edges_path + "'");
      const SimpleGraph gr = read_edge_list(in);
      const std::size_t cap = graph_cap_flag ? *graph_cap_flag : oracle_cap_from_env(default_oracle_cap);
      const GraphGenus gg = analyze_genus(gr, cap);
      json blocks = json::array();
      for (const auto& b : gg.blocks)
        blocks.push_back({{"size", b.vertices.size()}, {"type", to_string(b.type)}, {"genus", to_json(b.genus)}});
      print(json{{"graph", {{"vertices", gr.vertex_count()}, {"edges", gr.edge_count()}}},
                 {"blocks", std::move(blocks)},
                 {"genus", to_json(gg.total)}});
      return exit_ok;
    }
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    // Bad names, parameters, files and malformed input all land here.
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
