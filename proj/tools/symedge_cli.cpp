#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "symedge/betti.hpp"
#include "symedge/corpus.hpp"
#include "symedge/errors.hpp"
#include "symedge/rees.hpp"
#include "symedge/symbolic.hpp"
#include "symedge/verify.hpp"

namespace {

using namespace symedge;
using nlohmann::json;

enum Exit { kOk = 0, kSuiteFailure = 1, kUsage = 2, kBudget = 3 };

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int graph_stats(const Graph& g) {
  auto inv = invariants(g);
  auto dec = is_decomposable(g);
  json covers = json::array();
  for (const auto& c : minimal_vertex_covers(g)) covers.push_back(c);
  json j = {{"vertices", g.vertices()},
            {"edge_count", g.edge_count()},
            {"matching_number", inv.matching_number},
            {"induced_matching_number", inv.induced_matching_number},
            {"vertex_cover_number", inv.vertex_cover_number},
            {"is_unicyclic", inv.is_unicyclic},
            {"unique_cycle", inv.unique_cycle ? json(*inv.unique_cycle) : json(nullptr)},
            {"cycle_is_dominating", inv.cycle_is_dominating},
            {"minimal_vertex_covers", covers},
            {"decomposable", dec.decomposable}};
  if (dec.witness) j["decomposition_witness"] = {dec.witness->first, dec.witness->second};
  if (auto og = odd_girth(g)) j["odd_girth"] = *og;
  if (inv.is_unicyclic && connected_components(g).size() == 1) j["gamma"] = gamma_set(g);
  emit(j);
  std::cerr << g.vertex_count() << " vertices, " << g.edge_count() << " edges, nu="
            << inv.induced_matching_number << ", beta=" << inv.matching_number
            << ", tau=" << inv.vertex_cover_number << (inv.is_unicyclic ? ", unicyclic" : "") << '\n';
  return kOk;
}

MonomialIdeal chosen_power(const Graph& g, unsigned s, bool symbolic, const std::string& method,
                           std::string& label) {
  if (!symbolic) {
    label = "ordinary";
    return power(edge_ideal(g), s);
  }
  SymbolicPowerResult r = method == "formula"      ? symbolic_power_unicyclic(g, s)
                          : method == "derivation" ? symbolic_power_derivation(g, s)
                                                   : symbolic_power_cover(g, s);
  label = std::string(method_name(r.method));
  return r.ideal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic powers of edge ideals"};
  app.require_subcommand(1);
  std::size_t max_vertices = kDefaultVertexCap;
  app.add_option("--max-vertices", max_vertices, "Vertex cap when reading graphs")->capture_default_str();

  std::string file;
  unsigned s = 1;
  bool symbolic = false;

  auto* graph_cmd = app.add_subcommand("graph", "Graph operations");
  graph_cmd->require_subcommand(1);
  auto* stats_cmd = graph_cmd->add_subcommand("stats", "Combinatorial invariants");
  stats_cmd->add_option("FILE", file)->required();

  std::string method = "cover";
  auto* power_cmd = app.add_subcommand("power", "Ordinary or symbolic power of the edge ideal");
  power_cmd->add_option("FILE", file)->required();
  power_cmd->add_option("--s", s)->required()->check(CLI::PositiveNumber);
  power_cmd->add_flag("--symbolic", symbolic);
  power_cmd->add_option("--method", method)->check(CLI::IsMember({"cover", "formula", "derivation"}));

  auto* reg_cmd = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  reg_cmd->add_option("FILE", file)->required();
  reg_cmd->add_flag("--symbolic", symbolic);
  reg_cmd->add_option("--s", s)->check(CLI::PositiveNumber);

  bool as_json = false;
  auto* betti_cmd = app.add_subcommand("betti", "Graded Betti table as CSV");
  betti_cmd->add_option("FILE", file)->required();
  betti_cmd->add_flag("--symbolic", symbolic);
  betti_cmd->add_option("--s", s)->check(CLI::PositiveNumber);
  betti_cmd->add_flag("--json", as_json, "Multigraded Betti numbers as JSON");

  unsigned smax = 0, tmax = 0;
  auto* res_cmd = app.add_subcommand("resurgence", "Containment grid and resurgence estimate");
  res_cmd->add_option("FILE", file)->required();
  res_cmd->add_option("--smax", smax)->required()->check(CLI::PositiveNumber);
  res_cmd->add_option("--tmax", tmax)->required()->check(CLI::PositiveNumber);

  unsigned max_degree = 0;
  auto* rees_cmd = app.add_subcommand("rees", "Symbolic Rees algebra generators up to a degree");
  rees_cmd->add_option("FILE", file)->required();
  rees_cmd->add_option("--max-degree", max_degree)->check(CLI::PositiveNumber);

  std::string suite;
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite on the built-in corpus");
  verify_cmd->add_option("SUITE", suite)->required();
  verify_cmd->add_flag("--timing", timing, "Include wall time in the report");

  std::string out_dir;
  auto* corpus_cmd = app.add_subcommand("corpus", "Write the built-in corpus as edge-list files");
  corpus_cmd->add_option("DIR", out_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*stats_cmd) return graph_stats(load_graph(file, max_vertices));

    if (*power_cmd) {
      Graph g = load_graph(file, max_vertices);
      std::string label;
      auto ideal = chosen_power(g, s, symbolic, method, label);
      json j = to_json(ideal);
      j["s"] = s;
      j["kind"] = symbolic ? "symbolic" : "ordinary";
      j["method"] = label;
      j["generator_count"] = ideal.size();
      emit(j);
      std::cerr << (symbolic ? "I^(" : "I^") << s << (symbolic ? ")" : "") << ": " << ideal.size()
                << " minimal generators, alpha=" << alpha(ideal) << '\n';
      return kOk;
    }

    if (*reg_cmd || *betti_cmd) {
      Graph g = load_graph(file, max_vertices);
      std::string label;
      auto ideal = chosen_power(g, s, symbolic, "cover", label);
      auto table = betti_table(ideal);
      if (*reg_cmd) {
        emit({{"s", s}, {"kind", symbolic ? "symbolic" : "ordinary"}, {"regularity", table.regularity}});
        std::cerr << "reg = " << table.regularity << '\n';
      } else if (as_json) {
        emit(table.multigraded_json(g.vertices()));
      } else {
        std::cout << table.to_csv();
        std::cerr << table.entries.size() << " nonzero graded Betti numbers, reg = " << table.regularity << '\n';
      }
      return kOk;
    }

    if (*res_cmd) {
      Graph g = load_graph(file, max_vertices);
      auto rep = resurgence_search(g, smax, tmax, std::filesystem::path(file).stem().string());
      emit(to_json(rep));
      std::cerr << rep.violations.size() << " violations on the " << smax << "x" << tmax << " grid";
      if (rep.max_ratio) std::cerr << ", max s/t = " << *rep.max_ratio;
      if (rep.closed_form) std::cerr << ", closed form " << *rep.closed_form;
      std::cerr << " (finite truncation)\n";
      return kOk;
    }

    if (*rees_cmd) {
      Graph g = load_graph(file, max_vertices);
      const unsigned b = max_degree == 0 ? default_rees_degree(g) : max_degree;
      auto set = rees_generators(g, b);
      emit(to_json(set));
      std::cerr << set.generators.size() << " algebra generators up to degree " << b
                << (is_implosive_up_to(set) ? ", all squarefree" : ", some not squarefree") << '\n';
      return kOk;
    }

    if (*verify_cmd) {
      auto reports = run_suites(suite, builtin_corpus());
      json arr = json::array();
      bool ok = true;
      for (const auto& r : reports) {
        arr.push_back(r.to_json(timing));
        ok = ok && r.pass();
        std::size_t failed = 0, skipped = 0;
        for (const auto& c : r.cases) {
          failed += !c.pass && !c.skipped;
          skipped += c.skipped;
        }
        std::cerr << (r.pass() ? "PASS " : "FAIL ") << r.suite << ": " << r.cases.size() << " cases, "
                  << failed << " failed, " << skipped << " skipped\n";
      }
      emit({{"schema", 1}, {"pass", ok}, {"suites", arr}});
      return ok ? kOk : kSuiteFailure;
    }

    if (*corpus_cmd) {
      std::filesystem::create_directories(out_dir);
      json ids = json::array();
      for (const auto& e : builtin_corpus()) {
        std::ofstream out(std::filesystem::path(out_dir) / (e.id + ".edges"));
        out << "# " << e.description << '\n' << e.graph.to_edge_list();
        ids.push_back(e.id);
      }
      emit({{"written", ids}});
      return kOk;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
