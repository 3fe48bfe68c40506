#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "symedge/corpus.hpp"
#include "symedge/errors.hpp"
#include "symedge/rees.hpp"
#include "symedge/symbolic.hpp"

using namespace symedge;

namespace {

void check_reconstruction(const Graph& g, const ReesGeneratorSet& set) {
  for (unsigned s = 1; s <= set.max_degree; ++s) {
    INFO("s=" << s);
    CHECK(graded_component(set, s) == symbolic_power_cover(g, s).ideal);
  }
}

}  // namespace

TEST_CASE("rees-c5", "[rees]") {
  auto c5 = cycle_graph(5);
  auto set = rees_generators(c5, 6);
  CHECK(set.stratum(1) == oracle::gens(edge_ideal(c5)));
  CHECK(set.stratum(3) == std::vector<Monomial>{cycle_monomial(c5)});
  for (unsigned b : {2u, 4u, 5u, 6u}) CHECK(set.stratum(b).empty());
  CHECK(is_implosive_up_to(set));
  check_reconstruction(c5, set);
}

TEST_CASE("rees-single-edge", "[rees]") {
  auto g = parse_graph("u v");
  auto set = rees_generators(g, 5);
  CHECK(set.generators.size() == 1);
  CHECK(set.generators.front().degree == 1);
}

TEST_CASE("rees-clique-sum", "[rees]") {
  const auto& g = corpus_entry("clique_sum").graph;
  auto set = rees_generators(g, 6);
  auto ctx = set.variables;
  CHECK(set.stratum(1).size() == 8);
  CHECK(set.stratum(2) == std::vector<Monomial>{oracle::mono(*ctx, "x1*x6*x7")});
  CHECK(set.stratum(3) == std::vector<Monomial>{oracle::mono(*ctx, "x1*x2*x3*x4*x5")});
  // x1^2*x2*...*x7 in I^(5) is the product of the degree-2 and degree-3
  // generators, so no new generator appears in degree 4, 5 or 6.
  for (unsigned b : {4u, 5u, 6u}) CHECK(set.stratum(b).empty());
  auto big = oracle::mono(*ctx, "x1^2*x2*x3*x4*x5*x6*x7");
  CHECK(contains(symbolic_power_cover(g, 5).ideal, big));
  CHECK(big == oracle::mono(*ctx, "x1*x6*x7") * oracle::mono(*ctx, "x1*x2*x3*x4*x5"));
  CHECK(is_implosive_up_to(set));
  check_reconstruction(g, set);
}

TEST_CASE("rees-reconstruction-across-corpus", "[rees][property]") {
  for (const auto& e : builtin_corpus()) {
    if (e.graph.vertex_count() > 8) continue;
    INFO(e.id);
    const unsigned b = std::min(default_rees_degree(e.graph), 5u);
    auto set = rees_generators(e.graph, b);
    CHECK(set.stratum(1) == oracle::gens(edge_ideal(e.graph)));
    check_reconstruction(e.graph, set);
    if (cycle_structure(e.graph).is_unicyclic) CHECK(is_implosive_up_to(set));
  }
}

TEST_CASE("rees-default-degree-and-json", "[rees]") {
  CHECK(default_rees_degree(cycle_graph(5)) == 7);
  CHECK(default_rees_degree(cycle_graph(3)) == 5);
  CHECK(default_rees_degree(cycle_graph(4)) == 3);
  auto j = to_json(rees_generators(cycle_graph(3), 3));
  CHECK(j["max_degree"] == 3);
  CHECK(j["strata"]["1"].size() == 3);
  CHECK(j["strata"]["2"] == nlohmann::json::array({{1, 1, 1}}));
  CHECK(j["strata"]["3"].empty());
}

TEST_CASE("rees-errors-and-budget", "[rees]") {
  CHECK_THROWS_AS(rees_generators(parse_graph("vertex a"), 2), std::invalid_argument);
  CHECK_THROWS_AS(rees_generators(cycle_graph(5), 0), std::invalid_argument);
  CHECK_THROWS_AS(rees_generators(cycle_graph(5), 6, ReesBudget{20}), BudgetError);
}
