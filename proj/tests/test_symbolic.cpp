#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "symedge/corpus.hpp"
#include "symedge/errors.hpp"
#include "symedge/symbolic.hpp"

using namespace symedge;

namespace {

MonomialIdeal w_ideal(const Graph& g, unsigned t) {
  auto i = edge_ideal(g);
  return principal(i.context(), cycle_monomial(g).pow(t));
}

}  // namespace

TEST_CASE("symbolic-power-small-cases", "[symbolic]") {
  auto c3 = cycle_graph(3);
  auto i = edge_ideal(c3);
  CHECK(symbolic_power_cover(c3, 1).ideal == i);
  CHECK(symbolic_power_cover(c3, 2).ideal == sum(power(i, 2), w_ideal(c3, 1)));

  auto c5 = cycle_graph(5);
  auto sym3 = symbolic_power_cover(c5, 3).ideal;
  // 35 degree-6 generators of I^3, of which w*x_i (five of them) become redundant.
  CHECK(power(edge_ideal(c5), 3).size() == 35);
  CHECK(sym3.size() == 31);
  CHECK(sym3 == sum(power(edge_ideal(c5), 3), w_ideal(c5, 1)));
  CHECK(symbolic_power_cover(c5, 2).ideal == power(edge_ideal(c5), 2));
}

TEST_CASE("symbolic-equals-ordinary-below-n-plus-one", "[symbolic]") {
  for (unsigned len : {3u, 5u, 7u}) {
    auto g = cycle_graph(len);
    const unsigned n = (len - 1) / 2;
    for (unsigned s = 1; s <= n; ++s) CHECK(symbolic_power_cover(g, s).ideal == power(edge_ideal(g), s));
    CHECK(symbolic_power_cover(g, n + 1).ideal == sum(power(edge_ideal(g), n + 1), w_ideal(g, 1)));
  }
}

TEST_CASE("bipartite-symbolic-equals-ordinary", "[symbolic]") {
  for (const char* id : {"c4", "c6", "path4", "spider"}) {
    const auto& g = corpus_entry(id).graph;
    for (unsigned s = 1; s <= 3; ++s) CHECK(symbolic_power_cover(g, s).ideal == power(edge_ideal(g), s));
  }
}

TEST_CASE("unicyclic-formula-examples", "[symbolic]") {
  auto c3 = cycle_graph(3);
  auto i = edge_ideal(c3);
  auto expected = sum(power(i, 4), sum(product(power(i, 2), w_ideal(c3, 1)), w_ideal(c3, 2)));
  CHECK(symbolic_power_unicyclic(c3, 4).ideal == expected);
  CHECK(symbolic_power_unicyclic(c3, 4).ideal == symbolic_power_cover(c3, 4).ideal);
  const auto& disjoint = corpus_entry("c5_plus_edge").graph;
  CHECK(symbolic_power_unicyclic(disjoint, 3).ideal == symbolic_power_cover(disjoint, 3).ideal);
  auto c7 = cycle_graph(7);
  CHECK(symbolic_power_unicyclic(c7, 3).ideal == power(edge_ideal(c7), 3));
  CHECK(symbolic_power_unicyclic(cycle_graph(6), 3).ideal == power(edge_ideal(cycle_graph(6)), 3));
  CHECK(symbolic_power_unicyclic(c7, 3).method == SymbolicMethod::UnicyclicFormula);
}

TEST_CASE("symbolic-power-errors", "[symbolic]") {
  CHECK_THROWS_AS(symbolic_power_unicyclic(corpus_entry("clique_sum").graph, 2), std::invalid_argument);
  CHECK_THROWS_AS(symbolic_power_cover(parse_graph("vertex a"), 2), std::invalid_argument);
  CHECK_THROWS_AS(symbolic_power_cover(cycle_graph(5), 0), std::invalid_argument);
  CHECK_THROWS_AS(symbolic_power_derivation(cycle_graph(9), 6, 1000), BudgetError);
  CHECK_THROWS_AS(nz_member(cycle_graph(3), Monomial{1, 1}, 1), ContextMismatch);
}

TEST_CASE("clique-sum-golden-ideals", "[symbolic][golden]") {
  const auto& g = corpus_entry("clique_sum").graph;
  auto i = edge_ideal(g);
  auto ctx = i.context();
  auto w5 = principal(ctx, oracle::mono(*ctx, "x1*x2*x3*x4*x5"));
  auto w3 = principal(ctx, oracle::mono(*ctx, "x1*x6*x7"));
  auto big = principal(ctx, oracle::mono(*ctx, "x1^2*x2*x3*x4*x5*x6*x7"));
  CHECK(symbolic_power_cover(g, 2).ideal == sum(power(i, 2), w3));
  CHECK(symbolic_power_cover(g, 3).ideal == sum(sum(power(i, 3), w5), product(i, w3)));
  CHECK(symbolic_power_cover(g, 4).ideal ==
        sum(sum(power(i, 4), product(i, w5)), sum(product(power(i, 2), w3), power(w3, 2))));
  CHECK(symbolic_power_cover(g, 5).ideal ==
        sum(sum(sum(power(i, 5), product(power(i, 2), w5)), sum(product(power(i, 3), w3), product(i, power(w3, 2)))),
            big));
}

TEST_CASE("derivation-method-matches-cover-oracle", "[symbolic][oracle]") {
  for (const char* id : {"c3", "c5", "c4", "c5_path", "clique_sum", "c3_whisker1", "spider"}) {
    const auto& g = corpus_entry(id).graph;
    for (unsigned s = 1; s <= 3; ++s) {
      INFO(id << " s=" << s);
      CHECK(symbolic_power_derivation(g, s).ideal == symbolic_power_cover(g, s).ideal);
    }
  }
}

TEST_CASE("nz-member-spot-checks", "[symbolic]") {
  auto c5 = cycle_graph(5);
  auto w = cycle_monomial(c5);
  CHECK(nz_member(c5, w, 3));
  CHECK_FALSE(nz_member(c5, w, 4));
  CHECK(nz_member(c5, Monomial{1, 1, 0, 0, 0}, 1));
  CHECK_FALSE(nz_member(c5, Monomial{1, 0, 1, 0, 0}, 1));
  CHECK(nz_member(c5, w.pow(2), 6));
}

TEST_CASE("nz-member-agrees-with-cover-oracle", "[symbolic][property]") {
  std::mt19937_64 rng(31);
  std::size_t checked = 0;
  for (const auto& e : builtin_corpus()) {
    if (e.graph.vertex_count() > 8) continue;
    for (unsigned s = 1; s <= 3; ++s) {
      auto sym = symbolic_power_cover(e.graph, s).ideal;
      std::uniform_int_distribution<unsigned> d(0, s);
      for (int k = 0; k < 10; ++k) {
        std::vector<unsigned> ex(e.graph.vertex_count());
        for (auto& x : ex) x = d(rng);
        auto m = Monomial::from_exponents(ex);
        INFO(e.id << " s=" << s << " " << to_string(m, e.graph.vertices()));
        CHECK(nz_member(e.graph, m, s) == contains(sym, m));
        ++checked;
      }
    }
  }
  CHECK(checked >= 300);
}

TEST_CASE("unicyclic-formula-matches-cover-on-random-unicyclic-graphs", "[symbolic][property]") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t len = trial % 2 ? 5 : 3;
    auto g = oracle::random_unicyclic(rng, len, 1 + trial % 3);
    const unsigned n = static_cast<unsigned>((len - 1) / 2);
    for (unsigned s = 1; s <= 2 * (n + 1) + 1; ++s) {
      INFO(g.to_edge_list() << " s=" << s);
      CHECK(symbolic_power_unicyclic(g, s).ideal == symbolic_power_cover(g, s).ideal);
    }
  }
}

TEST_CASE("alpha-formula", "[symbolic]") {
  for (unsigned len : {3u, 5u, 7u}) {
    auto g = cycle_graph(len);
    const unsigned n = (len - 1) / 2;
    for (unsigned s = 1; s <= 8; ++s) CHECK(alpha(symbolic_power_cover(g, s).ideal) == 2 * s - s / (n + 1));
  }
  CHECK(alpha(symbolic_power_cover(cycle_graph(7), 4).ideal) == 7);
}

TEST_CASE("containment-examples", "[symbolic]") {
  auto c5 = cycle_graph(5);
  CHECK_FALSE(containment(c5, 3, 3));
  CHECK(containment(c5, 3, 2));
  CHECK(containment(c5, 6, 5));
  CHECK_FALSE(containment(c5, 9, 8));
}

TEST_CASE("resurgence-search", "[symbolic][resurgence]") {
  auto c5 = cycle_graph(5);
  auto rep = resurgence_search(c5, 12, 12, "c5");
  REQUIRE(rep.max_ratio.has_value());
  CHECK(*rep.max_ratio == Rational(9, 8));
  CHECK(*rep.closed_form == Rational(6, 5));
  CHECK(*rep.waldschmidt_closed_form == Rational(5, 3));
  CHECK(rep.waldschmidt_estimate == Rational(2 * 12 - 12 / 3, 12));
  for (auto [s, t] : rep.violations) CHECK(Rational(s, t) < *rep.closed_form);
  auto j = to_json(rep);
  CHECK(j["truncated"] == true);
  CHECK(j["max_ratio"]["num"] == 9);
  CHECK(j["graph"] == "c5");

  auto c3 = resurgence_search(cycle_graph(3), 6, 6);
  CHECK(*c3.closed_form == Rational(4, 3));
  CHECK_FALSE(resurgence_search(cycle_graph(4), 3, 3).closed_form.has_value());
  CHECK_THROWS_AS(resurgence_search(c5, 0, 3), std::invalid_argument);
}

TEST_CASE("resurgence-grid-matches-alpha-criterion", "[symbolic][property]") {
  for (unsigned len : {3u, 5u}) {
    auto g = cycle_graph(len);
    auto rep = resurgence_search(g, 8, 8);
    for (unsigned s = 1; s <= 8; ++s)
      for (unsigned t = 1; t <= 8; ++t) {
        bool violated = std::find(rep.violations.begin(), rep.violations.end(), std::pair{s, t}) !=
                        rep.violations.end();
        CHECK(violated == (rep.alpha_table[s - 1].second < 2 * t));
      }
  }
}

TEST_CASE("symbolic-result-json", "[symbolic][json]") {
  auto j = to_json(symbolic_power_cover(cycle_graph(3), 2));
  CHECK(j["s"] == 2);
  CHECK(j["method"] == "cover-intersection");
  CHECK(j["generators"].size() == 4);
}
