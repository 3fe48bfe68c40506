#include "symedge/rees.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "symedge/errors.hpp"
#include "symedge/symbolic.hpp"

namespace symedge {

namespace {

void check_budget(const MonomialIdeal& a, const ReesBudget& budget) {
  if (a.size() > budget.max_ideal_generators)
    throw BudgetError("ideal exceeds " + std::to_string(budget.max_ideal_generators) +
                      " generators");
}

}  // namespace

std::vector<Monomial> ReesGeneratorSet::stratum(unsigned degree) const {
  std::vector<Monomial> out;
  for (const auto& g : generators)
    if (g.degree == degree) out.push_back(g.monomial);
  return out;
}

unsigned default_rees_degree(const Graph& g) {
  auto girth = odd_girth(g);
  if (!girth) return 3;
  return static_cast<unsigned>(2 * ((*girth - 1) / 2 + 1) + 1);
}

ReesGeneratorSet rees_generators(const Graph& g, unsigned max_degree, const ReesBudget& budget) {
  if (g.edge_count() == 0) throw std::invalid_argument("graph has no edges");
  if (max_degree == 0) throw std::invalid_argument("max_degree must be positive");
  ReesGeneratorSet out;
  out.max_degree = max_degree;
  const MonomialIdeal edges = edge_ideal(g);
  out.variables = edges.context();

  // components[b] is the degree-b part of the subalgebra found so far.
  std::vector<MonomialIdeal> components{unit_ideal(out.variables), edges};
  for (const auto& m : edges.generators()) out.generators.push_back({m, 1});

  for (unsigned b = 2; b <= max_degree; ++b) {
    MonomialIdeal generated = zero_ideal(out.variables);
    for (unsigned p = 1; p <= b / 2; ++p) {
      generated = sum(generated, product(components[p], components[b - p]));
      check_budget(generated, budget);
    }
    const MonomialIdeal target = symbolic_power_cover(g, b).ideal;
    check_budget(target, budget);
    DivisorIndex index(generated);
    std::vector<Monomial> fresh;
    for (const auto& m : target.generators())
      if (!index.has_divisor_of(m)) fresh.push_back(m);
    for (const auto& m : fresh) out.generators.push_back({m, b});
    components.push_back(sum(generated, MonomialIdeal(out.variables, std::move(fresh))));
  }
  return out;
}

MonomialIdeal graded_component(const ReesGeneratorSet& set, unsigned b) {
  std::vector<MonomialIdeal> parts{unit_ideal(set.variables)};
  for (unsigned d = 1; d <= b; ++d) {
    std::vector<Monomial> gens;
    for (const auto& g : set.generators) {
      if (g.degree > d) continue;
      for (const auto& m : parts[d - g.degree].generators()) gens.push_back(m * g.monomial);
    }
    parts.emplace_back(set.variables, std::move(gens));
  }
  return parts[b];
}

bool is_implosive_up_to(const ReesGeneratorSet& set) {
  return std::all_of(set.generators.begin(), set.generators.end(),
                     [](const ReesGenerator& g) { return g.monomial.is_squarefree(); });
}

nlohmann::json to_json(const ReesGeneratorSet& set) {
  nlohmann::json strata = nlohmann::json::object();
  for (unsigned b = 1; b <= set.max_degree; ++b) {
    nlohmann::json layer = nlohmann::json::array();
    for (const auto& m : set.stratum(b)) {
      nlohmann::json v = nlohmann::json::array();
      for (auto e : m.exponents()) v.push_back(static_cast<unsigned>(e));
      layer.push_back(v);
    }
    strata[std::to_string(b)] = layer;
  }
  return {{"variables", *set.variables},
          {"max_degree", set.max_degree},
          {"up_to_degree", set.max_degree},
          {"implosive_up_to_max_degree", is_implosive_up_to(set)},
          {"strata", strata}};
}

}  // namespace symedge
