#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "symedge/graph.hpp"
#include "symedge/ideal.hpp"

namespace symedge {

struct ReesGenerator {
  Monomial monomial;
  unsigned degree;
};

/**
 * Minimal algebra generators x^v t^b of the symbolic Rees algebra with
 * b <= max_degree. Says nothing about degrees above the bound.
 */
struct ReesGeneratorSet {
  Variables variables;
  unsigned max_degree = 0;
  std::vector<ReesGenerator> generators;  // by degree, then lex

  std::vector<Monomial> stratum(unsigned degree) const;
};

struct ReesBudget {
  std::size_t max_ideal_generators = 200'000;
};

/// 2(n+1)+1 for odd girth 2n+1; 3 for bipartite graphs.
unsigned default_rees_degree(const Graph& g);

ReesGeneratorSet rees_generators(const Graph& g, unsigned max_degree,
                                 const ReesBudget& budget = {});

/// Degree-b component of the subalgebra generated by `set`, rebuilt from the
/// generator list alone: S_b = sum over generators (g, d) of g * S_{b-d}.
MonomialIdeal graded_component(const ReesGeneratorSet& set, unsigned b);

/// Every discovered generator is squarefree.
bool is_implosive_up_to(const ReesGeneratorSet& set);

nlohmann::json to_json(const ReesGeneratorSet& set);

}  // namespace symedge
