#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "symedge/graph.hpp"
#include "symedge/ideal.hpp"

namespace symedge {

using Rational = boost::rational<long long>;

enum class SymbolicMethod { CoverIntersection, UnicyclicFormula, DerivationMembership };

std::string_view method_name(SymbolicMethod m);

struct SymbolicPowerResult {
  MonomialIdeal ideal;
  unsigned s;
  SymbolicMethod method;
};

/// Reference semantics: intersection of p_C^s over the minimal vertex covers C.
SymbolicPowerResult symbolic_power_cover(const Graph& g, unsigned s);

/// Sum over t = 0..floor(s/(n+1)) of I^{s-t(n+1)} w^t, where w is the product
/// of the 2n+1 vertices of the unique odd cycle. An even unique cycle makes
/// the graph bipartite and the result is I^s.
SymbolicPowerResult symbolic_power_unicyclic(const Graph& g, unsigned s);

/// Enumerates the box [0,s]^V and keeps the minimal monomials accepted by
/// nz_member. Exponential in |V|; `max_box` bounds the number of points.
SymbolicPowerResult symbolic_power_derivation(const Graph& g, unsigned s,
                                              std::size_t max_box = 2'000'000);

/// Characteristic-zero derivative test: m ∈ I^(s) iff m / x^b ∈ I(G) for
/// every b <= m with |b| <= s-1.
bool nz_member(const Graph& g, const Monomial& m, unsigned s);

/// Whether I^(s) ⊆ I^t, decided by generator membership.
bool containment(const Graph& g, unsigned s, unsigned t);

struct ResurgenceReport {
  std::string graph_id;
  unsigned s_max = 0;
  unsigned t_max = 0;
  std::vector<std::pair<unsigned, unsigned>> violations;  // (s, t) with I^(s) ⊄ I^t
  std::optional<Rational> max_ratio;
  std::optional<Rational> closed_form;
  std::vector<std::pair<unsigned, unsigned>> alpha_table;  // (s, alpha(I^(s)))
  Rational waldschmidt_estimate;
  std::optional<Rational> waldschmidt_closed_form;
};

/// Exhaustive containment over 1..s_max x 1..t_max. The closed forms are
/// filled only when the graph is unicyclic with an odd cycle; the grid
/// maximum is a finite truncation and is reported separately.
ResurgenceReport resurgence_search(const Graph& g, unsigned s_max, unsigned t_max,
                                   std::string graph_id = "");

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const ResurgenceReport& r);
nlohmann::json to_json(const SymbolicPowerResult& r);

/// Half-length n of the unique odd cycle C_{2n+1}, or nullopt.
std::optional<unsigned> odd_cycle_half_length(const Graph& g);

/// Product of the vertices of the unique cycle, over the graph's variables.
Monomial cycle_monomial(const Graph& g);

}  // namespace symedge
