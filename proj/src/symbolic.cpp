#include "symedge/symbolic.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "symedge/errors.hpp"

namespace symedge {

namespace {

void require_edges(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("graph has no edges");
}

void require_positive(unsigned s) {
  if (s == 0) throw std::invalid_argument("symbolic power exponent must be positive");
}

bool support_has_edge(const Graph& g, VertexMask support) {
  for (const auto& [u, v] : g.edges())
    if (((support >> u) & 1U) && ((support >> v) & 1U)) return true;
  return false;
}

// Walks every b <= m with |b| <= budget; false as soon as some m / x^b
// leaves the edge ideal.
bool all_derivatives_in_edge_ideal(const Graph& g, const Monomial& m, std::size_t var,
                                   unsigned budget, VertexMask support) {
  if (var == m.size()) return support_has_edge(g, support);
  const unsigned top = std::min<unsigned>(m[var], budget);
  for (unsigned b = 0; b <= top; ++b) {
    VertexMask sup = support;
    if (m[var] - b > 0) sup |= VertexMask{1} << var;
    if (!all_derivatives_in_edge_ideal(g, m, var + 1, budget - b, sup)) return false;
  }
  return true;
}

}  // namespace

std::string_view method_name(SymbolicMethod m) {
  switch (m) {
    case SymbolicMethod::CoverIntersection:
      return "cover-intersection";
    case SymbolicMethod::UnicyclicFormula:
      return "unicyclic-formula";
    case SymbolicMethod::DerivationMembership:
      return "derivation-membership";
  }
  return "unknown";
}

SymbolicPowerResult symbolic_power_cover(const Graph& g, unsigned s) {
  require_edges(g);
  require_positive(s);
  auto covers = minimal_vertex_cover_masks(g);
  // Small primes first keeps the running intersection small.
  std::stable_sort(covers.begin(), covers.end(),
                   [](VertexMask a, VertexMask b) { return std::popcount(a) < std::popcount(b); });
  MonomialIdeal acc = unit_ideal(make_variables(g.vertices()));
  for (auto c : covers) acc = intersect_with_prime_power(acc, c, s);
  return {std::move(acc), s, SymbolicMethod::CoverIntersection};
}

std::optional<unsigned> odd_cycle_half_length(const Graph& g) {
  auto cyc = cycle_structure(g);
  if (!cyc.is_unicyclic) return std::nullopt;
  const auto len = cyc.unique_cycle->size();
  if (len % 2 == 0) return std::nullopt;
  return static_cast<unsigned>((len - 1) / 2);
}

Monomial cycle_monomial(const Graph& g) {
  auto cyc = cycle_structure(g);
  if (!cyc.is_unicyclic) throw std::invalid_argument("graph is not unicyclic");
  return Monomial::from_support(g.vertex_count(), g.mask_of(*cyc.unique_cycle));
}

SymbolicPowerResult symbolic_power_unicyclic(const Graph& g, unsigned s) {
  require_positive(s);
  auto cyc = cycle_structure(g);
  if (!cyc.is_unicyclic) throw std::invalid_argument("graph is not unicyclic");
  const MonomialIdeal edges = edge_ideal(g);
  if (cyc.unique_cycle->size() % 2 == 0)
    return {power(edges, s), s, SymbolicMethod::UnicyclicFormula};

  const unsigned step = static_cast<unsigned>((cyc.unique_cycle->size() - 1) / 2) + 1;
  const Monomial w = cycle_monomial(g);
  MonomialIdeal acc = zero_ideal(edges.context());
  for (unsigned t = 0; t * step <= s; ++t) {
    MonomialIdeal term = product(power(edges, s - t * step), principal(edges.context(), w.pow(t)));
    acc = sum(acc, term);
  }
  return {std::move(acc), s, SymbolicMethod::UnicyclicFormula};
}

bool nz_member(const Graph& g, const Monomial& m, unsigned s) {
  if (m.size() != g.vertex_count())
    throw ContextMismatch("monomial width differs from vertex count");
  require_positive(s);
  return all_derivatives_in_edge_ideal(g, m, 0, s - 1, 0);
}

SymbolicPowerResult symbolic_power_derivation(const Graph& g, unsigned s, std::size_t max_box) {
  require_edges(g);
  require_positive(s);
  const std::size_t n = g.vertex_count();
  const std::size_t radix = s + 1;
  std::size_t box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (box > max_box / radix) throw BudgetError("derivation box exceeds budget");
    box *= radix;
  }
  // Minimal generators of I^(s) have every exponent <= s, so the box holds
  // all of them; membership is upward closed, so minimality only needs the
  // n single-step predecessors.
  std::vector<char> member(box, 0);
  std::vector<unsigned> digits(n, 0);
  Monomial m(n);
  for (std::size_t idx = 0; idx < box; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      m.set(i, static_cast<unsigned>(rest % radix));
      rest /= radix;
    }
    member[idx] = nz_member(g, m, s) ? 1 : 0;
  }
  std::vector<Monomial> gens;
  for (std::size_t idx = 0; idx < box; ++idx) {
    if (!member[idx]) continue;
    bool minimal = true;
    std::size_t rest = idx;
    std::size_t place = 1;
    for (std::size_t i = 0; i < n && minimal; ++i) {
      if (rest % radix != 0 && member[idx - place]) minimal = false;
      rest /= radix;
      place *= radix;
    }
    if (!minimal) continue;
    rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      m.set(i, static_cast<unsigned>(rest % radix));
      rest /= radix;
    }
    gens.push_back(m);
  }
  return {minimalize(make_variables(g.vertices()), std::move(gens)), s,
          SymbolicMethod::DerivationMembership};
}

bool containment(const Graph& g, unsigned s, unsigned t) {
  require_positive(t);
  auto sym = symbolic_power_cover(g, s);
  return contains_ideal(power(edge_ideal(g), t), sym.ideal);
}

ResurgenceReport resurgence_search(const Graph& g, unsigned s_max, unsigned t_max,
                                   std::string graph_id) {
  require_edges(g);
  if (s_max == 0 || t_max == 0) throw std::invalid_argument("search bounds must be positive");
  ResurgenceReport rep;
  rep.graph_id = std::move(graph_id);
  rep.s_max = s_max;
  rep.t_max = t_max;

  const MonomialIdeal edges = edge_ideal(g);
  std::vector<MonomialIdeal> ordinary;
  ordinary.reserve(t_max);
  MonomialIdeal running = edges;
  for (unsigned t = 1; t <= t_max; ++t) {
    if (t > 1) running = product(running, edges);
    ordinary.push_back(running);
  }
  std::vector<DivisorIndex> ordinary_index;
  ordinary_index.reserve(t_max);
  for (const auto& o : ordinary) ordinary_index.emplace_back(o);

  for (unsigned s = 1; s <= s_max; ++s) {
    const MonomialIdeal sym = symbolic_power_cover(g, s).ideal;
    rep.alpha_table.emplace_back(s, alpha(sym));
    for (unsigned t = 1; t <= t_max; ++t) {
      const auto& idx = ordinary_index[t - 1];
      bool contained = std::all_of(sym.generators().begin(), sym.generators().end(),
                                   [&](const Monomial& m) { return idx.has_divisor_of(m); });
      if (!contained) {
        rep.violations.emplace_back(s, t);
        Rational r(s, t);
        if (!rep.max_ratio || r > *rep.max_ratio) rep.max_ratio = r;
      }
    }
  }
  rep.waldschmidt_estimate = Rational(rep.alpha_table.back().second, s_max);
  if (auto n = odd_cycle_half_length(g)) {
    const long long k = *n;
    rep.closed_form = Rational(2 * k + 2, 2 * k + 1);
    rep.waldschmidt_closed_form = Rational(2 * k + 1, k + 1);
  }
  return rep;
}

nlohmann::json to_json(const Rational& r) {
  return {{"num", r.numerator()}, {"den", r.denominator()}};
}

nlohmann::json to_json(const ResurgenceReport& r) {
  auto opt = [](const std::optional<Rational>& q) -> nlohmann::json {
    return q ? to_json(*q) : nlohmann::json(nullptr);
  };
  nlohmann::json violations = nlohmann::json::array();
  for (auto [s, t] : r.violations) violations.push_back({s, t});
  nlohmann::json alphas = nlohmann::json::array();
  for (auto [s, a] : r.alpha_table) alphas.push_back({s, a});
  return {{"graph", r.graph_id},
          {"s_max", r.s_max},
          {"t_max", r.t_max},
          {"truncated", true},
          {"violations", violations},
          {"max_ratio", opt(r.max_ratio)},
          {"closed_form", opt(r.closed_form)},
          {"alpha_table", alphas},
          {"waldschmidt_estimate", to_json(r.waldschmidt_estimate)},
          {"waldschmidt_closed_form", opt(r.waldschmidt_closed_form)}};
}

nlohmann::json to_json(const SymbolicPowerResult& r) {
  nlohmann::json j = to_json(r.ideal);
  j["s"] = r.s;
  j["method"] = std::string(method_name(r.method));
  return j;
}

}  // namespace symedge
