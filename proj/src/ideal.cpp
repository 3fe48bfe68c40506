#include "symedge/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "symedge/errors.hpp"

namespace symedge {

namespace {

void require_same(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!same_context(a.context(), b.context()))
    throw ContextMismatch("ideals over different variable lists");
}

void require_width(const MonomialIdeal& a, const Monomial& m) {
  if (m.size() != a.variable_count())
    throw ContextMismatch("monomial has " + std::to_string(m.size()) + " exponents, ring has " +
                          std::to_string(a.variable_count()) + " variables");
}

// Calls f(b) for every exponent vector b supported on `vars` with |b| = d.
template <typename F>
void for_each_composition(std::vector<std::size_t>::const_iterator first,
                          std::vector<std::size_t>::const_iterator last, unsigned d,
                          Monomial& acc, F&& f) {
  if (first + 1 == last || d == 0) {
    if (first != last) acc.set(*first, acc[*first] + d);
    f(acc);
    if (first != last) acc.set(*first, acc[*first] - d);
    return;
  }
  for (unsigned e = 0; e <= d; ++e) {
    acc.set(*first, acc[*first] + e);
    for_each_composition(first + 1, last, d - e, acc, f);
    acc.set(*first, acc[*first] - e);
  }
}

}  // namespace

Variables make_variables(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_context(const Variables& a, const Variables& b) {
  return a == b || (a && b && *a == *b);
}

MonomialIdeal::MonomialIdeal(Variables vars, std::vector<Monomial> gens)
    : MonomialIdeal(minimalize(std::move(vars), std::move(gens))) {}

DivisorIndex::DivisorIndex(std::size_t nvars) : nvars_(nvars), nodes_(1) {}

DivisorIndex::DivisorIndex(const MonomialIdeal& ideal) : DivisorIndex(ideal.variable_count()) {
  for (const auto& g : ideal.generators()) insert(g);
}

void DivisorIndex::insert(const Monomial& m) {
  std::uint32_t node = 0;
  for (std::size_t d = 0; d < nvars_; ++d) {
    auto& ch = nodes_[node].children;
    Exponent e = static_cast<Exponent>(m[d]);
    auto it = std::lower_bound(ch.begin(), ch.end(), e,
                               [](const auto& p, Exponent x) { return p.first < x; });
    if (it != ch.end() && it->first == e) {
      node = it->second;
      continue;
    }
    auto next = static_cast<std::uint32_t>(nodes_.size());
    ch.insert(it, {e, next});
    nodes_.emplace_back();
    node = next;
  }
  ++count_;
}

bool DivisorIndex::search(std::uint32_t node, std::size_t depth, const Monomial& m) const {
  if (depth == nvars_) return true;
  const Exponent limit = static_cast<Exponent>(m[depth]);
  for (const auto& [e, child] : nodes_[node].children) {
    if (e > limit) break;
    if (search(child, depth + 1, m)) return true;
  }
  return false;
}

bool DivisorIndex::has_divisor_of(const Monomial& m) const {
  if (count_ == 0) return false;
  return search(0, 0, m);
}

MonomialIdeal minimalize(Variables vars, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.size() != vars->size()) throw ContextMismatch("generator width differs from ring");
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty() || gens.front().degree() == gens.back().degree()) {
    // Distinct monomials of one degree never divide each other; already in
    // lex order within the single degree block.
    return MonomialIdeal(MonomialIdeal::Trusted{}, std::move(vars), std::move(gens));
  }
  DivisorIndex index(vars->size());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    if (index.has_divisor_of(g)) continue;
    index.insert(g);
    kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(MonomialIdeal::Trusted{}, std::move(vars), std::move(kept));
}

MonomialIdeal zero_ideal(Variables vars) { return minimalize(std::move(vars), {}); }

MonomialIdeal unit_ideal(Variables vars) {
  std::size_t n = vars->size();
  return minimalize(std::move(vars), {Monomial(n)});
}

MonomialIdeal principal(Variables vars, Monomial m) {
  return minimalize(std::move(vars), {std::move(m)});
}

MonomialIdeal prime_ideal(Variables vars, VertexMask mask) {
  std::vector<Monomial> gens;
  const std::size_t n = vars->size();
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1U) gens.push_back(Monomial::from_support(n, VertexMask{1} << i));
  return minimalize(std::move(vars), std::move(gens));
}

MonomialIdeal maximal_ideal(Variables vars) {
  const std::size_t n = vars->size();
  VertexMask all = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  return prime_ideal(std::move(vars), all);
}

MonomialIdeal edge_ideal(const Graph& g) { return edge_ideal(g, make_variables(g.vertices())); }

MonomialIdeal edge_ideal(const Graph& g, const Variables& vars) {
  std::vector<std::size_t> slot(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto it = std::find(vars->begin(), vars->end(), g.name(v));
    if (it == vars->end()) throw ContextMismatch("vertex " + g.name(v) + " is not a variable");
    slot[v] = static_cast<std::size_t>(it - vars->begin());
  }
  std::vector<Monomial> gens;
  for (const auto& [u, v] : g.edges())
    gens.push_back(Monomial::from_support(vars->size(),
                                          (VertexMask{1} << slot[u]) | (VertexMask{1} << slot[v])));
  return minimalize(vars, std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.context(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(x * y);
  return minimalize(a.context(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, unsigned s) {
  MonomialIdeal out = unit_ideal(a.context());
  for (unsigned i = 0; i < s; ++i) out = product(out, a);
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return zero_ideal(a.context());
  DivisorIndex in_a(a);
  DivisorIndex in_b(b);
  std::vector<Monomial> gens;
  // A generator of one side lying in the other side is itself a candidate,
  // and every lcm it forms is a multiple of it.
  std::vector<const Monomial*> rest_b;
  for (const auto& y : b.generators()) {
    if (in_a.has_divisor_of(y))
      gens.push_back(y);
    else
      rest_b.push_back(&y);
  }
  for (const auto& x : a.generators()) {
    if (in_b.has_divisor_of(x)) {
      gens.push_back(x);
      continue;
    }
    for (const auto* y : rest_b) gens.push_back(lcm(x, *y));
  }
  return minimalize(a.context(), std::move(gens));
}

MonomialIdeal intersect_with_prime_power(const MonomialIdeal& a, VertexMask prime, unsigned d) {
  if (d == 0) return a;
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < a.variable_count(); ++i)
    if ((prime >> i) & 1U) vars.push_back(i);
  if (vars.empty() || a.is_zero()) return zero_ideal(a.context());
  std::vector<Monomial> gens;
  for (const auto& g : a.generators()) {
    unsigned inside = 0;
    for (auto i : vars) inside += g[i];
    if (inside >= d) {
      gens.push_back(g);
      continue;
    }
    Monomial acc = g;
    for_each_composition(vars.cbegin(), vars.cend(), d - inside, acc,
                         [&](const Monomial& m) { gens.push_back(m); });
  }
  return minimalize(a.context(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& b) {
  require_width(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size());
  for (const auto& g : a.generators()) gens.push_back(g.colon(b));
  return minimalize(a.context(), std::move(gens));
}

MonomialIdeal colon_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  if (b.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  MonomialIdeal out = unit_ideal(a.context());
  for (const auto& g : b.generators()) {
    MonomialIdeal c = colon(a, g);
    if (c.is_unit()) continue;
    out = intersect(out, c);
  }
  return out;
}

bool contains(const MonomialIdeal& a, const Monomial& m) {
  require_width(a, m);
  return std::any_of(a.generators().begin(), a.generators().end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool contains_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  if (b.size() * a.size() < 4096)
    return std::all_of(b.generators().begin(), b.generators().end(),
                       [&](const Monomial& g) { return contains(a, g); });
  DivisorIndex index(a);
  return std::all_of(b.generators().begin(), b.generators().end(),
                     [&](const Monomial& g) { return index.has_divisor_of(g); });
}

unsigned alpha(const MonomialIdeal& a) {
  if (a.is_zero()) throw std::invalid_argument("alpha of the zero ideal");
  unsigned best = a.generators().front().degree();
  for (const auto& g : a.generators()) best = std::min(best, g.degree());
  return best;
}

std::string to_string(const MonomialIdeal& a) {
  if (a.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += to_string(a.generators()[i], a.variables());
  }
  return out + ")";
}

nlohmann::json to_json(const MonomialIdeal& a) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : a.generators()) {
    nlohmann::json row = nlohmann::json::array();
    for (auto e : g.exponents()) row.push_back(static_cast<unsigned>(e));
    gens.push_back(std::move(row));
  }
  return {{"variables", a.variables()}, {"generators", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
  try {
    auto names = j.at("variables").get<std::vector<std::string>>();
    const std::size_t n = names.size();
    std::vector<Monomial> gens;
    for (const auto& row : j.at("generators")) {
      auto exps = row.get<std::vector<long long>>();
      if (exps.size() != n) throw ParseError("generator width differs from variable count");
      std::vector<unsigned> u;
      for (auto e : exps) {
        if (e < 0 || e > 65535) throw ParseError("exponent out of range");
        u.push_back(static_cast<unsigned>(e));
      }
      gens.push_back(Monomial::from_exponents(u));
    }
    return minimalize(make_variables(std::move(names)), std::move(gens));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("ideal JSON: ") + e.what());
  }
}

}  // namespace symedge
