#pragma once

// Brute-force reference implementations used only by tests. Each one is
// deliberately naive and independent of the library algorithms it checks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "symedge/graph.hpp"
#include "symedge/ideal.hpp"

namespace oracle {

using symedge::Graph;
using symedge::Monomial;
using symedge::MonomialIdeal;
using symedge::VertexMask;

inline bool covers_all(const Graph& g, VertexMask c) {
  for (const auto& [u, v] : g.edges())
    if (!((c >> u) & 1U) && !((c >> v) & 1U)) return false;
  return true;
}

inline std::vector<VertexMask> minimal_covers(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexMask> out;
  for (VertexMask c = 0; c < (VertexMask{1} << n); ++c) {
    if (!covers_all(g, c)) continue;
    bool minimal = true;
    for (std::size_t v = 0; v < n && minimal; ++v)
      if (((c >> v) & 1U) && covers_all(g, c & ~(VertexMask{1} << v))) minimal = false;
    if (minimal) out.push_back(c);
  }
  return out;
}

inline std::size_t tau(const Graph& g) {
  std::size_t best = g.vertex_count();
  for (VertexMask c = 0; c < (VertexMask{1} << g.vertex_count()); ++c)
    if (covers_all(g, c)) best = std::min<std::size_t>(best, std::popcount(c));
  return best;
}

inline std::size_t max_independent(const Graph& g) {
  std::size_t best = 0;
  for (VertexMask c = 0; c < (VertexMask{1} << g.vertex_count()); ++c) {
    bool ok = true;
    for (const auto& [u, v] : g.edges())
      if (((c >> u) & 1U) && ((c >> v) & 1U)) ok = false;
    if (ok) best = std::max<std::size_t>(best, std::popcount(c));
  }
  return best;
}

// Edge subsets; matching if pairwise disjoint, induced if moreover no graph
// edge joins two different chosen edges.
inline std::pair<std::size_t, std::size_t> matching_numbers(const Graph& g) {
  const auto& e = g.edges();
  std::size_t beta = 0, nu = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << e.size()); ++s) {
    VertexMask used = 0;
    bool matching = true;
    for (std::size_t i = 0; i < e.size() && matching; ++i) {
      if (!((s >> i) & 1U)) continue;
      VertexMask ends = (VertexMask{1} << e[i].first) | (VertexMask{1} << e[i].second);
      if (used & ends) matching = false;
      used |= ends;
    }
    if (!matching) continue;
    const auto k = static_cast<std::size_t>(std::popcount(s));
    beta = std::max(beta, k);
    std::size_t inside = 0;
    for (const auto& [u, v] : e)
      if (((used >> u) & 1U) && ((used >> v) & 1U)) ++inside;
    if (inside == k) nu = std::max(nu, k);
  }
  return {beta, nu};
}

inline std::size_t tau_on(const Graph& g, VertexMask part) {
  std::size_t best = static_cast<std::size_t>(std::popcount(part));
  for (VertexMask c = part;; c = (c - 1) & part) {
    bool ok = true;
    for (const auto& [u, v] : g.edges())
      if (((part >> u) & 1U) && ((part >> v) & 1U) && !((c >> u) & 1U) && !((c >> v) & 1U)) ok = false;
    if (ok) best = std::min<std::size_t>(best, std::popcount(c));
    if (c == 0) break;
  }
  return best;
}

// Decomposable over any partition into r >= 2 nonempty parts (labels
// assigned per vertex).
inline bool decomposable_any_partition(const Graph& g, std::size_t max_parts) {
  const std::size_t n = g.vertex_count();
  const std::size_t total = tau(g);
  std::vector<std::size_t> label(n, 0);
  while (true) {
    std::size_t i = 0;
    while (i < n && label[i] + 1 == max_parts) label[i++] = 0;
    if (i == n) return false;
    ++label[i];
    std::vector<VertexMask> parts(max_parts, 0);
    for (std::size_t v = 0; v < n; ++v) parts[label[v]] |= VertexMask{1} << v;
    std::size_t nonempty = 0, sum = 0;
    for (auto p : parts)
      if (p) {
        ++nonempty;
        sum += tau_on(g, p);
      }
    if (nonempty >= 2 && sum == total) return true;
  }
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool member(const MonomialIdeal& a, const Monomial& m) {
  for (const auto& g : a.generators())
    if (divides(g, m)) return true;
  return false;
}

// Every exponent vector with entries in [0, bound].
template <typename F>
void for_each_in_box(std::size_t nvars, unsigned bound, F&& f) {
  std::vector<unsigned> e(nvars, 0);
  while (true) {
    f(Monomial::from_exponents(e));
    std::size_t i = 0;
    while (i < nvars && e[i] == bound) e[i++] = 0;
    if (i == nvars) return;
    ++e[i];
  }
}

// Minimal elements of a divisibility-closed-upward set given by a predicate,
// searched in the box [0, bound]^n.
template <typename Pred>
std::vector<Monomial> minimal_in_box(std::size_t nvars, unsigned bound, Pred&& in) {
  std::vector<Monomial> members;
  for_each_in_box(nvars, bound, [&](const Monomial& m) {
    if (in(m)) members.push_back(m);
  });
  std::vector<Monomial> out;
  for (const auto& m : members) {
    bool minimal = true;
    for (const auto& o : members)
      if (!(o == m) && divides(o, m)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Monomial> gens(const MonomialIdeal& a) {
  return {a.generators().begin(), a.generators().end()};
}

// "x1^2*x3" over the graph's variables; "1" is the empty product.
inline Monomial mono(const std::vector<std::string>& vars, const std::string& text) {
  std::vector<unsigned> e(vars.size(), 0);
  if (text == "1") return Monomial::from_exponents(e);
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    unsigned power = 1;
    auto caret = factor.find('^');
    std::string name = factor.substr(0, caret);
    if (caret != std::string::npos) power = static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw std::invalid_argument("unknown variable " + name);
    e[static_cast<std::size_t>(it - vars.begin())] += power;
  }
  return Monomial::from_exponents(e);
}

inline MonomialIdeal ideal(const symedge::Variables& vars, const std::vector<std::string>& texts) {
  std::vector<Monomial> g;
  for (const auto& t : texts) g.push_back(mono(*vars, t));
  return MonomialIdeal(vars, std::move(g));
}

// Multigraded K-polynomial numerator of S/I via the Taylor complex:
// sum over subsets sigma of the generators of (-1)^|sigma| x^lcm(sigma).
inline std::map<Monomial, long long> taylor_k_polynomial(const MonomialIdeal& a) {
  std::map<Monomial, long long> k;
  const auto& g = a.generators();
  const std::size_t r = g.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << r); ++s) {
    Monomial l(a.variable_count());
    for (std::size_t i = 0; i < r; ++i)
      if ((s >> i) & 1U) l = lcm(l, g[i]);
    k[l] += (std::popcount(s) % 2 == 0) ? 1 : -1;
  }
  std::erase_if(k, [](const auto& kv) { return kv.second == 0; });
  return k;
}

// Random simple graph on n vertices named x1..xn with edge probability p.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> e;
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(v[i], v[j]);
  return Graph(v, e);
}

// Random connected unicyclic graph: an odd cycle of the given length plus
// `extra` tree vertices each attached to an earlier vertex.
inline Graph random_unicyclic(std::mt19937_64& rng, std::size_t cycle, std::size_t extra) {
  std::vector<std::string> v;
  std::vector<std::pair<std::string, std::string>> e;
  for (std::size_t i = 1; i <= cycle; ++i) v.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < cycle; ++i) e.emplace_back(v[i], v[(i + 1) % cycle]);
  for (std::size_t j = 1; j <= extra; ++j) {
    std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
    auto parent = v[pick(rng)];
    v.push_back("y" + std::to_string(j));
    e.emplace_back(parent, v.back());
  }
  return Graph(v, e);
}

}  // namespace oracle
