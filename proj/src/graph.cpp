#include "symedge/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "symedge/errors.hpp"

namespace symedge {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

std::size_t lowest(VertexMask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

template <typename F>
void for_each_bit(VertexMask m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

}  // namespace

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("duplicate vertex name");
  if (vertices.size() > kMaxGraphVertices)
    throw std::invalid_argument("graph has more than " + std::to_string(kMaxGraphVertices) +
                                " vertices");
  names_ = std::move(vertices);
  adjacency_.assign(names_.size(), 0);
  std::set<Edge> seen;
  for (const auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("loop edge at vertex " + a);
    std::size_t u = require_index(a);
    std::size_t v = require_index(b);
    if (u > v) std::swap(u, v);
    seen.emplace(u, v);
  }
  edges_.assign(seen.begin(), seen.end());
  for (const auto& [u, v] : edges_) {
    adjacency_[u] |= VertexMask{1} << v;
    adjacency_[v] |= VertexMask{1} << u;
  }
}

std::optional<std::size_t> Graph::index_of(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Graph::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw std::invalid_argument("unknown vertex " + std::string(name));
  return *idx;
}

VertexMask Graph::all_vertices() const {
  return names_.size() == 64 ? ~VertexMask{0} : (VertexMask{1} << names_.size()) - 1;
}

VertexMask Graph::mask_of(std::span<const std::string> names) const {
  VertexMask m = 0;
  for (const auto& n : names) m |= VertexMask{1} << require_index(n);
  return m;
}

std::vector<std::string> Graph::names_of(VertexMask mask) const {
  std::vector<std::string> out;
  for_each_bit(mask, [&](std::size_t v) { out.push_back(names_.at(v)); });
  return out;
}

std::string Graph::to_edge_list() const {
  std::ostringstream os;
  for (std::size_t v = 0; v < names_.size(); ++v)
    if (adjacency_[v] == 0) os << "vertex " << names_[v] << '\n';
  for (const auto& [u, v] : edges_) os << names_[u] << ' ' << names_[v] << '\n';
  return os.str();
}

Graph parse_graph(std::string_view text, std::size_t max_vertices) {
  std::set<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("line " + std::to_string(lineno) + ": " + why + ": '" + line + "'");
    };
    if (tok.size() != 2) fail("expected 'u v' or 'vertex u'");
    if (tok[0] == "vertex") {
      if (!valid_name(tok[1])) fail("invalid vertex name");
      vertices.insert(tok[1]);
      continue;
    }
    if (!valid_name(tok[0]) || !valid_name(tok[1])) fail("invalid vertex name");
    if (tok[0] == tok[1]) fail("loop edge");
    vertices.insert(tok[0]);
    vertices.insert(tok[1]);
    edges.emplace_back(tok[0], tok[1]);
  }
  if (vertices.size() > max_vertices)
    throw BudgetError("graph has " + std::to_string(vertices.size()) +
                      " vertices; the cap is " + std::to_string(max_vertices));
  try {
    return Graph({vertices.begin(), vertices.end()}, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph load_graph(const std::string& path, std::size_t max_vertices) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), max_vertices);
}

Graph induced_subgraph(const Graph& g, std::span<const std::string> subset) {
  return induced_subgraph(g, g.mask_of(subset));
}

Graph induced_subgraph(const Graph& g, VertexMask subset) {
  subset &= g.all_vertices();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : g.edges())
    if (((subset >> u) & 1U) && ((subset >> v) & 1U)) edges.emplace_back(g.name(u), g.name(v));
  return Graph(g.names_of(subset), edges);
}

std::vector<VertexMask> connected_components(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask unseen = g.all_vertices();
  while (unseen != 0) {
    VertexMask comp = VertexMask{1} << lowest(unseen);
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for_each_bit(frontier, [&](std::size_t v) { next |= g.neighbors(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

CycleStructure cycle_structure(const Graph& g) {
  CycleStructure out;
  const std::size_t components = connected_components(g).size();
  if (g.edge_count() + components != g.vertex_count() + 1) return out;

  // With |E| = |V| - c + 1 there is exactly one cycle, and it is what
  // survives repeated removal of vertices of degree <= 1.
  VertexMask alive = g.all_vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for_each_bit(alive, [&](std::size_t v) {
      if (std::popcount(g.neighbors(v) & alive) <= 1) {
        alive &= ~(VertexMask{1} << v);
        changed = true;
      }
    });
  }
  if (alive == 0) return out;

  const std::size_t start = lowest(alive);
  VertexMask start_nbrs = g.neighbors(start) & alive;
  std::vector<std::size_t> order{start};
  std::size_t prev = start;
  std::size_t cur = lowest(start_nbrs);
  while (cur != start) {
    order.push_back(cur);
    VertexMask next = g.neighbors(cur) & alive & ~(VertexMask{1} << prev);
    prev = cur;
    cur = lowest(next);
  }

  out.is_unicyclic = true;
  std::vector<std::string> names;
  for (auto v : order) names.push_back(g.name(v));
  out.unique_cycle = std::move(names);

  VertexMask near = alive;
  for_each_bit(alive, [&](std::size_t v) { near |= g.neighbors(v); });
  out.cycle_is_dominating = (near == g.all_vertices());
  return out;
}

namespace {

// Bron-Kerbosch with pivoting on the complement graph: maximal independent
// sets of G, whose complements are exactly the minimal vertex covers.
void maximal_independent_sets(const Graph& g, VertexMask r, VertexMask p, VertexMask x,
                              std::vector<VertexMask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  const VertexMask all = g.all_vertices();
  auto non_nbrs = [&](std::size_t v) { return all & ~g.neighbors(v) & ~(VertexMask{1} << v); };
  std::size_t pivot = lowest(p | x);
  int best = -1;
  for_each_bit(p | x, [&](std::size_t u) {
    int c = std::popcount(p & non_nbrs(u));
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  VertexMask candidates = p & ~non_nbrs(pivot);
  for_each_bit(candidates, [&](std::size_t v) {
    VertexMask bit = VertexMask{1} << v;
    maximal_independent_sets(g, r | bit, p & non_nbrs(v), x & non_nbrs(v), out);
    p &= ~bit;
    x |= bit;
  });
}

std::vector<std::size_t> bits_of(VertexMask m) {
  std::vector<std::size_t> out;
  for_each_bit(m, [&](std::size_t v) { out.push_back(v); });
  return out;
}

}  // namespace

std::vector<VertexMask> minimal_vertex_cover_masks(const Graph& g) {
  std::vector<VertexMask> independent;
  maximal_independent_sets(g, 0, g.all_vertices(), 0, independent);
  std::vector<VertexMask> covers;
  covers.reserve(independent.size());
  for (auto s : independent) covers.push_back(g.all_vertices() & ~s);
  std::sort(covers.begin(), covers.end(), [](VertexMask a, VertexMask b) {
    return bits_of(a) < bits_of(b);
  });
  return covers;
}

std::vector<std::vector<std::string>> minimal_vertex_covers(const Graph& g) {
  std::vector<std::vector<std::string>> out;
  for (auto m : minimal_vertex_cover_masks(g)) out.push_back(g.names_of(m));
  return out;
}

namespace {

// Exhaustive search over edge subsets in index order; `allowed` edges are
// those still compatible with the current choice.
std::size_t best_edge_packing(const std::vector<VertexMask>& edge_masks,
                              const std::vector<std::vector<bool>>& conflict, std::size_t from,
                              std::vector<std::size_t>& chosen) {
  std::size_t best = chosen.size();
  for (std::size_t e = from; e < edge_masks.size(); ++e) {
    bool ok = true;
    for (auto c : chosen)
      if (conflict[c][e]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(e);
    best = std::max(best, best_edge_packing(edge_masks, conflict, e + 1, chosen));
    chosen.pop_back();
  }
  return best;
}

std::size_t packing_number(const Graph& g, bool induced) {
  const auto& edges = g.edges();
  std::vector<VertexMask> masks;
  for (const auto& [u, v] : edges) masks.push_back((VertexMask{1} << u) | (VertexMask{1} << v));
  std::vector<std::vector<bool>> conflict(edges.size(), std::vector<bool>(edges.size(), false));
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = 0; b < edges.size(); ++b) {
      if (a == b) continue;
      bool clash = (masks[a] & masks[b]) != 0;
      if (induced && !clash) {
        VertexMask reach = g.neighbors(edges[a].first) | g.neighbors(edges[a].second);
        clash = (reach & masks[b]) != 0;
      }
      conflict[a][b] = clash;
    }
  std::vector<std::size_t> chosen;
  return best_edge_packing(masks, conflict, 0, chosen);
}

std::size_t cover_search(const Graph& g, VertexMask chosen, std::size_t best) {
  const std::size_t size = static_cast<std::size_t>(std::popcount(chosen));
  if (size >= best) return best;
  for (const auto& [u, v] : g.edges()) {
    if (((chosen >> u) & 1U) || ((chosen >> v) & 1U)) continue;
    best = cover_search(g, chosen | (VertexMask{1} << u), best);
    best = cover_search(g, chosen | (VertexMask{1} << v), best);
    return best;
  }
  return size;
}

}  // namespace

std::size_t matching_number(const Graph& g) { return packing_number(g, false); }
std::size_t induced_matching_number(const Graph& g) { return packing_number(g, true); }

std::size_t vertex_cover_number(const Graph& g) {
  return cover_search(g, 0, g.vertex_count() + 1);
}

GraphInvariants invariants(const Graph& g) {
  GraphInvariants inv;
  inv.matching_number = matching_number(g);
  inv.induced_matching_number = induced_matching_number(g);
  inv.vertex_cover_number = vertex_cover_number(g);
  auto cyc = cycle_structure(g);
  inv.is_unicyclic = cyc.is_unicyclic;
  inv.unique_cycle = cyc.unique_cycle;
  inv.cycle_is_dominating = cyc.cycle_is_dominating;
  return inv;
}

Graph parallelization(const Graph& g, std::span<const int> multiplicity) {
  if (multiplicity.size() != g.vertex_count())
    throw std::invalid_argument("multiplicity vector length differs from vertex count");
  std::vector<std::vector<std::string>> copies(g.vertex_count());
  std::vector<std::string> names;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    int k = multiplicity[v];
    if (k < 0) throw std::invalid_argument("negative multiplicity for " + g.name(v));
    for (int c = 0; c < k; ++c)
      copies[v].push_back(c == 0 ? g.name(v) : g.name(v) + "#" + std::to_string(c));
    names.insert(names.end(), copies[v].begin(), copies[v].end());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : g.edges())
    for (const auto& a : copies[u])
      for (const auto& b : copies[v]) edges.emplace_back(a, b);
  return Graph(std::move(names), edges);
}

Decomposition is_decomposable(const Graph& g) {
  Decomposition out;
  const std::size_t n = g.vertex_count();
  if (n < 2) return out;
  const std::size_t tau = vertex_cover_number(g);
  const VertexMask all = g.all_vertices();
  // V1 always holds vertex 0, so each unordered partition is visited once.
  const VertexMask rest = all & ~VertexMask{1};
  for (VertexMask sub = 0;; sub = (sub - rest) & rest) {
    VertexMask v1 = sub | 1U;
    if (v1 != all) {
      VertexMask v2 = all & ~v1;
      if (vertex_cover_number(induced_subgraph(g, v1)) +
              vertex_cover_number(induced_subgraph(g, v2)) ==
          tau) {
        out.decomposable = true;
        out.witness.emplace(g.names_of(v1), g.names_of(v2));
        return out;
      }
    }
    if (sub == rest) break;
  }
  return out;
}

std::vector<std::string> gamma_set(const Graph& g) {
  auto cyc = cycle_structure(g);
  if (!cyc.is_unicyclic) throw std::invalid_argument("graph is not unicyclic");
  if (connected_components(g).size() != 1) throw std::invalid_argument("graph is not connected");
  VertexMask on_cycle = g.mask_of(*cyc.unique_cycle);
  VertexMask near = 0;
  for_each_bit(on_cycle, [&](std::size_t v) { near |= g.neighbors(v); });
  return g.names_of(near & ~on_cycle);
}

std::optional<std::size_t> odd_girth(const Graph& g) {
  // BFS from every vertex; an edge joining two vertices at equal depth
  // closes an odd closed walk of length 2d+1, and the minimum over all
  // roots is the shortest odd cycle.
  std::optional<std::size_t> best;
  const std::size_t n = g.vertex_count();
  for (std::size_t root = 0; root < n; ++root) {
    std::vector<int> depth(n, -1);
    depth[root] = 0;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      for_each_bit(g.neighbors(v), [&](std::size_t w) {
        if (depth[w] < 0) {
          depth[w] = depth[v] + 1;
          q.push(w);
        } else if (depth[w] == depth[v]) {
          std::size_t len = 2 * static_cast<std::size_t>(depth[v]) + 1;
          if (!best || len < *best) best = len;
        }
      });
    }
  }
  return best;
}

}  // namespace symedge
