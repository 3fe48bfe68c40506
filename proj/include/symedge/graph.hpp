#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symedge {

/// Vertex subsets are bitmasks over the canonical vertex order.
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxGraphVertices = 64;
inline constexpr std::size_t kDefaultVertexCap = 16;

/// Undirected edge as a pair of canonical vertex indices, first < second.
using Edge = std::pair<std::size_t, std::size_t>;

/**
 * Finite simple graph with vertices kept in lexicographic name order.
 *
 * The vertex order is the variable order of every ideal built from the
 * graph, so two graphs with the same names and edges are identical
 * regardless of how they were entered.
 */
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on loops, unknown endpoints, duplicate
  /// vertex names, or more than kMaxGraphVertices vertices. Duplicate edges
  /// collapse.
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return names_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name(std::size_t v) const { return names_.at(v); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  VertexMask neighbors(std::size_t v) const { return adjacency_.at(v); }
  bool adjacent(std::size_t u, std::size_t v) const {
    return (adjacency_.at(u) >> v) & 1U;
  }
  VertexMask all_vertices() const;

  VertexMask mask_of(std::span<const std::string> names) const;
  std::vector<std::string> names_of(VertexMask mask) const;

  /// Canonical edge-list text: "vertex u" lines for isolated vertices, then
  /// one "u v" line per edge, both sorted.
  std::string to_edge_list() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adjacency_;
};

struct CycleStructure {
  bool is_unicyclic = false;
  std::optional<std::vector<std::string>> unique_cycle;
  bool cycle_is_dominating = false;
};

struct GraphInvariants {
  std::size_t matching_number = 0;          // beta(G)
  std::size_t induced_matching_number = 0;  // nu(G)
  std::size_t vertex_cover_number = 0;      // tau(G)
  std::optional<std::vector<std::string>> unique_cycle;
  bool is_unicyclic = false;
  bool cycle_is_dominating = false;
};

struct Decomposition {
  bool decomposable = false;
  std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> witness;
};

/// Parses the edge-list format: "u v" edges, "vertex u" declarations, '#'
/// comments, blank lines. Throws ParseError naming the line, or BudgetError
/// when the vertex count exceeds max_vertices.
Graph parse_graph(std::string_view text, std::size_t max_vertices = kDefaultVertexCap);
Graph load_graph(const std::string& path, std::size_t max_vertices = kDefaultVertexCap);

Graph induced_subgraph(const Graph& g, std::span<const std::string> subset);
Graph induced_subgraph(const Graph& g, VertexMask subset);

/// Connected components as vertex masks, ordered by least member.
std::vector<VertexMask> connected_components(const Graph& g);

/// The cycle starts at its least vertex and proceeds toward the lesser of
/// that vertex's two cycle neighbours.
CycleStructure cycle_structure(const Graph& g);

/// Every inclusion-minimal vertex cover, each sorted, family sorted.
std::vector<std::vector<std::string>> minimal_vertex_covers(const Graph& g);
std::vector<VertexMask> minimal_vertex_cover_masks(const Graph& g);

std::size_t matching_number(const Graph& g);
std::size_t induced_matching_number(const Graph& g);
std::size_t vertex_cover_number(const Graph& g);
GraphInvariants invariants(const Graph& g);

/// Vertex i is deleted when multiplicity[i] == 0 and otherwise gains copies
/// named "x#1", "x#2", ... that share its neighbourhood.
Graph parallelization(const Graph& g, std::span<const int> multiplicity);

/// Searches proper 2-partitions V1 | V2 with tau(G) = tau(G[V1]) + tau(G[V2]).
/// Any r-part decomposition coarsens to such a 2-partition, so this decides
/// decomposability in general.
Decomposition is_decomposable(const Graph& g);

/// Off-cycle vertices adjacent to the cycle, i.e. the union of root
/// neighbourhoods of the trees hanging off the unique cycle. Requires a
/// connected unicyclic graph.
std::vector<std::string> gamma_set(const Graph& g);

/// Length of the shortest odd cycle, or nullopt for bipartite graphs.
std::optional<std::size_t> odd_girth(const Graph& g);

}  // namespace symedge
