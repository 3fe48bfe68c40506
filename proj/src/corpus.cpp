#include "symedge/corpus.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

namespace symedge {

namespace {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

std::string var(const std::string& prefix, std::size_t i) { return prefix + std::to_string(i); }

EdgeList cycle_edges(std::size_t length, const std::string& prefix) {
  EdgeList e;
  for (std::size_t i = 1; i <= length; ++i) e.emplace_back(var(prefix, i), var(prefix, i % length + 1));
  return e;
}

std::vector<std::string> endpoints(const EdgeList& edges) {
  std::vector<std::string> v;
  for (const auto& [a, b] : edges) {
    v.push_back(a);
    v.push_back(b);
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Graph from_edges(EdgeList edges) {
  auto verts = endpoints(edges);
  return Graph(std::move(verts), std::move(edges));
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> c;
  auto add = [&](std::string id, std::string desc, Graph g) {
    c.push_back({std::move(id), std::move(desc), std::move(g), false});
  };
  add("c3", "triangle C3", cycle_graph(3));
  add("c5", "5-cycle C5", cycle_graph(5));
  add("c7", "7-cycle C7", cycle_graph(7));
  add("c9", "9-cycle C9", cycle_graph(9));
  add("c4", "4-cycle C4", cycle_graph(4));
  add("c6", "6-cycle C6", cycle_graph(6));
  add("path4", "path x1-x2-x3-x4", from_edges({{"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}}));
  add("spider", "tree: star at x1 with the leg x4-x5",
      from_edges({{"x1", "x2"}, {"x1", "x3"}, {"x1", "x4"}, {"x4", "x5"}}));
  add("c3_whiskered", "C3 with a whisker at every vertex", whiskered_cycle(3, {1, 2, 3}));
  add("c3_whisker1", "C3 with one whisker at x1", whiskered_cycle(3, {1}));
  add("c5_whiskered", "C5 with a whisker at every vertex", whiskered_cycle(5, {1, 2, 3, 4, 5}));
  add("c5_whisker1", "C5 with one whisker at x1", whiskered_cycle(5, {1}));
  add("c5_whisker13", "C5 with whiskers at x1 and x3", whiskered_cycle(5, {1, 3}));
  add("c7_whisker1", "C7 with one whisker at x1", whiskered_cycle(7, {1}));
  {
    auto e = cycle_edges(5, "x");
    e.emplace_back("x1", "y");
    e.emplace_back("y", "z");
    add("c5_path", "C5 with the pendant path x1-y-z", from_edges(std::move(e)));
  }
  {
    auto e = cycle_edges(5, "x");
    e.emplace_back("x1", "x6");
    e.emplace_back("x6", "x7");
    e.emplace_back("x7", "x1");
    add("clique_sum", "clique-sum of C3 (x1,x6,x7) and C5 (x1..x5) at x1", from_edges(std::move(e)));
  }
  for (std::size_t len : {3, 5, 7}) {
    auto e = cycle_edges(len, "x");
    e.emplace_back("u1", "u2");
    add("c" + std::to_string(len) + "_plus_edge",
        "C" + std::to_string(len) + " plus the disjoint edge u1-u2", from_edges(std::move(e)));
  }
  std::uint64_t seed = kCorpusSeed;
  for (int i = 0; i < 20; ++i) {
    std::string id = (i < 10 ? "random0" : "random") + std::to_string(i);
    c.push_back({id, "random graph #" + std::to_string(i) + " (seed " + std::to_string(kCorpusSeed) + ")",
                 random_graph(seed, 7), true});
  }
  return c;
}

}  // namespace

Graph cycle_graph(std::size_t length, const std::string& prefix) {
  if (length < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  return from_edges(cycle_edges(length, prefix));
}

Graph whiskered_cycle(std::size_t length, const std::vector<std::size_t>& at) {
  auto e = cycle_edges(length, "x");
  for (auto i : at) {
    if (i < 1 || i > length) throw std::invalid_argument("whisker position out of range");
    e.emplace_back(var("x", i), var("y", i));
  }
  return from_edges(std::move(e));
}

// Draws n in [3, max_vertices] and keeps each pair with probability 1/2 (top
// bit of the next draw); advances `state_seed` so successive calls differ.
Graph random_graph(std::uint64_t& state_seed, std::size_t max_vertices) {
  if (max_vertices < 3) throw std::invalid_argument("random graphs need at least 3 vertices");
  std::mt19937_64 rng(state_seed);
  const std::size_t n = 3 + rng() % (max_vertices - 2);
  std::vector<std::string> verts;
  for (std::size_t i = 1; i <= n; ++i) verts.push_back(var("x", i));
  EdgeList e;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (rng() >> 63) e.emplace_back(var("x", i), var("x", j));
  if (e.empty()) e.emplace_back("x1", "x2");
  state_seed = rng();
  return Graph(std::move(verts), std::move(e));
}

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = build();
  return corpus;
}

const CorpusEntry& corpus_entry(const std::string& id) {
  for (const auto& e : builtin_corpus())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown corpus instance: " + id);
}

}  // namespace symedge
