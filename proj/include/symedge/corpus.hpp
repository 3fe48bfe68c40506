#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symedge/graph.hpp"

namespace symedge {

inline constexpr std::uint64_t kCorpusSeed = 20240601;

struct CorpusEntry {
  std::string id;
  std::string description;
  Graph graph;
  bool random = false;
};

/// Named instances in a fixed order, followed by 20 random graphs drawn
/// from mt19937_64 seeded with kCorpusSeed.
const std::vector<CorpusEntry>& builtin_corpus();
const CorpusEntry& corpus_entry(const std::string& id);

Graph cycle_graph(std::size_t length, const std::string& prefix = "x");
/// C_length plus a whisker y_i at each listed (1-based) cycle vertex x_i.
Graph whiskered_cycle(std::size_t length, const std::vector<std::size_t>& at);
Graph random_graph(std::uint64_t& state_seed, std::size_t max_vertices);

}  // namespace symedge
