#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pvertex/errors.hpp"

namespace pvertex {

// Simple undirected graph on vertex ids 0..n-1. No loops, no parallel edges.
// Edges are kept normalized (u < v) in lexicographic order and adjacency
// lists are sorted, so every traversal in this codebase is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  // Normalized (u < v), lexicographically sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Induced subgraph on `keep`; keep must be sorted and duplicate-free.
  // New vertex i corresponds to keep[i].
  Graph induced(const std::vector<int>& keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_.size() == b.adj_.size() && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

struct Bipartition {
  std::vector<int> part_x;  // sorted; holds the lowest-id vertex of each component
  std::vector<int> part_y;  // sorted
};

// Two-coloring per connected component, or nullopt when some component has an
// odd cycle. The lowest-numbered vertex of every component lands in part_x.
std::optional<Bipartition> bipartition(const Graph& g);

// Vertex sets of connected components; each sorted ascending, components
// ordered by their smallest vertex. Isolated vertices are singleton sets.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Cut edges via one low-link DFS; result normalized and sorted.
std::vector<std::pair<int, int>> bridges(const Graph& g);

// Edges incident to a degree-1 vertex, as (pendant, attachment) pairs sorted
// by pendant id. A K_2 component is reported once, lower id as the pendant.
std::vector<std::pair<int, int>> pendant_edges(const Graph& g);

// True when deleting all bridges leaves only isolated vertices and pairwise
// disjoint cycles. Requires a connected input (DisconnectedInputError).
bool is_tree_cycle_block(const Graph& g);

}  // namespace pvertex
