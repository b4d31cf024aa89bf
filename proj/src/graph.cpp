#include "pvertex/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace pvertex {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : adj_(static_cast<std::size_t>(n)) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(vertex_count() - 1));
  }
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  if (has_edge(u, v)) return;
  auto& nu = adj_[static_cast<std::size_t>(u)];
  nu.insert(std::upper_bound(nu.begin(), nu.end(), v), v);
  auto& nv = adj_[static_cast<std::size_t>(v)];
  nv.insert(std::upper_bound(nv.begin(), nv.end(), u), u);
  edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), std::make_pair(u, v)), {u, v});
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> pos(adj_.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    pos[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  }
  Graph g(static_cast<int>(keep.size()));
  for (const auto& [u, v] : edges_) {
    if (pos[static_cast<std::size_t>(u)] >= 0 && pos[static_cast<std::size_t>(v)] >= 0) {
      g.add_edge(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    }
  }
  return g;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    // s is the smallest vertex of its component; color 0 = part_x.
    color[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u : g.neighbors(v)) {
        if (color[static_cast<std::size_t>(u)] == -1) {
          color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
          q.push(u);
        } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
          return std::nullopt;  // odd cycle
        }
      }
    }
  }
  Bipartition bp;
  for (int v = 0; v < n; ++v) {
    (color[static_cast<std::size_t>(v)] == 0 ? bp.part_x : bp.part_y).push_back(v);
  }
  return bp;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[static_cast<std::size_t>(s)] = true;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int u : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          q.push(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<std::pair<int, int>> bridges(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> out;
  int timer = 0;

  struct Frame {
    int v;
    int parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (int s = 0; s < n; ++s) {
    if (disc[static_cast<std::size_t>(s)] != -1) continue;
    disc[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = timer++;
    stack.push_back({s, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        const int u = nb[f.next++];
        if (u == f.parent) continue;  // simple graph: one parent edge to skip
        if (disc[static_cast<std::size_t>(u)] == -1) {
          disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
          stack.push_back({u, f.v, 0});
        } else {
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(u)]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (done.parent != -1) {
          low[static_cast<std::size_t>(done.parent)] =
              std::min(low[static_cast<std::size_t>(done.parent)], low[static_cast<std::size_t>(done.v)]);
          if (low[static_cast<std::size_t>(done.v)] > disc[static_cast<std::size_t>(done.parent)]) {
            out.emplace_back(std::min(done.parent, done.v), std::max(done.parent, done.v));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> pendant_edges(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 1) continue;
    const int u = g.neighbors(v)[0];
    if (g.degree(u) == 1 && u < v) continue;  // K_2 component already reported from u
    out.emplace_back(v, u);
  }
  return out;
}

bool is_tree_cycle_block(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw DisconnectedInputError("tree-cycle block test on empty graph");
  if (connected_components(g).size() != 1) {
    throw DisconnectedInputError("tree-cycle block test requires a connected graph");
  }
  const auto cut = bridges(g);
  Graph rest(n);
  for (const auto& e : g.edges()) {
    if (!std::binary_search(cut.begin(), cut.end(), e)) rest.add_edge(e.first, e.second);
  }
  for (const auto& comp : connected_components(rest)) {
    if (comp.size() == 1) continue;
    // A connected graph whose vertices all have degree 2 is a single cycle.
    for (int v : comp) {
      if (rest.degree(v) != 2) return false;
    }
  }
  return true;
}

}  // namespace pvertex
