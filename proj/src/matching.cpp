#include "pvertex/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace pvertex {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

}  // namespace

void validate_bipartition(const Graph& g, const Bipartition& bp) {
  const int n = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  const auto check_range = [n](int v) {
    if (v < 0 || v >= n) {
      throw InvalidBipartitionError("vertex " + std::to_string(v) + " is out of range");
    }
  };
  for (int x : bp.part_x) {
    check_range(x);
    side[static_cast<std::size_t>(x)] = 0;
  }
  for (int y : bp.part_y) {
    check_range(y);
    if (side[static_cast<std::size_t>(y)] == 0) {
      throw InvalidBipartitionError("vertex " + std::to_string(y) + " appears in both parts");
    }
    side[static_cast<std::size_t>(y)] = 1;
  }
  if (static_cast<int>(bp.part_x.size() + bp.part_y.size()) != n) {
    throw InvalidBipartitionError("parts do not cover the vertex set");
  }
  for (int v = 0; v < n; ++v) {
    if (side[static_cast<std::size_t>(v)] == -1) {
      throw InvalidBipartitionError("vertex " + std::to_string(v) + " appears in neither part");
    }
  }
  for (const auto& [u, v] : g.edges()) {
    if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)]) {
      throw InvalidBipartitionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") does not cross the parts");
    }
  }
}

namespace {

struct HopcroftKarp {
  const Graph& g;
  std::vector<int> match;  // partner vertex id or -1, indexed by vertex id
  std::vector<int> dist;   // BFS layer, indexed by vertex id (X side only used)

  explicit HopcroftKarp(const Graph& graph)
      : g(graph),
        match(static_cast<std::size_t>(graph.vertex_count()), -1),
        dist(static_cast<std::size_t>(graph.vertex_count()), kInf) {}

  bool bfs(const std::vector<int>& xs) {
    std::queue<int> q;
    for (int x : xs) {
      if (match[static_cast<std::size_t>(x)] == -1) {
        dist[static_cast<std::size_t>(x)] = 0;
        q.push(x);
      } else {
        dist[static_cast<std::size_t>(x)] = kInf;
      }
    }
    bool reachable_free_y = false;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : g.neighbors(x)) {
        const int nx = match[static_cast<std::size_t>(y)];
        if (nx == -1) {
          reachable_free_y = true;
        } else if (dist[static_cast<std::size_t>(nx)] == kInf) {
          dist[static_cast<std::size_t>(nx)] = dist[static_cast<std::size_t>(x)] + 1;
          q.push(nx);
        }
      }
    }
    return reachable_free_y;
  }

  bool dfs(int x) {
    for (int y : g.neighbors(x)) {
      const int nx = match[static_cast<std::size_t>(y)];
      if (nx == -1 || (dist[static_cast<std::size_t>(nx)] == dist[static_cast<std::size_t>(x)] + 1 && dfs(nx))) {
        match[static_cast<std::size_t>(x)] = y;
        match[static_cast<std::size_t>(y)] = x;
        return true;
      }
    }
    dist[static_cast<std::size_t>(x)] = kInf;
    return false;
  }
};

}  // namespace

Matching maximum_matching(const Graph& g, const Bipartition& bp) {
  validate_bipartition(g, bp);
  HopcroftKarp hk(g);
  while (hk.bfs(bp.part_x)) {
    for (int x : bp.part_x) {
      if (hk.match[static_cast<std::size_t>(x)] == -1) hk.dfs(x);
    }
  }
  Matching m;
  for (int x : bp.part_x) {
    if (hk.match[static_cast<std::size_t>(x)] != -1) {
      m.pairs.emplace_back(x, hk.match[static_cast<std::size_t>(x)]);
    }
  }
  return m;  // part_x is sorted, so pairs are sorted by x
}

std::optional<HallViolator> hall_violator(const Graph& g, const Bipartition& bp) {
  if (bp.part_x.size() != bp.part_y.size()) {
    throw UnbalancedPartsError("hall_violator needs equal parts, got " + std::to_string(bp.part_x.size()) +
                               " and " + std::to_string(bp.part_y.size()));
  }
  const Matching m = maximum_matching(g, bp);
  if (m.size() == static_cast<int>(bp.part_x.size())) return std::nullopt;

  // Koenig: alternating reachability from unmatched X vertices
  // (non-matching edge X->Y, matching edge Y->X).
  std::vector<int> partner(static_cast<std::size_t>(g.vertex_count()), -1);
  for (const auto& [x, y] : m.pairs) {
    partner[static_cast<std::size_t>(x)] = y;
    partner[static_cast<std::size_t>(y)] = x;
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::queue<int> q;
  for (int x : bp.part_x) {
    if (partner[static_cast<std::size_t>(x)] == -1) {
      seen[static_cast<std::size_t>(x)] = true;
      q.push(x);
    }
  }
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int y : g.neighbors(x)) {
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = true;
      const int nx = partner[static_cast<std::size_t>(y)];
      if (nx != -1 && !seen[static_cast<std::size_t>(nx)]) {
        seen[static_cast<std::size_t>(nx)] = true;
        q.push(nx);
      }
    }
  }
  HallViolator hv;
  for (int x : bp.part_x) {
    if (seen[static_cast<std::size_t>(x)]) hv.s.push_back(x);
  }
  // Recompute the neighborhood from scratch so it is exactly N(S) by
  // construction, not a byproduct of the traversal.
  std::vector<bool> in_nb(static_cast<std::size_t>(g.vertex_count()), false);
  for (int x : hv.s) {
    for (int y : g.neighbors(x)) in_nb[static_cast<std::size_t>(y)] = true;
  }
  for (int y = 0; y < g.vertex_count(); ++y) {
    if (in_nb[static_cast<std::size_t>(y)]) hv.neighborhood.push_back(y);
  }
  if (hv.neighborhood.size() >= hv.s.size()) {
    throw std::logic_error("koenig construction produced a non-violator");
  }
  return hv;
}

bool has_perfect_matching(const Graph& g) {
  const auto bp = bipartition(g);
  if (!bp) throw NotBipartiteError("perfect matching test on a non-bipartite graph");
  return 2 * maximum_matching(g, *bp).size() == g.vertex_count();
}

}  // namespace pvertex
