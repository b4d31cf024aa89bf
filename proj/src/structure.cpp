#include "pvertex/structure.hpp"

#include <algorithm>
#include <string>

namespace pvertex {

std::optional<int> antenna_vertex(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    int pendant_neighbors = 0;
    for (int u : g.neighbors(v)) {
      if (g.degree(u) == 1) ++pendant_neighbors;
    }
    if (pendant_neighbors >= 2) return v;
  }
  return std::nullopt;
}

ReductionTrace pendant_reduce(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  int alive_count = n;

  ReductionTrace trace;
  while (true) {
    if (alive_count == 0) {
      trace.reason = {TerminalReason::Kind::Empty, -1};
      break;
    }
    // Antenna first: a vertex with two pendant neighbors stops the reduction
    // before any further removal could mask it.
    int antenna = -1;
    for (int v = 0; v < n && antenna == -1; ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      int pendants = 0;
      for (int u : g.neighbors(v)) {
        if (alive[static_cast<std::size_t>(u)] && deg[static_cast<std::size_t>(u)] == 1) ++pendants;
      }
      if (pendants >= 2) antenna = v;
    }
    if (antenna != -1) {
      trace.reason = {TerminalReason::Kind::Antenna, antenna};
      break;
    }
    // Smallest pendant id first; in a surviving K_2 both ends have degree 1
    // and the smaller id is found first, so it plays the pendant role.
    int pendant = -1;
    for (int v = 0; v < n; ++v) {
      if (alive[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == 1) {
        pendant = v;
        break;
      }
    }
    if (pendant == -1) {
      trace.reason = {TerminalReason::Kind::PendantFree, -1};
      break;
    }
    int attachment = -1;
    for (int u : g.neighbors(pendant)) {
      if (alive[static_cast<std::size_t>(u)]) {
        attachment = u;
        break;
      }
    }
    trace.removed.emplace_back(pendant, attachment);
    alive[static_cast<std::size_t>(pendant)] = false;
    alive[static_cast<std::size_t>(attachment)] = false;
    alive_count -= 2;
    for (int u : g.neighbors(attachment)) {
      if (alive[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
    }
  }
  for (int v = 0; v < n; ++v) {
    if (alive[static_cast<std::size_t>(v)]) trace.terminal_vertices.push_back(v);
  }
  trace.terminal = g.induced(trace.terminal_vertices);
  return trace;
}

namespace {

// Square biadjacency ordering search, positions filled from the last row
// backwards: the X vertex placed at position k may have at most one neighbor
// among the Y vertices still unplaced, and that neighbor (or an arbitrary
// remaining Y when it has none) becomes column k.
struct TriangularSearch {
  const Graph& g;
  const std::vector<int>& xs;
  const std::vector<int>& ys;
  std::vector<bool> x_used, y_used;
  std::vector<int> row_rev, col_rev;  // filled back to front
  bool exhaustive;

  TriangularSearch(const Graph& graph, const std::vector<int>& part_x, const std::vector<int>& part_y,
                   bool full_search)
      : g(graph),
        xs(part_x),
        ys(part_y),
        x_used(part_x.size(), false),
        y_used(part_y.size(), false),
        exhaustive(full_search) {}

  int alive_degree(int x, int* unique_neighbor) const {
    int deg = 0;
    for (int u : g.neighbors(x)) {
      for (std::size_t j = 0; j < ys.size(); ++j) {
        if (!y_used[j] && ys[j] == u) {
          ++deg;
          *unique_neighbor = static_cast<int>(j);
        }
      }
    }
    return deg;
  }

  bool place(std::size_t remaining) {
    if (remaining == 0) return true;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (x_used[i]) continue;
      int nb = -1;
      const int deg = alive_degree(xs[i], &nb);
      if (deg > 1) continue;
      x_used[i] = true;
      if (deg == 1) {
        y_used[static_cast<std::size_t>(nb)] = true;
        row_rev.push_back(xs[i]);
        col_rev.push_back(ys[static_cast<std::size_t>(nb)]);
        if (place(remaining - 1)) return true;
        row_rev.pop_back();
        col_rev.pop_back();
        y_used[static_cast<std::size_t>(nb)] = false;
      } else {
        for (std::size_t j = 0; j < ys.size(); ++j) {
          if (y_used[j]) continue;
          y_used[j] = true;
          row_rev.push_back(xs[i]);
          col_rev.push_back(ys[j]);
          if (place(remaining - 1)) return true;
          row_rev.pop_back();
          col_rev.pop_back();
          y_used[j] = false;
          if (!exhaustive) break;  // greedy: only the smallest remaining Y
        }
      }
      x_used[i] = false;
      if (!exhaustive) return false;  // greedy: only the smallest degree-<=1 X
    }
    return false;
  }
};

bool validate_triangular(const Graph& g, const TriangularOrdering& ord) {
  for (std::size_t i = 0; i < ord.row_order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (g.has_edge(ord.row_order[i], ord.col_order[j])) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<TriangularOrdering> triangular_ordering(const Graph& g, const Bipartition& bp) {
  if (bp.part_x.size() != bp.part_y.size()) return std::nullopt;  // needs a square biadjacency
  const std::size_t k = bp.part_x.size();

  TriangularSearch greedy(g, bp.part_x, bp.part_y, /*full_search=*/false);
  if (greedy.place(k)) {
    TriangularOrdering ord{{greedy.row_rev.rbegin(), greedy.row_rev.rend()},
                           {greedy.col_rev.rbegin(), greedy.col_rev.rend()}};
    if (!validate_triangular(g, ord)) {
      throw std::logic_error("greedy triangular ordering failed validation");
    }
    return ord;
  }
  if (k <= 8) {
    TriangularSearch full(g, bp.part_x, bp.part_y, /*full_search=*/true);
    if (full.place(k)) {
      TriangularOrdering ord{{full.row_rev.rbegin(), full.row_rev.rend()},
                             {full.col_rev.rbegin(), full.col_rev.rend()}};
      if (!validate_triangular(g, ord)) {
        throw std::logic_error("exhaustive triangular ordering failed validation");
      }
      return ord;
    }
  }
  return std::nullopt;
}

}  // namespace pvertex
