#include "pvertex/families.hpp"

#include <algorithm>
#include <string>

namespace pvertex {

namespace {

void need_params(const FamilySpec& spec, std::size_t count, const char* what) {
  if (spec.params.size() != count) {
    throw std::invalid_argument(std::string(what) + " expects " + std::to_string(count) + " parameter(s), got " +
                                std::to_string(spec.params.size()));
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

Graph path_graph(long n) {
  require(n >= 1, "path needs n >= 1");
  Graph g(static_cast<int>(n));
  for (long i = 0; i + 1 < n; ++i) g.add_edge(static_cast<int>(i), static_cast<int>(i + 1));
  return g;
}

Graph cycle_graph(long n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(0, static_cast<int>(n - 1));
  return g;
}

Graph complete_graph(long n) {
  require(n >= 1, "complete graph needs n >= 1");
  Graph g(static_cast<int>(n));
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  return g;
}

Graph complete_bipartite_graph(long m, long n) {
  require(m >= 1 && n >= 1, "complete bipartite graph needs m, n >= 1");
  Graph g(static_cast<int>(m + n));
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j < n; ++j) g.add_edge(static_cast<int>(i), static_cast<int>(m + j));
  }
  return g;
}

Graph hypercube_graph(long d) {
  require(d >= 1 && d <= 20, "hypercube needs 1 <= d <= 20");
  const long n = 1L << d;
  Graph g(static_cast<int>(n));
  for (long v = 0; v < n; ++v) {
    for (long b = 0; b < d; ++b) {
      const long u = v ^ (1L << b);
      if (u > v) g.add_edge(static_cast<int>(v), static_cast<int>(u));
    }
  }
  return g;
}

Graph grid_graph(long rows, long cols) {
  require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
  Graph g(static_cast<int>(rows * cols));
  const auto id = [cols](long r, long c) { return static_cast<int>(r * cols + c); };
  for (long r = 0; r < rows; ++r) {
    for (long c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  }
  return g;
}

Graph gen_petersen_graph(long n, long k) {
  require(n >= 3 && k >= 1 && 2 * k <= n - 1, "generalized Petersen graph needs n >= 3, 1 <= k <= (n-1)/2");
  Graph g(static_cast<int>(2 * n));
  for (long i = 0; i < n; ++i) {
    g.add_edge(static_cast<int>(i), static_cast<int>((i + 1) % n));          // outer cycle
    g.add_edge(static_cast<int>(n + i), static_cast<int>(n + (i + k) % n));  // inner star polygon
    g.add_edge(static_cast<int>(i), static_cast<int>(n + i));                // spoke
  }
  return g;
}

Graph gen_barbell_graph(long m, long n, long l) {
  require(m >= 1 && n >= 1 && l >= 1, "generalized barbell needs m, n, l >= 1");
  // Clique 0..m-1, then l-1 inner path vertices, then clique m+l-1..m+l+n-2;
  // the connecting path of length l runs from m-1 to m+l-1.
  Graph g(static_cast<int>(m + l - 1 + n));
  for (long i = 0; i < m; ++i) {
    for (long j = i + 1; j < m; ++j) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) g.add_edge(static_cast<int>(m + l - 1 + i), static_cast<int>(m + l - 1 + j));
  }
  for (long i = 0; i < l; ++i) g.add_edge(static_cast<int>(m - 1 + i), static_cast<int>(m + i));
  return g;
}

Graph lollipop_graph(long m, long n) {
  require(m >= 3 && n >= 1, "lollipop needs m >= 3, n >= 1");
  // Same layout as the generalized barbell with a K_1 cap: clique 0..m-1,
  // path m..m+n-1 hanging off vertex m-1.
  Graph g(static_cast<int>(m + n));
  for (long i = 0; i < m; ++i) {
    for (long j = i + 1; j < m; ++j) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  g.add_edge(static_cast<int>(m - 1), static_cast<int>(m));
  for (long i = 0; i + 1 < n; ++i) g.add_edge(static_cast<int>(m + i), static_cast<int>(m + i + 1));
  return g;
}

}  // namespace

Graph corona(const Graph& base, int t) {
  require(t >= 1, "corona needs t >= 1");
  const int n = base.vertex_count();
  Graph g(n + n * t);
  for (const auto& [u, v] : base.edges()) g.add_edge(u, v);
  for (int v = 0; v < n; ++v) {
    const int first = n + v * t;
    for (int a = 0; a < t; ++a) {
      g.add_edge(v, first + a);
      for (int b = a + 1; b < t; ++b) g.add_edge(first + a, first + b);
    }
  }
  return g;
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Path:
      need_params(spec, 1, "path");
      return path_graph(spec.params[0]);
    case Family::Cycle:
      need_params(spec, 1, "cycle");
      return cycle_graph(spec.params[0]);
    case Family::Complete:
      need_params(spec, 1, "complete");
      return complete_graph(spec.params[0]);
    case Family::CompleteBipartite:
      need_params(spec, 2, "complete bipartite");
      return complete_bipartite_graph(spec.params[0], spec.params[1]);
    case Family::Star:
      need_params(spec, 1, "star");
      return complete_bipartite_graph(1, spec.params[0]);
    case Family::Hypercube:
      need_params(spec, 1, "hypercube");
      return hypercube_graph(spec.params[0]);
    case Family::Grid:
      need_params(spec, 2, "grid");
      return grid_graph(spec.params[0], spec.params[1]);
    case Family::GenPetersen:
      need_params(spec, 2, "generalized Petersen");
      return gen_petersen_graph(spec.params[0], spec.params[1]);
    case Family::Lollipop:
      need_params(spec, 2, "lollipop");
      return lollipop_graph(spec.params[0], spec.params[1]);
    case Family::Barbell:
      need_params(spec, 1, "barbell");
      require(spec.params[0] >= 1, "barbell needs n >= 1");
      return gen_barbell_graph(spec.params[0], spec.params[0], 1);
    case Family::GenBarbell:
      need_params(spec, 3, "generalized barbell");
      return gen_barbell_graph(spec.params[0], spec.params[1], spec.params[2]);
    case Family::Corona:
      need_params(spec, 1, "corona");
      require(spec.base != nullptr, "corona needs a base family");
      return corona(generate(*spec.base), static_cast<int>(spec.params[0]));
  }
  throw std::invalid_argument("unknown family tag");
}

Graph threaded_union(const Graph& base, const std::vector<ThreadedComponent>& comps) {
  if (static_cast<int>(comps.size()) != base.vertex_count()) {
    throw SizeMismatchError("threaded union needs one component per base vertex, got " +
                            std::to_string(comps.size()) + " for base order " +
                            std::to_string(base.vertex_count()));
  }
  for (const auto& c : comps) {
    if (c.bail < 0 || c.bail >= c.graph.vertex_count()) {
      throw BadBailVertexError("bail vertex " + std::to_string(c.bail) + " outside component of order " +
                               std::to_string(c.graph.vertex_count()));
    }
  }
  std::vector<int> offsets(comps.size() + 1, 0);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    offsets[i + 1] = offsets[i] + comps[i].graph.vertex_count();
  }
  Graph g(offsets.back());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (const auto& [a, b] : comps[i].graph.edges()) g.add_edge(offsets[i] + a, offsets[i] + b);
  }
  for (const auto& [u, v] : base.edges()) {
    g.add_edge(offsets[static_cast<std::size_t>(u)] + comps[static_cast<std::size_t>(u)].bail,
               offsets[static_cast<std::size_t>(v)] + comps[static_cast<std::size_t>(v)].bail);
  }
  return g;
}

Graph generalized_threaded_union(const Graph& base, const std::vector<GeneralizedComponent>& comps,
                                 const EdgeAssignment& assignment) {
  if (static_cast<int>(comps.size()) != base.vertex_count()) {
    throw SizeMismatchError("threaded union needs one component per base vertex, got " +
                            std::to_string(comps.size()) + " for base order " +
                            std::to_string(base.vertex_count()));
  }
  for (int v = 0; v < base.vertex_count(); ++v) {
    const auto& c = comps[static_cast<std::size_t>(v)];
    const std::size_t budget = std::max(base.degree(v), 1);  // isolated base vertex: allow one bail
    if (c.bail_set.empty() || c.bail_set.size() > budget) {
      throw BailBudgetExceededError("component " + std::to_string(v) + " declares " +
                                    std::to_string(c.bail_set.size()) + " bails for base degree " +
                                    std::to_string(base.degree(v)));
    }
    std::vector<int> sorted = c.bail_set;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw BailBudgetExceededError("component " + std::to_string(v) + " repeats a bail vertex");
    }
    for (int b : c.bail_set) {
      if (b < 0 || b >= c.graph.vertex_count()) {
        throw BadBailVertexError("bail vertex " + std::to_string(b) + " outside component of order " +
                                 std::to_string(c.graph.vertex_count()));
      }
    }
  }
  if (assignment.size() != base.edges().size()) {
    throw InvalidAssignmentError("assignment covers " + std::to_string(assignment.size()) + " edges, base has " +
                                 std::to_string(base.edges().size()));
  }
  for (const auto& [u, v] : base.edges()) {
    const auto it = assignment.find({u, v});
    if (it == assignment.end()) {
      throw InvalidAssignmentError("assignment misses base edge (" + std::to_string(u) + "," + std::to_string(v) +
                                   ")");
    }
    const auto& bu = comps[static_cast<std::size_t>(u)].bail_set;
    const auto& bv = comps[static_cast<std::size_t>(v)].bail_set;
    if (std::find(bu.begin(), bu.end(), it->second.first) == bu.end() ||
        std::find(bv.begin(), bv.end(), it->second.second) == bv.end()) {
      throw InvalidAssignmentError("assignment for base edge (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") picks a vertex outside the bail sets");
    }
  }
  std::vector<int> offsets(comps.size() + 1, 0);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    offsets[i + 1] = offsets[i] + comps[i].graph.vertex_count();
  }
  Graph g(offsets.back());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (const auto& [a, b] : comps[i].graph.edges()) g.add_edge(offsets[i] + a, offsets[i] + b);
  }
  for (const auto& [u, v] : base.edges()) {
    const auto& chosen = assignment.at({u, v});
    g.add_edge(offsets[static_cast<std::size_t>(u)] + chosen.first,
               offsets[static_cast<std::size_t>(v)] + chosen.second);
  }
  return g;
}

}  // namespace pvertex
