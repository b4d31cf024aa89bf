#pragma once

// Independent reference implementations for cross-checking the library.
// Everything here is deliberately naive: cofactor determinants, delete-an-
// edge bridge finding, backtracking matchings. Slow but obviously correct.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pvertex/graph.hpp"
#include "pvertex/rat_matrix.hpp"

namespace oracles {

inline pvertex::Rational naive_det(const pvertex::RatMatrix& m) {
  const int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  pvertex::Rational sum = 0;
  int sign = 1;
  for (int j = 0; j < n; ++j) {
    pvertex::RatMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    sum += sign * m(0, j) * naive_det(minor);
    sign = -sign;
  }
  return sum;
}

inline int component_count(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  const auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  int comps = n;
  for (const auto& [u, v] : edges) {
    const int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[static_cast<std::size_t>(ru)] = rv;
      --comps;
    }
  }
  return comps;
}

// An edge is a bridge exactly when deleting it increases the component count.
inline std::vector<std::pair<int, int>> brute_bridges(const pvertex::Graph& g) {
  const int base = component_count(g.vertex_count(), g.edges());
  std::vector<std::pair<int, int>> result;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    auto rest = g.edges();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (component_count(g.vertex_count(), rest) > base) result.push_back(g.edges()[i]);
  }
  return result;
}

// Exhaustive two-colorability for small graphs.
inline bool brute_bipartite(const pvertex::Graph& g) {
  const int n = g.vertex_count();
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    bool ok = true;
    for (const auto& [u, v] : g.edges()) {
      if (((mask >> u) & 1ul) == ((mask >> v) & 1ul)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return n == 0;
}

// Backtracking maximum matching size (any graph, small n).
inline int brute_matching_number(const pvertex::Graph& g) {
  const auto& edges = g.edges();
  std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
  const auto rec = [&](auto&& self, std::size_t from) -> int {
    for (std::size_t i = from; i < edges.size(); ++i) {
      const auto& [u, v] = edges[i];
      if (!used[static_cast<std::size_t>(u)] && !used[static_cast<std::size_t>(v)]) {
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
        const int with = 1 + self(self, i + 1);
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = false;
        const int without = self(self, i + 1);
        return std::max(with, without);
      }
    }
    return 0;
  };
  return rec(rec, 0);
}

inline bool brute_perfect_matching(const pvertex::Graph& g) {
  return 2 * brute_matching_number(g) == g.vertex_count();
}

// 12-vertex test graph used across several suites: one pendant rewrite peels
// (6,0), after which vertex 5 keeps two degree-1 neighbors (10 and 11).
inline pvertex::Graph example_order12() {
  return pvertex::Graph(12, {{0, 6},
                             {0, 7},
                             {0, 8},
                             {0, 10},
                             {0, 11},
                             {1, 7},
                             {1, 8},
                             {2, 8},
                             {2, 9},
                             {3, 8},
                             {3, 9},
                             {4, 8},
                             {4, 9},
                             {5, 9},
                             {5, 10},
                             {5, 11}});
}

// Erdos-Renyi style seeded random graph.
inline pvertex::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  pvertex::Graph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) < p) g.add_edge(u, v);
    }
  }
  return g;
}

inline pvertex::RatMatrix random_symmetric(int n, std::mt19937_64& rng, long lo = -5, long hi = 5) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> den(1, 4);
  pvertex::RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      m(i, j) = pvertex::make_rational(num(rng), den(rng));
      m(j, i) = m(i, j);
    }
  }
  return m;
}

// Labeled tree from a Pruefer sequence (sequence length n-2, n >= 2).
inline pvertex::Graph prufer_decode(int n, const std::vector<int>& seq) {
  pvertex::Graph g(n);
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int v : seq) ++deg[static_cast<std::size_t>(v)];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  }
  for (int v : seq) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    g.add_edge(leaf, v);
    if (--deg[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  g.add_edge(a, b);
  return g;
}

// AHU canonical string of a free tree: root at the centroid-free "center"
// (one or two middle vertices of the longest paths), canonicalize the rooted
// tree by sorted child encodings, take the min over the centers.
inline std::string ahu_canonical(const pvertex::Graph& t) {
  const int n = t.vertex_count();
  if (n == 0) return "()";
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = t.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = n;
  std::vector<int> centers = layer;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int u : t.neighbors(v)) {
        if (--deg[static_cast<std::size_t>(u)] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
    centers = layer;
  }
  const auto encode = [&](auto&& self, int v, int parent) -> std::string {
    std::vector<std::string> kids;
    for (int u : t.neighbors(v)) {
      if (u != parent) kids.push_back(self(self, u, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    s += ")";
    return s;
  };
  std::string best;
  for (int c : centers) {
    std::string s = encode(encode, c, -1);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

// Every free (unlabeled) tree on up to max_n vertices, one representative
// per isomorphism class, built by leaf extension with canonical-form dedup.
inline std::vector<pvertex::Graph> free_trees_up_to(int max_n) {
  std::vector<pvertex::Graph> result;
  std::vector<pvertex::Graph> current{pvertex::Graph(1)};
  result.push_back(current[0]);
  for (int n = 2; n <= max_n; ++n) {
    std::map<std::string, pvertex::Graph> next;
    for (const auto& t : current) {
      for (int v = 0; v < t.vertex_count(); ++v) {
        pvertex::Graph bigger(n);
        for (const auto& [a, b] : t.edges()) bigger.add_edge(a, b);
        bigger.add_edge(v, n - 1);
        next.emplace(ahu_canonical(bigger), bigger);
      }
    }
    current.clear();
    for (auto& [key, t] : next) {
      current.push_back(t);
      result.push_back(t);
    }
  }
  return result;
}

}  // namespace oracles
