#include "pvertex/witness.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <utility>

namespace pvertex {

namespace {

std::pair<int, int> norm_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

RatMatrix stack_blocks(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  }
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return m;
}

void couple(RatMatrix& m, int p, int q, const Rational& c) {
  m(p, q) = c;
  m(q, p) = c;
}

// Coupled block join without verification; thread_over re-verifies once at
// the end instead of after every intermediate join.
RatMatrix raw_bridge(const RatMatrix& a, const RatMatrix& b, int i, int j, const Rational& c) {
  RatMatrix m = stack_blocks(a, b);
  couple(m, i, a.rows() + j, c);
  return m;
}

void check_component(const Witness& w, const char* role) {
  if (!w.verification.property_p()) {
    throw UnverifiedInputError(std::string(role) + " does not satisfy the vanishing-minors property");
  }
  if (w.graph.vertex_count() < 2) {
    throw ComponentTooSmallError(std::string(role) + " has order " + std::to_string(w.graph.vertex_count()) +
                                 "; joins need order >= 2");
  }
}

void check_bail_range(int bail, const Witness& w, const char* role) {
  if (bail < 0 || bail >= w.graph.vertex_count()) {
    throw BadBailVertexError(std::string(role) + " join vertex " + std::to_string(bail) +
                             " outside component of order " + std::to_string(w.graph.vertex_count()));
  }
}

}  // namespace

Witness Witness::checked(Graph g, RatMatrix m) {
  Verification v = verify_property_p(m, g);
  if (!v.property_p()) {
    throw UnverifiedInputError("matrix does not certify the property: det = " +
                               rational_to_string(v.determinant) + ", vanishing minors " +
                               std::to_string(v.p_vertex_count) + "/" + std::to_string(g.vertex_count()));
  }
  return Witness{std::move(g), std::move(m), std::move(v)};
}

Witness complete_witness(int n) {
  if (n < 2) throw std::invalid_argument("complete-graph witness needs n >= 2");
  Graph g(n);
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 2 - n;
    for (int j = i + 1; j < n; ++j) {
      g.add_edge(i, j);
      m(i, j) = 1;
      m(j, i) = 1;
    }
  }
  return Witness::checked(std::move(g), std::move(m));
}

Witness bipartite_pm_witness(const Graph& g, const Bipartition& bp, const Matching& m) {
  validate_bipartition(g, bp);
  const int n = g.vertex_count();
  const std::size_t k = bp.part_x.size();

  // The matching must pair every vertex across the parts along edges.
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  for (int y : bp.part_y) side[static_cast<std::size_t>(y)] = 1;
  std::vector<int> matched_to(static_cast<std::size_t>(n), -1);
  for (auto [a, b] : m.pairs) {
    if (side[static_cast<std::size_t>(a)] == 1) std::swap(a, b);  // normalize to (x, y)
    if (side[static_cast<std::size_t>(a)] != 0 || side[static_cast<std::size_t>(b)] != 1 || !g.has_edge(a, b)) {
      throw NotPerfectError("matching pair (" + std::to_string(a) + "," + std::to_string(b) +
                            ") is not an edge across the parts");
    }
    if (matched_to[static_cast<std::size_t>(a)] != -1 || matched_to[static_cast<std::size_t>(b)] != -1) {
      throw NotPerfectError("matching reuses vertex " + std::to_string(a) + " or " + std::to_string(b));
    }
    matched_to[static_cast<std::size_t>(a)] = b;
    matched_to[static_cast<std::size_t>(b)] = a;
  }
  for (int v = 0; v < n; ++v) {
    if (matched_to[static_cast<std::size_t>(v)] == -1) {
      throw NotPerfectError("vertex " + std::to_string(v) + " is unmatched");
    }
  }

  std::vector<int> xi(static_cast<std::size_t>(n), -1), yi(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < bp.part_x.size(); ++i) xi[static_cast<std::size_t>(bp.part_x[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < bp.part_y.size(); ++i) yi[static_cast<std::size_t>(bp.part_y[i])] = static_cast<int>(i);

  const auto biadjacency = [&](const auto& weight_of) {
    RatMatrix d(static_cast<int>(k), static_cast<int>(k));
    for (const auto& [u, v] : g.edges()) {
      const int x = side[static_cast<std::size_t>(u)] == 0 ? u : v;
      const int y = side[static_cast<std::size_t>(u)] == 0 ? v : u;
      d(xi[static_cast<std::size_t>(x)], yi[static_cast<std::size_t>(y)]) = weight_of(x, y);
    }
    return d;
  };

  RatMatrix d = biadjacency([&](int x, int y) -> Rational {
    return matched_to[static_cast<std::size_t>(x)] == y ? 2 : 1;
  });
  if (det(d) == 0) {
    // Retry with seeded uniform integer weights; the weighted biadjacency is
    // generically nonsingular when a perfect matching exists.
    std::mt19937_64 rng(0x5eedb1a5ull);
    std::uniform_int_distribution<long> dist(1, 2L * n * n);
    for (int attempt = 0; attempt < 16 && det(d) == 0; ++attempt) {
      d = biadjacency([&](int, int) -> Rational { return Rational(dist(rng)); });
    }
  }
  if (det(d) == 0) {
    // Deterministic fallback: matching edge l gets weight t^l with t = k!+1,
    // so the matching's diagonal term dominates every other expansion term.
    Integer t;
    mpz_fac_ui(t.get_mpz_t(), static_cast<unsigned long>(k));
    t += 1;
    std::vector<Integer> powers(k + 1);
    powers[0] = 1;
    for (std::size_t l = 1; l <= k; ++l) powers[l] = powers[l - 1] * t;
    d = biadjacency([&](int x, int y) -> Rational {
      if (matched_to[static_cast<std::size_t>(x)] != y) return 1;
      return Rational(powers[static_cast<std::size_t>(xi[static_cast<std::size_t>(x)]) + 1]);
    });
    if (det(d) == 0) throw std::logic_error("dominant-weight biadjacency is singular");
  }

  RatMatrix a(n, n);
  for (const auto& [u, v] : g.edges()) {
    const int x = side[static_cast<std::size_t>(u)] == 0 ? u : v;
    const int y = side[static_cast<std::size_t>(u)] == 0 ? v : u;
    a(u, v) = d(xi[static_cast<std::size_t>(x)], yi[static_cast<std::size_t>(y)]);
    a(v, u) = a(u, v);
  }
  return Witness::checked(g, std::move(a));
}

Witness thread_bridge(const Witness& w1, const Witness& w2, int i, int j, const Rational& c) {
  if (c == 0) throw ZeroCouplingError("joining weight must be nonzero");
  check_component(w1, "first component");
  check_component(w2, "second component");
  check_bail_range(i, w1, "first component");
  check_bail_range(j, w2, "second component");

  const int n1 = w1.graph.vertex_count();
  Graph g(n1 + w2.graph.vertex_count());
  for (const auto& [a, b] : w1.graph.edges()) g.add_edge(a, b);
  for (const auto& [a, b] : w2.graph.edges()) g.add_edge(n1 + a, n1 + b);
  g.add_edge(i, n1 + j);
  return Witness::checked(std::move(g), raw_bridge(w1.matrix, w2.matrix, i, j, c));
}

Witness close_triangle(const Witness& w1, const Witness& w2, const Witness& w3, int v1, int v2, int u, int w,
                       const Rational& c) {
  check_component(w3, "third component");
  check_bail_range(v2, w1, "first component");
  check_bail_range(w, w3, "third component");
  const Witness b1 = thread_bridge(w1, w2, v1, u, c);  // validates w1, w2, v1, u, c

  const int n1 = w1.graph.vertex_count();
  const int n12 = b1.graph.vertex_count();
  Graph g(n12 + w3.graph.vertex_count());
  for (const auto& [a, b] : b1.graph.edges()) g.add_edge(a, b);
  for (const auto& [a, b] : w3.graph.edges()) g.add_edge(n12 + a, n12 + b);
  g.add_edge(v2, n12 + w);
  g.add_edge(n1 + u, n12 + w);

  RatMatrix m = stack_blocks(b1.matrix, w3.matrix);
  couple(m, v2, n12 + w, c);
  couple(m, n1 + u, n12 + w, c);
  return Witness::checked(std::move(g), std::move(m));
}

namespace {

// Shared assembly behind thread_over and generalized_thread_over. The
// canonical output graph is produced by generalized_threaded_union (which
// also validates sizes, budgets, bails, and the assignment); the matrix is
// assembled block by block and permuted into that canonical numbering.
Witness thread_assemble(const Graph& base, const std::vector<GenThreadComponentSpec>& comps,
                        const EdgeAssignment& assignment, const Rational& c) {
  if (c == 0) throw ZeroCouplingError("joining weight must be nonzero");

  std::vector<GeneralizedComponent> shapes;
  shapes.reserve(comps.size());
  for (const auto& cs : comps) shapes.push_back({cs.witness.graph, cs.bail_set});
  const Graph canonical = generalized_threaded_union(base, shapes, assignment);

  if (connected_components(base).size() != 1 || !is_tree_cycle_block(base)) {
    throw NotTreeCycleBlockError("base graph is not a tree-cycle block graph");
  }
  if (base.vertex_count() == 1) return comps[0].witness;

  for (const auto& cs : comps) check_component(cs.witness, "threaded component");

  const auto bail_for = [&](int v, std::pair<int, int> e) {
    const auto& chosen = assignment.at(e);
    return v == e.first ? chosen.first : chosen.second;
  };
  const auto is_singleton = [&](int v) { return comps[static_cast<std::size_t>(v)].bail_set.size() == 1; };

  const auto cut = bridges(base);
  Graph rest(base.vertex_count());
  for (const auto& e : base.edges()) {
    if (!std::binary_search(cut.begin(), cut.end(), e)) rest.add_edge(e.first, e.second);
  }
  const auto blocks = connected_components(rest);
  std::vector<int> block_of(static_cast<std::size_t>(base.vertex_count()), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int v : blocks[b]) block_of[static_cast<std::size_t>(v)] = static_cast<int>(b);
  }

  // Per-block assembly: base vertices in placement order + the block matrix.
  struct BlockResult {
    RatMatrix m;
    std::vector<int> order;
    std::vector<int> offset;  // offset[i] = start of order[i]'s component in m
  };
  const auto finish_offsets = [&](BlockResult& r) {
    r.offset.assign(r.order.size(), 0);
    int total = 0;
    for (std::size_t i = 0; i < r.order.size(); ++i) {
      r.offset[i] = total;
      total += comps[static_cast<std::size_t>(r.order[i])].witness.graph.vertex_count();
    }
  };
  const auto local_offset = [&](const BlockResult& r, int v) {
    for (std::size_t i = 0; i < r.order.size(); ++i) {
      if (r.order[i] == v) return r.offset[i];
    }
    throw std::logic_error("vertex missing from block assembly");
  };

  std::vector<BlockResult> results(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    BlockResult& r = results[b];
    if (blocks[b].size() == 1) {
      const int v = blocks[b][0];
      r.m = comps[static_cast<std::size_t>(v)].witness.matrix;
      r.order = {v};
      finish_offsets(r);
      continue;
    }
    // Cyclic order starting at the block's smallest vertex, towards its
    // smaller cycle neighbor.
    std::vector<int> cyc{blocks[b][0]};
    for (int prev = cyc[0], curr = rest.neighbors(cyc[0])[0]; curr != cyc[0];) {
      cyc.push_back(curr);
      for (int nb : rest.neighbors(curr)) {
        if (nb != prev) {
          prev = curr;
          curr = nb;
          break;
        }
      }
    }
    const int m = static_cast<int>(cyc.size());
    // The triangle-closing step needs the two components that keep both their
    // cycle edges to attach through a single vertex each; rotate the labels so
    // the first consecutive singleton pair plays that role.
    int shift = -1;
    for (int s = 0; s < m && shift == -1; ++s) {
      if (is_singleton(cyc[static_cast<std::size_t>((s + 1) % m)]) &&
          is_singleton(cyc[static_cast<std::size_t>((s + 2) % m)])) {
        shift = s;
      }
    }
    if (shift == -1) {
      throw NoConsecutiveSingletonsError("cycle block lacks two consecutive single-bail components");
    }
    const auto rot = [&](int t) { return cyc[static_cast<std::size_t>((shift + t) % m)]; };

    // Remove the three consecutive edges (c1,c2), (c2,c3), (c3,c4); thread
    // the leftover path c4..cm,c1; then close the triangle with c2 and c3.
    std::vector<int> path;
    for (int t = 3; t < m; ++t) path.push_back(rot(t));
    path.push_back(rot(0));

    r.m = comps[static_cast<std::size_t>(path[0])].witness.matrix;
    r.order = {path[0]};
    finish_offsets(r);
    for (std::size_t t = 1; t < path.size(); ++t) {
      const auto e = norm_edge(path[t - 1], path[t]);
      r.m = raw_bridge(r.m, comps[static_cast<std::size_t>(path[t])].witness.matrix,
                       local_offset(r, path[t - 1]) + bail_for(path[t - 1], e), bail_for(path[t], e), c);
      r.order.push_back(path[t]);
      finish_offsets(r);
    }

    const int c1 = rot(0), c2 = rot(1), c3 = rot(2), c4 = rot(3 % m);
    const auto e1 = norm_edge(c1, c2), e2 = norm_edge(c2, c3), e3 = norm_edge(c3, c4);
    const int u = bail_for(c2, e2);  // singleton: also serves e1
    const int w = bail_for(c3, e2);  // singleton: also serves e3
    const int pos_v1 = local_offset(r, c1) + bail_for(c1, e1);
    const int pos_v2 = local_offset(r, c4) + bail_for(c4, e3);
    const int n1 = r.m.rows();
    r.m = raw_bridge(r.m, comps[static_cast<std::size_t>(c2)].witness.matrix, pos_v1, u, c);
    r.order.push_back(c2);
    const int n12 = r.m.rows();
    r.m = stack_blocks(r.m, comps[static_cast<std::size_t>(c3)].witness.matrix);
    couple(r.m, pos_v2, n12 + w, c);
    couple(r.m, n1 + u, n12 + w, c);
    r.order.push_back(c3);
    finish_offsets(r);
  }

  // Join block results across the base's bridges, BFS from the block holding
  // vertex 0, bridges in lexicographic order.
  std::vector<std::vector<std::pair<int, int>>> incident(blocks.size());
  for (const auto& e : cut) {
    incident[static_cast<std::size_t>(block_of[static_cast<std::size_t>(e.first)])].push_back(e);
    incident[static_cast<std::size_t>(block_of[static_cast<std::size_t>(e.second)])].push_back(e);
  }

  std::vector<int> global_offset(static_cast<std::size_t>(base.vertex_count()), -1);
  const auto place_block = [&](const BlockResult& r, int at) {
    for (std::size_t i = 0; i < r.order.size(); ++i) {
      global_offset[static_cast<std::size_t>(r.order[i])] = at + r.offset[i];
    }
  };

  const int root = block_of[0];
  RatMatrix acc = results[static_cast<std::size_t>(root)].m;
  place_block(results[static_cast<std::size_t>(root)], 0);
  std::vector<bool> placed(blocks.size(), false);
  placed[static_cast<std::size_t>(root)] = true;
  std::queue<int> bq;
  bq.push(root);
  while (!bq.empty()) {
    const int b = bq.front();
    bq.pop();
    for (const auto& e : incident[static_cast<std::size_t>(b)]) {
      const bool mine_first = block_of[static_cast<std::size_t>(e.first)] == b;
      const int mine = mine_first ? e.first : e.second;
      const int theirs = mine_first ? e.second : e.first;
      const int ob = block_of[static_cast<std::size_t>(theirs)];
      if (placed[static_cast<std::size_t>(ob)]) continue;
      const BlockResult& r = results[static_cast<std::size_t>(ob)];
      const int at = acc.rows();
      acc = raw_bridge(acc, r.m, global_offset[static_cast<std::size_t>(mine)] + bail_for(mine, e),
                       local_offset(r, theirs) + bail_for(theirs, e), c);
      place_block(r, at);
      placed[static_cast<std::size_t>(ob)] = true;
      bq.push(ob);
    }
  }

  // Permute into the canonical contiguous component numbering and verify.
  std::vector<int> canon_to_asm(static_cast<std::size_t>(canonical.vertex_count()));
  int canon = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const int sz = comps[i].witness.graph.vertex_count();
    for (int j = 0; j < sz; ++j) {
      canon_to_asm[static_cast<std::size_t>(canon++)] = global_offset[i] + j;
    }
  }
  RatMatrix final_m(canonical.vertex_count(), canonical.vertex_count());
  for (int p = 0; p < canonical.vertex_count(); ++p) {
    for (int q = 0; q < canonical.vertex_count(); ++q) {
      final_m(p, q) = acc(canon_to_asm[static_cast<std::size_t>(p)], canon_to_asm[static_cast<std::size_t>(q)]);
    }
  }
  return Witness::checked(canonical, std::move(final_m));
}

}  // namespace

Witness thread_over(const ThreadSpec& spec) {
  std::vector<GenThreadComponentSpec> comps;
  comps.reserve(spec.components.size());
  for (const auto& cs : spec.components) comps.push_back({cs.witness, {cs.bail}});
  EdgeAssignment assignment;
  for (const auto& [u, v] : spec.base.edges()) {
    if (u >= static_cast<int>(spec.components.size()) || v >= static_cast<int>(spec.components.size())) {
      throw SizeMismatchError("threaded union needs one component per base vertex");
    }
    assignment[{u, v}] = {spec.components[static_cast<std::size_t>(u)].bail,
                          spec.components[static_cast<std::size_t>(v)].bail};
  }
  return thread_assemble(spec.base, comps, assignment, spec.coupling);
}

Witness generalized_thread_over(const GenThreadSpec& spec) {
  return thread_assemble(spec.base, spec.components, spec.assignment, spec.coupling);
}

Witness extend_across_pendant(const Witness& reduced, const Graph& g, int pendant, int attachment) {
  const int n = g.vertex_count();
  if (pendant < 0 || pendant >= n || g.degree(pendant) != 1 || g.neighbors(pendant)[0] != attachment) {
    throw std::invalid_argument("(" + std::to_string(pendant) + "," + std::to_string(attachment) +
                                ") is not a pendant edge");
  }
  if (!reduced.verification.property_p()) {
    throw UnverifiedInputError("reduced witness does not satisfy the vanishing-minors property");
  }
  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(n - 2));
  for (int v = 0; v < n; ++v) {
    if (v != pendant && v != attachment) keep.push_back(v);
  }
  if (!(reduced.graph == g.induced(keep))) {
    throw SizeMismatchError("reduced witness does not match the graph minus the pendant pair");
  }
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);

  RatMatrix a(n, n);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      a(keep[i], keep[j]) = reduced.matrix(static_cast<int>(i), static_cast<int>(j));
    }
  }
  // Unit weights on the attachment's edges; its diagonal entry is the unique
  // value that makes the minor at the pendant vanish (a Schur-complement
  // bordering argument; every other minor vanishes for free because the
  // pendant's diagonal stays zero).
  const RatMatrix inv = inverse(reduced.matrix);
  Rational diag = 0;
  for (int s : g.neighbors(attachment)) {
    if (s == pendant) continue;
    a(attachment, s) = 1;
    a(s, attachment) = 1;
    for (int t : g.neighbors(attachment)) {
      if (t == pendant) continue;
      diag += inv(pos[static_cast<std::size_t>(s)], pos[static_cast<std::size_t>(t)]);
    }
  }
  a(attachment, attachment) = diag;
  a(attachment, pendant) = 1;
  a(pendant, attachment) = 1;
  return Witness::checked(g, std::move(a));
}

}  // namespace pvertex
