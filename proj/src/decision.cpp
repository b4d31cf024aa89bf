#include "pvertex/decision.hpp"

#include <algorithm>
#include <sstream>

#include "pvertex/exact_linalg.hpp"

namespace pvertex {

std::string to_string(Status s) {
  switch (s) {
    case Status::Yes: return "Yes";
    case Status::No: return "No";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(Obstruction::Kind k) {
  switch (k) {
    case Obstruction::Kind::IsolatedVertex: return "isolated-vertex";
    case Obstruction::Kind::Antenna: return "antenna";
    case Obstruction::Kind::Unbalanced: return "unbalanced";
    case Obstruction::Kind::HallViolator: return "hall-violator";
  }
  return "isolated-vertex";
}

namespace {

// Internal result for one recursion level. Witnesses live on the local graph
// of that level; obstructions always carry original input ids.
struct Outcome {
  Status status = Status::Unknown;
  std::optional<Witness> witness;
  std::optional<Obstruction> obstruction;
  bool numeric_only = false;
  std::string reason;
};

Outcome yes_exact(Witness w) { return {Status::Yes, std::move(w), std::nullopt, false, ""}; }

Outcome yes_numeric(std::string reason) {
  return {Status::Yes, std::nullopt, std::nullopt, true, std::move(reason)};
}

Outcome no_with(Obstruction o) {
  std::string detail = o.detail;
  return {Status::No, std::nullopt, std::move(o), false, std::move(detail)};
}

std::vector<int> map_ids(const std::vector<int>& locals, const std::vector<int>& ids) {
  std::vector<int> out;
  out.reserve(locals.size());
  for (int v : locals) out.push_back(ids[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end());
  return out;
}

struct Engine {
  const DecideOptions& options;
  std::vector<std::string> trail;
  std::vector<std::pair<int, int>> rewrites;

  void tag(const std::string& t) { trail.push_back(t); }

  Outcome run(const Graph& g, const std::vector<int>& ids);
  Outcome combine_components(const Graph& g, const std::vector<int>& ids,
                             const std::vector<std::vector<int>>& comps);
  std::optional<Outcome> try_threaded(const Graph& g, const std::vector<int>& ids);
};

Outcome Engine::run(const Graph& g, const std::vector<int>& ids) {
  const int n = g.vertex_count();

  if (n == 0) {
    tag("R0:empty");
    return yes_exact(Witness::checked(Graph(0), RatMatrix(0, 0)));
  }

  const auto comps = connected_components(g);
  if (comps.size() > 1) return combine_components(g, ids, comps);

  if (n == 1) {
    tag("R1:isolated(" + std::to_string(ids[0]) + ")");
    Obstruction o;
    o.kind = Obstruction::Kind::IsolatedVertex;
    o.vertex = ids[0];
    o.detail = "vertex " + std::to_string(ids[0]) +
               " stands alone; the empty principal minor is 1, so it can never vanish";
    return no_with(std::move(o));
  }

  // Antenna check precedes the pendant rewrite, mirroring the reduction
  // pipeline's per-step terminal test.
  if (const auto av = antenna_vertex(g)) {
    Obstruction o;
    o.kind = Obstruction::Kind::Antenna;
    o.vertex = ids[static_cast<std::size_t>(*av)];
    for (int nb : g.neighbors(*av)) {
      if (g.degree(nb) == 1) o.pendant_neighbors.push_back(ids[static_cast<std::size_t>(nb)]);
    }
    std::sort(o.pendant_neighbors.begin(), o.pendant_neighbors.end());
    o.detail = "vertex " + std::to_string(o.vertex) + " keeps " +
               std::to_string(o.pendant_neighbors.size()) + " degree-1 neighbors";
    tag("R3:antenna(" + std::to_string(o.vertex) + ")");
    return no_with(std::move(o));
  }

  const auto pend = pendant_edges(g);
  if (!pend.empty()) {
    const auto [u, v] = pend.front();  // smallest pendant id
    tag("R2:pendant(" + std::to_string(ids[static_cast<std::size_t>(u)]) + "," +
        std::to_string(ids[static_cast<std::size_t>(v)]) + ")");
    rewrites.emplace_back(ids[static_cast<std::size_t>(u)], ids[static_cast<std::size_t>(v)]);
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(n - 2));
    for (int w = 0; w < n; ++w) {
      if (w != u && w != v) keep.push_back(w);
    }
    Outcome inner = run(g.induced(keep), map_ids(keep, ids));
    if (inner.status == Status::Yes && inner.witness) {
      return yes_exact(extend_across_pendant(*inner.witness, g, u, v));
    }
    return inner;  // No, Unknown, or numeric-only Yes transfer across the rewrite
  }

  if (const auto bp = bipartition(g)) {
    if (!is_balanced(*bp)) {
      tag("R4:unbalanced(" + std::to_string(bp->part_x.size()) + "," + std::to_string(bp->part_y.size()) + ")");
      Obstruction o;
      o.kind = Obstruction::Kind::Unbalanced;
      o.part_x = map_ids(bp->part_x, ids);
      o.part_y = map_ids(bp->part_y, ids);
      o.detail = "bipartition parts have sizes " + std::to_string(o.part_x.size()) + " and " +
                 std::to_string(o.part_y.size()) + "; only balanced bipartite graphs qualify";
      return no_with(std::move(o));
    }
    const Matching m = maximum_matching(g, *bp);
    if (2 * m.size() == n) {
      tag("R4:perfect-matching(n=" + std::to_string(n) + ")");
      return yes_exact(bipartite_pm_witness(g, *bp, m));
    }
    const bool tree = g.edge_count() == n - 1;
    const bool unicyclic = g.edge_count() == n;
    bool decided = n <= 8 || tree || unicyclic;
    std::string why = n <= 8 ? "order<=8" : tree ? "tree" : unicyclic ? "unicyclic" : "";
    if (!decided && triangular_ordering(g, *bp)) {
      decided = true;
      why = "triangular";
    }
    if (decided) {
      const auto hv = hall_violator(g, *bp);
      if (!hv) throw std::logic_error("perfect matching test disagrees with the Hall certificate");
      Obstruction o;
      o.kind = Obstruction::Kind::HallViolator;
      o.s = map_ids(hv->s, ids);
      o.neighborhood = map_ids(hv->neighborhood, ids);
      o.detail = "no perfect matching (" + why + " case): " + std::to_string(o.s.size()) +
                 " vertices share only " + std::to_string(o.neighborhood.size()) + " neighbors";
      tag("R4:hall-violator(|S|=" + std::to_string(o.s.size()) + ",|N(S)|=" + std::to_string(o.neighborhood.size()) +
          "," + why + ")");
      return no_with(std::move(o));
    }
    tag("R4:open-bipartite(n=" + std::to_string(n) + ")");
    // Balanced, pendant-free, no matching, order > 8, not triangular: no
    // theorem settles this; fall through to the remaining rules.
  }

  if (n >= 2 && g.edge_count() == n * (n - 1) / 2) {
    tag("R5:complete(" + std::to_string(n) + ")");
    return yes_exact(complete_witness(n));
  }

  bool all_degree_two = true;
  for (int v = 0; v < n && all_degree_two; ++v) all_degree_two = g.degree(v) == 2;
  if (n >= 3 && all_degree_two && g.edge_count() == n) {
    // Even cycles were settled above via their perfect matching, so this is
    // an odd cycle: certified by the cycle theorem, with no exact rational
    // matrix attached.
    tag("R6:odd-cycle(" + std::to_string(n) + ")");
    std::string reason = "odd cycle of length " + std::to_string(n) +
                         ": decided by the cycle theorem; only numeric witnesses are available";
    if (options.numeric_prober) {
      if (const auto res = options.numeric_prober(g)) {
        std::ostringstream os;
        os << "; numeric search reached residual " << *res;
        reason += os.str();
      }
    }
    return yes_numeric(std::move(reason));
  }

  if (auto threaded = try_threaded(g, ids)) return *threaded;

  if (options.numeric_prober) {
    if (const auto res = options.numeric_prober(g)) {
      std::ostringstream os;
      os << "numeric search reached residual " << *res << "; no exact rule applied";
      tag("R8:numeric-success");
      return yes_numeric(os.str());
    }
  }
  tag("R8:unknown");
  Outcome out;
  out.status = Status::Unknown;
  out.reason = "no decision rule applies to this graph";
  return out;
}

Outcome Engine::combine_components(const Graph& g, const std::vector<int>& ids,
                                   const std::vector<std::vector<int>>& comps) {
  std::string sizes;
  for (const auto& c : comps) sizes += (sizes.empty() ? "" : ",") + std::to_string(c.size());
  tag("R0:components(" + sizes + ")");

  std::vector<Outcome> results;
  results.reserve(comps.size());
  for (const auto& c : comps) {
    results.push_back(run(g.induced(c), map_ids(c, ids)));
  }
  for (const auto& r : results) {
    if (r.status == Status::No) {
      Outcome out = r;  // first No in component order, for determinism
      out.witness.reset();
      return out;
    }
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].status == Status::Unknown) {
      Outcome out;
      out.status = Status::Unknown;
      out.reason = "component containing vertex " + std::to_string(ids[static_cast<std::size_t>(comps[i][0])]) +
                   " is undecided: " + results[i].reason;
      return out;
    }
  }
  bool exact = true;
  std::string notes;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].numeric_only) {
      exact = false;
      notes += (notes.empty() ? "" : "; ") + results[i].reason;
    }
  }
  if (!exact) return yes_numeric("all components qualify, some without exact witnesses: " + notes);

  // Block-diagonal combination: determinants multiply and a vanishing minor
  // in one block stays vanished against the other blocks' determinants.
  RatMatrix m(g.vertex_count(), g.vertex_count());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    const RatMatrix& w = results[i].witness->matrix;
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = 0; b < c.size(); ++b) {
        m(c[a], c[b]) = w(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return yes_exact(Witness::checked(g, std::move(m)));
}

std::optional<Outcome> Engine::try_threaded(const Graph& g, const std::vector<int>& ids) {
  const auto cut = bridges(g);
  if (cut.empty()) return std::nullopt;

  Graph rest(g.vertex_count());
  for (const auto& e : g.edges()) {
    if (!std::binary_search(cut.begin(), cut.end(), e)) rest.add_edge(e.first, e.second);
  }
  const auto pieces = connected_components(rest);
  if (pieces.size() < 2) return std::nullopt;
  std::vector<int> piece_of(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    for (int v : pieces[p]) piece_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
  }

  // The bridge tree: nodes are the 2-edge-connected pieces, edges the cut
  // edges. Root it at the piece holding local vertex 0 and orient.
  const int k = static_cast<int>(pieces.size());
  std::vector<std::vector<int>> tadj(static_cast<std::size_t>(k));
  for (const auto& e : cut) {
    const int a = piece_of[static_cast<std::size_t>(e.first)];
    const int b = piece_of[static_cast<std::size_t>(e.second)];
    tadj[static_cast<std::size_t>(a)].push_back(b);
    tadj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& row : tadj) std::sort(row.begin(), row.end());
  const int root = piece_of[0];
  std::vector<int> parent(static_cast<std::size_t>(k), -1), order;
  order.reserve(static_cast<std::size_t>(k));
  {
    std::vector<int> stack{root};
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    seen[static_cast<std::size_t>(root)] = true;
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      order.push_back(p);
      for (int q : tadj[static_cast<std::size_t>(p)]) {
        if (!seen[static_cast<std::size_t>(q)]) {
          seen[static_cast<std::size_t>(q)] = true;
          parent[static_cast<std::size_t>(q)] = p;
          stack.push_back(q);
        }
      }
    }
  }

  // Greedy leaves-up grouping: try each pending subtree as one threaded
  // component; cut it off when it decides Yes on its own, absorb it into the
  // parent otherwise. Attempts run on scratch engines so dead ends leave no
  // marks on the certificate.
  const auto attempt = [&](const std::vector<int>& verts) -> Outcome {
    Engine scratch{options, {}, {}};
    return scratch.run(g.induced(verts), map_ids(verts, ids));
  };

  std::vector<std::vector<int>> pending(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p) pending[static_cast<std::size_t>(p)] = pieces[static_cast<std::size_t>(p)];
  struct Group {
    std::vector<int> verts;
    Outcome outcome;
  };
  std::vector<Group> groups;
  const auto absorb = [](std::vector<int>& into, const std::vector<int>& from) {
    std::vector<int> merged;
    merged.reserve(into.size() + from.size());
    std::merge(into.begin(), into.end(), from.begin(), from.end(), std::back_inserter(merged));
    into = std::move(merged);
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int node = *it;
    if (node == root) continue;
    Outcome out = attempt(pending[static_cast<std::size_t>(node)]);
    if (out.status == Status::Yes) {
      groups.push_back({pending[static_cast<std::size_t>(node)], std::move(out)});
    } else {
      absorb(pending[static_cast<std::size_t>(parent[static_cast<std::size_t>(node)])],
             pending[static_cast<std::size_t>(node)]);
    }
    pending[static_cast<std::size_t>(node)].clear();
  }
  if (groups.empty()) return std::nullopt;  // everything collapsed into the root

  Outcome root_out = attempt(pending[static_cast<std::size_t>(root)]);
  if (root_out.status == Status::Yes) {
    groups.push_back({pending[static_cast<std::size_t>(root)], std::move(root_out)});
  } else {
    // Retry once per cut group: re-absorbing one of them may fix the root
    // (e.g. when the root needs a neighbor to pair off its odd part).
    if (groups.size() < 2) return std::nullopt;
    bool fixed = false;
    for (std::size_t i = 0; i < groups.size() && !fixed; ++i) {
      std::vector<int> merged = pending[static_cast<std::size_t>(root)];
      absorb(merged, groups[i].verts);
      Outcome out = attempt(merged);
      if (out.status == Status::Yes) {
        groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(i));
        groups.push_back({std::move(merged), std::move(out)});
        fixed = true;
      }
    }
    if (!fixed) return std::nullopt;
  }

  std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) { return a.verts[0] < b.verts[0]; });
  tag("R7:threaded(" + std::to_string(groups.size()) + " components)");
  bool exact = true;
  std::string notes;
  for (const auto& gr : groups) {
    tag("R7:component(min=" + std::to_string(ids[static_cast<std::size_t>(gr.verts[0])]) + ",n=" +
        std::to_string(gr.verts.size()) + ")=" + (gr.outcome.witness ? "exact" : "numeric"));
    if (!gr.outcome.witness) {
      exact = false;
      notes += (notes.empty() ? "" : "; ") + gr.outcome.reason;
    }
  }
  if (!exact) {
    return yes_numeric("bridge decomposition into qualifying components, some without exact witnesses: " + notes);
  }

  // Assemble the exact witness over the quotient tree.
  std::vector<int> group_of(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    for (int v : groups[gi].verts) group_of[static_cast<std::size_t>(v)] = static_cast<int>(gi);
  }
  const auto local_in_group = [&](int v) {
    const auto& verts = groups[static_cast<std::size_t>(group_of[static_cast<std::size_t>(v)])].verts;
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  Graph base(static_cast<int>(groups.size()));
  EdgeAssignment assignment;
  std::vector<std::vector<int>> bail_sets(groups.size());
  for (const auto& e : cut) {
    const int ga = group_of[static_cast<std::size_t>(e.first)];
    const int gb = group_of[static_cast<std::size_t>(e.second)];
    if (ga == gb) continue;  // an absorbed bridge lives inside its component
    base.add_edge(ga, gb);
    const int la = local_in_group(e.first);
    const int lb = local_in_group(e.second);
    assignment[{std::min(ga, gb), std::max(ga, gb)}] = ga < gb ? std::make_pair(la, lb) : std::make_pair(lb, la);
    bail_sets[static_cast<std::size_t>(ga)].push_back(la);
    bail_sets[static_cast<std::size_t>(gb)].push_back(lb);
  }
  GenThreadSpec spec;
  spec.base = std::move(base);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    auto& bs = bail_sets[gi];
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    spec.components.push_back({*groups[gi].outcome.witness, bs});
  }
  spec.assignment = std::move(assignment);
  const Witness joined = generalized_thread_over(spec);

  // joined lives on the contiguous per-component numbering; pull it back to
  // this level's vertex ids.
  std::vector<int> to_joined(static_cast<std::size_t>(g.vertex_count()), -1);
  int at = 0;
  for (const auto& gr : groups) {
    for (int v : gr.verts) to_joined[static_cast<std::size_t>(v)] = at++;
  }
  RatMatrix m(g.vertex_count(), g.vertex_count());
  for (int p = 0; p < g.vertex_count(); ++p) {
    for (int q = 0; q < g.vertex_count(); ++q) {
      m(p, q) = joined.matrix(to_joined[static_cast<std::size_t>(p)], to_joined[static_cast<std::size_t>(q)]);
    }
  }
  return yes_exact(Witness::checked(g, std::move(m)));
}

}  // namespace

Certificate decide(const Graph& g, const DecideOptions& options) {
  Engine engine{options, {}, {}};
  std::vector<int> ids(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) ids[static_cast<std::size_t>(v)] = v;
  Outcome out = engine.run(g, ids);

  Certificate cert;
  cert.status = out.status;
  cert.witness = std::move(out.witness);
  cert.obstruction = std::move(out.obstruction);
  cert.numeric_only = out.numeric_only;
  cert.reason = std::move(out.reason);
  cert.rule_trail = std::move(engine.trail);
  cert.rewrites = std::move(engine.rewrites);
  return cert;
}

bool decide_tree_crosscheck(const Graph& t) {
  const int n = t.vertex_count();
  if (n == 0 || connected_components(t).size() != 1 || t.edge_count() != n - 1) {
    throw NotATreeError("adjacency crosscheck needs a tree");
  }
  RatMatrix a(n, n);
  for (const auto& [u, v] : t.edges()) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return det(a) != 0;
}

}  // namespace pvertex
