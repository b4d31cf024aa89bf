#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "pvertex/decision.hpp"
#include "pvertex/families.hpp"

using namespace pvertex;

namespace {

Graph gen(Family f, std::vector<long> params) { return generate(FamilySpec{f, std::move(params), nullptr}); }

// Re-derive a No certificate's obstruction from the input graph alone: delete
// the recorded rewrites, then confirm the claimed structure is really there.
void recheck_obstruction(const Graph& g, const Certificate& cert) {
  REQUIRE(cert.status == Status::No);
  REQUIRE(cert.obstruction.has_value());
  std::set<int> gone;
  for (const auto& [p, a] : cert.rewrites) {
    gone.insert(p);
    gone.insert(a);
  }
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!gone.count(v)) keep.push_back(v);
  }
  const Graph h = g.induced(keep);
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);

  const Obstruction& o = *cert.obstruction;
  switch (o.kind) {
    case Obstruction::Kind::IsolatedVertex:
      REQUIRE(pos[static_cast<std::size_t>(o.vertex)] >= 0);
      CHECK(h.degree(pos[static_cast<std::size_t>(o.vertex)]) == 0);
      break;
    case Obstruction::Kind::Antenna: {
      REQUIRE(pos[static_cast<std::size_t>(o.vertex)] >= 0);
      REQUIRE(o.pendant_neighbors.size() >= 2);
      for (int u : o.pendant_neighbors) {
        REQUIRE(pos[static_cast<std::size_t>(u)] >= 0);
        CHECK(h.has_edge(pos[static_cast<std::size_t>(o.vertex)], pos[static_cast<std::size_t>(u)]));
        CHECK(h.degree(pos[static_cast<std::size_t>(u)]) == 1);
      }
      break;
    }
    case Obstruction::Kind::Unbalanced: {
      CHECK(o.part_x.size() != o.part_y.size());
      for (const auto& [u, v] : h.edges()) {
        const int gu = keep[static_cast<std::size_t>(u)], gv = keep[static_cast<std::size_t>(v)];
        const bool ux = std::binary_search(o.part_x.begin(), o.part_x.end(), gu);
        const bool vx = std::binary_search(o.part_x.begin(), o.part_x.end(), gv);
        CHECK(ux != vx);
      }
      break;
    }
    case Obstruction::Kind::HallViolator: {
      std::set<int> nbhd;
      for (int s : o.s) {
        REQUIRE(pos[static_cast<std::size_t>(s)] >= 0);
        for (int u : h.neighbors(pos[static_cast<std::size_t>(s)])) nbhd.insert(keep[static_cast<std::size_t>(u)]);
      }
      CHECK(o.neighborhood == std::vector<int>(nbhd.begin(), nbhd.end()));
      CHECK(o.neighborhood.size() < o.s.size());
      break;
    }
  }
}

}  // namespace

TEST_SUITE_BEGIN("decision");

TEST_CASE("empty graph holds vacuously") {
  const Certificate c = decide(Graph(0));
  CHECK(c.status == Status::Yes);
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->graph.vertex_count() == 0);
  CHECK_FALSE(c.numeric_only);
  CHECK(c.rule_trail == std::vector<std::string>{"R0:empty"});
}

TEST_CASE("single vertices fail") {
  const Certificate c = decide(Graph(1));
  CHECK(c.status == Status::No);
  REQUIRE(c.obstruction.has_value());
  CHECK(c.obstruction->kind == Obstruction::Kind::IsolatedVertex);
  CHECK(c.obstruction->vertex == 0);
  recheck_obstruction(Graph(1), c);

  SUBCASE("an isolated vertex sinks the whole graph, with its original id") {
    const Graph g(4, {{0, 1}, {1, 2}, {0, 2}});  // triangle plus isolated 3
    const Certificate c2 = decide(g);
    CHECK(c2.status == Status::No);
    CHECK(c2.obstruction->kind == Obstruction::Kind::IsolatedVertex);
    CHECK(c2.obstruction->vertex == 3);
    recheck_obstruction(g, c2);
  }
}

TEST_CASE("antennas are terminal") {
  SUBCASE("3-path") {
    const Graph p3 = gen(Family::Path, {3});
    const Certificate c = decide(p3);
    CHECK(c.status == Status::No);
    REQUIRE(c.obstruction.has_value());
    CHECK(c.obstruction->kind == Obstruction::Kind::Antenna);
    CHECK(c.obstruction->vertex == 1);
    CHECK(c.obstruction->pendant_neighbors == std::vector<int>{0, 2});
    CHECK(c.rewrites.empty());
    recheck_obstruction(p3, c);
  }
  SUBCASE("stars of any size") {
    for (long t = 2; t <= 5; ++t) {
      const Graph star = gen(Family::Star, {t});
      const Certificate c = decide(star);
      CHECK(c.status == Status::No);
      CHECK(c.obstruction->kind == Obstruction::Kind::Antenna);
      CHECK(c.obstruction->vertex == 0);
      recheck_obstruction(star, c);
    }
  }
  SUBCASE("the antenna rule outranks the unbalanced rule") {
    // K_{1,3} is unbalanced bipartite AND an antenna graph; the antenna is
    // found first.
    const Certificate c = decide(gen(Family::CompleteBipartite, {1, 3}));
    CHECK(c.obstruction->kind == Obstruction::Kind::Antenna);
  }
}

TEST_CASE("pendant rewrites recurse and lift witnesses") {
  SUBCASE("4-path says yes with the adjacency matrix itself") {
    const Graph p4 = gen(Family::Path, {4});
    const Certificate c = decide(p4);
    CHECK(c.status == Status::Yes);
    CHECK_FALSE(c.numeric_only);
    CHECK(c.rewrites == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->graph == p4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) CHECK(c.witness->matrix(i, j) == (p4.has_edge(i, j) ? 1 : 0));
    }
  }
  SUBCASE("even paths alternate sign, odd paths die at an antenna") {
    CHECK(decide(gen(Family::Path, {6})).witness->verification.determinant == -1);
    CHECK(decide(gen(Family::Path, {8})).witness->verification.determinant == 1);

    const Graph p5 = gen(Family::Path, {5});
    const Certificate c = decide(p5);
    CHECK(c.status == Status::No);
    CHECK(c.rewrites == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(c.obstruction->kind == Obstruction::Kind::Antenna);
    CHECK(c.obstruction->vertex == 3);
    CHECK(c.obstruction->pendant_neighbors == std::vector<int>{2, 4});
    recheck_obstruction(p5, c);
  }
  SUBCASE("a pendant hanging off a clique") {
    const Graph lollipop = gen(Family::Lollipop, {4, 2});
    const Certificate c = decide(lollipop);
    CHECK(c.status == Status::Yes);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->graph == lollipop);
    CHECK(c.rewrites == std::vector<std::pair<int, int>>{{5, 4}});
  }
}

TEST_CASE("bipartite rules") {
  SUBCASE("perfect matchings yield exact witnesses") {
    for (const Graph& g : {gen(Family::Cycle, {4}), gen(Family::Cycle, {6}), gen(Family::CompleteBipartite, {3, 3}),
                           gen(Family::Grid, {2, 3}), gen(Family::Hypercube, {3})}) {
      const Certificate c = decide(g);
      CHECK(c.status == Status::Yes);
      CHECK_FALSE(c.numeric_only);
      REQUIRE(c.witness.has_value());
      CHECK(c.witness->graph == g);
    }
  }
  SUBCASE("unbalanced parts are a terminal obstruction") {
    const Graph k23 = gen(Family::CompleteBipartite, {2, 3});
    const Certificate c = decide(k23);
    CHECK(c.status == Status::No);
    REQUIRE(c.obstruction.has_value());
    CHECK(c.obstruction->kind == Obstruction::Kind::Unbalanced);
    CHECK(c.obstruction->part_x == std::vector<int>{0, 1});
    CHECK(c.obstruction->part_y == std::vector<int>{2, 3, 4});
    recheck_obstruction(k23, c);
  }
}

TEST_CASE("complete graphs and odd cycles") {
  SUBCASE("cliques carry the closed-form witness") {
    for (long n = 3; n <= 7; ++n) {
      const Certificate c = decide(gen(Family::Complete, {n}));
      CHECK(c.status == Status::Yes);
      CHECK_FALSE(c.numeric_only);
      REQUIRE(c.witness.has_value());
      Rational expected = 1;
      for (long i = 0; i < n - 1; ++i) expected *= (1 - n);
      CHECK(c.witness->verification.determinant == expected);
    }
  }
  SUBCASE("odd cycles are yes without an attached matrix") {
    for (long n : {5L, 7L, 9L}) {
      const Certificate c = decide(gen(Family::Cycle, {n}));
      CHECK(c.status == Status::Yes);
      CHECK(c.numeric_only);
      CHECK_FALSE(c.witness.has_value());
      CHECK_FALSE(c.reason.empty());
    }
  }
  SUBCASE("even cycles go the bipartite route instead") {
    const Certificate c = decide(gen(Family::Cycle, {8}));
    CHECK(c.status == Status::Yes);
    CHECK_FALSE(c.numeric_only);
  }
}

TEST_CASE("bridge decomposition threads exact witnesses") {
  SUBCASE("barbell") {
    const Graph b3 = gen(Family::Barbell, {3});
    const Certificate c = decide(b3);
    CHECK(c.status == Status::Yes);
    CHECK_FALSE(c.numeric_only);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->graph == b3);
    CHECK(c.witness->verification.determinant == 16);
    bool threaded = false;
    for (const auto& t : c.rule_trail) {
      if (t.rfind("R7:", 0) == 0) threaded = true;
    }
    CHECK(threaded);
  }
  SUBCASE("three cliques strung along a path") {
    const Graph k3 = gen(Family::Complete, {3});
    const Graph g = threaded_union(gen(Family::Path, {3}), {{k3, 0}, {k3, 0}, {k3, 0}});
    const Certificate c = decide(g);
    CHECK(c.status == Status::Yes);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->verification.determinant == 64);
  }
  SUBCASE("a numeric-only piece degrades the whole answer to numeric") {
    const Graph c5 = gen(Family::Cycle, {5});
    const Graph k3 = gen(Family::Complete, {3});
    const Graph g = threaded_union(Graph(2, {{0, 1}}), {{c5, 0}, {k3, 0}});
    const Certificate c = decide(g);
    CHECK(c.status == Status::Yes);
    CHECK(c.numeric_only);
    CHECK_FALSE(c.witness.has_value());
  }
}

TEST_CASE("components combine block-diagonally") {
  SUBCASE("two exact components") {
    Graph g(7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}});  // K_3 + C_4
    const Certificate c = decide(g);
    CHECK(c.status == Status::Yes);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->graph == g);
    // Off-diagonal blocks stay zero between components.
    CHECK(c.witness->matrix(0, 3) == 0);
    CHECK(c.witness->matrix(2, 6) == 0);
  }
  SUBCASE("one numeric component spoils exactness but not the answer") {
    Graph g(8);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);  // C_5
    g.add_edge(5, 6);
    g.add_edge(6, 7);
    g.add_edge(5, 7);  // K_3
    const Certificate c = decide(g);
    CHECK(c.status == Status::Yes);
    CHECK(c.numeric_only);
  }
  SUBCASE("a failing component fails the graph") {
    Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});  // K_3 + K_2: both fine
    CHECK(decide(g).status == Status::Yes);
    Graph h(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}});  // K_3 + P_3: antenna
    const Certificate c = decide(h);
    CHECK(c.status == Status::No);
    CHECK(c.obstruction->kind == Obstruction::Kind::Antenna);
    CHECK(c.obstruction->vertex == 3);
    recheck_obstruction(h, c);
  }
}

TEST_CASE("graphs beyond the rules are reported unknown") {
  // Corona of a 4-cycle with K_2: triangles glued onto a cycle, no bridges,
  // not bipartite, none of the closed forms apply.
  const Graph g = corona(gen(Family::Cycle, {4}), 2);
  const Certificate c = decide(g);
  CHECK(c.status == Status::Unknown);
  CHECK_FALSE(c.reason.empty());
  CHECK_FALSE(c.witness.has_value());
  CHECK_FALSE(c.obstruction.has_value());
}

TEST_CASE("numeric prober hook") {
  const Graph hard = corona(gen(Family::Cycle, {4}), 2);

  SUBCASE("a successful probe upgrades unknown to numeric yes") {
    int calls = 0;
    DecideOptions opt;
    opt.numeric_prober = [&](const Graph&) {
      ++calls;
      return std::optional<double>(1e-12);
    };
    const Certificate c = decide(hard, opt);
    CHECK(c.status == Status::Yes);
    CHECK(c.numeric_only);
    CHECK_FALSE(c.witness.has_value());
    CHECK(calls == 1);
  }
  SUBCASE("a failed probe leaves unknown") {
    DecideOptions opt;
    opt.numeric_prober = [](const Graph&) { return std::optional<double>(); };
    const Certificate c = decide(hard, opt);
    CHECK(c.status == Status::Unknown);
  }
  SUBCASE("exact routes never consult the prober") {
    int calls = 0;
    DecideOptions opt;
    opt.numeric_prober = [&](const Graph&) {
      ++calls;
      return std::optional<double>(1e-12);
    };
    CHECK(decide(gen(Family::Complete, {4}), opt).status == Status::Yes);
    CHECK(decide(gen(Family::Cycle, {6}), opt).status == Status::Yes);
    CHECK(calls == 0);
  }
}

TEST_CASE("12-vertex regression walks the full pipeline") {
  const Graph g = oracles::example_order12();
  const Certificate c = decide(g);
  CHECK(c.status == Status::No);
  CHECK(c.rewrites == std::vector<std::pair<int, int>>{{6, 0}});
  CHECK(c.rule_trail == std::vector<std::string>{"R2:pendant(6,0)", "R3:antenna(5)"});
  REQUIRE(c.obstruction.has_value());
  CHECK(c.obstruction->kind == Obstruction::Kind::Antenna);
  CHECK(c.obstruction->vertex == 5);
  CHECK(c.obstruction->pendant_neighbors == std::vector<int>{10, 11});
  recheck_obstruction(g, c);
}

TEST_CASE("tree crosscheck equals the decision and the matching test") {
  SUBCASE("hand-picked trees") {
    CHECK(decide_tree_crosscheck(gen(Family::Path, {2})));
    CHECK_FALSE(decide_tree_crosscheck(gen(Family::Path, {3})));
    CHECK(decide_tree_crosscheck(gen(Family::Path, {6})));
    CHECK_FALSE(decide_tree_crosscheck(gen(Family::Star, {3})));
  }
  SUBCASE("all free trees on up to 9 vertices") {
    int yes = 0, no = 0;
    for (const Graph& t : oracles::free_trees_up_to(9)) {
      const bool via_det = decide_tree_crosscheck(t);
      const bool via_decide = decide(t).status == Status::Yes;
      const bool via_matching = oracles::brute_perfect_matching(t);
      CHECK(via_det == via_decide);
      CHECK(via_det == via_matching);
      (via_det ? yes : no) += 1;
    }
    CHECK(yes > 0);
    CHECK(no > 0);
  }
  SUBCASE("non-trees are rejected") {
    CHECK_THROWS_AS(decide_tree_crosscheck(gen(Family::Cycle, {4})), NotATreeError);
    CHECK_THROWS_AS(decide_tree_crosscheck(Graph(3, {{0, 1}})), NotATreeError);
  }
}

TEST_SUITE_END();
