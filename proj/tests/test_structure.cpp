#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "pvertex/structure.hpp"

using namespace pvertex;

namespace {

Graph from_biadjacency(int a, int b, unsigned long mask) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      if ((mask >> (i * b + j)) & 1ul) g.add_edge(i, a + j);
    }
  }
  return g;
}

// Reference check: does ANY pair of part orderings make the biadjacency
// upper triangular? Tries all permutations of both sides.
bool brute_triangularizable(const Graph& g, std::vector<int> xs, std::vector<int> ys) {
  std::sort(xs.begin(), xs.end());
  do {
    std::sort(ys.begin(), ys.end());
    std::vector<int> cols = ys;
    do {
      bool ok = true;
      for (std::size_t i = 0; i < xs.size() && ok; ++i) {
        for (std::size_t j = 0; j < i && ok; ++j) {
          if (g.has_edge(xs[i], cols[j])) ok = false;
        }
      }
      if (ok) return true;
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(xs.begin(), xs.end()));
  return false;
}

}  // namespace

TEST_SUITE_BEGIN("structure");

TEST_CASE("antenna vertex detection") {
  SUBCASE("star center") {
    const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(antenna_vertex(star) == 0);
  }
  SUBCASE("middle of a 3-path") {
    const Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(antenna_vertex(p3) == 1);
  }
  SUBCASE("4-path has none: each inner vertex sees one leaf") {
    const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(antenna_vertex(p4).has_value());
  }
  SUBCASE("smallest qualifying vertex wins") {
    // Two separate stars; both centers qualify.
    const Graph g(6, {{2, 0}, {2, 1}, {5, 3}, {5, 4}});
    CHECK(antenna_vertex(g) == 2);
  }
  SUBCASE("isolated vertices are not antennas") {
    CHECK_FALSE(antenna_vertex(Graph(3)).has_value());
  }
}

TEST_CASE("pendant reduction on paths") {
  SUBCASE("4-path empties out in two steps") {
    const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    const ReductionTrace t = pendant_reduce(p4);
    CHECK(t.removed == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK(t.reason.kind == TerminalReason::Kind::Empty);
    CHECK(t.terminal.vertex_count() == 0);
    CHECK(t.terminal_vertices.empty());
  }
  SUBCASE("3-path stops immediately at the antenna") {
    const Graph p3(3, {{0, 1}, {1, 2}});
    const ReductionTrace t = pendant_reduce(p3);
    CHECK(t.removed.empty());
    CHECK(t.reason.kind == TerminalReason::Kind::Antenna);
    CHECK(t.reason.vertex == 1);
    CHECK(t.terminal_vertices == std::vector<int>{0, 1, 2});
  }
  SUBCASE("5-path: one removal exposes the antenna") {
    const Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    const ReductionTrace t = pendant_reduce(p5);
    CHECK(t.removed == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(t.reason.kind == TerminalReason::Kind::Antenna);
    CHECK(t.reason.vertex == 3);  // input ids, not terminal ids
    CHECK(t.terminal_vertices == std::vector<int>{2, 3, 4});
    // Terminal graph is the remaining 3-path, renumbered.
    CHECK(t.terminal == Graph(3, {{0, 1}, {1, 2}}));
  }
}

TEST_CASE("pendant-free and empty terminals") {
  SUBCASE("cycles are already pendant-free") {
    Graph c(5);
    for (int i = 0; i < 5; ++i) c.add_edge(i, (i + 1) % 5);
    const ReductionTrace t = pendant_reduce(c);
    CHECK(t.removed.empty());
    CHECK(t.reason.kind == TerminalReason::Kind::PendantFree);
    CHECK(t.terminal == c);
  }
  SUBCASE("empty input reports empty") {
    const ReductionTrace t = pendant_reduce(Graph(0));
    CHECK(t.reason.kind == TerminalReason::Kind::Empty);
  }
  SUBCASE("isolated vertices are pendant-free, not empty") {
    const ReductionTrace t = pendant_reduce(Graph(2));
    CHECK(t.reason.kind == TerminalReason::Kind::PendantFree);
    CHECK(t.terminal_vertices == std::vector<int>{0, 1});
  }
}

TEST_CASE("12-vertex regression: one peel, then an antenna at 5") {
  const Graph g = oracles::example_order12();
  const ReductionTrace t = pendant_reduce(g);
  CHECK(t.removed == std::vector<std::pair<int, int>>{{6, 0}});
  CHECK(t.reason.kind == TerminalReason::Kind::Antenna);
  CHECK(t.reason.vertex == 5);
  CHECK(t.terminal_vertices == std::vector<int>{1, 2, 3, 4, 5, 7, 8, 9, 10, 11});
  CHECK(t.terminal.vertex_count() == 10);
  CHECK(t.terminal.edge_count() == 11);
  // In the terminal numbering, input vertex 5 sits at position 4 and its
  // degree-1 neighbors 10, 11 at positions 8, 9.
  CHECK(t.terminal.degree(8) == 1);
  CHECK(t.terminal.degree(9) == 1);
  CHECK(t.terminal.has_edge(4, 8));
  CHECK(t.terminal.has_edge(4, 9));
}

TEST_CASE("triangular ordering on fixed shapes") {
  SUBCASE("staircase is triangular as given") {
    // Biadjacency rows {0,1,2} x cols {3,4,5}: full upper staircase.
    Graph g(6);
    g.add_edge(0, 3);
    g.add_edge(0, 4);
    g.add_edge(0, 5);
    g.add_edge(1, 4);
    g.add_edge(1, 5);
    g.add_edge(2, 5);
    const Bipartition bp{{0, 1, 2}, {3, 4, 5}};
    const auto ord = triangular_ordering(g, bp);
    REQUIRE(ord.has_value());
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        CHECK_FALSE(g.has_edge(ord->row_order[i], ord->col_order[j]));
      }
    }
  }
  SUBCASE("complete bipartite K_22 cannot be triangular") {
    const Graph g(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK_FALSE(triangular_ordering(g, Bipartition{{0, 1}, {2, 3}}).has_value());
  }
  SUBCASE("even cycles cannot be triangular") {
    // C_6 with parts {0,2,4} / {1,3,5}: every row has two entries and no
    // column can be cleared below the diagonal.
    Graph c(6);
    for (int i = 0; i < 6; ++i) c.add_edge(i, (i + 1) % 6);
    const auto bp = bipartition(c);
    REQUIRE(bp.has_value());
    CHECK_FALSE(triangular_ordering(c, *bp).has_value());
  }
  SUBCASE("unbalanced parts are refused") {
    const Graph g(3, {{0, 2}, {1, 2}});
    CHECK_FALSE(triangular_ordering(g, Bipartition{{0, 1}, {2}}).has_value());
  }
}

TEST_CASE("triangular ordering matches brute force on all 3x3 biadjacencies") {
  const std::vector<int> xs{0, 1, 2}, ys{3, 4, 5};
  int found = 0, missed = 0;
  for (unsigned long mask = 0; mask < (1ul << 9); ++mask) {
    const Graph g = from_biadjacency(3, 3, mask);
    const Bipartition bp{xs, ys};
    const auto ord = triangular_ordering(g, bp);
    const bool expected = brute_triangularizable(g, xs, ys);
    CHECK(ord.has_value() == expected);
    if (!ord) {
      ++missed;
      continue;
    }
    ++found;
    // The returned orderings must be permutations of the parts and really
    // produce an upper triangular pattern.
    auto rows = ord->row_order;
    auto cols = ord->col_order;
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    CHECK(rows == xs);
    CHECK(cols == ys);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        CHECK_FALSE(g.has_edge(ord->row_order[i], ord->col_order[j]));
      }
    }
  }
  CHECK(found > 0);
  CHECK(missed > 0);
}

TEST_CASE("for triangular graphs a perfect matching forces a full diagonal") {
  // det and permanent of a triangular biadjacency both equal the diagonal
  // product, so a perfect matching exists exactly when the diagonal is free
  // of zeros. Good consistency check between the two modules.
  for (unsigned long mask = 0; mask < (1ul << 9); ++mask) {
    const Graph g = from_biadjacency(3, 3, mask);
    const Bipartition bp{{0, 1, 2}, {3, 4, 5}};
    const auto ord = triangular_ordering(g, bp);
    if (!ord) continue;
    bool full_diagonal = true;
    for (std::size_t i = 0; i < 3; ++i) {
      if (!g.has_edge(ord->row_order[i], ord->col_order[i])) full_diagonal = false;
    }
    CHECK(full_diagonal == oracles::brute_perfect_matching(g));
  }
}

TEST_SUITE_END();
