#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "phasecomp/errors.hpp"
#include "phasecomp/pattern_graph.hpp"
#include "support/oracles.hpp"

using namespace phasecomp;

namespace {

PatternGraph star4() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}};
  return PatternGraph(4, e);
}

bool some_ordering_is_peo(const PatternGraph& g) {
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    if (oracle::brute_is_peo(g, order)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace

TEST_CASE("edges are unordered and every vertex carries a loop") {
  PatternGraph g(3);
  g.add_edge(2, 0);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK(g.has_edge(1, 1));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.edges() == std::vector<Edge>{{0, 2}});
  CHECK(g.neighbors(0) == std::vector<int>{2});
  CHECK_THROWS_AS(g.add_edge(0, 3), InvalidArgument);
}

TEST_CASE("complete graph is chordal and every ordering eliminates it") {
  const auto k4 = PatternGraph::complete(4);
  const auto r = is_chordal(k4);
  REQUIRE(r.chordal);
  CHECK(verify_peo(k4, *r.peo));
  CHECK(verify_peo(k4, EliminationOrdering{{3, 1, 0, 2}}));
  CHECK(maximal_cliques(k4, *r.peo) == CliqueList{{0, 1, 2, 3}});
}

TEST_CASE("chordless 4-cycle is rejected by every ordering") {
  const auto c4 = PatternGraph::cycle(4);
  const auto r = is_chordal(c4);
  CHECK_FALSE(r.chordal);
  CHECK_FALSE(r.peo.has_value());
  std::vector<int> order{0, 1, 2, 3};
  int accepted = 0;
  do {
    accepted += verify_peo(c4, EliminationOrdering{order});
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(accepted == 0);
  CHECK_THROWS_AS(maximal_cliques(c4, EliminationOrdering::identity(4)),
                  NonChordalPattern);
}

TEST_CASE("path on five vertices: MCS ordering passes the brute-force check") {
  const auto p5 = PatternGraph::path(5);
  const auto r = is_chordal(p5);
  REQUIRE(r.chordal);
  CHECK(oracle::brute_is_peo(p5, r.peo->order));
  // the first vertex eliminated is an endpoint
  CHECK((r.peo->order.front() == 0 || r.peo->order.front() == 4));
}

TEST_CASE("verify_peo on small examples") {
  CHECK(verify_peo(PatternGraph::complete(3), EliminationOrdering::identity(3)));
  CHECK(verify_peo(PatternGraph::path(3), EliminationOrdering{{0, 2, 1}}));
  CHECK_FALSE(verify_peo(PatternGraph::path(3), EliminationOrdering{{1, 0, 2}}));
  CHECK_THROWS_AS(verify_peo(PatternGraph::path(3), EliminationOrdering{{0, 0, 1}}),
                  InvalidArgument);
}

TEST_CASE("maximal cliques of small chordal graphs") {
  const auto p3 = PatternGraph::path(3);
  CHECK(maximal_cliques(p3, *is_chordal(p3).peo) == CliqueList{{0, 1}, {1, 2}});
  const auto b = PatternGraph::banded(4, 2);
  CHECK(maximal_cliques(b, *is_chordal(b).peo) == CliqueList{{0, 1, 2}, {1, 2, 3}});
  CHECK(maximal_cliques(b, *is_chordal(b).peo) == oracle::brute_maximal_cliques(b));
}

TEST_CASE("bandedness") {
  CHECK(is_banded(PatternGraph::path(6)));
  CHECK(is_banded(PatternGraph::complete(5)));
  CHECK(is_banded(PatternGraph::banded(7, 3)));
  CHECK_FALSE(is_banded(star4()));
  CHECK_FALSE(is_banded(PatternGraph::cycle(5)));
}

TEST_CASE("complement masks") {
  CHECK(complement(PatternGraph::complete(4)).empty());
  CHECK(complement(PatternGraph::path(3)).pairs() == std::vector<Edge>{{0, 2}});
  CHECK(complement(PatternGraph::cycle(4)).pairs() == std::vector<Edge>{{0, 2}, {1, 3}});
  CHECK_FALSE(complement(PatternGraph::path(3)).contains(1, 1));
}

TEST_CASE("reflexive part of a digraph") {
  SUBCASE("all loops, symmetric arcs") {
    DirectedPatternGraph d(3);
    for (int v = 0; v < 3; ++v) d.add_arc(v, v);
    d.add_arc(0, 1);
    d.add_arc(1, 0);
    const auto r = reflexive_part(d);
    CHECK(r.vertices == std::vector<int>{0, 1, 2});
    CHECK(r.subgraph == PatternGraph(3, std::vector<Edge>{{0, 1}}));
  }
  SUBCASE("loops on two vertices") {
    DirectedPatternGraph d(4);
    d.add_arc(1, 1);
    d.add_arc(2, 2);
    d.add_arc(1, 2);
    d.add_arc(2, 1);
    d.add_arc(0, 3);
    const auto r = reflexive_part(d);
    CHECK(r.vertices == std::vector<int>{1, 2});
    CHECK(r.subgraph == PatternGraph::complete(2));
  }
  SUBCASE("one-way arc between looped vertices") {
    DirectedPatternGraph d(4);
    d.add_arc(1, 1);
    d.add_arc(2, 2);
    d.add_arc(1, 2);
    CHECK_THROWS_AS(reflexive_part(d), InvalidArgument);
  }
}

TEST_CASE("chordality agrees with exhaustive search on random small graphs") {
  std::mt19937_64 rng(11);
  int chordal = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = oracle::uniform_int(rng, 1, 7);
    const auto g = oracle::random_graph(n, oracle::uniform(rng, 0.2, 0.8), rng);
    const auto r = is_chordal(g);
    const bool expected = some_ordering_is_peo(g);
    REQUIRE(r.chordal == expected);
    CHECK(r.chordal == oracle::brute_is_chordal(g));
    if (r.chordal) {
      ++chordal;
      CHECK(verify_peo(g, *r.peo));
      CHECK(maximal_cliques(g, *r.peo) == oracle::brute_maximal_cliques(g));
    }
    CHECK(enumerate_maximal_cliques(g) == oracle::brute_maximal_cliques(g));
  }
  CHECK(chordal > 10);
}

TEST_CASE("maximal cliques cover every edge and contain no non-edge") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::random_chordal(oracle::uniform_int(rng, 1, 14), rng);
    const auto r = is_chordal(g);
    REQUIRE(r.chordal);
    const auto cl = maximal_cliques(g, *r.peo);
    CHECK(static_cast<int>(cl.size()) <= g.size());
    for (const auto& k : cl) CHECK(is_clique(g, k));
    for (const auto& [u, v] : g.edges()) {
      CHECK(std::any_of(cl.begin(), cl.end(), [&](const Clique& k) {
        return std::binary_search(k.begin(), k.end(), u) &&
               std::binary_search(k.begin(), k.end(), v);
      }));
    }
  }
}

TEST_CASE("banded patterns are chordal") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = oracle::random_banded(oracle::uniform_int(rng, 1, 15), rng);
    CHECK(is_banded(g));
    CHECK(is_chordal(g).chordal);
  }
}

TEST_CASE("induced subgraph relabels vertices") {
  const auto g = PatternGraph::cycle(5);
  const std::vector<int> keep{0, 1, 4};
  const auto s = induced_subgraph(g, keep);
  CHECK(s.size() == 3);
  CHECK(s.has_edge(0, 1));
  CHECK(s.has_edge(0, 2));
  CHECK_FALSE(s.has_edge(1, 2));
}
