#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

#include <algorithm>
#include <set>

using namespace flowpoly;

TEST_CASE("cycle parity by turns") {
  // A loop traversed alone: one turn (both incidences positive) -> odd.
  SignedGraph g;
  g.nv = 3;
  g.edges = {loop_edge(1)};
  auto p = cycle_parity(g, {{0, true}});
  CHECK(p.turns == 1);
  CHECK_FALSE(p.even);

  // Two parallel negative edges: both junctions are turns -> even.
  g.edges = {neg_edge(1, 2), neg_edge(1, 2)};
  p = cycle_parity(g, {{0, true}, {1, false}});
  CHECK(p.turns == 2);
  CHECK(p.even);

  // A negative and a positive parallel edge: one turn -> odd.
  g.edges = {neg_edge(1, 2), pos_edge(1, 2)};
  p = cycle_parity(g, {{0, true}, {1, false}});
  CHECK(p.turns == 1);
  CHECK_FALSE(p.even);

  // All-negative triangle: the two path-reversals are turns -> even.
  g.edges = {neg_edge(1, 2), neg_edge(2, 3), neg_edge(1, 3)};
  p = cycle_parity(g, {{0, true}, {1, true}, {2, false}});
  CHECK(p.turns == 2);
  CHECK(p.even);

  // Non-closed step sequences are rejected.
  g.edges = {neg_edge(1, 2), neg_edge(2, 3), neg_edge(1, 3)};
  CHECK_THROWS_AS(cycle_parity(g, {{0, true}, {2, true}}), Error);
  CHECK_THROWS_AS(cycle_parity(g, {}), Error);
}

TEST_CASE("kernel criterion for even cycles") {
  SignedGraph g;
  g.nv = 3;
  g.edges = {neg_edge(1, 2), neg_edge(2, 3), neg_edge(1, 3), pos_edge(1, 2),
             loop_edge(1)};
  CHECK(has_even_cycle(g, {0, 1, 2}));        // negative triangle
  CHECK_FALSE(has_even_cycle(g, {0, 3}));     // odd pair, independent roots
  CHECK_FALSE(has_even_cycle(g, {4}));        // loop alone
  CHECK_FALSE(has_even_cycle(g, {0, 1}));     // a path has no cycle
  CHECK_FALSE(has_even_cycle(g, {}));
  CHECK(has_even_cycle(g, {0, 1, 2, 3, 4}));  // contains the even triangle
}

TEST_CASE("parity and kernel agree on every simple cycle (sweep)") {
  // Exhaustive universe on 3 vertices: all subsets of the 9 cycle-capable
  // edge types, plus random multigraphs on up to 5 vertices and 8 edges.
  std::vector<SignedEdge> universe = {
      neg_edge(1, 2), neg_edge(1, 3), neg_edge(2, 3),
      pos_edge(1, 2), pos_edge(1, 3), pos_edge(2, 3),
      loop_edge(1),   loop_edge(2),   loop_edge(3)};
  long long cycles_checked = 0;
  for (unsigned mask = 0; mask < (1u << universe.size()); ++mask) {
    SignedGraph g;
    g.nv = 3;
    for (std::size_t k = 0; k < universe.size(); ++k)
      if (mask >> k & 1) g.edges.push_back(universe[k]);
    for (const auto& cyc : enumerate_simple_cycles(g)) {
      std::vector<int> subset;
      for (const auto& s : cyc) subset.push_back(s.edge);
      CHECK(cycle_parity(g, cyc).even == has_even_cycle(g, subset));
      ++cycles_checked;
    }
  }
  CHECK(cycles_checked > 1000);

  std::mt19937 rng(424242);
  for (int t = 0; t < 150; ++t) {
    int nv = std::uniform_int_distribution<int>(2, 5)(rng);
    SignedGraph g;
    g.nv = nv;
    int ne = std::uniform_int_distribution<int>(2, 8)(rng);
    for (int k = 0; k < ne; ++k) {
      int i = std::uniform_int_distribution<int>(1, nv)(rng);
      int j = std::uniform_int_distribution<int>(1, nv)(rng);
      int kind = std::uniform_int_distribution<int>(0, 2)(rng);
      if (i == j) {
        g.edges.push_back(loop_edge(i));
      } else {
        if (i > j) std::swap(i, j);
        g.edges.push_back(kind == 0 ? pos_edge(i, j) : neg_edge(i, j));
      }
    }
    for (const auto& cyc : enumerate_simple_cycles(g)) {
      std::vector<int> subset;
      for (const auto& s : cyc) subset.push_back(s.edge);
      CHECK(cycle_parity(g, cyc).even == has_even_cycle(g, subset));
    }
  }
}

TEST_CASE("vertex criterion on explicit flows") {
  SignedGraph g = fixtures::mixed3();
  Netflow a{1, 3, -2};
  // All three lattice points of this 2-dimensional polytope are vertices.
  for (const auto& f : enumerate_integer_flows(g, a).flows) {
    RationalFlow q(f.begin(), f.end());
    CHECK(is_vertex(g, a, q));
  }
  RationalFlow wrong(5, BigRat(0));
  CHECK_THROWS_AS(is_vertex(g, a, wrong), Error);  // misses the netflow
  RationalFlow negative{BigRat(-1), BigRat(0), BigRat(0), BigRat(0),
                        BigRat(0)};
  CHECK_THROWS_AS(is_vertex(g, a, negative), Error);
}

TEST_CASE("the rational vertex (1/2, 1/2)") {
  SignedGraph g = fixtures::two_edge();
  Netflow a{1, 0};
  RationalFlow half{BigRat(1, 2), BigRat(1, 2)};
  CHECK(is_vertex(g, a, half));
  auto verts = enumerate_vertices_general(g, a);
  REQUIRE(verts.size() == 1);
  CHECK(verts[0] == half);
}

TEST_CASE("support search on small fixtures") {
  // Triangle at e_1 - e_3: the direct edge and the two-step path.
  SignedGraph k3 = family_graph({Family::A, 3});
  auto v = enumerate_vertices_general(k3, fixtures::e1_minus_last(3));
  CHECK(v.size() == 2);
  // Size guard.
  SignedGraph big = family_graph({Family::C, 7});
  CHECK_THROWS_AS(
      enumerate_vertices_general(big, fixtures::two_e1(7)), Error);
}

TEST_CASE("structural enumeration at netflow (2,0,...,0)") {
  // Complete signed families: D on m vertices has 3^{m-1} - 2^{m-1}
  // vertices, C has 3^{m-1}.
  for (int m = 2; m <= 6; ++m) {
    auto dcount = enumerate_vertices_2e1(family_graph({Family::D, m})).size();
    auto ccount = enumerate_vertices_2e1(family_graph({Family::C, m})).size();
    long long p3 = 1, p2 = 1;
    for (int t = 0; t < m - 1; ++t) p3 *= 3, p2 *= 2;
    CHECK(dcount == static_cast<std::size_t>(p3 - p2));
    CHECK(ccount == static_cast<std::size_t>(p3));
  }
}

TEST_CASE("structural and support enumerations agree") {
  std::vector<SignedGraph> graphs = {
      family_graph({Family::D, 2}), family_graph({Family::D, 3}),
      family_graph({Family::C, 2}), family_graph({Family::C, 3}),
      family_graph({Family::B, 3}), fixtures::vol5_graph(),
      fixtures::triangle_plus()};
  for (const SignedGraph& g : graphs) {
    Netflow a = fixtures::two_e1(g.nv);
    auto structural = enumerate_vertices_2e1(g);
    auto general = enumerate_vertices_general(g, a);
    CHECK(structural == general);
  }
}

TEST_CASE("all structural vertices are integral for loop families") {
  for (const SignedGraph& g :
       {family_graph({Family::D, 5}), family_graph({Family::C, 5})}) {
    for (const auto& v : enumerate_vertices_2e1(g))
      for (const BigRat& x : v) CHECK(denominator(x) == 1);
  }
}

TEST_CASE("mixed netflow has rational vertices: the 17-vertex instance") {
  SignedGraph g = family_graph({Family::D, 4});
  Netflow a{1, 1, 0, 0};
  auto verts = enumerate_vertices_general(g, a);
  CHECK(verts.size() == 17);
  int rational = 0;
  for (const auto& v : verts) {
    bool integral = true;
    for (const BigRat& x : v) integral = integral && denominator(x) == 1;
    if (!integral) ++rational;
    CHECK(is_vertex(g, a, v));
  }
  CHECK(rational == 2);
}
