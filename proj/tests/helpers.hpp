#ifndef FLOWPOLY_TESTS_HELPERS_HPP
#define FLOWPOLY_TESTS_HELPERS_HPP

// Shared fixtures and random-graph generators for the test suites.

#include "flowpoly/flowpoly.hpp"

#include <random>
#include <vector>

namespace fixtures {

using namespace flowpoly;

// Three-vertex signed graph with one positive edge, one loop and three
// negative edges; K(1,3,-2) = 3 with flows enumerated in the tests.
inline SignedGraph mixed3() {
  SignedGraph g;
  g.nv = 3;
  g.edges = {neg_edge(1, 2), neg_edge(1, 3), pos_edge(1, 2), loop_edge(2),
             neg_edge(2, 3)};
  return g;
}

// Triangle with a doubled (1,3) pair, one positive; K^dyn(2,1,1) = 17.
inline SignedGraph triangle_plus() {
  SignedGraph g;
  g.nv = 3;
  g.edges = {neg_edge(1, 2), neg_edge(2, 3), neg_edge(1, 3), pos_edge(1, 3)};
  return g;
}

// Seven-edge signed graph on four vertices whose polytope has volume 5.
inline SignedGraph vol5_graph() {
  SignedGraph g;
  g.nv = 4;
  g.edges = {neg_edge(1, 2), neg_edge(1, 2), neg_edge(2, 3), neg_edge(3, 4),
             pos_edge(1, 3), neg_edge(2, 4), pos_edge(2, 4)};
  return g;
}

// Negative multigraph on four vertices with volume 4 at e_1 - e_4.
inline SignedGraph vol4_negative() {
  SignedGraph g;
  g.nv = 4;
  g.edges = {neg_edge(1, 2), neg_edge(1, 2), neg_edge(1, 2), neg_edge(1, 2),
             neg_edge(1, 3), neg_edge(1, 3), neg_edge(2, 3), neg_edge(2, 4),
             neg_edge(3, 4)};
  return g;
}

// Two parallel edges of opposite sign; netflow (1,1) gives the rational
// vertex (1/2, 1/2) at netflow (1,0)... see tests.
inline SignedGraph two_edge() {
  SignedGraph g;
  g.nv = 2;
  g.edges = {neg_edge(1, 2), pos_edge(1, 2)};
  return g;
}

inline Netflow e1_minus_last(int nv) {
  Netflow a(nv, 0);
  a[0] = 1;
  a[nv - 1] = -1;
  return a;
}

inline Netflow two_e1(int nv) {
  Netflow a(nv, 0);
  a[0] = 2;
  return a;
}

// Connected all-negative multigraph: a spanning path plus random extras.
inline SignedGraph random_negative_graph(std::mt19937& rng, int nv,
                                         int extra_edges) {
  SignedGraph g;
  g.nv = nv;
  for (int i = 1; i < nv; ++i) g.edges.push_back(neg_edge(i, i + 1));
  std::uniform_int_distribution<int> pick(1, nv);
  for (int t = 0; t < extra_edges; ++t) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    g.edges.push_back(neg_edge(std::min(i, j), std::max(i, j)));
  }
  return g;
}

// Connected loopless signed graph: negative spanning path, at least one
// positive edge, plus random extras of both signs.
inline SignedGraph random_signed_graph(std::mt19937& rng, int nv,
                                       int extra_edges) {
  SignedGraph g;
  g.nv = nv;
  for (int i = 1; i < nv; ++i) g.edges.push_back(neg_edge(i, i + 1));
  std::uniform_int_distribution<int> pick(1, nv);
  std::uniform_int_distribution<int> sign(0, 1);
  {
    int i = std::uniform_int_distribution<int>(1, nv - 1)(rng);
    g.edges.push_back(pos_edge(i, nv));
  }
  for (int t = 0; t < extra_edges; ++t) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    auto e = sign(rng) ? pos_edge(std::min(i, j), std::max(i, j))
                       : neg_edge(std::min(i, j), std::max(i, j));
    g.edges.push_back(e);
  }
  return g;
}

// A random integer flow on g, returned with the netflow it produces. This
// guarantees the sampled netflow is feasible.
inline Netflow netflow_of_random_flow(std::mt19937& rng, const SignedGraph& g,
                                      int max_per_edge) {
  std::uniform_int_distribution<int> amt(0, max_per_edge);
  std::vector<long long> acc(g.nv, 0);
  for (const SignedEdge& e : g.edges) {
    long long b = amt(rng);
    std::vector<long long> col = root_vector(e, g.nv);
    for (int r = 0; r < g.nv; ++r) acc[r] += b * col[r];
  }
  return Netflow(acc.begin(), acc.end());
}

}  // namespace fixtures

#endif  // FLOWPOLY_TESTS_HELPERS_HPP
