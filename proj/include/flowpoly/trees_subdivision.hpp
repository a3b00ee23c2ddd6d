#ifndef FLOWPOLY_TREES_SUBDIVISION_HPP
#define FLOWPOLY_TREES_SUBDIVISION_HPP

// Reduction rules, noncrossing bipartite trees, vertex elimination, and the
// full subdivision recursion that triangulates flow polytopes.
//
// A noncrossing signed bipartite tree on left vertices 1..l and right
// vertices 1..r is encoded by a weak composition (b_1, ..., b_r) of l - 1:
// right vertex q is joined to the left vertices 1 + sum_{q'<q} b_{q'} through
// 1 + sum_{q'<=q} b_{q'}. Right vertices carry the signs of the out-edges
// they stand for.

#include "flowpoly/graph.hpp"
#include "flowpoly/numeric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace flowpoly {

struct NoncrossingTree {
  int left_count{0};
  int right_count{0};
  std::vector<long long> parts;      // size right_count, sums to left_count-1
  std::vector<bool> right_positive;  // size right_count

  // Edges (p, q): left p joined to right q.
  std::vector<std::pair<int, int>> tree_edges() const {
    std::vector<std::pair<int, int>> e;
    long long acc = 0;
    for (int q = 1; q <= right_count; ++q) {
      for (long long p = 1 + acc; p <= 1 + acc + parts[q - 1]; ++p)
        e.emplace_back(static_cast<int>(p), q);
      acc += parts[q - 1];
    }
    return e;
  }
};

// All noncrossing signed bipartite trees for l left and r right vertices, in
// lexicographic order of the encoding composition. The flags in right_plus
// mark which right vertices are positive. When either side is empty the
// single empty tree is returned.
inline std::vector<NoncrossingTree> enumerate_trees(
    int l, int r, const std::vector<bool>& right_plus) {
  if (r > 0 && static_cast<int>(right_plus.size()) != r)
    throw Error("arity", "right sign vector has wrong length");
  std::vector<NoncrossingTree> out;
  if (l <= 0 || r <= 0) {
    out.push_back(NoncrossingTree{l, r, {}, {}});
    return out;
  }
  NoncrossingTree t;
  t.left_count = l;
  t.right_count = r;
  t.parts.assign(r, 0);
  t.right_positive = right_plus;
  auto rec = [&](auto&& self, int q, long long remaining) -> void {
    if (q == r) {
      t.parts[q - 1] = remaining;
      out.push_back(t);
      return;
    }
    for (long long b = 0; b <= remaining; ++b) {
      t.parts[q - 1] = b;
      self(self, q + 1, remaining - b);
    }
  };
  rec(rec, 1, l - 1);
  return out;
}

// ---------------------------------------------------------------------------
// Reduction rules. Given a negative edge (a,i,-) meeting a second edge at i
// with the opposite incidence sign, the pair is replaced by a single combined
// edge; dropping the first, the second, or both original edges produces the
// graphs G1, G2, G3.
// ---------------------------------------------------------------------------

struct ReduceResult {
  SignedGraph g1, g2, g3;
  int rule{0};  // 1..6
  SignedEdge combined;
};

namespace detail {

// Combined edge of a negative in-edge (a,i,-) and a second edge emitting at
// i. The root vector of the result is the sum of the two input roots.
inline SignedEdge combine_edges(const SignedEdge& e1, const SignedEdge& e2,
                                int i, int* rule) {
  if (!(e1.is_negative() && e1.hi == i))
    throw Error("not-reducible", "first edge is not a negative in-edge");
  int a = e1.lo;
  if (e2.is_negative() && e2.lo == i) {  // (i, b, -)
    *rule = 1;
    return neg_edge(a, e2.hi);
  }
  if (e2.is_positive() && !e2.is_half() && e2.lo == i && e2.hi > i) {
    *rule = 2;  // (i, b, +)
    return pos_edge(a, e2.hi);
  }
  if (e2.is_positive() && !e2.is_half() && e2.hi == i && e2.lo < i) {
    int b = e2.lo;  // (b, i, +) or (a, i, +)
    if (b == a) {
      *rule = 5;
      return loop_edge(a);
    }
    *rule = a < b ? 3 : 4;
    return pos_edge(std::min(a, b), std::max(a, b));
  }
  if (e2.is_loop() && e2.lo == i) {  // (i, i, +)
    *rule = 6;
    return pos_edge(a, i);
  }
  throw Error("not-reducible", "edges do not match any reduction rule");
}

}  // namespace detail

// Applies the reduction rule determined by the edge pair (indices into
// g.edges, acceptable in either order). G1 drops the negative in-edge, G2 the
// other edge, G3 both; all three gain the combined edge (appended last).
inline ReduceResult reduce(const SignedGraph& g, int edge1, int edge2) {
  g.validate();
  const int ne = g.num_edges();
  if (edge1 < 0 || edge2 < 0 || edge1 >= ne || edge2 >= ne || edge1 == edge2)
    throw Error("bad-edge", "invalid edge indices for reduce");
  // Identify the negative in-edge of the pattern.
  for (int flip = 0; flip < 2; ++flip) {
    int ka = flip ? edge2 : edge1;
    int kb = flip ? edge1 : edge2;
    const SignedEdge& ea = g.edges[ka];
    const SignedEdge& eb = g.edges[kb];
    if (!(ea.is_negative())) continue;
    int i = ea.hi;
    try {
      ReduceResult r;
      r.combined = detail::combine_edges(ea, eb, i, &r.rule);
      auto build = [&](bool drop_a, bool drop_b) {
        SignedGraph out{g.nv, {}};
        for (int k = 0; k < ne; ++k) {
          if ((drop_a && k == ka) || (drop_b && k == kb)) continue;
          out.edges.push_back(g.edges[k]);
        }
        out.edges.push_back(r.combined);
        return out;
      };
      r.g1 = build(true, false);
      r.g2 = build(false, true);
      r.g3 = build(true, true);
      return r;
    } catch (const Error& e) {
      if (e.code() != "not-reducible") throw;
    }
  }
  throw Error("not-reducible",
              "the edge pair does not match any reduction rule");
}

// ---------------------------------------------------------------------------
// Vertex elimination: full subdivision at one vertex.
// ---------------------------------------------------------------------------

struct EliminationOutcome {
  NoncrossingTree tree;
  SignedGraph graph;
};

// Eliminates vertex i (requires no loops at i; the caller guarantees netflow
// a_i = 0). theta_in and theta_out order the in-edges I_i and out-edges O_i;
// they are permutations of the index lists from in_out_edges. One outcome is
// produced per noncrossing tree: tree edge (p, q) combines the p-th in-edge
// with the q-th out-edge. When either side is empty the vertex and its edges
// are simply dropped (flow on them is forced to zero).
inline std::vector<EliminationOutcome> eliminate_vertex(
    const SignedGraph& g, int i, const std::vector<int>& theta_in,
    const std::vector<int>& theta_out) {
  g.validate();
  if (i < 1 || i > g.nv) throw Error("bad-vertex", "vertex out of range");
  InOutEdges io = in_out_edges(g, i);
  if (!io.loops.empty())
    throw Error("loop-at-vertex",
                "cannot eliminate a vertex carrying loops");
  auto is_perm = [](std::vector<int> v, std::vector<int> base) {
    std::sort(v.begin(), v.end());
    std::sort(base.begin(), base.end());
    return v == base;
  };
  if (!is_perm(theta_in, io.in_edges) || !is_perm(theta_out, io.out_edges))
    throw Error("bad-order",
                "edge orders must permute the vertex's in/out edge lists");
  const int l = static_cast<int>(theta_in.size());
  const int r = static_cast<int>(theta_out.size());
  std::vector<bool> right_plus(r, false);
  for (int q = 0; q < r; ++q)
    right_plus[q] = g.edges[theta_out[q]].is_positive();

  std::vector<bool> incident(g.num_edges(), false);
  for (int k : io.in_edges) incident[k] = true;
  for (int k : io.out_edges) incident[k] = true;

  std::vector<EliminationOutcome> out;
  for (const NoncrossingTree& t : enumerate_trees(l, r, right_plus)) {
    EliminationOutcome oc;
    oc.tree = t;
    oc.graph.nv = g.nv;
    for (int k = 0; k < g.num_edges(); ++k)
      if (!incident[k]) oc.graph.edges.push_back(g.edges[k]);
    if (l > 0 && r > 0) {
      for (const auto& [p, q] : t.tree_edges()) {
        int rule = 0;
        oc.graph.edges.push_back(detail::combine_edges(
            g.edges[theta_in[p - 1]], g.edges[theta_out[q - 1]], i, &rule));
      }
    }
    out.push_back(std::move(oc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Full subdivision.
// ---------------------------------------------------------------------------

struct SubdivideOptions {
  bool randomize_orders{false};
  unsigned seed{0};
  std::size_t trail_limit{0};  // 0 = count only (memoized)
};

struct SubdivideTrailStep {
  int vertex{0};
  NoncrossingTree tree;
};

struct SubdivideResult {
  BigInt leaves{0};
  std::vector<std::vector<SubdivideTrailStep>> trails;
};

namespace detail {

inline std::string graph_key(const SignedGraph& g) {
  std::vector<SignedEdge> edges = g.edges;
  std::sort(edges.begin(), edges.end());
  std::string key;
  for (const SignedEdge& e : edges) {
    key += std::to_string(e.lo);
    key += e.half ? 'b' : (e.sign == EdgeSign::minus ? '-' : '+');
    key += std::to_string(e.hi);
    key += ';';
  }
  return key;
}

}  // namespace detail

// Repeatedly applies vertex elimination along the ascending vertex order
// prescribed by the netflow shape:
//   * all-negative graph with a = e_1 - e_nv: eliminate 2 .. nv-1; leaves
//     consist of parallel (1, nv, -) edges;
//   * loopless signed graph with positive part and a = 2 e_1: eliminate
//     2 .. nv; leaves consist of loops at vertex 1.
// The number of leaves is the normalized volume of the flow polytope.
inline SubdivideResult subdivide_full(const SignedGraph& g, const Netflow& a,
                                      const SubdivideOptions& opts = {}) {
  g.validate();
  check_netflow_arity(g, a);
  const bool signed_mode = g.has_positive_part();
  if (g.has_loops())
    throw Error("unsupported-loop", "subdivision input must be loopless");
  // Validate the netflow shape.
  auto expect = [&](int idx, long long v) { return a[idx] == v; };
  if (signed_mode) {
    if (!expect(0, 2))
      throw Error("wrong-netflow", "signed subdivision needs a = (2,0,...,0)");
    for (int v = 1; v < g.nv; ++v)
      if (!expect(v, 0))
        throw Error("wrong-netflow",
                    "signed subdivision needs a = (2,0,...,0)");
  } else {
    if (g.nv < 2 || !expect(0, 1) || !expect(g.nv - 1, -1))
      throw Error("wrong-netflow",
                  "negative-graph subdivision needs a = (1,0,...,0,-1)");
    for (int v = 1; v + 1 < g.nv; ++v)
      if (!expect(v, 0))
        throw Error("wrong-netflow",
                    "negative-graph subdivision needs a = (1,0,...,0,-1)");
  }
  const int last = signed_mode ? g.nv : g.nv - 1;

  SubdivideResult result;
  std::map<std::pair<std::string, int>, BigInt> memo;
  std::vector<SubdivideTrailStep> trail;

  auto orders = [&](const SignedGraph& h, int i)
      -> std::pair<std::vector<int>, std::vector<int>> {
    InOutEdges io = in_out_edges(h, i);
    if (opts.randomize_orders) {
      // Deterministic in (seed, vertex, graph): permutations depend only on
      // the subproblem, so memoization stays sound.
      std::seed_seq seq{opts.seed, static_cast<unsigned>(i),
                        static_cast<unsigned>(
                            std::hash<std::string>{}(detail::graph_key(h)))};
      std::mt19937 rng(seq);
      std::shuffle(io.in_edges.begin(), io.in_edges.end(), rng);
      std::shuffle(io.out_edges.begin(), io.out_edges.end(), rng);
    }
    return {io.in_edges, io.out_edges};
  };

  auto leaf_check = [&](const SignedGraph& h) {
    for (const SignedEdge& e : h.edges) {
      bool ok = signed_mode ? (e.is_loop() && e.lo == 1)
                            : (e.is_negative() && e.lo == 1 && e.hi == g.nv);
      if (!ok)
        throw Error("internal",
                    "subdivision leaf has an unexpected edge shape");
    }
  };

  const bool want_trails = opts.trail_limit > 0;
  auto rec = [&](auto&& self, const SignedGraph& h, int i) -> BigInt {
    if (i > last) {
      leaf_check(h);
      if (want_trails && result.trails.size() < opts.trail_limit)
        result.trails.push_back(trail);
      return 1;
    }
    std::pair<std::string, int> key{detail::graph_key(h), i};
    if (!want_trails) {
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
    }
    auto [ti, to] = orders(h, i);
    BigInt total = 0;
    for (EliminationOutcome& oc : eliminate_vertex(h, i, ti, to)) {
      if (want_trails) trail.push_back({i, oc.tree});
      total += self(self, oc.graph, i + 1);
      if (want_trails) trail.pop_back();
    }
    if (!want_trails) memo.emplace(std::move(key), total);
    return total;
  };
  result.leaves = rec(rec, g, 2);
  return result;
}

}  // namespace flowpoly

#endif  // FLOWPOLY_TREES_SUBDIVISION_HPP
