#ifndef FLOWPOLY_VERTEX_GEOMETRY_HPP
#define FLOWPOLY_VERTEX_GEOMETRY_HPP

// Cycle parity, the even-cycle vertex criterion, and vertex enumeration.
//
// Incidence signs: a negative edge (i,j,-) is positively incident to i and
// negatively incident to j; positive edges, loops and half loops are
// positively incident to both (all) endpoints. A junction of two consecutive
// cycle edges meeting with the same incidence sign is a "turn"; a cycle is
// even when its number of turns is even. A flow is a vertex of F_G(a) exactly
// when its support contains no even cycle, equivalently when the support's
// incidence columns are linearly independent.

#include "flowpoly/graph.hpp"
#include "flowpoly/linalg.hpp"
#include "flowpoly/numeric.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace flowpoly {

struct CycleStep {
  int edge{0};        // index into g.edges
  bool forward{true};  // traversed lo -> hi
};

using CyclePath = std::vector<CycleStep>;

struct CycleParity {
  long long turns{0};
  bool even{false};
};

namespace detail {

inline int incidence_sign(const SignedEdge& e, int v) {
  if (e.lo == e.hi) return +1;  // loops and half loops
  if (e.sign == EdgeSign::plus) return +1;
  return v == e.lo ? +1 : -1;
}

}  // namespace detail

inline CycleParity cycle_parity(const SignedGraph& g, const CyclePath& cycle) {
  g.validate();
  if (cycle.empty()) throw Error("invalid-cycle", "empty cycle");
  const std::size_t k = cycle.size();
  auto first = [&](const CycleStep& s) {
    const SignedEdge& e = g.edges.at(s.edge);
    return s.forward ? e.lo : e.hi;
  };
  auto second = [&](const CycleStep& s) {
    const SignedEdge& e = g.edges.at(s.edge);
    return s.forward ? e.hi : e.lo;
  };
  CycleParity r;
  for (std::size_t t = 0; t < k; ++t) {
    const CycleStep& cur = cycle[t];
    const CycleStep& nxt = cycle[(t + 1) % k];
    int v = second(cur);
    if (v != first(nxt))
      throw Error("invalid-cycle", "consecutive edges do not share a vertex");
    if (detail::incidence_sign(g.edges[cur.edge], v) ==
        detail::incidence_sign(g.edges[nxt.edge], v))
      ++r.turns;
  }
  r.even = r.turns % 2 == 0;
  return r;
}

// Kernel criterion: the subset's root-vector columns admit a nontrivial
// rational dependency iff the subset contains an even cycle.
inline bool has_even_cycle(const SignedGraph& g,
                           const std::vector<int>& edge_subset) {
  g.validate();
  if (edge_subset.empty()) return false;
  RatMatrix cols(g.nv, RatVector(edge_subset.size(), BigRat(0)));
  for (std::size_t c = 0; c < edge_subset.size(); ++c) {
    int k = edge_subset[c];
    if (k < 0 || k >= g.num_edges())
      throw Error("bad-edge", "edge index out of range");
    std::vector<long long> col = root_vector(g.edges[k], g.nv);
    for (int r = 0; r < g.nv; ++r) cols[r][c] = col[r];
  }
  return matrix_rank(cols) < static_cast<int>(edge_subset.size());
}

using RationalFlow = RatVector;  // per-edge nonnegative rationals

inline bool is_vertex(const SignedGraph& g, const Netflow& a,
                      const RationalFlow& flow) {
  g.validate();
  check_netflow_arity(g, a);
  if (static_cast<int>(flow.size()) != g.num_edges())
    throw Error("arity", "flow length does not match edge count");
  RatVector residual(a.begin(), a.end());
  std::vector<int> support;
  for (int k = 0; k < g.num_edges(); ++k) {
    if (flow[k] < 0) throw Error("invalid-flow", "negative flow entry");
    if (flow[k] == 0) continue;
    support.push_back(k);
    std::vector<long long> col = root_vector(g.edges[k], g.nv);
    for (int r = 0; r < g.nv; ++r) residual[r] -= flow[k] * col[r];
  }
  for (const BigRat& v : residual)
    if (v != 0) throw Error("invalid-flow", "flow does not meet the netflow");
  return !has_even_cycle(g, support);
}

// ---------------------------------------------------------------------------
// Simple cycles (each vertex of the cycle has degree exactly two in it) as
// closed traversals; used to cross-validate the turns count against the
// kernel criterion.
// ---------------------------------------------------------------------------

inline std::vector<CyclePath> enumerate_simple_cycles(const SignedGraph& g) {
  g.validate();
  const int ne = g.num_edges();
  if (ne > 20) throw Error("size", "too many edges for cycle enumeration");
  std::vector<CyclePath> out;
  for (unsigned mask = 1; mask < (1u << ne); ++mask) {
    std::vector<int> subset;
    std::vector<int> degree(g.nv + 1, 0);
    bool ok = true;
    for (int k = 0; k < ne && ok; ++k) {
      if (!(mask >> k & 1)) continue;
      const SignedEdge& e = g.edges[k];
      if (e.is_half()) ok = false;  // half edges close no cycle
      subset.push_back(k);
      degree[e.lo] += e.lo == e.hi ? 2 : 1;
      if (e.lo != e.hi) degree[e.hi] += 1;
    }
    if (!ok) continue;
    for (int v = 1; v <= g.nv; ++v)
      if (degree[v] != 0 && degree[v] != 2) ok = false;
    if (!ok) continue;
    // Walk the traversal; a leftover edge means a disconnected union.
    std::vector<bool> used(ne, false);
    CyclePath path;
    int start = g.edges[subset[0]].lo;
    int cur = start;
    for (std::size_t steps = 0; steps < subset.size(); ++steps) {
      int found = -1;
      bool fwd = true;
      for (int k : subset) {
        if (used[k]) continue;
        const SignedEdge& e = g.edges[k];
        if (e.lo == cur) {
          found = k;
          fwd = true;
          break;
        }
        if (e.hi == cur) {
          found = k;
          fwd = false;
          break;
        }
      }
      if (found < 0) {
        ok = false;
        break;
      }
      used[found] = true;
      path.push_back({found, fwd});
      const SignedEdge& e = g.edges[found];
      cur = fwd ? e.hi : e.lo;
    }
    if (!ok || cur != start) continue;
    bool all_used = true;
    for (int k : subset) all_used = all_used && used[k];
    if (all_used) out.push_back(std::move(path));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vertex enumeration.
// ---------------------------------------------------------------------------

// Exhaustive support search: every vertex of F_G(a) is the unique flow on an
// independent column subset.
inline std::vector<RationalFlow> enumerate_vertices_general(
    const SignedGraph& g, const Netflow& a, int max_edges = 20) {
  g.validate();
  check_netflow_arity(g, a);
  const int ne = g.num_edges();
  if (ne > max_edges)
    throw Error("size", "graph exceeds the support-search edge bound");
  RatVector rhs(a.begin(), a.end());
  std::set<RationalFlow> found;
  std::vector<std::vector<long long>> cols(ne);
  for (int k = 0; k < ne; ++k) cols[k] = root_vector(g.edges[k], g.nv);

  for (unsigned long long mask = 0; mask < (1ull << ne); ++mask) {
    std::vector<int> subset;
    for (int k = 0; k < ne; ++k)
      if (mask >> k & 1) subset.push_back(k);
    if (static_cast<int>(subset.size()) > g.nv) continue;
    if (subset.empty()) {
      bool zero = true;
      for (long long v : a) zero = zero && v == 0;
      if (zero) found.insert(RationalFlow(ne, BigRat(0)));
      continue;
    }
    RatMatrix m(g.nv, RatVector(subset.size(), BigRat(0)));
    for (std::size_t c = 0; c < subset.size(); ++c)
      for (int r = 0; r < g.nv; ++r) m[r][c] = cols[subset[c]][r];
    auto sol = solve_linear(m, rhs);
    if (!sol || !sol->unique) continue;
    bool positive = true;
    for (const BigRat& v : sol->x) positive = positive && v > 0;
    if (!positive) continue;
    RationalFlow flow(ne, BigRat(0));
    for (std::size_t c = 0; c < subset.size(); ++c)
      flow[subset[c]] = sol->x[c];
    found.insert(std::move(flow));
  }
  return {found.begin(), found.end()};
}

// Structural enumeration for netflow (2, 0, ..., 0). Supports are generated
// from the classified shapes: an ascending negative "stem" path from vertex 1
// to a pivot v1, continued by one of
//   * two disjoint ascending branch paths joined by a positive edge between
//     their endpoints (flow 1 on the cycle, 2 on the stem),
//   * a single ascending path whose endpoint is joined back to v1 by a
//     positive edge (flow 1 on the cycle, 2 on the stem),
//   * a loop at v1 (flow 1), or a half-weight loop at v1 (flow 2).
// Parallel copies of a required edge each give their own support instance.
inline std::vector<RationalFlow> enumerate_vertices_2e1(const SignedGraph& g) {
  g.validate();
  const int ne = g.num_edges();
  std::set<RationalFlow> found;

  struct Requirement {
    int lo, hi;
    enum Kind { neg, pos, loop, half } kind;
    long long flow;
  };
  auto instances = [&](const Requirement& q) {
    std::vector<int> r;
    for (int k = 0; k < ne; ++k) {
      const SignedEdge& e = g.edges[k];
      bool match = false;
      switch (q.kind) {
        case Requirement::neg:
          match = e.is_negative() && e.lo == q.lo && e.hi == q.hi;
          break;
        case Requirement::pos:
          match = e.is_positive() && !e.is_half() && e.lo != e.hi &&
                  e.lo == q.lo && e.hi == q.hi;
          break;
        case Requirement::loop:
          match = e.is_loop() && e.lo == q.lo;
          break;
        case Requirement::half:
          match = e.is_half() && e.lo == q.lo;
          break;
      }
      if (match) r.push_back(k);
    }
    return r;
  };
  auto emit = [&](const std::vector<Requirement>& reqs) {
    std::vector<std::vector<int>> choice;
    for (const Requirement& q : reqs) {
      auto inst = instances(q);
      if (inst.empty()) return;
      choice.push_back(std::move(inst));
    }
    std::vector<std::size_t> pick(reqs.size(), 0);
    for (;;) {
      RationalFlow flow(ne, BigRat(0));
      bool clash = false;
      for (std::size_t t = 0; t < reqs.size(); ++t) {
        int k = choice[t][pick[t]];
        if (flow[k] != 0) clash = true;  // two slots chose the same edge
        flow[k] = reqs[t].flow;
      }
      if (!clash) found.insert(std::move(flow));
      std::size_t p = 0;
      while (p < reqs.size() && ++pick[p] == choice[p].size()) pick[p++] = 0;
      if (p == reqs.size()) break;
    }
  };
  auto path_reqs = [&](int from, const std::vector<int>& stations,
                       long long flow, std::vector<Requirement>& reqs) {
    int prev = from;
    for (int v : stations) {
      reqs.push_back({prev, v, Requirement::neg, flow});
      prev = v;
    }
  };

  for (int v1 = 1; v1 <= g.nv; ++v1) {
    // Stems: ascending subsets of {2..v1-1} between vertex 1 and v1.
    std::vector<std::vector<int>> stems;
    int mid = std::max(0, v1 - 2);  // candidates 2..v1-1
    for (unsigned m = 0; m < (1u << mid); ++m) {
      std::vector<int> stem;
      for (int t = 0; t < mid; ++t)
        if (m >> t & 1) stem.push_back(2 + t);
      if (v1 > 1) stem.push_back(v1);
      stems.push_back(std::move(stem));
    }
    const int tail = g.nv - v1;  // candidates v1+1..nv
    for (const std::vector<int>& stem : stems) {
      std::vector<Requirement> base;
      path_reqs(1, stem, 2, base);

      // Two branches: ternary assignment, 0 = unused, 1 = first, 2 = second;
      // the smallest used vertex goes to the first branch.
      long long tern = 1;
      for (int t = 0; t < tail; ++t) tern *= 3;
      for (long long m = 0; m < tern; ++m) {
        std::vector<int> bra, brb;
        long long mm = m;
        for (int t = 0; t < tail; ++t) {
          int d = mm % 3;
          mm /= 3;
          if (d == 1) bra.push_back(v1 + 1 + t);
          if (d == 2) brb.push_back(v1 + 1 + t);
        }
        if (bra.empty() && brb.empty()) continue;
        if (!brb.empty() && (bra.empty() || brb.front() < bra.front()))
          continue;  // canonical: first branch holds the smallest vertex
        std::vector<Requirement> reqs = base;
        if (brb.empty()) {
          // Single path closed back to v1.
          path_reqs(v1, bra, 1, reqs);
          reqs.push_back({v1, bra.back(), Requirement::pos, 1});
        } else {
          path_reqs(v1, bra, 1, reqs);
          path_reqs(v1, brb, 1, reqs);
          int x = bra.back(), y = brb.back();
          reqs.push_back(
              {std::min(x, y), std::max(x, y), Requirement::pos, 1});
        }
        emit(reqs);
      }
      // Loop / half loop at v1.
      {
        std::vector<Requirement> reqs = base;
        reqs.push_back({v1, v1, Requirement::loop, 1});
        emit(reqs);
      }
      {
        std::vector<Requirement> reqs = base;
        reqs.push_back({v1, v1, Requirement::half, 2});
        emit(reqs);
      }
    }
  }
  // Sanity: every generated flow must pass the vertex criterion.
  Netflow a(g.nv, 0);
  a[0] = 2;
  std::vector<RationalFlow> out;
  for (const RationalFlow& f : found)
    if (is_vertex(g, a, f)) out.push_back(f);
  return out;
}

}  // namespace flowpoly

#endif  // FLOWPOLY_VERTEX_GEOMETRY_HPP
