#ifndef FLOWPOLY_DYNAMIC_KOSTANT_HPP
#define FLOWPOLY_DYNAMIC_KOSTANT_HPP

// Dynamic Kostant partition function for loopless signed graphs.
//
// In a dynamic flow, a positive edge (i,j,+) is split into a left half at i
// and a right half at j; when the left half carries flow k, the edge spawns k
// extra right halves at j (besides the original one), each carrying its own
// nonnegative flow. K^dyn_G(a) counts dynamic flows with netflow a; its
// generating series is
//   prod_{(i,j,-)} (1 - x_i x_j^{-1})^{-1} prod_{(i,j,+)} (1 - x_i - x_j)^{-1}.

#include "flowpoly/graph.hpp"
#include "flowpoly/kostant.hpp"
#include "flowpoly/numeric.hpp"
#include "flowpoly/series.hpp"

#include <map>
#include <vector>

namespace flowpoly {

inline void require_loopless(const SignedGraph& g) {
  if (g.has_loops())
    throw Error("unsupported-loop",
                "dynamic Kostant partition functions are defined for loopless "
                "signed graphs only");
}

namespace detail {

struct DynBounds {
  bool feasible{true};
  std::vector<long long> neg_bound;    // per edge; 0 for non-negative edges
  std::vector<long long> left_bound;   // per edge; left-half flow cap
  std::vector<long long> right_bound;  // per edge; total right-half flow cap
};

inline DynBounds dyn_bounds(const SignedGraph& g, const Netflow& a) {
  DynBounds r;
  std::vector<long long> prefix(g.nv + 1, 0);
  for (int c = 1; c <= g.nv; ++c) prefix[c] = prefix[c - 1] + a[c - 1];
  for (int c = 1; c <= g.nv; ++c)
    if (prefix[c] < 0) {
      r.feasible = false;
      return r;
    }
  std::vector<long long> min_from(g.nv + 2,
                                  std::numeric_limits<long long>::max());
  for (int c = g.nv; c >= 1; --c)
    min_from[c] = std::min(min_from[c + 1], prefix[c]);
  auto min_range = [&](int u, int v) {
    long long m = std::numeric_limits<long long>::max();
    for (int c = u; c <= v; ++c) m = std::min(m, prefix[c]);
    return m;
  };
  const int ne = g.num_edges();
  r.neg_bound.assign(ne, 0);
  r.left_bound.assign(ne, 0);
  r.right_bound.assign(ne, 0);
  for (int k = 0; k < ne; ++k) {
    const SignedEdge& e = g.edges[k];
    if (e.sign == EdgeSign::minus) {
      r.neg_bound[k] = min_range(e.lo, e.hi - 1);
    } else {
      // Left flow is consumed at e.lo, right flows at e.hi; consumption below
      // a cut never exceeds the cut's prefix sum.
      r.left_bound[k] = min_from[e.lo];
      r.right_bound[k] = min_from[e.hi];
    }
  }
  return r;
}

inline BigInt dyn_dp(const SignedGraph& g, const Netflow& a) {
  // State per future vertex j: (n_j, extra_j) where n_j is assigned negative
  // inflow and extra_j counts spawned extra right halves at j.
  using State = std::vector<long long>;
  std::map<State, BigInt> cur;
  cur[State(2 * static_cast<std::size_t>(g.nv), 0)] = 1;

  std::vector<long long> base_slots(g.nv + 1, 0);  // original right halves
  for (const SignedEdge& e : g.edges)
    if (e.is_positive()) ++base_slots[e.hi];

  for (int i = 1; i <= g.nv; ++i) {
    // Outgoing groups.
    std::map<int, long long> neg_mu, pos_mu;
    for (const SignedEdge& e : g.edges) {
      if (e.lo != i || e.lo == e.hi) continue;
      (e.sign == EdgeSign::minus ? neg_mu[e.hi] : pos_mu[e.hi])++;
    }
    std::vector<std::pair<int, long long>> groups;  // (slot delta index, mu)
    struct Group {
      int target;
      bool positive;
      long long mu;
    };
    std::vector<Group> gs;
    for (const auto& [j, mu] : neg_mu) gs.push_back({j, false, mu});
    for (const auto& [j, mu] : pos_mu) gs.push_back({j, true, mu});

    std::map<State, BigInt> next;
    for (const auto& [state, ways] : cur) {
      long long n_i = state[2 * (i - 1)];
      long long extra_i = state[2 * (i - 1) + 1];
      long long slots = base_slots[i] + extra_i;
      long long avail = n_i + a[i - 1];
      if (avail < 0) continue;
      for (long long right = 0; right <= (slots > 0 ? avail : 0); ++right) {
        BigInt right_ways = compositions_count(right, slots);
        if (right_ways == 0) continue;
        long long rest = avail - right;
        struct Rec {
          const std::vector<Group>& gs;
          std::map<State, BigInt>& next;
          int i;
          void go(std::size_t gi, long long left, State& st, const BigInt& w) {
            if (gi == gs.size()) {
              if (left == 0) {
                State merged = st;
                merged[2 * (i - 1)] = 0;
                merged[2 * (i - 1) + 1] = 0;
                next[merged] += w;
              }
              return;
            }
            for (long long t = 0; t <= left; ++t) {
              BigInt gw = compositions_count(t, gs[gi].mu);
              if (gw == 0) continue;
              std::size_t slot =
                  2 * (gs[gi].target - 1) + (gs[gi].positive ? 1 : 0);
              st[slot] += t;
              go(gi + 1, left - t, st, w * gw);
              st[slot] -= t;
            }
          }
        };
        State st = state;
        Rec rec{gs, next, i};
        rec.go(0, rest, st, ways * right_ways);
      }
    }
    cur = std::move(next);
    if (cur.empty()) return 0;
  }
  BigInt total = 0;
  for (const auto& [state, ways] : cur) total += ways;
  return total;
}

inline BigInt dyn_series(const SignedGraph& g, const Netflow& a,
                         const DynBounds& db) {
  std::vector<GeomFactor> factors;
  for (int k = 0; k < g.num_edges(); ++k) {
    const SignedEdge& e = g.edges[k];
    GeomFactor f;
    if (e.sign == EdgeSign::minus) {
      f.terms = {{{e.lo, 1}, {e.hi, -1}}};
      f.bound = db.neg_bound[k];
    } else {
      f.terms = {{{e.lo, 1}}, {{e.hi, 1}}};  // (1 - x_lo - x_hi)^{-1}
      long long b = db.left_bound[k];
      if (b > std::numeric_limits<long long>::max() - db.right_bound[k])
        b = std::numeric_limits<long long>::max();
      else
        b += db.right_bound[k];
      f.bound = b;
    }
    factors.push_back(std::move(f));
  }
  std::vector<long long> target(g.nv + 1, 0);
  for (int v = 1; v <= g.nv; ++v) target[v] = a[v - 1];
  return extract_coefficient(g.nv, factors, target);
}

}  // namespace detail

inline BigInt dyn_kpf(const SignedGraph& g, const Netflow& a,
                      KpfEngine engine = KpfEngine::automatic) {
  g.validate();
  check_netflow_arity(g, a);
  require_loopless(g);
  detail::DynBounds db = detail::dyn_bounds(g, a);
  if (!db.feasible) return 0;
  switch (engine) {
    case KpfEngine::dp:
      return detail::dyn_dp(g, a);
    case KpfEngine::series:
      return detail::dyn_series(g, a, db);
    case KpfEngine::automatic:
    default: {
      long long mx = 0;
      for (long long b : db.neg_bound) mx = std::max(mx, b);
      for (int k = 0; k < g.num_edges(); ++k)
        if (g.edges[k].is_positive())
          mx = std::max(mx, db.left_bound[k] + db.right_bound[k]);
      return mx > 12 ? detail::dyn_series(g, a, db) : detail::dyn_dp(g, a);
    }
  }
}

// ---------------------------------------------------------------------------
// Decomposition of K^dyn as a finite sum of ordinary Kostant values: fix the
// left-half flow k_e of every positive edge, materialize its k_e + 1 right
// halves as half-weight loops at the head, and correct the netflow at the
// tail by -k_e.
// ---------------------------------------------------------------------------

struct DynDecompositionPart {
  std::vector<long long> left_flows;  // per edge index; 0 on negative edges
  SignedGraph derived;
  Netflow netflow;
  BigInt count;
};

inline std::vector<DynDecompositionPart> dyn_decompose(const SignedGraph& g,
                                                       const Netflow& a) {
  g.validate();
  check_netflow_arity(g, a);
  require_loopless(g);
  std::vector<DynDecompositionPart> parts;
  detail::DynBounds db = detail::dyn_bounds(g, a);
  if (!db.feasible) return parts;

  std::vector<int> pos_edges;
  for (int k = 0; k < g.num_edges(); ++k)
    if (g.edges[k].is_positive()) pos_edges.push_back(k);

  std::vector<long long> left(g.num_edges(), 0);
  auto emit = [&]() {
    DynDecompositionPart part;
    part.left_flows = left;
    part.derived.nv = g.nv;
    part.netflow = a;
    for (int k = 0; k < g.num_edges(); ++k) {
      const SignedEdge& e = g.edges[k];
      if (e.sign == EdgeSign::minus) {
        part.derived.edges.push_back(e);
      } else {
        for (long long s = 0; s <= left[k]; ++s)
          part.derived.edges.push_back(half_loop_edge(e.hi));
        part.netflow[e.lo - 1] -= left[k];
      }
    }
    part.count = kpf(part.derived, part.netflow);
    parts.push_back(std::move(part));
  };
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == pos_edges.size()) {
      emit();
      return;
    }
    int k = pos_edges[idx];
    for (long long v = 0; v <= db.left_bound[k]; ++v) {
      left[k] = v;
      self(self, idx + 1);
    }
    left[k] = 0;
  };
  rec(rec, 0);
  return parts;
}

// ---------------------------------------------------------------------------
// Explicit dynamic-flow enumeration, lexicographic by the tuple
// (negative-edge flows, left-half flows, right-half flows in creation order).
// Right halves of a positive edge are created as: original half first, then
// the spawned extras in order.
// ---------------------------------------------------------------------------

struct DynamicFlow {
  // Per edge index: flow on a negative edge, or the left-half flow on a
  // positive edge.
  std::vector<long long> edge_flow;
  // Per edge index (positive edges only): flows on the right halves in
  // creation order; size = edge_flow[k] + 1.
  std::vector<std::vector<long long>> right_flows;
};

struct DynamicFlowEnumeration {
  std::vector<DynamicFlow> flows;
  bool truncated{false};
};

inline DynamicFlowEnumeration enumerate_dynamic_flows(
    const SignedGraph& g, const Netflow& a,
    std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  g.validate();
  check_netflow_arity(g, a);
  require_loopless(g);
  DynamicFlowEnumeration out;
  detail::DynBounds db = detail::dyn_bounds(g, a);
  if (!db.feasible) return out;

  const int ne = g.num_edges();
  std::vector<int> neg_edges, pos_edges;
  for (int k = 0; k < ne; ++k)
    (g.edges[k].sign == EdgeSign::minus ? neg_edges : pos_edges).push_back(k);

  DynamicFlow cur;
  cur.edge_flow.assign(ne, 0);
  cur.right_flows.assign(ne, {});
  struct Stop {};

  // Budget of right-half consumption per vertex once negative and left flows
  // are fixed: R_j = (negative inflow) + a_j - (negative outflow) - (left
  // outflow at j).
  auto budgets = [&]() -> std::optional<std::vector<long long>> {
    std::vector<long long> r(g.nv + 1, 0);
    for (int v = 1; v <= g.nv; ++v) r[v] = a[v - 1];
    for (int k : neg_edges) {
      r[g.edges[k].hi] += cur.edge_flow[k];
      r[g.edges[k].lo] -= cur.edge_flow[k];
    }
    for (int k : pos_edges) r[g.edges[k].lo] -= cur.edge_flow[k];
    for (int v = 1; v <= g.nv; ++v)
      if (r[v] < 0) return std::nullopt;
    return r;
  };

  auto emit = [&]() {
    if (out.flows.size() == limit) {
      out.truncated = true;
      throw Stop{};
    }
    out.flows.push_back(cur);
  };

  // Right halves in creation order: (positive edge index ascending, original
  // half, then extras).
  auto rec_right = [&](auto&& self, std::size_t pi, long long slot,
                       std::vector<long long>& budget) -> void {
    if (pi == pos_edges.size()) {
      for (int v = 1; v <= g.nv; ++v)
        if (budget[v] != 0) return;
      emit();
      return;
    }
    int k = pos_edges[pi];
    int head = g.edges[k].hi;
    long long nslots = cur.edge_flow[k] + 1;
    if (slot == nslots) {
      self(self, pi + 1, 0, budget);
      return;
    }
    for (long long f = 0; f <= budget[head]; ++f) {
      cur.right_flows[k][slot] = f;
      budget[head] -= f;
      self(self, pi, slot + 1, budget);
      budget[head] += f;
    }
    cur.right_flows[k][slot] = 0;
  };

  auto rec_left = [&](auto&& self, std::size_t pi) -> void {
    if (pi == pos_edges.size()) {
      auto b = budgets();
      if (!b) return;
      for (int k : pos_edges)
        cur.right_flows[k].assign(cur.edge_flow[k] + 1, 0);
      rec_right(rec_right, 0, 0, *b);
      return;
    }
    int k = pos_edges[pi];
    for (long long v = 0; v <= db.left_bound[k]; ++v) {
      cur.edge_flow[k] = v;
      self(self, pi + 1);
    }
    cur.edge_flow[k] = 0;
  };

  auto rec_neg = [&](auto&& self, std::size_t niidx) -> void {
    if (niidx == neg_edges.size()) {
      rec_left(rec_left, 0);
      return;
    }
    int k = neg_edges[niidx];
    for (long long v = 0; v <= db.neg_bound[k]; ++v) {
      cur.edge_flow[k] = v;
      self(self, niidx + 1);
    }
    cur.edge_flow[k] = 0;
  };

  try {
    rec_neg(rec_neg, 0);
  } catch (const Stop&) {
  }
  return out;
}

}  // namespace flowpoly

#endif  // FLOWPOLY_DYNAMIC_KOSTANT_HPP
