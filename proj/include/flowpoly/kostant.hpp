#ifndef FLOWPOLY_KOSTANT_HPP
#define FLOWPOLY_KOSTANT_HPP

// Kostant partition function for signed graphs: the number of nonnegative
// integer flows b with M_G b = a. Two independent exact engines are provided:
//   * a frontier dynamic program sweeping the vertices in ascending order, and
//   * coefficient extraction from the generating series
//       prod_{(i,j,-)} (1-x_i x_j^{-1})^{-1} prod_{(i,j,+)} (1-x_i x_j)^{-1}
//       prod_{loops (i,i)} (1-x_i^2)^{-1} prod_{half loops} (1-x_i)^{-1}.
// They must agree; `kpf` picks one heuristically unless forced.

#include "flowpoly/graph.hpp"
#include "flowpoly/numeric.hpp"
#include "flowpoly/series.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flowpoly {

enum class KpfEngine { automatic, dp, series };

// ---------------------------------------------------------------------------
// Per-edge flow upper bounds by cut/prefix propagation.
//
// For a cut after vertex c let prefix(c) = a_1 + ... + a_c. Every negative
// edge crossing the cut carries its flow across it, and flow consumed at or
// before the cut by positive ends is nonnegative, so:
//   negative (u,v):  b <= min_{u <= c < v} prefix(c)
//   positive (u,v):  b <= min( min_{u <= c < v} prefix(c),
//                              min_{c >= v} floor(prefix(c)/2) )
//   loop at v:       b <= min_{c >= v} floor(prefix(c)/2)
//   half loop at v:  b <= min_{c >= v} prefix(c)
// A negative prefix certifies that no flow exists at all.
// ---------------------------------------------------------------------------

struct FlowBounds {
  bool feasible{true};
  std::vector<long long> per_edge;  // valid only when feasible
};

inline FlowBounds flow_upper_bounds(const SignedGraph& g, const Netflow& a) {
  check_netflow_arity(g, a);
  FlowBounds r;
  std::vector<long long> prefix(g.nv + 1, 0);  // prefix[c], c = 1..nv
  for (int c = 1; c <= g.nv; ++c) prefix[c] = prefix[c - 1] + a[c - 1];
  for (int c = 1; c <= g.nv; ++c) {
    if (prefix[c] < 0) {
      r.feasible = false;
      return r;
    }
  }
  std::vector<long long> min_from(g.nv + 2);  // min_{c >= v} prefix(c)
  min_from[g.nv + 1] = std::numeric_limits<long long>::max();
  for (int c = g.nv; c >= 1; --c)
    min_from[c] = std::min(min_from[c + 1], prefix[c]);
  auto min_range = [&](int u, int v) {  // min over u <= c <= v
    long long m = std::numeric_limits<long long>::max();
    for (int c = u; c <= v; ++c) m = std::min(m, prefix[c]);
    return m;
  };
  r.per_edge.resize(g.edges.size());
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const SignedEdge& e = g.edges[k];
    long long b;
    if (e.is_half()) {
      b = min_from[e.lo];
    } else if (e.lo == e.hi) {
      b = min_from[e.lo] / 2;
    } else if (e.sign == EdgeSign::minus) {
      b = min_range(e.lo, e.hi - 1);
    } else {
      b = std::min(min_range(e.lo, e.hi - 1), min_from[e.hi] / 2);
    }
    r.per_edge[k] = b;
  }
  return r;
}

namespace detail {

// ------------------------------ DP engine ---------------------------------
//
// Vertices are processed in ascending order. The state tracks, for every
// vertex j not yet processed, the pair
//   n_j = flow arriving at j on already-assigned negative edges,
//   p_j = flow already committed to positive edges (u,j,+) with u < j,
// because at vertex j the conservation constraint reads
//   n_j + a_j - p_j = (outgoing negative) + (outgoing positive)
//                     + 2*(loops) + (half loops).

struct KpfGroups {
  // Outgoing edge groups of a vertex, keyed by (target, positive?) with their
  // parallel multiplicities. Parallel edges are interchangeable, so a group
  // receiving total t over mu edges counts C(t+mu-1, mu-1) flows.
  std::vector<int> target;
  std::vector<bool> positive;
  std::vector<long long> multiplicity;
  long long loops{0};
  long long halves{0};
};

inline KpfGroups kpf_groups(const SignedGraph& g, int i) {
  KpfGroups gr;
  std::map<std::pair<int, bool>, long long> acc;
  for (const SignedEdge& e : g.edges) {
    if (e.lo == e.hi) {
      if (e.lo == i) {
        if (e.is_half())
          ++gr.halves;
        else
          ++gr.loops;
      }
      continue;
    }
    if (e.sign == EdgeSign::minus) {
      if (e.lo == i) ++acc[{e.hi, false}];
    } else {
      if (e.lo == i) ++acc[{e.hi, true}];
    }
  }
  for (const auto& [key, mu] : acc) {
    gr.target.push_back(key.first);
    gr.positive.push_back(key.second);
    gr.multiplicity.push_back(mu);
  }
  return gr;
}

inline BigInt kpf_dp(const SignedGraph& g, const Netflow& a) {
  // State: (n_j, p_j) for j in {i+1..nv}, flattened as alternating pairs.
  using State = std::vector<long long>;
  std::map<State, BigInt> cur;
  cur[State(2 * static_cast<std::size_t>(g.nv), 0)] = 1;

  for (int i = 1; i <= g.nv; ++i) {
    KpfGroups gr = kpf_groups(g, i);
    std::map<State, BigInt> next;
    for (const auto& [state, ways] : cur) {
      long long n_i = state[2 * (i - 1)];
      long long p_i = state[2 * (i - 1) + 1];
      long long avail = n_i + a[i - 1] - p_i;
      if (avail < 0) continue;
      // Enumerate loop and half-loop totals, then distribute the remainder
      // over the outgoing groups.
      for (long long lp = 0; lp <= (gr.loops ? avail / 2 : 0); ++lp) {
        BigInt loop_ways = compositions_count(lp, gr.loops);
        if (loop_ways == 0) continue;
        long long after_loops = avail - 2 * lp;
        for (long long hf = 0; hf <= (gr.halves ? after_loops : 0); ++hf) {
          BigInt half_ways = compositions_count(hf, gr.halves);
          if (half_ways == 0) continue;
          long long rest = after_loops - hf;
          // Distribute `rest` over groups recursively.
          struct Rec {
            const KpfGroups& gr;
            std::map<State, BigInt>& next;
            const State& base;
            int i;
            void go(std::size_t gi, long long left, State& st,
                    const BigInt& w) {
              if (gi == gr.target.size()) {
                if (left == 0) {
                  // The slots of the current vertex are never read again;
                  // clear them so equivalent futures merge.
                  State merged = st;
                  merged[2 * (i - 1)] = 0;
                  merged[2 * (i - 1) + 1] = 0;
                  next[merged] += w;
                }
                return;
              }
              for (long long t = 0; t <= left; ++t) {
                BigInt ways = compositions_count(t, gr.multiplicity[gi]);
                if (ways == 0) continue;
                std::size_t slot = 2 * (gr.target[gi] - 1) +
                                   (gr.positive[gi] ? 1 : 0);
                st[slot] += t;
                go(gi + 1, left - t, st, w * ways);
                st[slot] -= t;
              }
            }
          };
          State st = state;
          Rec rec{gr, next, state, i};
          rec.go(0, rest, st, ways * loop_ways * half_ways);
        }
      }
    }
    cur = std::move(next);
    if (cur.empty()) return 0;
  }
  BigInt total = 0;
  for (const auto& [state, ways] : cur) total += ways;
  return total;
}

// ---------------------------- Series engine --------------------------------

inline std::vector<GeomFactor> kpf_series_factors(const SignedGraph& g,
                                                  const FlowBounds& fb) {
  std::vector<GeomFactor> factors;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const SignedEdge& e = g.edges[k];
    GeomFactor f;
    f.bound = fb.per_edge[k];
    if (e.is_half()) {
      f.terms = {{{e.lo, 1}}};
    } else if (e.lo == e.hi) {
      f.terms = {{{e.lo, 2}}};
    } else if (e.sign == EdgeSign::minus) {
      f.terms = {{{e.lo, 1}, {e.hi, -1}}};
    } else {
      f.terms = {{{e.lo, 1}, {e.hi, 1}}};
    }
    factors.push_back(std::move(f));
  }
  return factors;
}

inline BigInt kpf_series(const SignedGraph& g, const Netflow& a,
                         const FlowBounds& fb) {
  std::vector<long long> target(g.nv + 1, 0);
  for (int v = 1; v <= g.nv; ++v) target[v] = a[v - 1];
  return extract_coefficient(g.nv, kpf_series_factors(g, fb), target);
}

inline bool prefer_series(const FlowBounds& fb) {
  // The DP state space grows with the magnitude of the flow bounds; the dense
  // box grows with their product but eliminates one variable per stage. Large
  // dilates (Ehrhart sampling) favor the series engine.
  long long mx = 0;
  for (long long b : fb.per_edge) mx = std::max(mx, b);
  return mx > 12;
}

}  // namespace detail

inline BigInt kpf(const SignedGraph& g, const Netflow& a,
                  KpfEngine engine = KpfEngine::automatic) {
  g.validate();
  check_netflow_arity(g, a);
  FlowBounds fb = flow_upper_bounds(g, a);
  if (!fb.feasible) return 0;
  switch (engine) {
    case KpfEngine::dp:
      return detail::kpf_dp(g, a);
    case KpfEngine::series:
      return detail::kpf_series(g, a, fb);
    case KpfEngine::automatic:
    default:
      return detail::prefer_series(fb) ? detail::kpf_series(g, a, fb)
                                       : detail::kpf_dp(g, a);
  }
}

// ---------------------------------------------------------------------------
// Explicit flow enumeration (lexicographic by flow vector).
// ---------------------------------------------------------------------------

struct FlowEnumeration {
  std::vector<std::vector<long long>> flows;
  bool truncated{false};
};

inline FlowEnumeration enumerate_integer_flows(
    const SignedGraph& g, const Netflow& a,
    std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  g.validate();
  check_netflow_arity(g, a);
  FlowEnumeration out;
  FlowBounds fb = flow_upper_bounds(g, a);
  if (!fb.feasible) return out;
  const int ne = g.num_edges();
  std::vector<long long> flow(ne, 0);
  Netflow residual = a;

  // Feasibility prune: the residual netflow must stay servable by the
  // still-unassigned suffix of the edge list.
  auto suffix_feasible = [&](int from) {
    SignedGraph rest{g.nv, {}};
    rest.edges.assign(g.edges.begin() + from, g.edges.end());
    return flow_upper_bounds(rest, residual).feasible;
  };

  struct Stop {};
  auto rec = [&](auto&& self, int k) -> void {
    if (k == ne) {
      for (long long v : residual)
        if (v != 0) return;
      if (out.flows.size() == limit) {
        out.truncated = true;
        throw Stop{};
      }
      out.flows.push_back(flow);
      return;
    }
    std::vector<long long> col = root_vector(g.edges[k], g.nv);
    for (long long b = 0;; ++b) {
      flow[k] = b;  // residual already reflects b units on this edge
      if (suffix_feasible(k + 1)) self(self, k + 1);
      if (b == fb.per_edge[k]) break;
      for (int v = 0; v < g.nv; ++v) residual[v] -= col[v];
    }
    for (int v = 0; v < g.nv; ++v)
      residual[v] += col[v] * fb.per_edge[k];
    flow[k] = 0;
  };
  try {
    rec(rec, 0);
  } catch (const Stop&) {
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ehrhart counting and exact polynomial interpolation.
// ---------------------------------------------------------------------------

inline BigInt ehrhart(const SignedGraph& g, const Netflow& a, long long t,
                      KpfEngine engine = KpfEngine::automatic) {
  if (t < 0) throw Error("bad-dilate", "dilation factor must be nonnegative");
  Netflow ta(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) ta[v] = a[v] * t;
  return kpf(g, ta, engine);
}

enum class EhrhartParity { all, even };

struct EhrhartPolynomial {
  std::vector<BigRat> coefficients;  // ascending degree; size = degree + 1
  bool quasi_warning{false};         // set when an extra sample disagrees
};

// Fits the degree-d polynomial through L(t) at d+1 sample points, where d is
// the polytope dimension; verifies one extra sample. With parity = even only
// even dilates are used (flow polytopes of signed graphs are guaranteed
// integral only at even dilates of (2,0,...,0)-type netflows).
inline EhrhartPolynomial ehrhart_polynomial_fit(
    const SignedGraph& g, const Netflow& a,
    EhrhartParity parity = EhrhartParity::all,
    KpfEngine engine = KpfEngine::automatic) {
  DimensionResult dr = dimension(g, a);
  if (dr.is_empty)
    throw Error("empty-polytope", "cannot fit the Ehrhart polynomial of an "
                                  "empty polytope");
  const int d = dr.dim;
  std::vector<long long> ts;
  for (int k = 1; k <= d + 2; ++k)
    ts.push_back(parity == EhrhartParity::even ? 2 * k : k);
  std::vector<BigRat> values;
  for (long long t : ts) values.emplace_back(ehrhart(g, a, t, engine));

  // Lagrange interpolation through the first d+1 samples.
  std::vector<BigRat> coeff(d + 1, BigRat(0));
  for (int s = 0; s <= d; ++s) {
    // Basis polynomial prod_{r != s} (t - t_r) / (t_s - t_r).
    std::vector<BigRat> basis{BigRat(1)};
    BigRat denom = 1;
    for (int r = 0; r <= d; ++r) {
      if (r == s) continue;
      basis.push_back(0);
      for (int q = static_cast<int>(basis.size()) - 1; q >= 1; --q)
        basis[q] = basis[q - 1] - BigRat(ts[r]) * basis[q];
      basis[0] = -BigRat(ts[r]) * basis[0];
      denom *= BigRat(ts[s]) - BigRat(ts[r]);
    }
    for (int q = 0; q <= d; ++q) coeff[q] += values[s] * basis[q] / denom;
  }
  // Verification sample.
  BigRat check = 0;
  BigRat tp = 1;
  for (int q = 0; q <= d; ++q) {
    check += coeff[q] * tp;
    tp *= BigRat(ts[d + 1]);
  }
  EhrhartPolynomial out;
  out.coefficients = std::move(coeff);
  if (check != values[d + 1]) {
    if (parity == EhrhartParity::all) {
      out.quasi_warning = true;  // genuine quasi-polynomial behavior
    } else {
      throw Error("quasi-polynomial",
                  "even-dilate samples do not lie on a single polynomial");
    }
  }
  // Degree check: the leading coefficient of a d-dimensional polytope is its
  // Euclidean volume and cannot vanish. Skipped when the samples already
  // exposed quasi-polynomial behavior (the fit is then only advisory).
  if (d > 0 && !out.quasi_warning && out.coefficients[d] == 0)
    throw Error("degree-mismatch",
                "fitted Ehrhart polynomial has degree below the dimension");
  return out;
}

}  // namespace flowpoly

#endif  // FLOWPOLY_KOSTANT_HPP
