#ifndef FLOWPOLY_VOLUME_HPP
#define FLOWPOLY_VOLUME_HPP

// Normalized volumes of flow polytopes.
//
// Three routes are provided:
//   * volume_negative: for loopless graphs without positive edges, with
//     netflow (1, 0, ..., 0, -1), the normalized volume of F_H equals the
//     partition-function value K_H(0, d_2, ..., d_n, -sum d_i) where
//     d_i = indegree(i) - 1.
//   * volume_signed_2e1: for loopless signed graphs with at least one
//     positive edge, with netflow (2, 0, ..., 0), the normalized volume of
//     F_G equals K^dyn_G(0, d_2, ..., d_{n+1}) with the same shifts.
//   * volume_via_ehrhart: fit the Ehrhart polynomial on even dilations and
//     read off d! times the leading coefficient.
// volume_crosscheck runs the applicable closed form next to the Ehrhart
// route and fails hard when they disagree.

#include "flowpoly/dynamic_kostant.hpp"
#include "flowpoly/graph.hpp"
#include "flowpoly/kostant.hpp"
#include "flowpoly/numeric.hpp"

#include <string>
#include <vector>

namespace flowpoly {

struct VolumeReport {
  std::string method;
  BigInt volume{0};
  int dimension{-1};
  std::vector<std::string> diagnostics;
};

inline VolumeReport volume_negative(const SignedGraph& g) {
  g.validate();
  if (g.has_positive_part() || g.has_loops())
    throw Error("wrong-theorem",
                "the negative-graph volume formula needs a loopless graph "
                "with only negative edges");
  Netflow a(g.nv, 0);
  a[0] = 1;
  a[g.nv - 1] = -1;
  DimensionResult dr = dimension(g, a);
  if (dr.is_empty) throw Error("degenerate", "empty flow polytope");
  Netflow b(g.nv, 0);
  long long total = 0;
  for (int i = 2; i < g.nv; ++i) {
    b[i - 1] = indegree(g, i) - 1;
    total += b[i - 1];
  }
  b[g.nv - 1] = -total;
  VolumeReport r;
  r.method = "negative-kpf";
  r.dimension = dr.dim;
  r.volume = kpf(g, b);
  if (r.volume == 0)
    r.diagnostics.push_back("degenerate: polytope has lower-dimensional "
                            "volume zero under this formula");
  return r;
}

inline VolumeReport volume_signed_2e1(const SignedGraph& g,
                                      KpfEngine engine = KpfEngine::automatic) {
  g.validate();
  require_loopless(g);
  VolumeReport r;
  r.method = "dynamic-kpf";
  Netflow a(g.nv, 0);
  a[0] = 2;
  if (!g.has_positive_part()) {
    // Without positive edges nothing can absorb the two units at vertex 1.
    r.volume = 0;
    r.diagnostics.push_back(
        "warning: no positive part, the polytope at netflow (2,0,...,0) is "
        "empty and the formula degenerates to zero");
    return r;
  }
  DimensionResult dr = dimension(g, a);
  if (dr.is_empty) throw Error("degenerate", "empty flow polytope");
  r.dimension = dr.dim;
  Netflow b(g.nv, 0);
  for (int i = 2; i <= g.nv; ++i) b[i - 1] = indegree(g, i) - 1;
  r.volume = dyn_kpf(g, b, engine);
  return r;
}

inline VolumeReport volume_via_ehrhart(const SignedGraph& g, const Netflow& a) {
  EhrhartPolynomial p = ehrhart_polynomial_fit(g, a, EhrhartParity::even);
  int d = static_cast<int>(p.coefficients.size()) - 1;
  BigRat lead = p.coefficients.empty() ? BigRat(0) : p.coefficients[d];
  BigRat vol = lead * BigRat(factorial(d));
  if (denominator(vol) != 1)
    throw Error("internal", "normalized volume came out non-integral");
  VolumeReport r;
  r.method = "ehrhart";
  r.dimension = d;
  r.volume = numerator(vol);
  return r;
}

inline VolumeReport volume_crosscheck(const SignedGraph& g, const Netflow& a) {
  g.validate();
  check_netflow_arity(g, a);
  bool neg_case = !g.has_positive_part() && !g.has_loops() && g.nv >= 2 &&
                  a[0] == 1 && a[g.nv - 1] == -1;
  bool signed_case = g.has_positive_part() && !g.has_loops() && a[0] == 2;
  for (int i = 1; i < g.nv; ++i) {
    neg_case = neg_case && (i == g.nv - 1 || a[i] == 0);
    signed_case = signed_case && a[i] == 0;
  }
  if (!neg_case && !signed_case)
    throw Error("wrong-theorem",
                "no closed volume formula applies to this netflow");
  VolumeReport closed =
      neg_case ? volume_negative(g) : volume_signed_2e1(g);
  VolumeReport fitted = volume_via_ehrhart(g, a);
  if (closed.volume != fitted.volume)
    throw Error("volume-mismatch",
                "closed form gives " + closed.volume.str() +
                    " but the Ehrhart fit gives " + fitted.volume.str());
  VolumeReport r = closed;
  r.method = closed.method + "+ehrhart";
  r.diagnostics.push_back("ehrhart cross-check agreed");
  return r;
}

}  // namespace flowpoly

#endif  // FLOWPOLY_VOLUME_HPP
