#ifndef FLOWPOLY_GRAPH_HPP
#define FLOWPOLY_GRAPH_HPP

// Signed multigraphs on vertex set {1, ..., nv}, their edge root vectors,
// incidence matrices, netflow bookkeeping, and the text serialization used by
// the command-line tool.
//
// Edge kinds and root vectors (n = nv - 1, vectors live in Z^{nv}):
//   (i, j, -), i < j   ->  e_i - e_j
//   (i, j, +), i < j   ->  e_i + e_j
//   (i, i, +) loop     ->  2 e_i
//   (i, i, b) half     ->  e_i        (distinguished half-weight loop kind)

#include "flowpoly/linalg.hpp"
#include "flowpoly/numeric.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace flowpoly {

enum class EdgeSign { minus, plus };

struct SignedEdge {
  int lo{1};
  int hi{1};
  EdgeSign sign{EdgeSign::minus};
  bool half{false};  // half-weight loop, root e_lo; requires lo == hi

  bool is_loop() const { return lo == hi && !half; }
  bool is_half() const { return half; }
  bool is_positive() const { return sign == EdgeSign::plus; }
  bool is_negative() const { return sign == EdgeSign::minus && lo != hi; }

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
  friend auto operator<=>(const SignedEdge& a, const SignedEdge& b) {
    return std::tie(a.lo, a.hi, a.sign, a.half) <=>
           std::tie(b.lo, b.hi, b.sign, b.half);
  }
};

inline SignedEdge neg_edge(int i, int j) {
  return SignedEdge{std::min(i, j), std::max(i, j), EdgeSign::minus, false};
}
inline SignedEdge pos_edge(int i, int j) {
  return SignedEdge{std::min(i, j), std::max(i, j), EdgeSign::plus, false};
}
inline SignedEdge loop_edge(int i) {
  return SignedEdge{i, i, EdgeSign::plus, false};
}
inline SignedEdge half_loop_edge(int i) {
  return SignedEdge{i, i, EdgeSign::plus, true};
}

using Netflow = std::vector<long long>;

struct SignedGraph {
  int nv{0};                      // number of vertices, labeled 1..nv
  std::vector<SignedEdge> edges;  // insertion order defines column order

  int num_edges() const { return static_cast<int>(edges.size()); }

  void validate() const {
    if (nv < 1) throw Error("bad-graph", "graph needs at least one vertex");
    for (const SignedEdge& e : edges) {
      if (e.lo < 1 || e.hi > nv || e.lo > e.hi)
        throw Error("bad-edge", "edge endpoints out of range");
      if (e.lo == e.hi && e.sign != EdgeSign::plus)
        throw Error("bad-edge", "loops must be positive");
      if (e.half && e.lo != e.hi)
        throw Error("bad-edge", "half-weight edges must be loops");
    }
  }

  bool has_positive_part() const {
    for (const SignedEdge& e : edges)
      if (e.is_positive()) return true;
    return false;
  }
  bool has_loops() const {
    for (const SignedEdge& e : edges)
      if (e.lo == e.hi) return true;
    return false;
  }

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;
};

// Root vector of an edge in Z^{nv}.
inline std::vector<long long> root_vector(const SignedEdge& e, int nv) {
  std::vector<long long> v(nv, 0);
  if (e.is_half()) {
    v[e.lo - 1] = 1;
  } else if (e.lo == e.hi) {
    v[e.lo - 1] = 2;
  } else if (e.sign == EdgeSign::minus) {
    v[e.lo - 1] = 1;
    v[e.hi - 1] = -1;
  } else {
    v[e.lo - 1] = 1;
    v[e.hi - 1] = 1;
  }
  return v;
}

// Incidence matrix, nv rows by num_edges columns; column k is the root vector
// of edge k in insertion order.
inline std::vector<std::vector<long long>> incidence_matrix(
    const SignedGraph& g) {
  std::vector<std::vector<long long>> m(
      g.nv, std::vector<long long>(g.edges.size(), 0));
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    std::vector<long long> col = root_vector(g.edges[k], g.nv);
    for (int r = 0; r < g.nv; ++r) m[r][k] = col[r];
  }
  return m;
}

// Edge classification around a vertex i:
//   in_edges  (I_i):  negative edges (a, i, -) with a < i
//   out_edges (O_i):  negative (i, b, -), positive (i, b, +) with b > i, and
//                     positive (a, i, +) with a < i -- all edges on which
//                     vertex i "emits" flow in the signed sense
//   out_positive:     flags marking which out_edges are positive
// Loops and half loops at i are reported separately.
struct InOutEdges {
  std::vector<int> in_edges;       // indices into g.edges
  std::vector<int> out_edges;      // indices into g.edges
  std::vector<bool> out_positive;  // parallel to out_edges
  std::vector<int> loops;          // loops and half loops at i
};

inline InOutEdges in_out_edges(const SignedGraph& g, int i) {
  InOutEdges r;
  for (int k = 0; k < g.num_edges(); ++k) {
    const SignedEdge& e = g.edges[k];
    if (e.lo == e.hi) {
      if (e.lo == i) r.loops.push_back(k);
      continue;
    }
    if (e.sign == EdgeSign::minus) {
      if (e.hi == i) r.in_edges.push_back(k);
      if (e.lo == i) {
        r.out_edges.push_back(k);
        r.out_positive.push_back(false);
      }
    } else {
      if (e.lo == i || e.hi == i) {
        r.out_edges.push_back(k);
        r.out_positive.push_back(true);
      }
    }
  }
  return r;
}

inline long long indegree(const SignedGraph& g, int i) {
  long long d = 0;
  for (const SignedEdge& e : g.edges)
    if (e.lo != e.hi && e.sign == EdgeSign::minus && e.hi == i) ++d;
  return d;
}

// ---------------------------------------------------------------------------
/// Text format:
//   vertices <nv>
//   edge <i> <j> +|-|b        (b marks a half-weight loop, i == j)
//   # comment lines and blank lines are ignored
// ---------------------------------------------------------------------------

inline SignedGraph parse_graph(std::istream& in) {
  SignedGraph g;
  bool have_vertices = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (word == "vertices") {
      if (have_vertices)
        throw Error("parse", "duplicate vertices line" + where);
      if (!(ls >> g.nv) || g.nv < 1)
        throw Error("parse", "invalid vertex count" + where);
      have_vertices = true;
    } else if (word == "edge") {
      if (!have_vertices)
        throw Error("parse", "edge before vertices line" + where);
      int i = 0, j = 0;
      std::string s;
      if (!(ls >> i >> j >> s))
        throw Error("parse", "malformed edge line" + where);
      if (i < 1 || j < 1 || i > g.nv || j > g.nv)
        throw Error("parse", "edge endpoint out of range" + where);
      if (i > j)
        throw Error("parse", "edge endpoints must satisfy i <= j" + where);
      SignedEdge e;
      e.lo = i;
      e.hi = j;
      if (s == "-") {
        if (i == j) throw Error("parse", "loops must be positive" + where);
        e.sign = EdgeSign::minus;
      } else if (s == "+") {
        e.sign = EdgeSign::plus;
      } else if (s == "b") {
        if (i != j)
          throw Error("parse", "half-weight edges must be loops" + where);
        e.sign = EdgeSign::plus;
        e.half = true;
      } else {
        throw Error("parse", "unknown edge sign '" + s + "'" + where);
      }
      g.edges.push_back(e);
    } else {
      throw Error("parse", "unknown directive '" + word + "'" + where);
    }
    std::string extra;
    if (ls >> extra) throw Error("parse", "trailing tokens" + where);
  }
  if (!have_vertices) throw Error("parse", "missing vertices line");
  g.validate();
  return g;
}

inline SignedGraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline void serialize_graph(const SignedGraph& g, std::ostream& out) {
  out << "vertices " << g.nv << "\n";
  for (const SignedEdge& e : g.edges) {
    out << "edge " << e.lo << " " << e.hi << " "
        << (e.half ? "b" : (e.sign == EdgeSign::minus ? "-" : "+")) << "\n";
  }
}

inline std::string serialize_graph_string(const SignedGraph& g) {
  std::ostringstream out;
  serialize_graph(g, out);
  return out.str();
}

// Comma-separated netflow vector, e.g. "1,0,0,-1".
inline Netflow parse_netflow(const std::string& text, int nv) {
  Netflow a;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw Error("parse", "invalid netflow entry '" + tok + "'");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos])))
      ++pos;
    if (pos != tok.size())
      throw Error("parse", "invalid netflow entry '" + tok + "'");
    a.push_back(v);
  }
  if (static_cast<int>(a.size()) != nv)
    throw Error("parse", "netflow has " + std::to_string(a.size()) +
                             " entries but the graph has " +
                             std::to_string(nv) + " vertices");
  return a;
}

// ---------------------------------------------------------------------------
// Dimension of the flow polytope F_G(a) = { b >= 0 : M_G b = a }.
//
// The polytope is full-dimensional inside the affine space {M_G b = a}
// exactly when it has a flow with every coordinate strictly positive; its
// dimension is then (#edges - rank M_G). We certify strict positivity with an
// exact LP: maximize eps subject to M_G (c + eps*1) = a, c >= 0, 0 <= eps <= 1.
// ---------------------------------------------------------------------------

struct DimensionResult {
  bool is_empty{false};
  int dim{0};  // meaningful only when !is_empty
};

inline DimensionResult dimension(const SignedGraph& g, const Netflow& a) {
  g.validate();
  if (static_cast<int>(a.size()) != g.nv)
    throw Error("arity", "netflow length does not match vertex count");
  const int ne = g.num_edges();
  RatMatrix m = to_rational(incidence_matrix(g));
  RatVector rhs(a.begin(), a.end());

  if (ne == 0) {
    for (long long v : a)
      if (v != 0) return DimensionResult{true, 0};
    return DimensionResult{false, 0};
  }

  // Variables: c_1..c_ne, eps, slack for eps <= 1.
  RatMatrix lp(g.nv + 1, RatVector(ne + 2, BigRat(0)));
  RatVector lp_rhs(g.nv + 1, BigRat(0));
  for (int r = 0; r < g.nv; ++r) {
    BigRat row_sum = 0;
    for (int k = 0; k < ne; ++k) {
      lp[r][k] = m[r][k];
      row_sum += m[r][k];
    }
    lp[r][ne] = row_sum;  // eps coefficient: M * 1
    lp_rhs[r] = rhs[r];
  }
  lp[g.nv][ne] = 1;      // eps
  lp[g.nv][ne + 1] = 1;  // slack
  lp_rhs[g.nv] = 1;
  RatVector objective(ne + 2, BigRat(0));
  objective[ne] = 1;

  std::optional<BigRat> best = lp_maximize(lp, lp_rhs, objective);
  if (!best) return DimensionResult{true, 0};
  if (*best == 0)
    throw Error("boundary-netflow",
                "the flow polytope is nonempty but has no strictly positive "
                "flow; its dimension is not determined by the incidence rank");
  return DimensionResult{false, ne - matrix_rank(m)};
}

inline void check_netflow_arity(const SignedGraph& g, const Netflow& a) {
  if (static_cast<int>(a.size()) != g.nv)
    throw Error("arity", "netflow length " + std::to_string(a.size()) +
                             " does not match vertex count " +
                             std::to_string(g.nv));
}

}  // namespace flowpoly

#endif  // FLOWPOLY_GRAPH_HPP
