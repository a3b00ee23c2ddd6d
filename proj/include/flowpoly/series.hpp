#ifndef FLOWPOLY_SERIES_HPP
#define FLOWPOLY_SERIES_HPP

// Exact multivariate series arithmetic.
//
// Two representations are provided:
//   * TruncatedPoly -- a sparse Laurent polynomial with per-variable upper
//     degree caps; convenient for small reference computations and algebraic
//     property tests.
//   * A dense staged coefficient-extraction engine (detail::extract_coefficient)
//     that multiplies a product of geometric factors (1 - m_1 - ... - m_k)^{-1}
//     and reads off one coefficient. Variables are eliminated from the highest
//     index down, so memory stays proportional to the box of the remaining
//     variables. This is the scalable path used for Kostant counting, dynamic
//     Kostant counting and Morris-type constant terms.

#include "flowpoly/numeric.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace flowpoly {

// ---------------------------------------------------------------------------
// Sparse truncated Laurent polynomials
// ---------------------------------------------------------------------------

struct TruncatedPoly {
  int nvars{0};
  // Per-variable inclusive upper cap on exponents; nullopt = uncapped.
  std::vector<std::optional<long long>> caps;
  // Exponent vector (entries may be negative) -> nonzero coefficient.
  std::map<std::vector<long long>, BigRat> coeff;

  explicit TruncatedPoly(int nv = 0) : nvars(nv), caps(nv) {}

  static TruncatedPoly constant(int nv, const BigRat& c) {
    TruncatedPoly p(nv);
    if (c != 0) p.coeff[std::vector<long long>(nv, 0)] = c;
    return p;
  }

  static TruncatedPoly monomial(int nv, const std::vector<long long>& exp,
                                const BigRat& c) {
    TruncatedPoly p(nv);
    if (c != 0) p.coeff[exp] = c;
    return p;
  }

  bool respects_caps(const std::vector<long long>& exp) const {
    for (int v = 0; v < nvars; ++v)
      if (caps[v] && exp[v] > *caps[v]) return false;
    return true;
  }

  void add_term(const std::vector<long long>& exp, const BigRat& c) {
    if (c == 0 || !respects_caps(exp)) return;
    auto it = coeff.find(exp);
    if (it == coeff.end()) {
      coeff.emplace(exp, c);
    } else {
      it->second += c;
      if (it->second == 0) coeff.erase(it);
    }
  }

  BigRat coefficient(const std::vector<long long>& exp) const {
    auto it = coeff.find(exp);
    return it == coeff.end() ? BigRat(0) : it->second;
  }

  bool is_zero() const { return coeff.empty(); }

  friend TruncatedPoly operator+(const TruncatedPoly& a,
                                 const TruncatedPoly& b) {
    if (a.nvars != b.nvars)
      throw Error("arity", "variable-count mismatch in polynomial sum");
    TruncatedPoly r = a;
    r.caps = merge_caps(a.caps, b.caps);
    for (const auto& [e, c] : b.coeff) r.add_term(e, c);
    return r;
  }

  static std::vector<std::optional<long long>> merge_caps(
      const std::vector<std::optional<long long>>& x,
      const std::vector<std::optional<long long>>& y) {
    std::vector<std::optional<long long>> r(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) {
      if (x[v] && y[v])
        r[v] = std::min(*x[v], *y[v]);
      else
        r[v] = x[v] ? x[v] : y[v];
    }
    return r;
  }
};

inline TruncatedPoly poly_mul_truncated(
    const TruncatedPoly& p, const TruncatedPoly& q,
    const std::vector<std::optional<long long>>& cap) {
  if (p.nvars != q.nvars)
    throw Error("arity", "variable-count mismatch in polynomial product");
  if (static_cast<int>(cap.size()) != p.nvars)
    throw Error("arity", "cap vector has wrong length");
  TruncatedPoly r(p.nvars);
  r.caps = cap;
  std::vector<long long> exp(p.nvars);
  for (const auto& [ep, cp] : p.coeff) {
    for (const auto& [eq, cq] : q.coeff) {
      for (int v = 0; v < p.nvars; ++v) exp[v] = ep[v] + eq[v];
      r.add_term(exp, cp * cq);
    }
  }
  return r;
}

// (1 - L)^{-1} truncated at cap, where one_minus_l = 1 - L must have constant
// term exactly 1. Requires that every monomial of L raises some capped
// variable, so that the geometric series terminates under the cap.
inline TruncatedPoly geometric_inverse(
    const TruncatedPoly& one_minus_l,
    const std::vector<std::optional<long long>>& cap) {
  const int nv = one_minus_l.nvars;
  if (static_cast<int>(cap.size()) != nv)
    throw Error("arity", "cap vector has wrong length");
  const std::vector<long long> origin(nv, 0);
  if (one_minus_l.coefficient(origin) != 1)
    throw Error("non-invertible-at-origin",
                "geometric_inverse needs constant term exactly 1");
  TruncatedPoly l(nv);  // L = 1 - input
  l.caps = cap;
  for (const auto& [e, c] : one_minus_l.coeff) {
    if (e == origin) continue;
    l.add_term(e, -c);
  }
  for (const auto& [e, c] : l.coeff) {
    (void)c;
    bool capped_raise = false;
    for (int v = 0; v < nv; ++v)
      if (e[v] > 0 && cap[v]) capped_raise = true;
    if (!capped_raise)
      throw Error("non-terminating",
                  "geometric_inverse needs every monomial of L to raise a "
                  "capped variable");
  }
  TruncatedPoly result = TruncatedPoly::constant(nv, 1);
  result.caps = cap;
  TruncatedPoly power = result;
  while (!l.is_zero()) {
    power = poly_mul_truncated(power, l, cap);
    if (power.is_zero()) break;
    for (const auto& [e, c] : power.coeff) result.add_term(e, c);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Dense staged coefficient extraction
// ---------------------------------------------------------------------------

namespace detail {

constexpr long long kUnbounded = std::numeric_limits<long long>::max();

// One geometric factor (1 - m_1 - ... - m_k)^{-1}. Every m_t is a monomial
// given as sparse (variable index, exponent delta) pairs; variables are
// 1-based. `bound` caps the multiplicity with which the factor can occur in
// any monomial contributing to the target (used only to size the boxes; the
// expansion itself is the full geometric series).
struct GeomFactor {
  std::vector<std::vector<std::pair<int, int>>> terms;
  long long bound{kUnbounded};

  int stage() const {
    int s = 0;
    for (const auto& t : terms)
      for (const auto& [v, d] : t) s = std::max(s, v);
    return s;
  }
  // A lowering term moves flow "down" through the stage variable.
  bool lowers_stage() const {
    int st = stage();
    for (const auto& t : terms)
      for (const auto& [v, d] : t)
        if (v == st && d < 0) return true;
    return false;
  }
};

// Unsigned 128-bit coefficient with overflow detection; every series in this
// library has nonnegative integer coefficients.
struct CheckedU128 {
  unsigned __int128 v{0};
  CheckedU128() = default;
  CheckedU128(long long x) : v(static_cast<unsigned __int128>(x)) {}
  CheckedU128& operator+=(const CheckedU128& o) {
    unsigned __int128 s = v + o.v;
    if (s < v) throw Error("coeff-overflow", "128-bit coefficient overflow");
    v = s;
    return *this;
  }
};

inline BigInt to_bigint(const CheckedU128& c) {
  BigInt hi = static_cast<std::uint64_t>(c.v >> 64);
  BigInt lo = static_cast<std::uint64_t>(c.v);
  return (hi << 64) | lo;
}
inline BigInt to_bigint(const BigInt& c) { return c; }

template <class Coeff>
class Box {
public:
  // lo/hi: inclusive exponent ranges for variables 1..n (index 0 unused).
  Box(const std::vector<long long>& lo, const std::vector<long long>& hi,
      int top)
      : lo_(lo), hi_(hi), top_(top) {
    strides_.assign(top_ + 1, 0);
    std::size_t sz = 1;
    for (int v = 1; v <= top_; ++v) {
      strides_[v] = sz;
      sz *= static_cast<std::size_t>(hi_[v] - lo_[v] + 1);
    }
    data_.assign(sz, Coeff(0));
  }

  Coeff& at(const std::vector<long long>& e) { return data_[index(e)]; }

  std::size_t index(const std::vector<long long>& e) const {
    std::size_t idx = 0;
    for (int v = 1; v <= top_; ++v)
      idx += strides_[v] * static_cast<std::size_t>(e[v] - lo_[v]);
    return idx;
  }

  // In-place multiplication by (1 - sum of terms)^{-1} via the recurrence
  // S'(e) = S(e) + sum_t S'(e - m_t). Cells are visited so that every e - m_t
  // with a positive delta precedes e; coordinates carrying a positive delta
  // are iterated outermost.
  void multiply_geometric(const GeomFactor& f) {
    // Iteration order: variables that appear with a positive delta in some
    // term first (ascending), then the rest.
    std::vector<int> order;
    std::vector<bool> is_pos(top_ + 1, false), used(top_ + 1, false);
    for (const auto& t : f.terms)
      for (const auto& [v, d] : t)
        if (d > 0) is_pos[v] = true;
    for (int v = 1; v <= top_; ++v)
      if (is_pos[v]) {
        order.push_back(v);
        used[v] = true;
      }
    for (int v = 1; v <= top_; ++v)
      if (!used[v]) order.push_back(v);
    // order holds outermost-first; odometer increments the innermost first,
    // so reverse: odometer position 0 = innermost = last of `order`.
    std::reverse(order.begin(), order.end());

    std::vector<long long> e(top_ + 1);
    for (int v = 1; v <= top_; ++v) e[v] = lo_[v];
    const std::size_t cells = data_.size();
    for (std::size_t count = 0; count < cells; ++count) {
      std::size_t idx = index(e);
      for (const auto& t : f.terms) {
        bool ok = true;
        for (const auto& [v, d] : t) {
          long long src = e[v] - d;
          if (src < lo_[v] || src > hi_[v]) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        std::size_t src_idx = idx;
        for (const auto& [v, d] : t)
          src_idx -= strides_[v] * static_cast<std::size_t>(d);
        data_[idx] += data_[src_idx];
      }
      // odometer
      for (std::size_t p = 0; p < order.size(); ++p) {
        int v = order[p];
        if (e[v] < hi_[v]) {
          ++e[v];
          break;
        }
        e[v] = lo_[v];
      }
    }
  }

  // Fix variable `var` (the current top) at exponent `value`; returns the box
  // over the remaining variables.
  Box sliced(int var, long long value) const {
    Box out(lo_, hi_, var - 1);
    std::vector<long long> e(top_ + 1);
    for (int v = 1; v < var; ++v) e[v] = lo_[v];
    std::size_t cells = out.data_.size();
    e[var] = value;
    for (std::size_t count = 0; count < cells; ++count) {
      out.data_[out.index(e)] = data_[index(e)];
      for (int v = 1; v < var; ++v) {
        if (e[v] < hi_[v]) {
          ++e[v];
          break;
        }
        e[v] = lo_[v];
      }
    }
    return out;
  }

  Coeff scalar() const { return data_.empty() ? Coeff(0) : data_[0]; }

private:
  std::vector<long long> lo_, hi_;
  int top_;
  std::vector<std::size_t> strides_;
  std::vector<Coeff> data_;
};

// Extracts [x^target] of the product of the geometric factors. Factors are
// applied at the stage of their highest variable, from stage nvars down to 1;
// raising factors run before lowering ones within a stage, then the stage
// variable is fixed at its target exponent.
template <class Coeff>
BigInt extract_coefficient_impl(int nvars,
                                const std::vector<GeomFactor>& factors,
                                const std::vector<long long>& target) {
  // Per-variable exponent windows.
  // raise_cap[v]: max total raising of x_v across all factors.
  // lower_cap[v]: max total lowering of x_v (all at stage v).
  std::vector<long long> raise_cap(nvars + 1, 0), lower_cap(nvars + 1, 0);
  std::vector<bool> raise_unbounded(nvars + 1, false);
  auto add_capped = [](long long& acc, long long amount) {
    if (acc > kUnbounded - amount)
      acc = kUnbounded;
    else
      acc += amount;
  };
  for (const GeomFactor& f : factors) {
    for (const auto& t : f.terms) {
      for (const auto& [v, d] : t) {
        if (d > 0) {
          if (f.bound == kUnbounded)
            raise_unbounded[v] = true;
          else
            add_capped(raise_cap[v], f.bound * d);
        } else {
          if (f.bound == kUnbounded)
            lower_cap[v] = kUnbounded;
          else
            add_capped(lower_cap[v], f.bound * (-d));
        }
      }
    }
  }
  std::vector<long long> lo(nvars + 1, 0), hi(nvars + 1, 0);
  for (int v = 1; v <= nvars; ++v) {
    long long t = target[v];
    lo[v] = std::min<long long>(0, t);
    long long up_by_lowering =
        lower_cap[v] == kUnbounded ? kUnbounded
                                   : (t > kUnbounded - lower_cap[v]
                                          ? kUnbounded
                                          : t + lower_cap[v]);
    hi[v] = raise_unbounded[v] ? up_by_lowering
                               : std::min(up_by_lowering, raise_cap[v]);
    if (hi[v] == kUnbounded)
      throw Error("unbounded-box",
                  "cannot bound exponent range for variable " +
                      std::to_string(v));
    hi[v] = std::max(hi[v], lo[v]);
    if (target[v] > hi[v]) return 0;  // target unreachable
  }

  Box<Coeff> box(lo, hi, nvars);
  {
    std::vector<long long> origin(nvars + 1, 0);
    box.at(origin) = Coeff(1);
  }
  for (int stage = nvars; stage >= 1; --stage) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const GeomFactor& f : factors) {
        if (f.stage() != stage) continue;
        bool lowering = f.lowers_stage();
        if ((pass == 0 && lowering) || (pass == 1 && !lowering)) continue;
        box.multiply_geometric(f);
      }
    }
    box = box.sliced(stage, target[stage]);
  }
  return to_bigint(box.scalar());
}

// 128-bit fast path with exact big-integer fallback on overflow.
inline BigInt extract_coefficient(int nvars,
                                  const std::vector<GeomFactor>& factors,
                                  const std::vector<long long>& target) {
  try {
    return extract_coefficient_impl<CheckedU128>(nvars, factors, target);
  } catch (const Error& e) {
    if (e.code() != "coeff-overflow") throw;
    return extract_coefficient_impl<BigInt>(nvars, factors, target);
  }
}

}  // namespace detail

}  // namespace flowpoly

#endif  // FLOWPOLY_SERIES_HPP
