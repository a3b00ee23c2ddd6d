#ifndef FLOWPOLY_LINALG_HPP
#define FLOWPOLY_LINALG_HPP

// Exact rational linear algebra: Gaussian elimination (rank, linear solves)
// and a two-phase primal simplex with Bland's rule for feasibility and small
// linear programs over the rationals.

#include "flowpoly/numeric.hpp"

#include <optional>
#include <vector>

namespace flowpoly {

using RatMatrix = std::vector<std::vector<BigRat>>;  // row-major
using RatVector = std::vector<BigRat>;

inline RatMatrix to_rational(const std::vector<std::vector<long long>>& m) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    r[i].assign(m[i].begin(), m[i].end());
  return r;
}

inline int matrix_rank(RatMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  int rank = 0;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
    std::size_t pivot = lead_row;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[lead_row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead_row || m[r][c] == 0) continue;
      BigRat f = m[r][c] / m[lead_row][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[lead_row][k];
    }
    ++lead_row;
    ++rank;
  }
  return rank;
}

// Solves A x = b exactly. Returns nullopt when the system is inconsistent.
// When the solution space is positive-dimensional, free variables are set to
// zero (callers that need uniqueness must check column rank themselves).
struct LinearSolveResult {
  RatVector x;
  bool unique{false};
};

inline std::optional<LinearSolveResult> solve_linear(RatMatrix a,
                                                     RatVector b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col_of_row;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
    std::size_t pivot = lead_row;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[lead_row]);
    std::swap(b[pivot], b[lead_row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead_row || a[r][c] == 0) continue;
      BigRat f = a[r][c] / a[lead_row][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[lead_row][k];
      b[r] -= f * b[lead_row];
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    ++lead_row;
  }
  for (std::size_t r = lead_row; r < rows; ++r)
    if (b[r] != 0) return std::nullopt;
  LinearSolveResult res;
  res.x.assign(cols, BigRat(0));
  for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
    int c = pivot_col_of_row[r];
    res.x[c] = b[r] / a[r][c];
  }
  res.unique = pivot_col_of_row.size() == cols;
  return res;
}

namespace detail {

// Simplex tableau for: maximize c.x subject to A x = rhs, x >= 0.
// Bland's rule guarantees termination with exact arithmetic.
class Simplex {
public:
  Simplex(RatMatrix a, RatVector rhs) : a_(std::move(a)), rhs_(std::move(rhs)) {
    rows_ = a_.size();
    cols_ = rows_ ? a_[0].size() : 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (rhs_[r] < 0) {
        for (auto& v : a_[r]) v = -v;
        rhs_[r] = -rhs_[r];
      }
    }
  }

  // Returns the optimum of c.x, nullopt when infeasible.
  // Throws on an unbounded objective.
  std::optional<BigRat> maximize(const RatVector& c) {
    // Phase 1: artificial variable per row.
    std::size_t total = cols_ + rows_;
    tableau_.assign(rows_, RatVector(total + 1, BigRat(0)));
    basis_.resize(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t j = 0; j < cols_; ++j) tableau_[r][j] = a_[r][j];
      tableau_[r][cols_ + r] = 1;
      tableau_[r][total] = rhs_[r];
      basis_[r] = static_cast<int>(cols_ + r);
    }
    ncols_ = total;
    RatVector phase1(total, BigRat(0));
    for (std::size_t r = 0; r < rows_; ++r) phase1[cols_ + r] = -1;
    BigRat w = run(phase1);
    if (w < 0) return std::nullopt;  // infeasible
    // Drive remaining artificial variables out of the basis.
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < static_cast<int>(cols_)) continue;
      std::size_t j = 0;
      for (; j < cols_; ++j)
        if (tableau_[r][j] != 0) break;
      if (j < cols_) {
        pivot(r, j);
      }
      // A row whose original coefficients are all zero is redundant; its
      // artificial variable stays basic at value zero, which is harmless.
    }
    // Phase 2: forbid artificial variables by restricting the column range.
    ncols_ = cols_;
    RatVector obj(cols_, BigRat(0));
    for (std::size_t j = 0; j < cols_ && j < c.size(); ++j) obj[j] = c[j];
    return run(obj);
  }

private:
  BigRat run(const RatVector& obj) {
    // Reduced objective row: z_j - c_j over the current basis.
    for (;;) {
      // reduced cost for column j: obj[j] - sum_r cB[r] * tableau[r][j]
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < ncols_; ++j) {
        bool basic = false;
        for (std::size_t r = 0; r < rows_; ++r)
          if (basis_[r] == static_cast<int>(j)) basic = true;
        if (basic) continue;
        BigRat red = j < obj.size() ? obj[j] : BigRat(0);
        for (std::size_t r = 0; r < rows_; ++r) {
          BigRat cb = basis_[r] < static_cast<int>(obj.size())
                          ? obj[basis_[r]]
                          : BigRat(0);
          if (cb != 0) red -= cb * tableau_[r][j];
        }
        if (red > 0) {
          enter = j;  // Bland: smallest improving index
          break;
        }
      }
      if (!enter) break;
      std::optional<std::size_t> leave;
      BigRat best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (tableau_[r][*enter] <= 0) continue;
        BigRat ratio = tableau_[r].back() / tableau_[r][*enter];
        if (!leave || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[*leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (!leave)
        throw Error("lp-unbounded", "linear program is unbounded");
      pivot(*leave, *enter);
    }
    BigRat value = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      BigRat cb =
          basis_[r] < static_cast<int>(obj.size()) ? obj[basis_[r]] : BigRat(0);
      value += cb * tableau_[r].back();
    }
    return value;
  }

  void pivot(std::size_t pr, std::size_t pc) {
    BigRat p = tableau_[pr][pc];
    for (auto& v : tableau_[pr]) v /= p;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr || tableau_[r][pc] == 0) continue;
      BigRat f = tableau_[r][pc];
      for (std::size_t j = 0; j < tableau_[r].size(); ++j)
        tableau_[r][j] -= f * tableau_[pr][j];
    }
    basis_[pr] = static_cast<int>(pc);
  }

  RatMatrix a_;
  RatVector rhs_;
  RatMatrix tableau_;
  std::vector<int> basis_;
  std::size_t rows_{0}, cols_{0}, ncols_{0};
};

}  // namespace detail

// Maximum of c.x over {x >= 0 : A x = rhs}; nullopt when infeasible.
inline std::optional<BigRat> lp_maximize(const RatMatrix& a,
                                         const RatVector& rhs,
                                         const RatVector& c) {
  detail::Simplex s(a, rhs);
  return s.maximize(c);
}

inline bool lp_feasible(const RatMatrix& a, const RatVector& rhs) {
  RatVector zero(a.empty() ? 0 : a[0].size(), BigRat(0));
  return lp_maximize(a, rhs, zero).has_value();
}

}  // namespace flowpoly

#endif  // FLOWPOLY_LINALG_HPP
