#include "dharm/linsolve.hpp"

#include <algorithm>

namespace dharm {

std::vector<RatFun> solve_poly(std::vector<std::vector<MPoly>> a, std::vector<MPoly> b) {
  const size_t rows = a.size();
  if (rows == 0) return {};
  const size_t cols = a[0].size();
  if (rows < cols) throw SingularSystem("underdetermined system");
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);  // augment

  MPoly prev(1L);
  for (size_t k = 0; k < cols; ++k) {
    // Pivot: the nonzero candidate with the fewest terms.
    size_t piv = rows;
    size_t best = 0;
    for (size_t i = k; i < rows; ++i) {
      if (a[i][k].is_zero()) continue;
      size_t sz = a[i][k].terms().size();
      if (piv == rows || sz < best) {
        piv = i;
        best = sz;
      }
    }
    if (piv == rows)
      throw SingularSystem("pivot failure in column " + std::to_string(k));
    std::swap(a[k], a[piv]);
    for (size_t i = k + 1; i < rows; ++i) {
      for (size_t j = k + 1; j <= cols; ++j) {
        MPoly t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = t.divide_exact(prev);
        if (!q) throw SingularSystem("non-exact Bareiss division");  // invariant breach
        a[i][j] = std::move(*q);
      }
      a[i][k] = MPoly();
    }
    prev = a[k][k];
  }
  for (size_t i = cols; i < rows; ++i)
    if (!a[i][cols].is_zero())
      throw SingularSystem("inconsistent row " + std::to_string(i));

  // Fraction-free back substitution.  With d_k the pivots of the Bareiss
  // elimination (so det = d_{m-1}), each det*x_k is a polynomial by
  // Cramer's rule, and the recurrence below computes it with exact
  // divisions only.  Every solution component then comes out as the
  // single fraction num_k / det rather than a tower of rational
  // operations, which keeps coefficient growth in check.
  const MPoly& det = a[cols - 1][cols - 1];
  std::vector<MPoly> num(cols);
  std::vector<RatFun> x(cols);
  for (size_t k = cols; k-- > 0;) {
    MPoly acc = det * a[k][cols];
    for (size_t j = k + 1; j < cols; ++j) acc -= a[k][j] * num[j];
    auto q = acc.divide_exact(a[k][k]);
    if (!q) throw SingularSystem("non-exact division in back substitution");
    num[k] = std::move(*q);
    x[k] = RatFun(num[k], det);
  }
  return x;
}

std::vector<RatFun> ratfun_solve(std::vector<std::vector<RatFun>> a, std::vector<RatFun> b) {
  const size_t rows = a.size();
  std::vector<std::vector<MPoly>> pa(rows);
  std::vector<MPoly> pb(rows);
  for (size_t i = 0; i < rows; ++i) {
    MPoly lcm(1L);
    for (const auto& e : a[i])
      if (!e.is_polynomial()) lcm = lcm * e.den();
    if (!b[i].is_polynomial()) lcm = lcm * b[i].den();
    auto clear = [&lcm](const RatFun& e) {
      RatFun scaled = e * RatFun(lcm);
      auto p = scaled.to_poly();
      if (!p) throw SingularSystem("failed to clear denominators");
      return *p;
    };
    pa[i].reserve(a[i].size());
    for (const auto& e : a[i]) pa[i].push_back(clear(e));
    pb[i] = clear(b[i]);
  }
  return solve_poly(std::move(pa), std::move(pb));
}

QMatrix q_identity(size_t n) {
  QMatrix m(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMatrix q_invert(QMatrix m) {
  const size_t n = m.size();
  QMatrix inv = q_identity(n);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) throw SingularSystem("matrix not invertible");
    std::swap(m[k], m[piv]);
    std::swap(inv[k], inv[piv]);
    Rat d = m[k][k];
    for (size_t j = 0; j < n; ++j) {
      m[k][j] /= d;
      inv[k][j] /= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rat f = m[i][k];
      for (size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

QSolveResult q_solve(QMatrix a, std::vector<Rat> b) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  size_t rank = 0;
  std::vector<size_t> pivot_col;
  for (size_t k = 0; k < cols && rank < rows; ++k) {
    size_t piv = rank;
    while (piv < rows && a[piv][k] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    Rat d = a[rank][k];
    for (size_t j = k; j <= cols; ++j) a[rank][j] /= d;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][k] == 0) continue;
      Rat f = a[i][k];
      for (size_t j = k; j <= cols; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_col.push_back(k);
    ++rank;
  }
  for (size_t i = rank; i < rows; ++i)
    if (a[i][cols] != 0) return {SolveStatus::kInconsistent, {}};
  if (rank < cols) return {SolveStatus::kUnderdetermined, {}};
  std::vector<Rat> x(cols, Rat(0));
  for (size_t r = 0; r < rank; ++r) x[pivot_col[r]] = a[r][cols];
  return {SolveStatus::kUnique, std::move(x)};
}

}  // namespace dharm
