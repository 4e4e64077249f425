#include "corda/smith.hpp"

#include <algorithm>
#include <cstdlib>

#include "corda/error.hpp"

namespace corda {

IMat identity_matrix(size_t n) {
  IMat m(n, std::vector<Integer>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat mat_mul(const IMat& a, const IMat& b) {
  size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
  IMat r(n, std::vector<Integer>(p, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t l = 0; l < p; ++l) r[i][l] += a[i][j] * b[j][l];
    }
  return r;
}

IMat mat_transpose(const IMat& m) {
  if (m.empty()) return {};
  IMat t(m[0].size(), std::vector<Integer>(m.size(), 0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

std::vector<Integer> mat_vec(const IMat& a, const std::vector<Integer>& x) {
  std::vector<Integer> r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
  return r;
}

Integer mat_det(IMat a) {
  size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t piv = k;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Integer num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

// Truncated quotient: remainder has smaller absolute value than the divisor.
Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

SmithResult smith_normal_form(IMat m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  for (const auto& row : m)
    if (row.size() != cols) fail_arg("smith_normal_form: ragged matrix");

  SmithResult res;
  res.rows = rows;
  res.cols = cols;
  res.u = identity_matrix(rows);
  res.v = identity_matrix(cols);

  auto row_add = [&](size_t dst, size_t src, const Integer& q) {
    for (size_t j = 0; j < cols; ++j) m[dst][j] += q * m[src][j];
    for (size_t j = 0; j < rows; ++j) res.u[dst][j] += q * res.u[src][j];
  };
  auto col_add = [&](size_t dst, size_t src, const Integer& q) {
    for (size_t i = 0; i < rows; ++i) m[i][dst] += q * m[i][src];
    for (size_t i = 0; i < cols; ++i) res.v[i][dst] += q * res.v[i][src];
  };

  size_t bound = std::min(rows, cols);
  for (size_t t = 0; t < bound; ++t) {
    while (true) {
      // Minimal |entry| != 0 in the trailing submatrix becomes the pivot.
      size_t pi = rows, pj = cols;
      for (size_t i = t; i < rows; ++i)
        for (size_t j = t; j < cols; ++j) {
          if (m[i][j] == 0) continue;
          if (pi == rows || mpz_cmpabs(m[i][j].get_mpz_t(), m[pi][pj].get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) { t = bound; break; }
      if (pi != t) {
        std::swap(m[pi], m[t]);
        std::swap(res.u[pi], res.u[t]);
      }
      if (pj != t) {
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][t]);
        for (size_t i = 0; i < cols; ++i) std::swap(res.v[i][pj], res.v[i][t]);
      }

      bool exact = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        row_add(i, t, -tdiv(m[i][t], m[t][t]));
        if (m[i][t] != 0) exact = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        col_add(j, t, -tdiv(m[t][j], m[t][t]));
        if (m[t][j] != 0) exact = false;
      }
      if (!exact) continue;

      // Pivot must divide the rest of the submatrix for the chain d1 | d2 |...
      bool divides = true;
      for (size_t i = t + 1; i < rows && divides; ++i)
        for (size_t j = t + 1; j < cols && divides; ++j)
          if (m[i][j] % m[t][t] != 0) {
            row_add(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (t == bound) break;
    if (m[t][t] < 0) {
      for (size_t j = 0; j < cols; ++j) m[t][j] = -m[t][j];
      for (size_t j = 0; j < rows; ++j) res.u[t][j] = -res.u[t][j];
    }
  }

  res.diag.resize(bound);
  for (size_t t = 0; t < bound; ++t) {
    res.diag[t] = m[t][t];
    if (m[t][t] != 0) res.rank = t + 1;
  }
  return res;
}

std::vector<Integer> cokernel_invariants(const IMat& m) {
  SmithResult s = smith_normal_form(m);
  std::vector<Integer> inv;
  for (const Integer& d : s.diag)
    if (d > 1) inv.push_back(d);
  for (size_t i = s.rank; i < s.rows; ++i) inv.push_back(0);
  return inv;
}

} // namespace corda
