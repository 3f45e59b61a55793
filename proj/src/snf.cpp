#include "lattk/snf.hpp"

#include <algorithm>
#include <utility>

namespace lattk {

namespace {

void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void addmul_row(IntMat& m, std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += c * m.at(src, j);
}

void addmul_col(IntMat& m, std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += c * m.at(i, src);
}

void negate_row(IntMat& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

// minimal |entry| != 0 in d[t.., t..], ties broken by (row, col)
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntMat& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Int& x = d.at(i, j);
      if (x == 0) continue;
      Int a = abs(x);
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

IntVec SnfDecomposition::diagonal() const {
  IntVec out;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
  return out;
}

std::size_t SnfDecomposition::rank() const {
  std::size_t r = 0;
  for (const Int& x : diagonal())
    if (x != 0) ++r;
  return r;
}

IntVec SnfDecomposition::elementary_divisors() const {
  IntVec out;
  for (const Int& x : diagonal())
    if (x > 1) out.push_back(x);
  return out;
}

SnfDecomposition snf(const IntMat& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SnfDecomposition s{IntMat::identity(m), a, IntMat::identity(n)};
  IntMat& d = s.d;
  IntMat& u = s.u;
  IntMat& v = s.v;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    auto piv = find_pivot(d, t);
    if (!piv) break;
    for (;;) {
      swap_rows(d, t, piv->first);
      swap_rows(u, t, piv->first);
      swap_cols(d, t, piv->second);
      swap_cols(v, t, piv->second);

      for (std::size_t i = t + 1; i < m; ++i)
        if (d.at(i, t) != 0) {
          Int q = div_floor(d.at(i, t), d.at(t, t));
          addmul_row(d, i, t, -q);
          addmul_row(u, i, t, -q);
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (d.at(t, j) != 0) {
          Int q = div_floor(d.at(t, j), d.at(t, t));
          addmul_col(d, j, t, -q);
          addmul_col(v, j, t, -q);
        }

      bool clean = true;
      for (std::size_t i = t + 1; i < m && clean; ++i)
        if (d.at(i, t) != 0) clean = false;
      for (std::size_t j = t + 1; j < n && clean; ++j)
        if (d.at(t, j) != 0) clean = false;

      if (clean) {
        // pivot must divide the trailing block
        std::optional<std::size_t> bad;
        for (std::size_t i = t + 1; i < m && !bad; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (d.at(i, j) % d.at(t, t) != 0) {
              bad = i;
              break;
            }
        if (!bad) break;
        addmul_row(d, t, *bad, 1);
        addmul_row(u, t, *bad, 1);
      }
      piv = find_pivot(d, t);
      if (!piv) break;
    }
    if (d.at(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  return s;
}

Int determinant(const IntMat& a) {
  if (!a.is_square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMat m = a;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = div_exact(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  Int det = m.at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

IntMat saturated_kernel(const IntMat& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SnfDecomposition s = snf(a);
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < m; ++i) {
    const bool beyond = i >= std::min(m, n);
    if (beyond || s.d.at(i, i) == 0) rows.push_back(s.u.row(i));
  }
  IntMat k(rows.size(), m);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) k.at(i, j) = std::move(rows[i][j]);
  return hnf(k);
}

std::optional<IntVec> solve_integral(const IntMat& a, const IntVec& b) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw DimensionError("solve_integral rhs length mismatch");
  SnfDecomposition s = snf(a);
  // u a v = d  =>  a x = b  <=>  d z = u b with x = v z
  IntVec c(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) c[i] += s.u.at(i, j) * b[j];
  IntVec z(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    Int di = (i < std::min(m, n)) ? s.d.at(i, i) : Int(0);
    if (di == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % di != 0) return std::nullopt;
      z[i] = div_exact(c[i], di);
    }
  }
  IntVec x(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x[i] += s.v.at(i, j) * z[j];
  return x;
}

IntMat hnf(const IntMat& a) {
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    IntVec r = a.row(i);
    bool nz = false;
    for (const Int& x : r) nz = nz || x != 0;
    if (nz) rows.push_back(std::move(r));
  }
  const std::size_t m = rows.size();
  const std::size_t n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::optional<std::size_t> piv;
      Int best;
      for (std::size_t i = r; i < m; ++i) {
        if (rows[i][c] == 0) continue;
        Int ab = abs(rows[i][c]);
        if (!piv || ab < best) {
          piv = i;
          best = ab;
        }
      }
      if (!piv) break;
      std::swap(rows[r], rows[*piv]);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (rows[i][c] == 0) continue;
        Int q = div_floor(rows[i][c], rows[r][c]);
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (std::size_t j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      Int q = div_floor(rows[i][c], rows[r][c]);
      if (q != 0)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  IntMat out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = std::move(rows[i][j]);
  return out;
}

std::size_t rational_rank(const IntMat& a) { return snf(a).rank(); }

}  // namespace lattk
