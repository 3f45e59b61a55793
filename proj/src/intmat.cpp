#include "lattk/intmat.hpp"

namespace lattk {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(std::vector<IntVec> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged row list");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

IntMat IntMat::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVec> rr;
  for (const auto& row : rows) {
    IntVec v;
    for (long x : row) v.emplace_back(x);
    rr.push_back(std::move(v));
  }
  return from_rows(std::move(rr));
}

IntVec IntMat::row(std::size_t i) const {
  IntVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
  IntMat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

IntMat IntMat::transposed() const {
  IntMat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool IntMat::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool IntMat::is_zero() const {
  for (const Int& x : e_)
    if (x != 0) return false;
  return true;
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::from_rows(std::vector<RatVec> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  RatMat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged row list");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

RatMat RatMat::from_int(const IntMat& m) {
  RatMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = Rat(m.at(i, j));
  return out;
}

RatVec RatMat::row(std::size_t i) const {
  RatVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

RatMat RatMat::operator*(const RatMat& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
  RatMat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

RatMat RatMat::transposed() const {
  RatMat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool RatMat::is_integral() const {
  for (const Rat& x : e_)
    if (x.get_den() != 1) return false;
  return true;
}

Int RatMat::denominator() const {
  Int den = 1;
  for (const Rat& x : e_) den = int_lcm(den, x.get_den());
  return den;
}

IntMat RatMat::to_int() const {
  if (!is_integral()) throw DomainError("matrix has non-integral entries");
  IntMat out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).get_num();
  return out;
}

RatMat RatMat::inverse() const {
  if (!is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = rows_;
  RatMat a = *this;
  RatMat inv = RatMat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a.at(piv, c) == 0) ++piv;
    if (piv == n) throw DomainError("singular matrix");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(c, j), a.at(piv, j));
        std::swap(inv.at(c, j), inv.at(piv, j));
      }
    const Rat p = a.at(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(c, j) /= p;
      inv.at(c, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a.at(r, c) == 0) continue;
      const Rat f = a.at(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(c, j);
        inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionError("dot length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int pair_with(const IntMat& gram, const IntVec& x, const IntVec& y) {
  if (x.size() != gram.rows() || y.size() != gram.cols())
    throw DimensionError("pairing length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Int t = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) t += gram.at(i, j) * y[j];
    s += x[i] * t;
  }
  return s;
}

Rat pair_with(const IntMat& gram, const RatVec& x, const RatVec& y) {
  if (x.size() != gram.rows() || y.size() != gram.cols())
    throw DimensionError("pairing length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rat t = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) t += Rat(gram.at(i, j)) * y[j];
    s += x[i] * t;
  }
  return s;
}

RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

}  // namespace lattk
