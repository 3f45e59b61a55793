#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lattk/ints.hpp"

namespace lattk {

// Dense row-major matrix over Z. Dimensions are fixed at construction.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static IntMat identity(std::size_t n);
  static IntMat from_rows(std::vector<IntVec> rows);
  static IntMat from_ints(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;

  IntMat operator*(const IntMat& rhs) const;
  IntMat transposed() const;
  bool operator==(const IntMat& rhs) const = default;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

// Dense matrix over Q; entries kept canonical by mpq_class.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static RatMat identity(std::size_t n);
  static RatMat from_rows(std::vector<RatVec> rows);
  static RatMat from_int(const IntMat& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  RatVec row(std::size_t i) const;

  RatMat operator*(const RatMat& rhs) const;
  RatMat transposed() const;
  bool operator==(const RatMat& rhs) const = default;

  bool is_square() const { return rows_ == cols_; }
  bool is_integral() const;
  // common denominator of all entries
  Int denominator() const;
  // throws DomainError unless every entry is integral
  IntMat to_int() const;
  // inverse by exact Gauss-Jordan; throws DomainError when singular
  RatMat inverse() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> e_;
};

Int dot(const IntVec& a, const IntVec& b);
// x * g * y^T
Int pair_with(const IntMat& gram, const IntVec& x, const IntVec& y);
Rat pair_with(const IntMat& gram, const RatVec& x, const RatVec& y);
RatVec to_rat(const IntVec& v);

}  // namespace lattk
