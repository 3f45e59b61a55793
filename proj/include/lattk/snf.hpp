#pragma once

#include <optional>

#include "lattk/intmat.hpp"

namespace lattk {

// u * a * v = d with u, v unimodular, d diagonal, nonnegative,
// d[i] | d[i+1] along the nonzero prefix.
struct SnfDecomposition {
  IntMat u, d, v;
  IntVec diagonal() const;
  std::size_t rank() const;
  IntVec elementary_divisors() const;  // diagonal entries > 1
};

SnfDecomposition snf(const IntMat& a);

// fraction-free Bareiss elimination; rejects non-square input
Int determinant(const IntMat& a);

// saturated basis of {x : x * a = 0}, rows in canonical HNF.
// 0 x n input yields nothing; n x 0 input yields the identity.
IntMat saturated_kernel(const IntMat& a);

// some x with a * x = b, or nullopt
std::optional<IntVec> solve_integral(const IntMat& a, const IntVec& b);

// canonical row Hermite form of the row span: pivots positive, entries
// above a pivot reduced into [0, pivot), zero rows dropped
IntMat hnf(const IntMat& a);

// rank over Q
std::size_t rational_rank(const IntMat& a);

}  // namespace lattk
