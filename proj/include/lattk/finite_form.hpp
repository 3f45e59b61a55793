#pragma once

#include <optional>
#include <vector>

#include "lattk/intmat.hpp"

namespace lattk {

// element of a product of cyclic groups Z/d_1 x ... x Z/d_k,
// coefficients canonical in [0, d_i)
struct TorsionElement {
  IntVec coeffs;
  IntVec orders;

  bool is_zero() const;
  Int order() const;
  bool operator==(const TorsionElement& rhs) const = default;
};

TorsionElement element_sum(const TorsionElement& x, const TorsionElement& y);
TorsionElement element_scale(const Int& k, const TorsionElement& x);

// finite abelian group with bilinear form b: A x A -> Q/Z and quadratic
// refinement q: A -> Q/2Z on the generators. q is stored even when the
// source lattice is odd; from_even_lattice records whether q is intrinsic.
struct FiniteQuadraticForm {
  IntVec orders;  // ascending divisibility chain, each >= 2
  RatMat b;       // b(g_i, g_j) in [0, 1)
  RatVec q;       // q(g_i) in [0, 2)
  bool from_even_lattice = false;

  std::size_t generator_count() const { return orders.size(); }
  Int group_order() const;
  TorsionElement element(IntVec coeffs) const;
  TorsionElement zero() const;
  std::vector<TorsionElement> all_elements() const;  // bound-checked
};

inline constexpr long kEnumerationBound = 10000;

struct QbValue {
  Rat q;  // mod 2
  Rat b;  // mod 1
};

QbValue qb_eval(const FiniteQuadraticForm& f, const TorsionElement& x, const TorsionElement& y);

struct Subgroup {
  std::vector<TorsionElement> elements;  // sorted, includes zero
  IntVec structure;                      // invariant factors > 1, ascending
};

// all subgroups H of the stated order with q|_H = 0 in Q/2Z, deterministic order
std::vector<Subgroup> isotropic_subgroups(const FiniteQuadraticForm& f, const Int& order);

// a group isomorphism f1 -> f2 preserving q on every element (hence b),
// given by the images of f1's generators; nullopt when none exists
std::optional<std::vector<TorsionElement>> form_isomorphism(const FiniteQuadraticForm& f1,
                                                            const FiniteQuadraticForm& f2);

FiniteQuadraticForm negate(const FiniteQuadraticForm& f);

// invariant factors (> 1) of the subgroup generated by the given elements
IntVec abelian_structure(const std::vector<TorsionElement>& gens, const IntVec& ambient_orders);

}  // namespace lattk
