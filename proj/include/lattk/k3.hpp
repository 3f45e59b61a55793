#pragma once

#include <string>
#include <vector>

#include "lattk/lattice.hpp"

namespace lattk {

enum class StandardLattice { U, E8minus, K3, Mukai };

// U = [[0,1],[1,0]]; E8minus = negated E8 Cartan matrix; K3 = U^3 + E8minus^2;
// Mukai = e0/e4 pair with e0.e4 = -1 around the K3 block
Lattice standard_lattice(StandardLattice name);
Lattice standard_lattice(const std::string& name);  // rejects unknown names
std::vector<std::string> standard_labels(StandardLattice name);

inline constexpr std::size_t kK3Rank = 22;
inline constexpr std::size_t kMukaiRank = 24;

// K3 coordinate layout: U1(0,1) U2(2,3) U3(4,5) E8a(6..13) E8b(14..21)
inline constexpr std::size_t kU1e = 0, kU1f = 1, kU2e = 2, kU2f = 3, kU3e = 4, kU3f = 5;
inline constexpr std::size_t kE8aBase = 6, kE8bBase = 14;

// distinguished classes: h = U1.e + U1.f (h^2 = 2), s = E8a.r1 (s^2 = -2), f = h - s
IntVec h_vector();
IntVec s_vector();
IntVec fiber_vector();

// Mukai vector (r, c, m); pairing (r,c,m).(r',c',m') = c.c' - r m' - r' m
struct MukaiVector {
  Rat r;
  RatVec c;  // length 22
  Rat m;

  static MukaiVector zero();
  static MukaiVector e0();
  static MukaiVector e4();
  static MukaiVector from_k3(const IntVec& v);
  static MukaiVector from_coords(const RatVec& coords);  // length 24
  RatVec coords() const;                                 // (r, c..., m)
  bool is_integral() const;
  bool operator==(const MukaiVector&) const = default;
};

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator-(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator*(const Rat& k, const MukaiVector& a);
Rat mukai_pairing(const MukaiVector& a, const MukaiVector& b);

inline constexpr const char* kMukaiConvention =
    "(r,c,m).(r',c',m') = c.c' - r*m' - r'*m";

// residue parameters of a half-integral B-field: admissible when
// 2*bsq, 2*bh, 2*bs are all odd integers
struct BFieldParams {
  Rat bsq, bh, bs;
  bool is_admissible() const;
  bool operator==(const BFieldParams&) const = default;
};

struct ConcreteBField {
  RatVec coords;  // length 22, 2*coords integral

  BFieldParams params() const;
  Rat dot_k3(const IntVec& v) const;
  Rat dot_k3(const RatVec& v) const;
};

// deterministic bounded search for a concrete half-integral realization;
// throws AdmissibilityError / CapacityError
ConcreteBField realize_bfield(const BFieldParams& params);

// (r, c, m) -> (r, c + rB, m + c.B + r B.B/2); preserves the Mukai pairing
MukaiVector exp_b(const ConcreteBField& b, const MukaiVector& v);

// saturated intersection of the Mukai lattice with exp(B) span(e0, h, s, e4)
Embedding twisted_algebraic_lattice(const ConcreteBField& b);

// the four named generators (2e0 + 2B, h, s, e4) as Mukai coordinate rows
IntMat twisted_generator_rows(const ConcreteBField& b);
// their Gram: [[4B^2, 2Bh, 2Bs, -2], [2Bh, 2, 0, 0], [2Bs, 0, -2, 0], [-2, 0, 0, 0]]
Lattice twisted_generator_gram(const ConcreteBField& b);
Lattice twisted_generator_gram(const BFieldParams& params);

// transcendental chain: tS = (h,s)-complement in K3;
// alpha(t) = B.t mod 1 on tS; tX = kernel of alpha, index 2
struct TranscendentalModels {
  Embedding ts;             // into K3
  RationalFunctional alpha; // on ts
  Embedding tx;             // into ts.sublattice()
  Int tx_index;
};
TranscendentalModels transcendental_models(const ConcreteBField& b);

// pull a functional back along a sublattice basis
RationalFunctional brauer_restrict(const RationalFunctional& phi, const Embedding& e);

}  // namespace lattk
