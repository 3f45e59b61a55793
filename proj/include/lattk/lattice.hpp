#pragma once

#include <vector>

#include "lattk/finite_form.hpp"
#include "lattk/intmat.hpp"
#include "lattk/snf.hpp"

namespace lattk {

// abstract integral lattice: free Z-module with symmetric Gram matrix
struct Lattice {
  IntMat gram;

  explicit Lattice(IntMat g);
  std::size_t rank() const { return gram.rows(); }
  bool is_even() const;
  Int determinant() const;
  bool is_nondegenerate() const { return determinant() != 0; }
  bool operator==(const Lattice& rhs) const = default;
};

struct Signature {
  std::size_t positives = 0, negatives = 0, zeros = 0;
  bool operator==(const Signature&) const = default;
};

// exact symmetric diagonalization over Q
Signature signature(const Lattice& l);

// sublattice given by basis rows in ambient coordinates
struct Embedding {
  Lattice ambient;
  IntMat basis;

  Embedding(Lattice amb, IntMat b);
  std::size_t rank() const { return basis.rows(); }
  Lattice sublattice() const;  // induced Gram: basis * G * basis^T
  bool is_primitive() const;   // saturation equals the row span
};

// Q/Z-valued functional on a lattice, one value per basis vector
struct RationalFunctional {
  RatVec values;

  Int order() const;  // lcm of denominators
  Rat evaluate(const IntVec& x) const;
  bool is_zero() const;
};

FiniteQuadraticForm discriminant_group(const Lattice& l);

// dual generators behind a discriminant group: row i is a rational vector
// in lattice coordinates representing generator i
struct DiscriminantData {
  FiniteQuadraticForm form;
  RatMat generator_lifts;
};
DiscriminantData discriminant_data(const Lattice& l);

Embedding orthogonal_complement(const Embedding& e);

// saturated lattice points inside the rational row span of `spanning`
Embedding intersect_with_subspace(const Lattice& ambient, const RatMat& spanning);

struct KernelSublattice {
  Embedding embedding;  // into l
  Int index;            // order of the image subgroup of Q/Z
};
KernelSublattice kernel_sublattice(const Lattice& l, const RationalFunctional& phi);

struct Overlattice {
  Embedding inclusion;    // l's basis expressed in overlattice coordinates
  RatMat basis_in_l;      // overlattice basis in l coordinates (rational)
  IntVec quotient;        // invariant factors of overlattice / l
};

// even overlattices of index n, one per isotropic subgroup of order n;
// deterministic order (sorted by the scaled HNF basis of the preimage)
std::vector<Overlattice> overlattices_of_index(const Lattice& l, const Int& n);

// exact intersection of the two integer row spans (no saturation)
Embedding sublattice_intersection(const Embedding& e1, const Embedding& e2);

// Gram scaled entry-wise; rejects non-integral results
Lattice rescale(const Lattice& l, const Rat& factor);

// columns of `map` are images of source basis vectors in target coordinates;
// true iff map^T * target.gram * map == source.gram
bool is_isometry(const IntMat& map, const Lattice& source, const Lattice& target);

}  // namespace lattk
