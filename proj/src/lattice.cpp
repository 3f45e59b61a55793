#include "lattk/lattice.hpp"

#include <algorithm>
#include <map>

namespace lattk {

Lattice::Lattice(IntMat g) : gram(std::move(g)) {
  if (!gram.is_symmetric()) throw DomainError("Gram matrix must be symmetric");
}

bool Lattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram.at(i, i) % 2 != 0) return false;
  return true;
}

Int Lattice::determinant() const { return lattk::determinant(gram); }

Signature signature(const Lattice& l) {
  const std::size_t n = l.rank();
  RatMat m = RatMat::from_int(l.gram);
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t d = k;
      while (d < n && m.at(d, d) == 0) ++d;
      if (d < n) {
        // congruent swap of k and d
        for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(d, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, k), m.at(i, d));
      } else {
        std::size_t off = n;
        for (std::size_t j = k + 1; j < n; ++j)
          if (m.at(k, j) != 0) {
            off = j;
            break;
          }
        if (off == n) {
          ++sig.zeros;
          continue;
        }
        // make the diagonal nonzero: row/col k += row/col off
        for (std::size_t j = 0; j < n; ++j) m.at(k, j) += m.at(off, j);
        for (std::size_t i = 0; i < n; ++i) m.at(i, k) += m.at(i, off);
      }
    }
    const Rat p = m.at(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m.at(i, k) == 0) continue;
      const Rat f = m.at(i, k) / p;
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
      for (std::size_t j = 0; j < n; ++j) m.at(j, i) -= f * m.at(j, k);
    }
    if (p > 0)
      ++sig.positives;
    else
      ++sig.negatives;
  }
  return sig;
}

Embedding::Embedding(Lattice amb, IntMat b) : ambient(std::move(amb)), basis(std::move(b)) {
  if (basis.cols() != ambient.rank()) throw DimensionError("embedding basis width != ambient rank");
  if (rational_rank(basis) != basis.rows())
    throw DomainError("embedding basis rows are rationally dependent");
}

Lattice Embedding::sublattice() const {
  return Lattice(basis * ambient.gram * basis.transposed());
}

bool Embedding::is_primitive() const {
  for (const Int& d : snf(basis).elementary_divisors())
    if (d != 1) return false;
  return true;
}

Int RationalFunctional::order() const {
  Int m = 1;
  for (const Rat& v : values) m = int_lcm(m, v.get_den());
  return m;
}

Rat RationalFunctional::evaluate(const IntVec& x) const {
  if (x.size() != values.size()) throw DimensionError("functional length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += Rat(x[i]) * values[i];
  return mod1(s);
}

bool RationalFunctional::is_zero() const {
  for (const Rat& v : values)
    if (mod1(v) != 0) return false;
  return true;
}

DiscriminantData discriminant_data(const Lattice& l) {
  if (!l.is_nondegenerate())
    throw DegenerateLatticeError("discriminant group needs a nondegenerate lattice");
  const std::size_t n = l.rank();
  SnfDecomposition s = snf(l.gram);

  FiniteQuadraticForm f;
  f.from_even_lattice = l.is_even();
  std::vector<RatVec> lifts;
  for (std::size_t i = 0; i < n; ++i) {
    const Int di = s.d.at(i, i);
    if (di <= 1) continue;
    f.orders.push_back(di);
    RatVec g(n);
    for (std::size_t j = 0; j < n; ++j) g[j] = make_rat(s.u.at(i, j), di);
    lifts.push_back(std::move(g));
  }
  const std::size_t k = f.orders.size();
  f.b = RatMat(k, k);
  f.q.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) f.b.at(i, j) = mod1(pair_with(l.gram, lifts[i], lifts[j]));
    f.q[i] = mod2(pair_with(l.gram, lifts[i], lifts[i]));
  }
  DiscriminantData out{std::move(f), RatMat::from_rows(std::move(lifts))};
  if (out.generator_lifts.rows() == 0) out.generator_lifts = RatMat(0, n);
  return out;
}

FiniteQuadraticForm discriminant_group(const Lattice& l) { return discriminant_data(l).form; }

Embedding orthogonal_complement(const Embedding& e) {
  // x in the complement  <=>  x * (G * basis^T) = 0
  IntMat a = e.ambient.gram * e.basis.transposed();
  return Embedding(e.ambient, saturated_kernel(a));
}

Embedding intersect_with_subspace(const Lattice& ambient, const RatMat& spanning) {
  if (spanning.cols() != ambient.rank())
    throw DimensionError("spanning width != ambient rank");
  const Int den = spanning.denominator();
  IntMat s(spanning.rows(), spanning.cols());
  for (std::size_t i = 0; i < spanning.rows(); ++i)
    for (std::size_t j = 0; j < spanning.cols(); ++j) {
      Rat scaled = spanning.at(i, j) * Rat(den);
      s.at(i, j) = scaled.get_num();
    }
  if (rational_rank(s) != s.rows())
    throw DomainError("spanning rows are rationally dependent");
  // double-kernel: first the transposed kernel cuts out the subspace equations
  IntMat normals = saturated_kernel(s.transposed());
  return Embedding(ambient, saturated_kernel(normals.transposed()));
}

KernelSublattice kernel_sublattice(const Lattice& l, const RationalFunctional& phi) {
  const std::size_t n = l.rank();
  if (phi.values.size() != n) throw DimensionError("functional length != rank");
  const Int m = phi.order();
  IntVec p(n);
  Int g = m;
  for (std::size_t i = 0; i < n; ++i) {
    Rat scaled = phi.values[i] * Rat(m);
    p[i] = scaled.get_num();
    g = int_gcd(g, p[i]);
  }
  // {x : x . p = 0 mod m} is the projection of the kernel of (x, t) -> x.p - m t
  IntMat stack(n + 1, 1);
  for (std::size_t i = 0; i < n; ++i) stack.at(i, 0) = p[i];
  stack.at(n, 0) = -m;
  IntMat ker = saturated_kernel(stack);
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    IntVec r = ker.row(i);
    r.pop_back();
    bool nz = false;
    for (const Int& x : r) nz = nz || x != 0;
    if (nz) rows.push_back(std::move(r));
  }
  IntMat basis(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) basis.at(i, j) = std::move(rows[i][j]);
  return {Embedding(l, hnf(basis)), div_exact(m, g)};
}

namespace {

struct OverlatticeKey {
  Int den;
  IntMat scaled_hnf;
  bool operator<(const OverlatticeKey& rhs) const {
    if (den != rhs.den) return den < rhs.den;
    for (std::size_t i = 0; i < scaled_hnf.rows(); ++i)
      for (std::size_t j = 0; j < scaled_hnf.cols(); ++j) {
        if (scaled_hnf.at(i, j) != rhs.scaled_hnf.at(i, j))
          return scaled_hnf.at(i, j) < rhs.scaled_hnf.at(i, j);
      }
    return false;
  }
};

}  // namespace

std::vector<Overlattice> overlattices_of_index(const Lattice& l, const Int& n) {
  if (!l.is_even()) throw DomainError("overlattice enumeration needs an even lattice");
  DiscriminantData data = discriminant_data(l);
  Int disc = abs(l.determinant());
  if (n < 1 || disc % (n * n) != 0) return {};

  const std::size_t r = l.rank();
  std::vector<std::pair<OverlatticeKey, Overlattice>> out;
  for (const Subgroup& h : isotropic_subgroups(data.form, n)) {
    // stack l's basis with lifts of all subgroup elements, then reduce
    std::vector<RatVec> gen_rows;
    for (std::size_t i = 0; i < r; ++i) {
      RatVec row(r);
      row[i] = 1;
      gen_rows.push_back(std::move(row));
    }
    for (const TorsionElement& x : h.elements) {
      RatVec row(r);
      for (std::size_t i = 0; i < x.coeffs.size(); ++i)
        for (std::size_t j = 0; j < r; ++j)
          row[j] += Rat(x.coeffs[i]) * data.generator_lifts.at(i, j);
      gen_rows.push_back(std::move(row));
    }
    RatMat gens = RatMat::from_rows(std::move(gen_rows));
    const Int den = gens.denominator();
    IntMat scaled(gens.rows(), r);
    for (std::size_t i = 0; i < gens.rows(); ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Rat v = gens.at(i, j) * Rat(den);
        scaled.at(i, j) = v.get_num();
      }
    IntMat h_basis = hnf(scaled);
    RatMat basis_in_l(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) basis_in_l.at(i, j) = make_rat(h_basis.at(i, j), den);

    RatMat gram_q = basis_in_l * RatMat::from_int(l.gram) * basis_in_l.transposed();
    Lattice over(gram_q.to_int());  // integral because the subgroup is isotropic
    IntMat inclusion = basis_in_l.inverse().to_int();
    out.push_back({OverlatticeKey{den, h_basis},
                   Overlattice{Embedding(over, inclusion), basis_in_l, h.structure}});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Overlattice> res;
  res.reserve(out.size());
  for (auto& [k, v] : out) res.push_back(std::move(v));
  return res;
}

Embedding sublattice_intersection(const Embedding& e1, const Embedding& e2) {
  if (!(e1.ambient == e2.ambient)) throw DomainError("intersection needs a shared ambient");
  const std::size_t k = e1.basis.rows(), l = e2.basis.rows();
  const std::size_t n = e1.basis.cols();
  IntMat stacked(k + l, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked.at(i, j) = e1.basis.at(i, j);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked.at(k + i, j) = e2.basis.at(i, j);
  // kernel rows (x | y) give intersection elements x * B1 = -y * B2
  IntMat ker = saturated_kernel(stacked);
  IntMat gens(ker.rows(), n);
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      Int s = 0;
      for (std::size_t i = 0; i < k; ++i) s += ker.at(r, i) * e1.basis.at(i, j);
      gens.at(r, j) = s;
    }
  return Embedding(e1.ambient, hnf(gens));
}

Lattice rescale(const Lattice& l, const Rat& factor) {
  if (factor == 0) throw DomainError("rescale by zero");
  const std::size_t n = l.rank();
  IntMat g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = Rat(l.gram.at(i, j)) * factor;
      if (!is_integral(v)) throw DomainError("rescale result is not integral");
      g.at(i, j) = v.get_num();
    }
  return Lattice(std::move(g));
}

bool is_isometry(const IntMat& map, const Lattice& source, const Lattice& target) {
  if (map.rows() != target.rank() || map.cols() != source.rank())
    throw DimensionError("isometry map must be target.rank x source.rank");
  return map.transposed() * target.gram * map == source.gram;
}

}  // namespace lattk
