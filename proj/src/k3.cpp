#include "lattk/k3.hpp"

#include <array>

namespace lattk {

namespace {

// negated E8 Cartan matrix, Bourbaki node numbering:
// chain 1-3-4-5-6-7-8 with node 2 attached to node 4
IntMat e8_minus_gram() {
  static const std::array<std::pair<int, int>, 7> edges{
      {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}}};
  IntMat g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g.at(i, i) = -2;
  for (auto [a, b] : edges) {
    g.at(a, b) = 1;
    g.at(b, a) = 1;
  }
  return g;
}

IntMat u_gram() {
  IntMat g(2, 2);
  g.at(0, 1) = 1;
  g.at(1, 0) = 1;
  return g;
}

IntMat k3_gram() {
  IntMat g(kK3Rank, kK3Rank);
  IntMat u = u_gram();
  for (std::size_t blk = 0; blk < 3; ++blk)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) g.at(2 * blk + i, 2 * blk + j) = u.at(i, j);
  IntMat e8 = e8_minus_gram();
  for (std::size_t base : {kE8aBase, kE8bBase})
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) g.at(base + i, base + j) = e8.at(i, j);
  return g;
}

IntMat mukai_gram() {
  IntMat g(kMukaiRank, kMukaiRank);
  g.at(0, 23) = -1;
  g.at(23, 0) = -1;
  IntMat k3 = k3_gram();
  for (std::size_t i = 0; i < kK3Rank; ++i)
    for (std::size_t j = 0; j < kK3Rank; ++j) g.at(1 + i, 1 + j) = k3.at(i, j);
  return g;
}

const Lattice& k3_lattice() {
  static const Lattice l{k3_gram()};
  return l;
}

const Lattice& mukai_lattice() {
  static const Lattice l{mukai_gram()};
  return l;
}

std::vector<std::string> k3_labels() {
  std::vector<std::string> out{"U1.e", "U1.f", "U2.e", "U2.f", "U3.e", "U3.f"};
  for (const char* blk : {"E8a", "E8b"})
    for (int i = 1; i <= 8; ++i) out.push_back(std::string(blk) + ".r" + std::to_string(i));
  return out;
}

}  // namespace

Lattice standard_lattice(StandardLattice name) {
  switch (name) {
    case StandardLattice::U:
      return Lattice(u_gram());
    case StandardLattice::E8minus:
      return Lattice(e8_minus_gram());
    case StandardLattice::K3:
      return k3_lattice();
    case StandardLattice::Mukai:
      return mukai_lattice();
  }
  throw DomainError("unknown standard lattice");
}

Lattice standard_lattice(const std::string& name) {
  if (name == "U") return standard_lattice(StandardLattice::U);
  if (name == "E8minus") return standard_lattice(StandardLattice::E8minus);
  if (name == "K3") return standard_lattice(StandardLattice::K3);
  if (name == "Mukai") return standard_lattice(StandardLattice::Mukai);
  throw DomainError("unknown standard lattice name: " + name);
}

std::vector<std::string> standard_labels(StandardLattice name) {
  switch (name) {
    case StandardLattice::U:
      return {"e", "f"};
    case StandardLattice::E8minus: {
      std::vector<std::string> out;
      for (int i = 1; i <= 8; ++i) out.push_back("r" + std::to_string(i));
      return out;
    }
    case StandardLattice::K3:
      return k3_labels();
    case StandardLattice::Mukai: {
      std::vector<std::string> out{"e0"};
      for (const std::string& l : k3_labels()) out.push_back(l);
      out.push_back("e4");
      return out;
    }
  }
  throw DomainError("unknown standard lattice");
}

IntVec h_vector() {
  IntVec v(kK3Rank, 0);
  v[kU1e] = 1;
  v[kU1f] = 1;
  return v;
}

IntVec s_vector() {
  IntVec v(kK3Rank, 0);
  v[kE8aBase] = 1;
  return v;
}

IntVec fiber_vector() {
  IntVec v = h_vector();
  v[kE8aBase] -= 1;
  return v;
}

MukaiVector MukaiVector::zero() { return MukaiVector{0, RatVec(kK3Rank), 0}; }

MukaiVector MukaiVector::e0() {
  MukaiVector v = zero();
  v.r = 1;
  return v;
}

MukaiVector MukaiVector::e4() {
  MukaiVector v = zero();
  v.m = 1;
  return v;
}

MukaiVector MukaiVector::from_k3(const IntVec& v) {
  MukaiVector out = zero();
  for (std::size_t i = 0; i < kK3Rank; ++i) out.c[i] = Rat(v[i]);
  return out;
}

MukaiVector MukaiVector::from_coords(const RatVec& coords) {
  if (coords.size() != kMukaiRank) throw DimensionError("Mukai coordinate length != 24");
  MukaiVector out = zero();
  out.r = coords[0];
  for (std::size_t i = 0; i < kK3Rank; ++i) out.c[i] = coords[1 + i];
  out.m = coords[23];
  return out;
}

RatVec MukaiVector::coords() const {
  RatVec out;
  out.reserve(kMukaiRank);
  out.push_back(r);
  for (const Rat& x : c) out.push_back(x);
  out.push_back(m);
  return out;
}

bool MukaiVector::is_integral() const {
  if (!lattk::is_integral(r) || !lattk::is_integral(m)) return false;
  for (const Rat& x : c)
    if (!lattk::is_integral(x)) return false;
  return true;
}

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
  MukaiVector out = a;
  out.r += b.r;
  out.m += b.m;
  for (std::size_t i = 0; i < kK3Rank; ++i) out.c[i] += b.c[i];
  return out;
}

MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) {
  MukaiVector out = a;
  out.r -= b.r;
  out.m -= b.m;
  for (std::size_t i = 0; i < kK3Rank; ++i) out.c[i] -= b.c[i];
  return out;
}

MukaiVector operator*(const Rat& k, const MukaiVector& a) {
  MukaiVector out = a;
  out.r *= k;
  out.m *= k;
  for (std::size_t i = 0; i < kK3Rank; ++i) out.c[i] *= k;
  return out;
}

Rat mukai_pairing(const MukaiVector& a, const MukaiVector& b) {
  Rat s = pair_with(k3_lattice().gram, a.c, b.c);
  s -= a.r * b.m + b.r * a.m;
  return s;
}

bool BFieldParams::is_admissible() const {
  for (const Rat* v : {&bsq, &bh, &bs}) {
    Rat doubled = *v * 2;
    if (!is_integral(doubled)) return false;
    if (doubled.get_num() % 2 == 0) return false;
  }
  return true;
}

BFieldParams ConcreteBField::params() const {
  Rat bb = pair_with(k3_lattice().gram, coords, coords);
  return BFieldParams{bb, dot_k3(h_vector()), dot_k3(s_vector())};
}

Rat ConcreteBField::dot_k3(const IntVec& v) const { return dot_k3(to_rat(v)); }

Rat ConcreteBField::dot_k3(const RatVec& v) const {
  return pair_with(k3_lattice().gram, coords, v);
}

ConcreteBField realize_bfield(const BFieldParams& params) {
  if (!params.is_admissible())
    throw AdmissibilityError("B-field parameters must have 2*bsq, 2*bh, 2*bs odd");
  // search coordinates: U1.e (x1), U2.e (x3), E8a.r1 (mu); derived: U1.f, U2.f, E8a.r3.
  // with B = x1 e1 + x2 f1 + x3 e2 + x4 f2 + mu r1 + nu r3:
  //   B.h = x1 + x2,  B.s = -2 mu + nu,
  //   B.B = 2 x1 x2 + 2 x3 x4 - 2 mu^2 + 2 mu nu - 2 nu^2
  for (long n1 = -21; n1 <= 21; ++n1) {
    const Rat x1 = make_rat(n1, 2);
    const Rat x2 = params.bh - x1;
    for (long n3 = -9; n3 <= 9; ++n3) {
      if (n3 == 0) continue;
      const Rat x3 = make_rat(n3, 2);
      for (long nmu = -9; nmu <= 9; ++nmu) {
        const Rat mu = make_rat(nmu, 2);
        const Rat nu = params.bs + 2 * mu;
        const Rat x4 = (params.bsq - 2 * x1 * x2 + 2 * mu * mu - 2 * mu * nu + 2 * nu * nu) /
                       (2 * x3);
        if (!is_half_integral(x4)) continue;
        ConcreteBField b{RatVec(kK3Rank)};
        b.coords[kU1e] = x1;
        b.coords[kU1f] = x2;
        b.coords[kU2e] = x3;
        b.coords[kU2f] = x4;
        b.coords[kE8aBase] = mu;
        b.coords[kE8aBase + 2] = nu;
        return b;
      }
    }
  }
  throw CapacityError("B-field realization search exhausted");
}

MukaiVector exp_b(const ConcreteBField& b, const MukaiVector& v) {
  MukaiVector out = v;
  for (std::size_t i = 0; i < kK3Rank; ++i) out.c[i] += v.r * b.coords[i];
  Rat bb = pair_with(k3_lattice().gram, b.coords, b.coords);
  out.m += pair_with(k3_lattice().gram, v.c, b.coords) + v.r * bb / 2;
  return out;
}

IntMat twisted_generator_rows(const ConcreteBField& b) {
  IntMat rows(4, kMukaiRank);
  rows.at(0, 0) = 2;  // 2 e0 + 2B
  for (std::size_t i = 0; i < kK3Rank; ++i) {
    Rat doubled = 2 * b.coords[i];
    rows.at(0, 1 + i) = doubled.get_num();
  }
  IntVec h = h_vector(), s = s_vector();
  for (std::size_t i = 0; i < kK3Rank; ++i) {
    rows.at(1, 1 + i) = h[i];
    rows.at(2, 1 + i) = s[i];
  }
  rows.at(3, 23) = 1;  // e4
  return rows;
}

Lattice twisted_generator_gram(const ConcreteBField& b) {
  IntMat rows = twisted_generator_rows(b);
  return Lattice(rows * mukai_lattice().gram * rows.transposed());
}

Lattice twisted_generator_gram(const BFieldParams& p) {
  if (!p.is_admissible()) throw AdmissibilityError("inadmissible B-field parameters");
  const Rat bsq4 = 4 * p.bsq, bh2 = 2 * p.bh, bs2 = 2 * p.bs;
  IntMat g(4, 4);
  g.at(0, 0) = bsq4.get_num();
  g.at(0, 1) = g.at(1, 0) = bh2.get_num();
  g.at(0, 2) = g.at(2, 0) = bs2.get_num();
  g.at(0, 3) = g.at(3, 0) = -2;
  g.at(1, 1) = 2;
  g.at(2, 2) = -2;
  return Lattice(std::move(g));
}

Embedding twisted_algebraic_lattice(const ConcreteBField& b) {
  if (!b.params().is_admissible())
    throw AdmissibilityError("inadmissible B-field");
  std::vector<RatVec> span;
  span.push_back(exp_b(b, MukaiVector::e0()).coords());
  span.push_back(exp_b(b, MukaiVector::from_k3(h_vector())).coords());
  span.push_back(exp_b(b, MukaiVector::from_k3(s_vector())).coords());
  span.push_back(MukaiVector::e4().coords());
  return intersect_with_subspace(mukai_lattice(), RatMat::from_rows(std::move(span)));
}

TranscendentalModels transcendental_models(const ConcreteBField& b) {
  if (!b.params().is_admissible())
    throw AdmissibilityError("inadmissible B-field");
  IntMat hs(2, kK3Rank);
  IntVec h = h_vector(), s = s_vector();
  for (std::size_t i = 0; i < kK3Rank; ++i) {
    hs.at(0, i) = h[i];
    hs.at(1, i) = s[i];
  }
  Embedding ts = orthogonal_complement(Embedding(k3_lattice(), hs));
  RationalFunctional alpha;
  for (std::size_t i = 0; i < ts.rank(); ++i)
    alpha.values.push_back(mod1(b.dot_k3(ts.basis.row(i))));
  KernelSublattice k = kernel_sublattice(ts.sublattice(), alpha);
  return TranscendentalModels{std::move(ts), std::move(alpha), std::move(k.embedding), k.index};
}

RationalFunctional brauer_restrict(const RationalFunctional& phi, const Embedding& e) {
  if (phi.values.size() != e.ambient.rank())
    throw DimensionError("functional does not live on the embedding's ambient");
  RationalFunctional out;
  for (std::size_t i = 0; i < e.rank(); ++i) out.values.push_back(phi.evaluate(e.basis.row(i)));
  return out;
}

}  // namespace lattk
