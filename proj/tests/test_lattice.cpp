#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lattk/k3.hpp"
#include "lattk/lattice.hpp"
#include "oracles.hpp"

using namespace lattk;

namespace {

const IntMat kGstar = IntMat::from_ints(
    {{2, 1, 1, -2}, {1, 2, 0, 0}, {1, 0, -2, 0}, {-2, 0, 0, 0}});

Lattice u_lattice() { return standard_lattice(StandardLattice::U); }

IntMat u2_gram() {
  IntMat g(4, 4);
  g.at(0, 1) = g.at(1, 0) = 1;
  g.at(2, 3) = g.at(3, 2) = 1;
  return g;
}

IntMat random_sym(std::mt19937_64& rng, std::size_t n, long bound) {
  IntMat g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      long v = static_cast<long>(rng() % (2 * bound + 1)) - bound;
      g.at(i, j) = v;
      g.at(j, i) = v;
    }
  return g;
}

Embedding hs_embedding() {
  IntMat hs(2, kK3Rank);
  IntVec h = h_vector(), s = s_vector();
  for (std::size_t i = 0; i < kK3Rank; ++i) {
    hs.at(0, i) = h[i];
    hs.at(1, i) = s[i];
  }
  return Embedding(standard_lattice(StandardLattice::K3), hs);
}

}  // namespace

TEST_CASE("lattice: construction and predicates") {
  CHECK_THROWS_AS(Lattice(IntMat::from_ints({{0, 1}, {2, 0}})), DomainError);
  Lattice u = u_lattice();
  CHECK(u.rank() == 2);
  CHECK(u.is_even());
  CHECK(u.determinant() == -1);
  Lattice odd(IntMat::from_ints({{1}}));
  CHECK_FALSE(odd.is_even());
  Lattice degenerate(IntMat::from_ints({{0}}));
  CHECK_FALSE(degenerate.is_nondegenerate());
}

TEST_CASE("signature: examples") {
  CHECK(signature(u_lattice()) == Signature{1, 1, 0});
  Lattice e8 = standard_lattice(StandardLattice::E8minus);
  CHECK(signature(e8) == Signature{0, 8, 0});
  CHECK(oracle::signature_by_minors(e8.gram) == Signature{0, 8, 0});
  Lattice gstar(kGstar);
  CHECK(signature(gstar) == Signature{2, 2, 0});
  CHECK(oracle::signature_by_minors(kGstar) == Signature{2, 2, 0});
  CHECK(signature(Lattice(IntMat(3, 3))) == Signature{0, 0, 3});
}

TEST_CASE("discriminant_group: examples") {
  CHECK(discriminant_group(u_lattice()).orders.empty());

  FiniteQuadraticForm f = discriminant_group(Lattice(IntMat::from_ints({{2, 0}, {0, -2}})));
  CHECK(f.orders == IntVec{2, 2});
  // dual-basis oracle: q(h/2) = 1/2, q(s/2) = -1/2 = 3/2 mod 2
  RatVec expect{make_rat(1, 2), make_rat(3, 2)};
  bool direct = f.q == expect;
  bool swapped = (f.q == RatVec{expect[1], expect[0]});
  CHECK((direct || swapped));

  FiniteQuadraticForm g = discriminant_group(Lattice(kGstar));
  CHECK(g.orders == IntVec{4, 4});
  CHECK(g.b.at(0, 1) == make_rat(3, 4));

  CHECK_THROWS_AS(discriminant_group(Lattice(IntMat(2, 2))), DegenerateLatticeError);
}

TEST_CASE("discriminant group order equals |det| (200 random lattices)") {
  std::mt19937_64 rng(555);
  int done = 0;
  while (done < 200) {
    std::size_t n = 1 + rng() % 6;
    Lattice l(random_sym(rng, n, 6));
    if (!l.is_nondegenerate()) continue;
    ++done;
    FiniteQuadraticForm f = discriminant_group(l);
    CHECK(f.group_order() == abs(l.determinant()));
  }
}

TEST_CASE("orthogonal_complement: U summand inside U + U") {
  Lattice u2(u2_gram());
  IntMat first(2, 4);
  first.at(0, 0) = 1;
  first.at(1, 1) = 1;
  Embedding c = orthogonal_complement(Embedding(u2, first));
  REQUIRE(c.rank() == 2);
  IntMat expect(2, 4);
  expect.at(0, 2) = 1;
  expect.at(1, 3) = 1;
  CHECK(c.basis == expect);
  CHECK(c.sublattice().gram == u_lattice().gram);
}

TEST_CASE("orthogonal_complement: <h,s> in the K3 lattice") {
  Embedding e = hs_embedding();
  CHECK(e.is_primitive());
  Embedding c = orthogonal_complement(e);
  CHECK(c.rank() == 20);
  CHECK(abs(c.sublattice().determinant()) == 4);
  CHECK(c.is_primitive());
}

TEST_CASE("orthogonal_complement: twisted algebraic lattice in Mukai") {
  ConcreteBField b = realize_bfield(BFieldParams{make_rat(1, 2), make_rat(1, 2), make_rat(1, 2)});
  Embedding alg = twisted_algebraic_lattice(b);
  Embedding c = orthogonal_complement(alg);
  CHECK(c.rank() == 20);
  CHECK(abs(c.sublattice().determinant()) == 16);
  FiniteQuadraticForm fc = discriminant_group(c.sublattice());
  FiniteQuadraticForm fa = discriminant_group(alg.sublattice());
  CHECK(fc.orders == IntVec{4, 4});
  CHECK(form_isomorphism(fc, negate(fa)).has_value());
}

TEST_CASE("intersect_with_subspace: examples") {
  Lattice u2(u2_gram());
  Embedding full = intersect_with_subspace(u2, RatMat::identity(4));
  CHECK(full.basis == IntMat::identity(4));

  Lattice mukai = standard_lattice(StandardLattice::Mukai);
  RatMat span(1, kMukaiRank);
  span.at(0, 23) = 1;
  Embedding line = intersect_with_subspace(mukai, span);
  REQUIRE(line.rank() == 1);
  IntVec e4(kMukaiRank, 0);
  e4[23] = 1;
  CHECK(line.basis.row(0) == e4);

  // a half-integral direction still meets the lattice in the primitive vector
  RatMat half(1, 4);
  half.at(0, 0) = make_rat(1, 2);
  half.at(0, 1) = make_rat(1, 2);
  Embedding diag = intersect_with_subspace(u2, half);
  REQUIRE(diag.rank() == 1);
  CHECK(diag.basis.row(0) == IntVec{1, 1, 0, 0});

  CHECK_THROWS_AS(intersect_with_subspace(u2, RatMat(2, 3)), DimensionError);
}

TEST_CASE("intersect_with_subspace output is saturated (random spans)") {
  std::mt19937_64 rng(808);
  Lattice k3 = standard_lattice(StandardLattice::K3);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng() % 4;
    RatMat span(r, kK3Rank);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < kK3Rank; ++j)
        span.at(i, j) = make_rat(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3);
    try {
      Embedding e = intersect_with_subspace(k3, span);
      for (const Int& d : snf(e.basis).elementary_divisors()) CHECK(d == 1);
    } catch (const DomainError&) {
      // dependent rows: draw again
    }
  }
}

TEST_CASE("kernel_sublattice: examples") {
  Lattice u = u_lattice();
  KernelSublattice zero = kernel_sublattice(u, RationalFunctional{{Rat(0), Rat(0)}});
  CHECK(zero.index == 1);
  CHECK(zero.embedding.basis == IntMat::identity(2));

  KernelSublattice half = kernel_sublattice(u, RationalFunctional{{make_rat(1, 2), Rat(0)}});
  CHECK(half.index == 2);
  CHECK(half.embedding.sublattice().gram == IntMat::from_ints({{0, 2}, {2, 0}}));
  CHECK(half.embedding.sublattice().determinant() == -4);

  ConcreteBField b = realize_bfield(BFieldParams{make_rat(1, 2), make_rat(1, 2), make_rat(1, 2)});
  TranscendentalModels tm = transcendental_models(b);
  CHECK(tm.tx_index == 2);
  CHECK(abs(tm.tx.sublattice().determinant()) == 16);
}

TEST_CASE("kernel disc scales by index^2 (random functionals)") {
  std::mt19937_64 rng(616);
  int done = 0;
  while (done < 60) {
    std::size_t n = 1 + rng() % 4;
    Lattice l(random_sym(rng, n, 4));
    if (!l.is_nondegenerate()) continue;
    ++done;
    RationalFunctional phi;
    for (std::size_t i = 0; i < n; ++i)
      phi.values.push_back(make_rat(static_cast<long>(rng() % 5) - 2, 1 + rng() % 4));
    KernelSublattice k = kernel_sublattice(l, phi);
    CHECK(abs(k.embedding.sublattice().determinant()) ==
          k.index * k.index * abs(l.determinant()));
    for (std::size_t i = 0; i < k.embedding.rank(); ++i)
      CHECK(phi.evaluate(k.embedding.basis.row(i)) == 0);
  }
}

TEST_CASE("overlattices_of_index: examples") {
  CHECK(overlattices_of_index(u_lattice(), 2).empty());

  ConcreteBField b = realize_bfield(BFieldParams{make_rat(1, 2), make_rat(1, 2), make_rat(1, 2)});
  Lattice tx = transcendental_models(b).tx.sublattice();
  auto four = overlattices_of_index(tx, 4);
  REQUIRE(four.size() == 1);
  CHECK(four[0].quotient == IntVec{2, 2});
  CHECK(four[0].inclusion.ambient.is_even());
  CHECK(abs(four[0].inclusion.ambient.determinant()) == 1);
  CHECK(abs(determinant(four[0].inclusion.basis)) == 4);

  auto two = overlattices_of_index(tx, 2);
  CHECK(two.size() == 3);
  for (const Overlattice& o : two) {
    CHECK(o.inclusion.ambient.is_even());
    CHECK(abs(o.inclusion.ambient.determinant()) == 4);
    CHECK(o.quotient == IntVec{2});
    CHECK(abs(determinant(o.inclusion.basis)) == 2);
  }

  CHECK_THROWS_AS(overlattices_of_index(Lattice(IntMat::from_ints({{1}})), 1), DomainError);
}

TEST_CASE("overlattice disc relation on random small even lattices") {
  std::mt19937_64 rng(303);
  int done = 0;
  while (done < 40) {
    std::size_t n = 1 + rng() % 3;
    IntMat g = random_sym(rng, n, 4);
    for (std::size_t i = 0; i < n; ++i) g.at(i, i) = 2 * g.at(i, i);
    Lattice l(g);
    if (!l.is_nondegenerate() || abs(l.determinant()) > 400) continue;
    ++done;
    for (Int idx : {Int(2), Int(3)}) {
      for (const Overlattice& o : overlattices_of_index(l, idx)) {
        CHECK(o.inclusion.ambient.is_even());
        CHECK(abs(o.inclusion.ambient.determinant()) * idx * idx == abs(l.determinant()));
        Int q = 1;
        for (const Int& v : o.quotient) q *= v;
        CHECK(q == idx);
      }
    }
  }
}

TEST_CASE("sublattice_intersection: examples") {
  Lattice u2(u2_gram());
  IntMat first(2, 4);
  first.at(0, 0) = 1;
  first.at(1, 1) = 1;
  Embedding e1(u2, first);
  CHECK(sublattice_intersection(e1, e1).basis == hnf(first));

  IntMat second(2, 4);
  second.at(0, 2) = 1;
  second.at(1, 3) = 1;
  Embedding e2(u2, second);
  CHECK(sublattice_intersection(e1, e2).rank() == 0);

  Lattice other(IntMat(4, 4));
  CHECK_THROWS_AS(sublattice_intersection(e1, Embedding(other, second)), DomainError);

  // integer spans, not saturations
  IntMat dbl(1, 4);
  dbl.at(0, 0) = 2;
  IntMat one(1, 4);
  one.at(0, 0) = 1;
  Embedding d(u2, dbl), o(u2, one);
  CHECK(sublattice_intersection(d, o).basis == dbl);
}

TEST_CASE("rescale: examples") {
  Lattice u = u_lattice();
  CHECK(rescale(u, Rat(1)) == u);
  Lattice doubled(IntMat::from_ints({{0, 2}, {2, 0}}));
  CHECK(rescale(doubled, make_rat(1, 2)) == u);
  CHECK_THROWS_AS(rescale(u, make_rat(1, 2)), DomainError);
  CHECK_THROWS_AS(rescale(u, Rat(0)), DomainError);
  Lattice g(kGstar);
  CHECK(rescale(rescale(g, Rat(-1)), Rat(-1)) == g);
  CHECK(rescale(g, Rat(-1)).determinant() == g.determinant());  // even rank
}

TEST_CASE("is_isometry: examples") {
  Lattice u = u_lattice();
  CHECK(is_isometry(IntMat::identity(2), u, u));
  Lattice u2(u2_gram());
  IntMat swap(4, 4);
  swap.at(0, 2) = swap.at(1, 3) = swap.at(2, 0) = swap.at(3, 1) = 1;
  CHECK(is_isometry(swap, u2, u2));
  IntMat bad = IntMat::identity(2);
  bad.at(0, 1) = 1;
  CHECK_FALSE(is_isometry(bad, u, u));
  CHECK_THROWS_AS(is_isometry(IntMat::identity(3), u, u), DimensionError);
}

TEST_CASE("is_isometry composes") {
  std::mt19937_64 rng(2468);
  Lattice u2(u2_gram());
  auto random_unimodular = [&](std::size_t n) {
    IntMat m = IntMat::identity(n);
    for (int k = 0; k < 6; ++k) {
      std::size_t i = rng() % n, j = rng() % n;
      if (i == j) continue;
      long c = static_cast<long>(rng() % 5) - 2;
      for (std::size_t t = 0; t < n; ++t) m.at(i, t) += c * m.at(j, t);
    }
    return m;
  };
  for (int t = 0; t < 50; ++t) {
    IntMat mm = random_unimodular(4);
    Lattice a(mm.transposed() * u2.gram * mm);
    IntMat nn = random_unimodular(4);
    Lattice b(nn.transposed() * a.gram * nn);
    CHECK(is_isometry(mm, a, u2));
    CHECK(is_isometry(nn, b, a));
    CHECK(is_isometry(mm * nn, b, u2));
  }
}

TEST_CASE("primitive embeddings: complement form is the negated form (100 samples)") {
  std::mt19937_64 rng(112233);
  Lattice k3 = standard_lattice(StandardLattice::K3);
  int done = 0;
  while (done < 100) {
    std::size_t r = 1 + rng() % 4;
    IntMat raw(r, kK3Rank);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < kK3Rank; ++j)
        raw.at(i, j) = Int(static_cast<long>(rng() % 5) - 2);
    if (rational_rank(raw) != r) continue;
    Embedding e = intersect_with_subspace(k3, RatMat::from_int(raw));
    Lattice sub = e.sublattice();
    if (!sub.is_nondegenerate()) continue;
    if (abs(sub.determinant()) > 2000) continue;
    ++done;
    CHECK(e.is_primitive());
    CHECK(sub.is_even());
    Embedding c = orthogonal_complement(e);
    CHECK(e.rank() + c.rank() == kK3Rank);
    FiniteQuadraticForm fs = discriminant_group(sub);
    FiniteQuadraticForm fc = discriminant_group(c.sublattice());
    CHECK(fs.group_order() == fc.group_order());
    CHECK(form_isomorphism(fs, negate(fc)).has_value());
  }
}
