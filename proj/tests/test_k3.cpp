#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lattk/k3.hpp"
#include "oracles.hpp"

using namespace lattk;

namespace {

BFieldParams default_params() {
  return BFieldParams{make_rat(1, 2), make_rat(1, 2), make_rat(1, 2)};
}

BFieldParams odd_params(long w, long vh, long vs) {
  return BFieldParams{make_rat(w, 2), make_rat(vh, 2), make_rat(vs, 2)};
}

MukaiVector random_integral_mukai(std::mt19937_64& rng) {
  RatVec coords(kMukaiRank);
  for (std::size_t i = 0; i < kMukaiRank; ++i)
    coords[i] = Rat(Int(static_cast<long>(rng() % 9) - 4));
  return MukaiVector::from_coords(coords);
}

}  // namespace

TEST_CASE("standard lattices") {
  Lattice u = standard_lattice(StandardLattice::U);
  CHECK(u.determinant() == -1);

  Lattice e8 = standard_lattice(StandardLattice::E8minus);
  CHECK(e8.determinant() == 1);
  CHECK(e8.is_even());
  CHECK(signature(e8) == Signature{0, 8, 0});

  Lattice k3 = standard_lattice(StandardLattice::K3);
  CHECK(k3.determinant() == -1);
  CHECK(k3.is_even());
  CHECK(signature(k3) == Signature{3, 19, 0});

  Lattice mukai = standard_lattice(StandardLattice::Mukai);
  CHECK(abs(mukai.determinant()) == 1);
  CHECK(mukai.rank() == 24);
  CHECK(mukai.is_even());
  CHECK(signature(mukai) == Signature{4, 20, 0});

  CHECK_THROWS_AS(standard_lattice("E9"), DomainError);
  CHECK(standard_labels(StandardLattice::Mukai).front() == "e0");
  CHECK(standard_labels(StandardLattice::Mukai).back() == "e4");
  CHECK(standard_labels(StandardLattice::K3)[kE8aBase] == "E8a.r1");
}

TEST_CASE("distinguished classes h, s, f") {
  const IntMat& g = standard_lattice(StandardLattice::K3).gram;
  IntVec h = h_vector(), s = s_vector(), f = fiber_vector();
  CHECK(pair_with(g, h, h) == 2);
  CHECK(pair_with(g, s, s) == -2);
  CHECK(pair_with(g, h, s) == 0);
  CHECK(pair_with(g, f, f) == 0);
  for (std::size_t i = 0; i < kK3Rank; ++i) CHECK(f[i] == h[i] - s[i]);
}

TEST_CASE("mukai pairing convention") {
  MukaiVector e0 = MukaiVector::e0(), e4 = MukaiVector::e4();
  CHECK(mukai_pairing(e0, e0) == 0);
  CHECK(mukai_pairing(e4, e4) == 0);
  CHECK(mukai_pairing(e0, e4) == -1);
  MukaiVector h = MukaiVector::from_k3(h_vector());
  CHECK(mukai_pairing(h, h) == 2);
  CHECK(mukai_pairing(e0, h) == 0);
}

TEST_CASE("BFieldParams admissibility") {
  CHECK(default_params().is_admissible());
  CHECK(odd_params(9, -7, 3).is_admissible());
  CHECK_FALSE(BFieldParams{Rat(0), make_rat(1, 2), make_rat(1, 2)}.is_admissible());
  CHECK_FALSE(BFieldParams{Rat(1), make_rat(1, 2), make_rat(1, 2)}.is_admissible());
  CHECK_FALSE(BFieldParams{make_rat(1, 3), make_rat(1, 2), make_rat(1, 2)}.is_admissible());
}

TEST_CASE("realize_bfield reproduces its parameters exactly") {
  for (auto p : {default_params(), odd_params(3, -5, 7), odd_params(-9, 9, -9),
                 odd_params(19, -19, 19), odd_params(1, 17, -3)}) {
    ConcreteBField b = realize_bfield(p);
    for (const Rat& c : b.coords) CHECK(is_half_integral(c));
    CHECK(b.params() == p);
  }
  CHECK_THROWS_AS(realize_bfield(BFieldParams{Rat(0), make_rat(1, 2), make_rat(1, 2)}),
                  AdmissibilityError);
}

TEST_CASE("realize_bfield: exhaustive over all odd numerator triples up to 9") {
  for (long w = -9; w <= 9; w += 2)
    for (long vh = -9; vh <= 9; vh += 2)
      for (long vs = -9; vs <= 9; vs += 2) {
        BFieldParams p = odd_params(w, vh, vs);
        CHECK(realize_bfield(p).params() == p);
      }
}

TEST_CASE("realize_bfield succeeds for every odd numerator up to 19 (regression)") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    long pick[3];
    for (long& v : pick) {
      v = 1 + 2 * static_cast<long>(rng() % 10);  // 1..19 odd
      if (rng() % 2) v = -v;
    }
    BFieldParams p = odd_params(pick[0], pick[1], pick[2]);
    ConcreteBField b = realize_bfield(p);
    CHECK(b.params() == p);
  }
}

TEST_CASE("residue parities are invariant under re-lifting (100 samples)") {
  std::mt19937_64 rng(1001);
  ConcreteBField b = realize_bfield(default_params());
  IntVec h = h_vector(), s = s_vector();
  for (int t = 0; t < 100; ++t) {
    ConcreteBField bp = b;
    for (std::size_t i = 0; i < kK3Rank; ++i)
      bp.coords[i] += Rat(Int(static_cast<long>(rng() % 7) - 3));
    long k = static_cast<long>(rng() % 9) - 4;
    long l = static_cast<long>(rng() % 9) - 4;
    for (std::size_t i = 0; i < kK3Rank; ++i)
      bp.coords[i] += make_rat(k * h[i].get_si() + l * s[i].get_si(), 2);
    CHECK(bp.params().is_admissible());
  }
}

TEST_CASE("exp_b: examples and pairing preservation") {
  ConcreteBField b = realize_bfield(default_params());

  CHECK(exp_b(b, MukaiVector::e4()) == MukaiVector::e4());

  MukaiVector two_e0 = 2 * MukaiVector::e0();
  MukaiVector t = exp_b(b, two_e0);
  CHECK(t.r == 2);
  for (std::size_t i = 0; i < kK3Rank; ++i) CHECK(t.c[i] == 2 * b.coords[i]);
  CHECK(t.m == b.params().bsq);

  std::mt19937_64 rng(909);
  ConcreteBField minus = b;
  for (Rat& c : minus.coords) c = -c;
  for (int i = 0; i < 100; ++i) {
    MukaiVector x = random_integral_mukai(rng), y = random_integral_mukai(rng);
    CHECK(mukai_pairing(exp_b(b, x), exp_b(b, y)) == mukai_pairing(x, y));
    CHECK(exp_b(minus, exp_b(b, x)) == x);
  }
}

TEST_CASE("twisted_algebraic_lattice: generators, span and discriminant") {
  for (auto p : {default_params(), odd_params(5, -3, 1), odd_params(-7, 9, -5)}) {
    ConcreteBField b = realize_bfield(p);
    Embedding alg = twisted_algebraic_lattice(b);
    CHECK(alg.rank() == 4);
    CHECK(alg.is_primitive());
    CHECK(abs(alg.sublattice().determinant()) == 16);

    IntMat gens = twisted_generator_rows(b);
    CHECK(hnf(gens) == alg.basis);  // generator span equals the full intersection
    Lattice gg = twisted_generator_gram(b);
    CHECK(gg.gram == twisted_generator_gram(p).gram);
    CHECK(gg.determinant() == 16);

    // the named generators are members of the intersection lattice
    for (std::size_t i = 0; i < 4; ++i) CHECK(oracle::row_in_span(alg.basis, gens.row(i)));
  }
}

TEST_CASE("twisted generator Gram matches the closed form") {
  ConcreteBField b = realize_bfield(default_params());
  IntMat expect = IntMat::from_ints({{2, 1, 1, -2}, {1, 2, 0, 0}, {1, 0, -2, 0}, {-2, 0, 0, 0}});
  CHECK(twisted_generator_gram(b).gram == expect);
}

TEST_CASE("transcendental_models: ranks, discs, functional") {
  ConcreteBField b = realize_bfield(default_params());
  TranscendentalModels tm = transcendental_models(b);
  CHECK(tm.ts.rank() == 20);
  CHECK(abs(tm.ts.sublattice().determinant()) == 4);
  CHECK(tm.alpha.order() == 2);
  CHECK(tm.tx_index == 2);
  CHECK(tm.tx.rank() == 20);
  CHECK(abs(tm.tx.sublattice().determinant()) == 16);
  CHECK(tm.ts.sublattice().is_even());
  CHECK(tm.tx.sublattice().is_even());

  // sign flip leaves the discriminant of the even-rank model unchanged
  Lattice tx = tm.tx.sublattice();
  CHECK(rescale(tx, Rat(-1)).determinant() == tx.determinant());
}

TEST_CASE("the ambient transcendental model is one of the three index-2 overlattices") {
  ConcreteBField b = realize_bfield(default_params());
  TranscendentalModels tm = transcendental_models(b);
  Lattice tx = tm.tx.sublattice();
  // tS in tX coordinates is the inverse of the kernel basis
  RatMat ts_in_tx = RatMat::from_int(tm.tx.basis).inverse();
  int matches = 0;
  for (const Overlattice& o : overlattices_of_index(tx, 2)) {
    // same row span over Z iff the change of basis is integral and unimodular
    RatMat c = o.basis_in_l * RatMat::from_int(tm.tx.basis);
    if (!c.is_integral()) continue;
    if (abs(determinant(c.to_int())) == 1) ++matches;
  }
  CHECK(matches == 1);
}

TEST_CASE("kernel and complement models carry mutually negated forms") {
  for (auto p : {default_params(), odd_params(-3, 7, 9)}) {
    ConcreteBField b = realize_bfield(p);
    Embedding alg = twisted_algebraic_lattice(b);
    TranscendentalModels tm = transcendental_models(b);
    FiniteQuadraticForm fx = discriminant_group(tm.tx.sublattice());
    FiniteQuadraticForm fa = discriminant_group(alg.sublattice());
    CHECK(fx.orders == IntVec{4, 4});
    CHECK(form_isomorphism(fx, negate(fa)).has_value());
  }
}

TEST_CASE("brauer_restrict: examples") {
  ConcreteBField b = realize_bfield(default_params());
  TranscendentalModels tm = transcendental_models(b);

  RationalFunctional zero{RatVec(tm.ts.rank(), Rat(0))};
  CHECK(brauer_restrict(zero, tm.tx).is_zero());

  // alpha restricted to its own kernel vanishes
  RationalFunctional alpha_on_kernel = brauer_restrict(tm.alpha, tm.tx);
  CHECK(alpha_on_kernel.is_zero());

  IntMat row(1, 3);
  row.at(0, 0) = 1;
  CHECK_THROWS_AS(brauer_restrict(tm.alpha, Embedding(Lattice(IntMat(3, 3)), row)),
                  DimensionError);
}
