#include "lattk/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace lattk {

namespace {

using nlohmann::json;

constexpr const char* kSuiteVersion = "0.1.0";

json jint(const Int& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.get_str();
}

json jrat(const Rat& v) {
  if (is_integral(v) && fits_int64(v.get_num())) return to_int64(v.get_num());
  return rat_string(v);
}

json jvec(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(jint(x));
  return a;
}

json jvec(const RatVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(jrat(x));
  return a;
}

json jmat(const IntMat& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(jvec(m.row(i)));
  return a;
}

json jtriple(const BFieldParams& p) {
  return json::array({jrat(p.bsq), jrat(p.bh), jrat(p.bs)});
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// per-check deterministic stream; independent of execution order
struct Rng {
  std::mt19937_64 eng;
  Rng(std::uint64_t seed, const std::string& stream) : eng(seed ^ fnv1a(stream)) {}
  std::uint64_t next() { return eng(); }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  long odd(long bound) {
    if (bound < 1) throw DomainError("numerator bound must be positive");
    std::vector<long> odds;
    for (long v = 1; v <= bound; v += 2) {
      odds.push_back(v);
      odds.push_back(-v);
    }
    return odds[next() % odds.size()];
  }
};

BFieldParams default_params() {
  return BFieldParams{make_rat(1, 2), make_rat(1, 2), make_rat(1, 2)};
}

// numerators of the doubled parameters (odd integers)
struct TripleInts {
  Int w, vh, vs;
};

TripleInts doubled(const BFieldParams& p) {
  const Rat w = 2 * p.bsq, vh = 2 * p.bh, vs = 2 * p.bs;
  return {w.get_num(), vh.get_num(), vs.get_num()};
}

Int k4_of(const BFieldParams& p) {
  TripleInts t = doubled(p);
  return div_exact(3 - 4 * t.w + t.vh * t.vh, 4);  // even for admissible params
}

// h' = (2B.h) h - 4 e0 - 4B; the generator-coordinate form is (-2, vh, 0, 0)
MukaiVector h_prime_rescaled(const ConcreteBField& b) {
  BFieldParams p = b.params();
  MukaiVector hp = doubled(p).vh * MukaiVector::from_k3(h_vector());
  hp = hp - 4 * MukaiVector::e0();
  for (std::size_t i = 0; i < kK3Rank; ++i) hp.c[i] -= 4 * b.coords[i];
  return hp;
}

MukaiVector h_prime_literal(const ConcreteBField& b) {
  BFieldParams p = b.params();
  MukaiVector hp = p.bh * MukaiVector::from_k3(h_vector());
  hp = hp - 4 * MukaiVector::e0();
  for (std::size_t i = 0; i < kK3Rank; ++i) hp.c[i] -= 4 * b.coords[i];
  return hp;
}

struct Reading {
  std::string name;
  bool pass;
  json detail;
};

json readings_json(const std::vector<Reading>& rs) {
  json a = json::array();
  for (const Reading& r : rs)
    a.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return a;
}

CheckResult make_check(std::string name, CheckStatus status, std::string statement) {
  CheckResult r;
  r.name = std::move(name);
  r.status = status;
  r.statement = std::move(statement);
  return r;
}

CheckStatus status_from_readings(const std::vector<Reading>& rs) {
  bool all = true, any = false;
  for (const Reading& r : rs) {
    all = all && r.pass;
    any = any || r.pass;
  }
  if (all) return CheckStatus::pass;
  if (any) return CheckStatus::ambiguous;
  return CheckStatus::fail;
}

// index-2 functional on Z^n whose kernel is the row span of c
RationalFunctional quotient_functional(const IntMat& c) {
  SnfDecomposition s = snf(c);
  const std::size_t n = c.cols();
  std::size_t idx = n;
  for (std::size_t i = 0; i < std::min(c.rows(), n); ++i)
    if (s.d.at(i, i) == 2) idx = i;
  if (idx == n) throw DomainError("sublattice is not of index 2");
  RationalFunctional phi;
  for (std::size_t j = 0; j < n; ++j) phi.values.push_back(mod1(make_rat(s.v.at(j, idx), 2)));
  return phi;
}

// 4x4 correspondence in generator coordinates, built from target-side data
IntMat corollary_matrix(const BFieldParams& p2) {
  TripleInts t = doubled(p2);
  const Int ks = t.vs;
  const Int k4 = k4_of(p2);
  const Int half_k4 = div_exact(k4, 2);
  IntMat m(4, 4);
  // image of 2e0+2B1
  m.at(0, 0) = 1 - k4;
  m.at(1, 0) = half_k4 * t.vh;
  m.at(2, 0) = 0;
  m.at(3, 0) = half_k4 * (k4 - 2);
  // image of h
  m.at(1, 1) = 1;
  // image of s
  m.at(0, 2) = 1 + ks;
  m.at(1, 2) = -div_exact((1 + ks) * t.vh, 2);
  m.at(2, 2) = div_exact(1 - ks, 2);
  m.at(3, 2) = div_exact(1 - ks * ks, 4) - div_exact((1 + ks) * (k4 - 1), 2);
  // image of e4
  m.at(0, 3) = -2;
  m.at(1, 3) = t.vh;
  m.at(2, 3) = 1;
  m.at(3, 3) = div_exact(2 * k4 + ks - 1, 2);
  return m;
}

// parameters forced on the source side by the correspondence
BFieldParams derived_source(const BFieldParams& p2) {
  TripleInts t = doubled(p2);
  const Int k4 = k4_of(p2);
  const Int j = div_exact(k4, 2);
  return BFieldParams{make_rat(t.w + j - j * j, 2), make_rat(t.vh, 2),
                      make_rat(t.vs + k4, 2)};
}

struct Models {
  ConcreteBField b;
  Embedding alg;
  TranscendentalModels tm;
};

Models build_models(const BFieldParams& p) {
  ConcreteBField b = realize_bfield(p);
  return Models{b, twisted_algebraic_lattice(b), transcendental_models(b)};
}

// ---------------------------------------------------------------------------
// checks

CheckResult check_pic_disc(const SweepConfig&) {
  CheckResult r = make_check("pic-disc", CheckStatus::fail,
      "Pic model <h,s> in the K3 lattice has Gram diag(2,-2) and discriminant -4");
  IntMat hs(2, kK3Rank);
  IntVec h = h_vector(), s = s_vector();
  for (std::size_t i = 0; i < kK3Rank; ++i) {
    hs.at(0, i) = h[i];
    hs.at(1, i) = s[i];
  }
  Embedding e(standard_lattice(StandardLattice::K3), hs);
  Lattice pic = e.sublattice();
  IntMat expect = IntMat::from_ints({{2, 0}, {0, -2}});
  bool ok = pic.gram == expect && pic.determinant() == -4 && e.is_primitive();
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness["gram"] = jmat(pic.gram);
  r.witness["determinant"] = jint(pic.determinant());
  r.witness["primitive"] = e.is_primitive();
  return r;
}

CheckResult check_fiber_isotropic(const SweepConfig&) {
  CheckResult r = make_check("fiber-isotropic", CheckStatus::fail,
      "the fiber class f = h - s satisfies f^2 = 0");
  IntVec f = fiber_vector();
  Int sq = pair_with(standard_lattice(StandardLattice::K3).gram, f, f);
  r.status = (sq == 0) ? CheckStatus::pass : CheckStatus::fail;
  r.witness["f_square"] = jint(sq);
  Lattice fl(IntMat::from_rows({{sq}}));
  r.witness["degenerate_rank1_model"] = !fl.is_nondegenerate();
  return r;
}

CheckResult check_residue_invariance(const SweepConfig& cfg) {
  CheckResult r = make_check("residue-invariance", CheckStatus::skipped,
      "the parities of (2B.B, 2B.h, 2B.s) do not change under B -> B + u + (k h + l s)/2");
  if (cfg.samples <= 0) {
    r.witness["reason"] = "no samples";
    return r;
  }
  ConcreteBField b = realize_bfield(default_params());
  Rng rng(cfg.seed, "residue-invariance");
  IntVec h = h_vector(), s = s_vector();
  std::vector<std::int64_t> failures;
  for (std::int64_t t = 0; t < cfg.samples; ++t) {
    ConcreteBField bp = b;
    for (std::size_t i = 0; i < kK3Rank; ++i) bp.coords[i] += Rat(Int(rng.range(-3, 3)));
    long k = rng.range(-4, 4), l = rng.range(-4, 4);
    for (std::size_t i = 0; i < kK3Rank; ++i)
      bp.coords[i] += make_rat(k * h[i].get_si() + l * s[i].get_si(), 2);
    if (!bp.params().is_admissible()) failures.push_back(t);
  }
  r.status = failures.empty() ? CheckStatus::pass : CheckStatus::fail;
  r.witness["samples"] = cfg.samples;
  r.witness["failing_samples"] = failures;
  return r;
}

CheckResult check_twisted_alg_16(const SweepConfig& cfg) {
  CheckResult r = make_check("twisted-alg-16", CheckStatus::skipped,
      "the twisted algebraic lattice has |disc| = 16 and equals the span of "
                "(2e0+2B, h, s, e4)");
  if (cfg.samples <= 0) {
    r.witness["reason"] = "no samples";
    return r;
  }
  std::vector<std::int64_t> failures;
  auto triples = sampled_triples(cfg);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    ConcreteBField b = realize_bfield(triples[i]);
    Embedding alg = twisted_algebraic_lattice(b);
    bool ok = alg.rank() == 4 && abs(alg.sublattice().determinant()) == 16;
    ok = ok && hnf(alg.basis) == hnf(twisted_generator_rows(b));
    ok = ok && abs(twisted_generator_gram(b).determinant()) == 16;
    if (!ok) failures.push_back(static_cast<std::int64_t>(i));
  }
  r.status = failures.empty() ? CheckStatus::pass : CheckStatus::fail;
  r.witness["samples"] = cfg.samples;
  r.witness["failing_samples"] = failures;
  ConcreteBField b0 = realize_bfield(default_params());
  r.witness["default_gram"] = jmat(twisted_generator_gram(b0).gram);
  return r;
}

CheckResult check_disc_group_z4z4(const SweepConfig& cfg) {
  CheckResult r = make_check("disc-group-z4z4", CheckStatus::skipped,
      "the discriminant groups of the kernel model and of the twisted algebraic "
                "lattice are Z/4 + Z/4");
  if (cfg.samples <= 0) {
    r.witness["reason"] = "no samples";
    return r;
  }
  std::vector<std::int64_t> failures;
  const IntVec z44{4, 4};
  auto triples = sampled_triples(cfg);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    Models m = build_models(triples[i]);
    bool ok = discriminant_group(m.tm.tx.sublattice()).orders == z44;
    ok = ok && discriminant_group(m.alg.sublattice()).orders == z44;
    if (!ok) failures.push_back(static_cast<std::int64_t>(i));
  }
  r.status = failures.empty() ? CheckStatus::pass : CheckStatus::fail;
  r.witness["samples"] = cfg.samples;
  r.witness["failing_samples"] = failures;
  return r;
}

CheckResult check_disc_form_matrix(const SweepConfig&) {
  CheckResult r = make_check("disc-form-matrix", CheckStatus::fail,
      "the discriminant form admits generators with b(x,y) = 3/4 and diagonal 1/2 "
                "(tested as b-values mod 1 and as q-values mod 2)");
  Models m = build_models(default_params());
  FiniteQuadraticForm f = discriminant_group(m.alg.sublattice());
  if (f.orders != IntVec{4, 4}) {
    r.witness["orders"] = jvec(f.orders);
    return r;
  }
  const Rat half = make_rat(1, 2), three4 = make_rat(3, 4);
  auto elems = f.all_elements();
  auto generates = [&](const TorsionElement& x, const TorsionElement& y) {
    std::set<IntVec> span;
    for (Int i = 0; i < 4; ++i)
      for (Int j = 0; j < 4; ++j)
        span.insert(element_sum(element_scale(i, x), element_scale(j, y)).coeffs);
    return Int(span.size()) == f.group_order();
  };
  json qpair, bpair;
  bool qfound = false, bfound = false;
  for (const TorsionElement& x : elems)
    for (const TorsionElement& y : elems) {
      if (qfound && bfound) break;
      QbValue xy = qb_eval(f, x, y);
      if (xy.b != three4) continue;
      if (!generates(x, y)) continue;
      QbValue xx = qb_eval(f, x, x), yy = qb_eval(f, y, y);
      if (!qfound && xx.q == half && yy.q == half) {
        qfound = true;
        qpair = json{{"x", jvec(x.coeffs)}, {"y", jvec(y.coeffs)}};
      }
      if (!bfound && xx.b == half && yy.b == half) {
        bfound = true;
        bpair = json{{"x", jvec(x.coeffs)}, {"y", jvec(y.coeffs)}};
      }
    }
  std::vector<Reading> rs{{"diagonal-as-q-mod-2", qfound, qpair},
                          {"diagonal-as-b-mod-1", bfound, bpair}};
  r.status = status_from_readings(rs);
  r.witness["readings"] = readings_json(rs);
  r.witness["orders"] = jvec(f.orders);
  r.witness["canonical_b_matrix"] =
      json::array({json::array({jrat(f.b.at(0, 0)), jrat(f.b.at(0, 1))}),
                   json::array({jrat(f.b.at(1, 0)), jrat(f.b.at(1, 1))})});
  r.witness["canonical_q"] = jvec(f.q);
  return r;
}

CheckResult check_complement_duality(const SweepConfig& cfg) {
  CheckResult r = make_check("complement-duality", CheckStatus::skipped,
      "the rank-20 Mukai complement of the twisted algebraic lattice carries the "
                "negated discriminant form, and agrees with the kernel model");
  if (cfg.samples <= 0) {
    r.witness["reason"] = "no samples";
    return r;
  }
  std::vector<std::int64_t> failures;
  auto triples = sampled_triples(cfg);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    Models m = build_models(triples[i]);
    Embedding comp = orthogonal_complement(m.alg);
    bool ok = comp.rank() == 20 && abs(comp.sublattice().determinant()) == 16;
    if (ok) {
      FiniteQuadraticForm fc = discriminant_group(comp.sublattice());
      FiniteQuadraticForm fa = discriminant_group(m.alg.sublattice());
      FiniteQuadraticForm fx = discriminant_group(m.tm.tx.sublattice());
      ok = form_isomorphism(fc, negate(fa)).has_value();
      ok = ok && form_isomorphism(fx, fc).has_value();
    }
    if (!ok) failures.push_back(static_cast<std::int64_t>(i));
  }
  r.status = failures.empty() ? CheckStatus::pass : CheckStatus::fail;
  r.witness["samples"] = cfg.samples;
  r.witness["failing_samples"] = failures;
  return r;
}

CheckResult check_fano_kernel_chain(const SweepConfig&) {
  CheckResult r = make_check("fano-kernel-chain", CheckStatus::fail,
      "|disc tS| = 4, the functional kernel has index 2, and |disc tX| = 16");
  Models m = build_models(default_params());
  Int dts = m.tm.ts.sublattice().determinant();
  Int dtx = m.tm.tx.sublattice().determinant();
  bool ok = m.tm.ts.rank() == 20 && abs(dts) == 4;
  ok = ok && m.tm.tx_index == 2 && abs(dtx) == 16;
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness["disc_ts"] = jint(dts);
  r.witness["kernel_index"] = jint(m.tm.tx_index);
  r.witness["disc_tx"] = jint(dtx);
  return r;
}

CheckResult check_alpha_nontrivial(const SweepConfig&) {
  CheckResult r = make_check("alpha-nontrivial", CheckStatus::fail,
      "alpha = B.(-) mod 1 has exact order 2 on the transcendental model");
  Models m = build_models(default_params());
  r.status = (m.tm.alpha.order() == 2) ? CheckStatus::pass : CheckStatus::fail;
  r.witness["order"] = jint(m.tm.alpha.order());
  return r;
}

CheckResult check_overlattice_unique_4(const SweepConfig&) {
  CheckResult r = make_check("overlattice-unique-4", CheckStatus::fail,
      "the kernel model has exactly one even overlattice of index 4, with quotient "
                "Z/2 + Z/2");
  Models m = build_models(default_params());
  auto overs = overlattices_of_index(m.tm.tx.sublattice(), 4);
  bool ok = overs.size() == 1;
  if (ok) {
    const Overlattice& o = overs[0];
    ok = o.quotient == IntVec{2, 2};
    ok = ok && o.inclusion.ambient.is_even() && abs(o.inclusion.ambient.determinant()) == 1;
  }
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness["count"] = overs.size();
  if (!overs.empty()) {
    r.witness["quotient"] = jvec(overs[0].quotient);
    r.witness["overlattice_disc"] = jint(overs[0].inclusion.ambient.determinant());
  }
  return r;
}

CheckResult check_overlattice_three_2(const SweepConfig&) {
  CheckResult r = make_check("overlattice-three-2", CheckStatus::fail,
      "the kernel model has exactly three even overlattices of index 2");
  Models m = build_models(default_params());
  auto overs = overlattices_of_index(m.tm.tx.sublattice(), 2);
  bool ok = overs.size() == 3;
  for (const Overlattice& o : overs)
    ok = ok && o.inclusion.ambient.is_even() && abs(o.inclusion.ambient.determinant()) == 4;
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness["count"] = overs.size();
  return r;
}

CheckResult check_beta_product(const SweepConfig&) {
  CheckResult r = make_check("beta-product", CheckStatus::fail,
      "the three order-2 isotropic classes pairwise sum to the third");
  Models m = build_models(default_params());
  FiniteQuadraticForm f = discriminant_group(m.tm.tx.sublattice());
  std::vector<TorsionElement> iso2;
  for (const TorsionElement& e : f.all_elements())
    if (e.order() == 2 && qb_eval(f, e, e).q == 0) iso2.push_back(e);
  bool ok = iso2.size() == 3;
  if (ok)
    for (std::size_t i = 0; i < 3 && ok; ++i)
      for (std::size_t j = 0; j < 3 && ok; ++j) {
        if (i == j) continue;
        TorsionElement sum = element_sum(iso2[i], iso2[j]);
        ok = sum == iso2[3 - i - j];
      }
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  json elems = json::array();
  for (const TorsionElement& e : iso2) elems.push_back(jvec(e.coeffs));
  r.witness["order2_isotropic"] = elems;
  return r;
}

// shared construction for the diagram checks: the unique index-4 overlattice T'
// and the three index-2 overlattices expressed inside it
struct Diagram {
  Lattice tprime;
  IntMat base_in_tprime;          // tX inside T'
  std::vector<IntMat> mid_bases;  // the three index-2 overlattices inside T'
};

Diagram build_diagram(const Models& m) {
  Lattice tx = m.tm.tx.sublattice();
  auto over4 = overlattices_of_index(tx, 4);
  if (over4.size() != 1) throw DomainError("index-4 overlattice is not unique");
  auto over2 = overlattices_of_index(tx, 2);
  RatMat inv = over4[0].basis_in_l.inverse();
  Diagram d{over4[0].inclusion.ambient, hnf(over4[0].inclusion.basis), {}};
  for (const Overlattice& o : over2) {
    RatMat c = o.basis_in_l * inv;
    d.mid_bases.push_back(c.to_int());
  }
  return d;
}

CheckResult check_diagram_intersection(const SweepConfig&) {
  CheckResult r = make_check("diagram-intersection", CheckStatus::fail,
      "the three index-2 overlattices pairwise intersect exactly in the base lattice");
  Models m = build_models(default_params());
  Diagram d = build_diagram(m);
  bool ok = d.mid_bases.size() == 3;
  for (std::size_t i = 0; i < 3 && ok; ++i)
    for (std::size_t j = i + 1; j < 3 && ok; ++j) {
      Embedding ei(d.tprime, d.mid_bases[i]);
      Embedding ej(d.tprime, d.mid_bases[j]);
      ok = sublattice_intersection(ei, ej).basis == d.base_in_tprime;
    }
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness["overlattices"] = d.mid_bases.size();
  return r;
}

CheckResult check_restriction_classes(const SweepConfig&) {
  CheckResult r = make_check("restriction-classes", CheckStatus::fail,
      "each index-2 functional restricts to zero on its own overlattice and to an "
                "order-2 functional with kernel tX on the other two");
  Models m = build_models(default_params());
  Diagram d = build_diagram(m);
  bool ok = d.mid_bases.size() == 3;
  for (std::size_t i = 0; i < 3 && ok; ++i) {
    RationalFunctional phi = quotient_functional(d.mid_bases[i]);
    Embedding ei(d.tprime, d.mid_bases[i]);
    ok = ok && brauer_restrict(phi, ei).is_zero();
    for (std::size_t j = 0; j < 3 && ok; ++j) {
      if (i == j) continue;
      Embedding ej(d.tprime, d.mid_bases[j]);
      RationalFunctional res = brauer_restrict(phi, ej);
      ok = res.order() == 2;
      if (!ok) break;
      KernelSublattice k = kernel_sublattice(ej.sublattice(), res);
      ok = k.index == 2;
      // map the kernel back to T' coordinates and compare with tX
      IntMat in_tprime = hnf(k.embedding.basis * d.mid_bases[j]);
      ok = ok && in_tprime == d.base_in_tprime;
    }
  }
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

CheckResult check_appb_solve_w(const SweepConfig& cfg) {
  CheckResult r = make_check("appB-solve-w", CheckStatus::skipped,
      "solutions of w perp h, w.e4 = 4, w^2 = 6 take the form h' + k4 e4 with "
                "k4 = (6 - h'^2)/8 integral");
  if (cfg.samples <= 0) {
    r.witness["reason"] = "no samples";
    return r;
  }
  auto triples = sampled_triples(cfg);
  std::vector<std::int64_t> rescaled_failures;
  bool literal_always_integral = true;
  json first_detail;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    ConcreteBField b = realize_bfield(triples[i]);
    AppBSolveResult sol = appendix_b_solve(b, 6, 4);
    MukaiVector hp = h_prime_rescaled(b);
    Rat hp2 = mukai_pairing(hp, hp);
    Rat k4 = (6 - hp2) / 8;
    bool ok = !sol.canonical.empty() && !sol.e4_line && is_integral(k4) && hp.is_integral();
    if (ok) {
      MukaiVector expect = hp + k4.get_num() * MukaiVector::e4();
      ok = sol.canonical[0] == expect;
    }
    if (!ok) rescaled_failures.push_back(static_cast<std::int64_t>(i));

    MukaiVector hpl = h_prime_literal(b);
    Rat k4l = (6 - mukai_pairing(hpl, hpl)) / 8;
    literal_always_integral = literal_always_integral && hpl.is_integral() && is_integral(k4l);
    if (i == 0)
      first_detail = json{{"k4", jrat(k4)},
                          {"h_prime_square", jrat(hp2)},
                          {"literal_k4", jrat(k4l)},
                          {"s_period", jint(sol.s_period)},
                          {"s_residues", jvec(sol.s_residues)}};
  }
  std::vector<Reading> rs{
      {"h-prime = (2B.h)h - 4e0 - 4B", rescaled_failures.empty(), first_detail},
      {"h-prime = (B.h)h - 4e0 - 4B", literal_always_integral,
       json{{"integral", literal_always_integral}}}};
  r.status = status_from_readings(rs);
  r.witness["readings"] = readings_json(rs);
  r.witness["failing_samples"] = rescaled_failures;
  r.witness["samples"] = cfg.samples;
  // boundary instances, default parameters
  ConcreteBField b0 = realize_bfield(default_params());
  AppBSolveResult empty6 = appendix_b_solve(b0, 6, 0);
  AppBSolveResult line0 = appendix_b_solve(b0, 0, 0);
  r.witness["square6_pairing0_empty"] = empty6.canonical.empty() && !empty6.e4_line;
  r.witness["square0_pairing0_e4_line"] =
      line0.e4_line && line0.canonical.size() == 1 && line0.canonical[0] == MukaiVector::zero();
  return r;
}

CheckResult check_appb_fano_pic(const SweepConfig&) {
  CheckResult r = make_check("appB-fano-pic", CheckStatus::fail,
      "the Picard images satisfy g - F1 = e4, F2 + F3 = e4, g^2 = 6, g.e4 = 4, "
                "and all are orthogonal to (0,h,0)");
  ConcreteBField b = realize_bfield(default_params());
  BFieldParams p = b.params();
  Lattice gg = twisted_generator_gram(b);
  TripleInts t = doubled(p);

  auto images = [&](const Int& ks) -> std::optional<std::vector<IntVec>> {
    if ((1 - ks) % 2 != 0) return std::nullopt;
    Int k4 = k4_of(p);
    IntVec g{-2, t.vh, 0, k4};
    IntVec f1{-2, t.vh, 0, k4 - 1};
    IntVec f2{0, 0, -1, div_exact(1 - ks, 2)};
    IntVec f3{0, 0, 1, div_exact(1 + ks, 2)};
    return std::vector<IntVec>{g, f1, f2, f3};
  };

  auto verify = [&](const std::vector<IntVec>& im) {
    const IntVec e4{0, 0, 0, 1};
    const IntVec h{0, 1, 0, 0};
    IntVec diff(4), sum(4);
    for (std::size_t i = 0; i < 4; ++i) {
      diff[i] = im[0][i] - im[1][i];
      sum[i] = im[2][i] + im[3][i];
    }
    bool ok = diff == e4 && sum == e4;
    ok = ok && pair_with(gg.gram, im[0], im[0]) == 6;
    ok = ok && pair_with(gg.gram, im[0], e4) == 4;
    for (const IntVec& v : im) ok = ok && pair_with(gg.gram, v, h) == 0;
    return ok;
  };

  std::vector<Reading> rs;
  auto im_int = images(t.vs);  // ks = 2 B.s
  rs.push_back({"ks = 2*B.s", im_int && verify(*im_int),
                im_int ? json{{"g", jvec((*im_int)[0])}, {"F2", jvec((*im_int)[2])}}
                       : json{{"integral", false}}});
  bool lit_ok = is_integral(p.bs) && (1 - p.bs.get_num()) % 2 == 0;
  rs.push_back({"ks = B.s", lit_ok, json{{"integral", lit_ok}}});
  r.status = status_from_readings(rs);
  r.witness["readings"] = readings_json(rs);
  return r;
}

CheckResult check_appb_corollary_isometry(const SweepConfig& cfg) {
  CheckResult r = make_check("appB-corollary-isometry", CheckStatus::skipped,
      "the 4x4 correspondence carries the source twisted Gram to the target twisted "
                "Gram");
  if (cfg.samples <= 0) {
    r.witness["reason"] = "no samples";
    return r;
  }
  auto triples = sampled_triples(cfg);
  Rng rng(cfg.seed, "appB-independent");
  std::vector<std::int64_t> derived_failures;
  std::int64_t independent_holds = 0;
  json example;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const BFieldParams& p2 = triples[i];
    IntMat m = corollary_matrix(p2);
    BFieldParams p1 = derived_source(p2);
    Lattice g2 = twisted_generator_gram(p2);
    bool ok = p1.is_admissible();
    Lattice g1 = twisted_generator_gram(p1);
    ok = ok && is_isometry(m, g1, g2) && abs(determinant(m)) == 1;
    if (!ok) derived_failures.push_back(static_cast<std::int64_t>(i));

    BFieldParams ind{make_rat(rng.odd(cfg.numerator_bound), 2),
                     make_rat(rng.odd(cfg.numerator_bound), 2),
                     make_rat(rng.odd(cfg.numerator_bound), 2)};
    if (is_isometry(m, twisted_generator_gram(ind), g2)) ++independent_holds;
    if (i == 0)
      example = json{{"matrix", jmat(m)},
                     {"target_params", jtriple(p2)},
                     {"derived_source_params", jtriple(p1)}};
  }
  std::vector<Reading> rs{
      {"source lift derived from the target lift", derived_failures.empty(), example},
      {"independent source lift",
       independent_holds == static_cast<std::int64_t>(triples.size()),
       json{{"holds_for", independent_holds}, {"out_of", triples.size()}}}};
  r.status = status_from_readings(rs);
  r.witness["readings"] = readings_json(rs);
  r.witness["failing_samples"] = derived_failures;
  r.witness["samples"] = cfg.samples;
  r.notes.push_back("matrix entries are integral because k4 is even and ks is odd");
  return r;
}

CheckResult check_appb_moduli_vector(const SweepConfig&) {
  CheckResult r = make_check("appB-moduli-vector", CheckStatus::fail,
      "4e0 + 4B - (2B.h)h - s - ((2k4+ks-1)/2)e4 is integral with even square >= -2");
  ConcreteBField b = realize_bfield(default_params());
  BFieldParams p = b.params();
  TripleInts t = doubled(p);
  Lattice gg = twisted_generator_gram(b);
  Int k4 = k4_of(p);

  IntVec v{2, -t.vh, -1, -div_exact(2 * k4 + t.vs - 1, 2)};
  Int sq = pair_with(gg.gram, v, v);
  bool ok = sq % 2 == 0 && sq >= -2;
  std::vector<Reading> rs;
  rs.push_back({"ks = 2*B.s and (2B.h)h scaling", ok,
                json{{"square", jint(sq)}, {"generator_coords", jvec(v)}}});
  // literal scaling: (B.h)h and ks = B.s give non-integral coefficients
  bool lit = is_integral(p.bh) && is_integral(p.bs);
  rs.push_back({"ks = B.s and (B.h)h scaling", lit, json{{"integral", lit}}});
  r.status = status_from_readings(rs);
  r.witness["readings"] = readings_json(rs);
  return r;
}

CheckResult check_half_pairing_rescale(const SweepConfig&) {
  CheckResult r = make_check("half-pairing-rescale", CheckStatus::fail,
      "the doubled-form intersection of two index-2 overlattices halves to an even "
                "lattice with |disc| = 16 equal to the base");
  Models m = build_models(default_params());
  Diagram d = build_diagram(m);
  Lattice doubled_ambient = rescale(d.tprime, 2);
  Embedding e1(doubled_ambient, d.mid_bases[0]);
  Embedding e2(doubled_ambient, d.mid_bases[1]);
  Embedding inter = sublattice_intersection(e1, e2);
  Lattice halved = rescale(inter.sublattice(), make_rat(1, 2));
  bool ok = inter.basis == d.base_in_tprime;
  ok = ok && halved.is_even() && abs(halved.determinant()) == 16;
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness["halved_disc"] = jint(halved.determinant());
  r.witness["even"] = halved.is_even();
  return r;
}

using CheckFn = CheckResult (*)(const SweepConfig&);

const std::map<std::string, CheckFn>& registry_map() {
  static const std::map<std::string, CheckFn> m{
      {"alpha-nontrivial", check_alpha_nontrivial},
      {"appB-corollary-isometry", check_appb_corollary_isometry},
      {"appB-fano-pic", check_appb_fano_pic},
      {"appB-moduli-vector", check_appb_moduli_vector},
      {"appB-solve-w", check_appb_solve_w},
      {"beta-product", check_beta_product},
      {"complement-duality", check_complement_duality},
      {"diagram-intersection", check_diagram_intersection},
      {"disc-form-matrix", check_disc_form_matrix},
      {"disc-group-z4z4", check_disc_group_z4z4},
      {"fano-kernel-chain", check_fano_kernel_chain},
      {"fiber-isotropic", check_fiber_isotropic},
      {"half-pairing-rescale", check_half_pairing_rescale},
      {"overlattice-three-2", check_overlattice_three_2},
      {"overlattice-unique-4", check_overlattice_unique_4},
      {"pic-disc", check_pic_disc},
      {"residue-invariance", check_residue_invariance},
      {"restriction-classes", check_restriction_classes},
      {"twisted-alg-16", check_twisted_alg_16},
  };
  return m;
}

const std::vector<std::string> kSweepChecks{
    "twisted-alg-16", "disc-group-z4z4", "complement-duality", "appB-solve-w",
    "appB-corollary-isometry"};

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::ambiguous:
      return "ambiguous";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "fail";
}

bool CheckResult::ok() const {
  switch (status) {
    case CheckStatus::pass:
    case CheckStatus::skipped:
      return true;
    case CheckStatus::fail:
      return false;
    case CheckStatus::ambiguous:
      break;
  }
  if (!witness.contains("readings")) return false;
  for (const auto& r : witness["readings"])
    if (r.value("pass", false)) return true;
  return false;
}

std::vector<BFieldParams> sampled_triples(const SweepConfig& config) {
  Rng rng(config.seed, "bfield-sweep");
  std::vector<BFieldParams> out;
  for (std::int64_t i = 0; i < config.samples; ++i) {
    BFieldParams p{make_rat(rng.odd(config.numerator_bound), 2),
                   make_rat(rng.odd(config.numerator_bound), 2),
                   make_rat(rng.odd(config.numerator_bound), 2)};
    out.push_back(p);
  }
  return out;
}

const std::vector<std::string>& check_registry() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, fn] : registry_map()) v.push_back(k);
    return v;
  }();
  return names;
}

CheckResult run_check(const std::string& name, const SweepConfig& config) {
  auto it = registry_map().find(name);
  if (it == registry_map().end()) throw DomainError("unknown check name: " + name);
  return it->second(config);
}

nlohmann::json sweep_bfields(const SweepConfig& config) {
  json frag;
  frag["samples"] = config.samples;
  frag["seed"] = config.seed;
  frag["numerator_bound"] = config.numerator_bound;
  json triples = json::array();
  for (const BFieldParams& p : sampled_triples(config)) triples.push_back(jtriple(p));
  frag["triples"] = triples;
  json checks = json::object();
  for (const std::string& name : kSweepChecks) {
    if (config.samples <= 0) continue;
    CheckResult r = run_check(name, config);
    json entry;
    entry["status"] = to_string(r.status);
    entry["ok"] = r.ok();
    if (r.witness.contains("failing_samples"))
      entry["failing_samples"] = r.witness["failing_samples"];
    checks[name] = entry;
  }
  frag["checks"] = checks;
  return frag;
}

Report run_all(const SweepConfig& config) {
  Report rep;
  rep.suite_version = kSuiteVersion;
  rep.convention = kMukaiConvention;
  rep.config = config;
  for (const std::string& name : check_registry()) rep.checks.push_back(run_check(name, config));
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });

  json frag;
  frag["samples"] = config.samples;
  json triples = json::array();
  for (const BFieldParams& p : sampled_triples(config)) triples.push_back(jtriple(p));
  frag["triples"] = triples;
  json sweep_checks = json::object();
  for (const CheckResult& r : rep.checks) {
    if (std::find(kSweepChecks.begin(), kSweepChecks.end(), r.name) == kSweepChecks.end())
      continue;
    json entry;
    entry["status"] = to_string(r.status);
    if (r.witness.contains("failing_samples"))
      entry["failing_samples"] = r.witness["failing_samples"];
    sweep_checks[r.name] = entry;
  }
  frag["checks"] = sweep_checks;
  rep.sweep = frag;

  rep.overall_pass = true;
  for (const CheckResult& r : rep.checks) rep.overall_pass = rep.overall_pass && r.ok();
  return rep;
}

nlohmann::json report_json(const Report& report) {
  json j;
  j["suite_version"] = report.suite_version;
  j["convention"] = report.convention;
  j["config"] = json{{"samples", report.config.samples},
                     {"seed", report.config.seed},
                     {"numerator_bound", report.config.numerator_bound}};
  json checks = json::array();
  for (const CheckResult& r : report.checks) {
    json c;
    c["name"] = r.name;
    c["status"] = to_string(r.status);
    c["ok"] = r.ok();
    c["statement"] = r.statement;
    c["witness"] = r.witness;
    c["notes"] = r.notes;
    checks.push_back(c);
  }
  j["checks"] = checks;
  j["sweep"] = report.sweep;
  j["overall"] = report.overall_pass ? "pass" : "fail";
  return j;
}

std::string canonical_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string report_text(const Report& report) {
  std::ostringstream os;
  os << "verification suite " << report.suite_version << "\n";
  os << "convention: " << report.convention << "\n";
  os << "config: seed=" << report.config.seed << " samples=" << report.config.samples
     << " numerator_bound=" << report.config.numerator_bound << "\n\n";
  for (const CheckResult& r : report.checks) {
    os << (r.ok() ? "[ ok ]" : "[FAIL]") << " " << r.name << " (" << to_string(r.status) << ")\n";
    os << "       " << r.statement << "\n";
  }
  os << "\noverall: " << (report.overall_pass ? "pass" : "fail") << "\n";
  return os.str();
}

AppBSolveResult appendix_b_solve(const ConcreteBField& b, const Int& square,
                                 const Int& e4_pairing) {
  AppBSolveResult out;
  Lattice gg = twisted_generator_gram(b);
  IntMat rows = twisted_generator_rows(b);
  TripleInts t = doubled(b.params());

  auto to_mukai = [&](const IntVec& gen_coords) {
    RatVec coords(kMukaiRank);
    for (std::size_t j = 0; j < kMukaiRank; ++j) {
      Rat s = 0;
      for (std::size_t i = 0; i < 4; ++i) s += Rat(gen_coords[i] * rows.at(i, j));
      coords[j] = s;
    }
    return MukaiVector::from_coords(coords);
  };

  // w = x0 (2e0+2B) + xh h + xs s + x4 e4;  w.e4 = -2 x0,  w.h = x0 vh + 2 xh
  if (e4_pairing % 2 != 0) return out;
  Int x0 = -div_exact(e4_pairing, 2);
  if ((x0 * t.vh) % 2 != 0) return out;  // vh odd: x0 must be even
  Int xh = -div_exact(x0 * t.vh, 2);

  if (x0 == 0) {
    // w = xs s + x4 e4 with w^2 = -2 xs^2, x4 unconstrained
    if (square > 0 || square % 2 != 0) return out;
    Int target = -div_exact(square, 2);
    Int root;
    mpz_sqrt(root.get_mpz_t(), target.get_mpz_t());
    if (root * root != target) return out;
    out.e4_line = true;
    if (root == 0) {
      out.canonical.push_back(MukaiVector::zero());
    } else {
      out.canonical.push_back(to_mukai({0, 0, -root, 0}));
      out.canonical.push_back(to_mukai({0, 0, root, 0}));
    }
    return out;
  }

  const Int period = 2 * abs(x0);
  out.s_period = period;
  for (Int r = 0; r < period; ++r) {
    IntVec base{x0, xh, r, 0};
    Int e = pair_with(gg.gram, base, base);
    // e4 contributes -4 x0 per unit of x4
    Int num = e - square;
    if (num % (4 * x0) != 0) continue;
    Int x4 = div_exact(num, 4 * x0);
    out.s_residues.push_back(r);
    out.canonical.push_back(to_mukai({x0, xh, r, x4}));
  }
  return out;
}

}  // namespace lattk
