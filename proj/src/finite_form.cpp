#include "lattk/finite_form.hpp"

#include <algorithm>
#include <set>

#include "lattk/snf.hpp"

namespace lattk {

namespace {

Int product(const IntVec& v) {
  Int p = 1;
  for (const Int& x : v) p *= x;
  return p;
}

void check_bound(const Int& order) {
  if (order > kEnumerationBound)
    throw CapacityError("group order " + order.get_str() + " exceeds enumeration bound " +
                        std::to_string(kEnumerationBound));
}

Int mod_pos(const Int& a, const Int& d) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return r;
}

}  // namespace

bool TorsionElement::is_zero() const {
  for (const Int& c : coeffs)
    if (c != 0) return false;
  return true;
}

Int TorsionElement::order() const {
  Int o = 1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Int oi = div_exact(orders[i], int_gcd(orders[i], coeffs[i]));
    o = int_lcm(o, oi);
  }
  return o;
}

TorsionElement element_sum(const TorsionElement& x, const TorsionElement& y) {
  if (x.orders != y.orders) throw DomainError("torsion elements from different groups");
  TorsionElement z{IntVec(x.coeffs.size()), x.orders};
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    z.coeffs[i] = mod_pos(x.coeffs[i] + y.coeffs[i], x.orders[i]);
  return z;
}

TorsionElement element_scale(const Int& k, const TorsionElement& x) {
  TorsionElement z{IntVec(x.coeffs.size()), x.orders};
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    z.coeffs[i] = mod_pos(k * x.coeffs[i], x.orders[i]);
  return z;
}

Int FiniteQuadraticForm::group_order() const { return product(orders); }

TorsionElement FiniteQuadraticForm::element(IntVec coeffs) const {
  if (coeffs.size() != orders.size()) throw DimensionError("coefficient count mismatch");
  TorsionElement e{std::move(coeffs), orders};
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) e.coeffs[i] = mod_pos(e.coeffs[i], orders[i]);
  return e;
}

TorsionElement FiniteQuadraticForm::zero() const {
  return TorsionElement{IntVec(orders.size(), 0), orders};
}

std::vector<TorsionElement> FiniteQuadraticForm::all_elements() const {
  check_bound(group_order());
  std::vector<TorsionElement> out;
  out.push_back(zero());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const long d = to_int64(orders[i]);
    const std::size_t base = out.size();
    for (long c = 1; c < d; ++c)
      for (std::size_t t = 0; t < base; ++t) {
        TorsionElement e = out[t];
        e.coeffs[i] = c;
        out.push_back(std::move(e));
      }
  }
  std::sort(out.begin(), out.end(),
            [](const TorsionElement& a, const TorsionElement& b) { return a.coeffs < b.coeffs; });
  return out;
}

QbValue qb_eval(const FiniteQuadraticForm& f, const TorsionElement& x, const TorsionElement& y) {
  if (x.orders != f.orders || y.orders != f.orders)
    throw DomainError("element does not belong to this form");
  const std::size_t k = f.orders.size();
  Rat qv = 0, bv = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (x.coeffs[i] != 0) {
      qv += Rat(x.coeffs[i] * x.coeffs[i]) * f.q[i];
      for (std::size_t j = i + 1; j < k; ++j)
        qv += Rat(2 * x.coeffs[i] * x.coeffs[j]) * f.b.at(i, j);
    }
    for (std::size_t j = 0; j < k; ++j)
      if (x.coeffs[i] != 0 && y.coeffs[j] != 0) bv += Rat(x.coeffs[i] * y.coeffs[j]) * f.b.at(i, j);
  }
  return {mod2(qv), mod1(bv)};
}

namespace {

using Key = std::vector<std::vector<long>>;  // sorted coefficient tuples

Key subgroup_key(const std::set<IntVec>& elems) {
  Key k;
  for (const IntVec& e : elems) {
    std::vector<long> row;
    row.reserve(e.size());
    for (const Int& c : e) row.push_back(to_int64(c));
    k.push_back(std::move(row));
  }
  return k;
}

// abelian closure of S u {g}: every s + k*g
std::set<IntVec> extend(const FiniteQuadraticForm& f, const std::set<IntVec>& s, const IntVec& g) {
  std::set<IntVec> out = s;
  TorsionElement ge = f.element(g);
  const long og = to_int64(ge.order());
  for (long k = 1; k < og; ++k) {
    TorsionElement kg = element_scale(k, ge);
    for (const IntVec& e : s) {
      TorsionElement sum = element_sum(f.element(e), kg);
      out.insert(sum.coeffs);
    }
  }
  return out;
}

}  // namespace

std::vector<Subgroup> isotropic_subgroups(const FiniteQuadraticForm& f, const Int& order) {
  check_bound(f.group_order());
  if (order < 1 || f.group_order() % order != 0) return {};
  const long target = to_int64(order);

  std::vector<TorsionElement> elems = f.all_elements();
  // grow subgroups, pruning anything beyond the target order
  std::set<Key> seen;
  std::vector<std::set<IntVec>> frontier;
  std::set<IntVec> trivial{f.zero().coeffs};
  seen.insert(subgroup_key(trivial));
  frontier.push_back(trivial);
  std::vector<std::set<IntVec>> hits;
  if (target == 1) hits.push_back(trivial);

  std::size_t head = 0;
  while (head < frontier.size()) {
    std::set<IntVec> s = frontier[head++];
    for (const TorsionElement& g : elems) {
      if (s.count(g.coeffs)) continue;
      std::set<IntVec> t = extend(f, s, g.coeffs);
      if (static_cast<long>(t.size()) > target) continue;
      Key key = subgroup_key(t);
      if (seen.count(key)) continue;
      seen.insert(std::move(key));
      if (static_cast<long>(t.size()) == target) hits.push_back(t);
      frontier.push_back(std::move(t));
    }
  }

  std::vector<Subgroup> out;
  for (const std::set<IntVec>& s : hits) {
    bool iso = true;
    std::vector<TorsionElement> members;
    for (const IntVec& c : s) {
      TorsionElement e = f.element(c);
      if (qb_eval(f, e, e).q != 0) {
        iso = false;
        break;
      }
      members.push_back(std::move(e));
    }
    if (!iso) continue;
    out.push_back(Subgroup{members, abelian_structure(members, f.orders)});
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    std::vector<IntVec> ka, kb;
    for (const auto& e : a.elements) ka.push_back(e.coeffs);
    for (const auto& e : b.elements) kb.push_back(e.coeffs);
    return ka < kb;
  });
  return out;
}

IntVec abelian_structure(const std::vector<TorsionElement>& gens, const IntVec& ambient_orders) {
  const std::size_t k = ambient_orders.size();
  // rows: generators plus the ambient relations diag(d)
  IntMat stack(gens.size() + k, k);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) stack.at(i, j) = gens[i].coeffs[j];
  for (std::size_t j = 0; j < k; ++j) stack.at(gens.size() + j, j) = ambient_orders[j];
  IntMat span = hnf(stack);  // k x k, full rank
  // subgroup = rowspan(span) / rowspan(diag(d)); express relations in span coords
  RatMat inv = RatMat::from_int(span).inverse();
  IntMat rel(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rat v = Rat(ambient_orders[i]) * inv.at(i, j);
      if (!is_integral(v)) throw DomainError("relation matrix not integral");
      rel.at(i, j) = v.get_num();
    }
  return snf(rel).elementary_divisors();
}

std::optional<std::vector<TorsionElement>> form_isomorphism(const FiniteQuadraticForm& f1,
                                                            const FiniteQuadraticForm& f2) {
  check_bound(f1.group_order());
  check_bound(f2.group_order());
  if (f1.orders != f2.orders) return std::nullopt;
  const std::size_t k = f1.orders.size();
  if (k == 0) return std::vector<TorsionElement>{};

  std::vector<TorsionElement> pool = f2.all_elements();
  std::vector<std::vector<TorsionElement>> candidates(k);
  for (std::size_t i = 0; i < k; ++i)
    for (const TorsionElement& e : pool) {
      if (e.order() != f1.orders[i]) continue;
      if (qb_eval(f2, e, e).q != f1.q[i]) continue;
      candidates[i].push_back(e);
    }

  std::vector<TorsionElement> images;
  const Int total = f1.group_order();
  const std::vector<TorsionElement> e1 = f1.all_elements();

  // identity assignment first, so f ~ f reports the identity
  {
    std::vector<TorsionElement> id;
    for (std::size_t i = 0; i < k; ++i) {
      IntVec c(k, 0);
      c[i] = 1;
      id.push_back(f2.element(std::move(c)));
    }
    bool matches = true;
    for (std::size_t i = 0; i < k && matches; ++i) {
      matches = qb_eval(f2, id[i], id[i]).q == f1.q[i];
      for (std::size_t j = i + 1; j < k && matches; ++j)
        matches = qb_eval(f2, id[i], id[j]).b == f1.b.at(i, j);
    }
    if (matches) {
      std::set<IntVec> seen;
      bool full = true;
      for (const TorsionElement& x : e1) {
        TorsionElement y = f2.zero();
        for (std::size_t i = 0; i < k; ++i) y = element_sum(y, element_scale(x.coeffs[i], id[i]));
        if (qb_eval(f1, x, x).q != qb_eval(f2, y, y).q) {
          full = false;
          break;
        }
        seen.insert(y.coeffs);
      }
      if (full && Int(seen.size()) == total) return id;
    }
  }

  auto full_check = [&](const std::vector<TorsionElement>& img) -> bool {
    // bijectivity plus q preservation on every element
    std::set<IntVec> seen;
    for (const TorsionElement& x : e1) {
      TorsionElement y = f2.zero();
      for (std::size_t i = 0; i < k; ++i)
        y = element_sum(y, element_scale(x.coeffs[i], img[i]));
      if (qb_eval(f1, x, x).q != qb_eval(f2, y, y).q) return false;
      seen.insert(y.coeffs);
    }
    return Int(seen.size()) == total;
  };

  std::optional<std::vector<TorsionElement>> found;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) {
      if (full_check(images)) {
        found = images;
        return true;
      }
      return false;
    }
    for (const TorsionElement& cand : candidates[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i; ++j)
        if (qb_eval(f2, images[j], cand).b != f1.b.at(j, i)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      images.push_back(cand);
      if (self(self, i + 1)) return true;
      images.pop_back();
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

FiniteQuadraticForm negate(const FiniteQuadraticForm& f) {
  FiniteQuadraticForm out = f;
  for (std::size_t i = 0; i < f.orders.size(); ++i) {
    out.q[i] = mod2(-f.q[i]);
    for (std::size_t j = 0; j < f.orders.size(); ++j) out.b.at(i, j) = mod1(-f.b.at(i, j));
  }
  return out;
}

}  // namespace lattk
