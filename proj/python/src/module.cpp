#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lattk/checks.hpp"
#include "lattk/gram_io.hpp"

namespace py = pybind11;
using namespace lattk;

namespace {

// arbitrary-precision bridging goes through decimal strings
Int to_int(py::handle obj) { return Int(py::str(obj).cast<std::string>()); }

py::object from_int(const Int& v) {
  return py::module_::import("builtins").attr("int")(py::str(v.get_str()));
}

Rat to_rat(py::handle obj) {
  if (py::isinstance<py::int_>(obj)) return Rat(to_int(obj));
  return parse_rational_string(py::str(obj).cast<std::string>());
}

IntMat to_mat(const py::sequence& rows) {
  std::vector<IntVec> data;
  for (py::handle row : rows) {
    IntVec r;
    for (py::handle v : row.cast<py::sequence>()) r.push_back(to_int(v));
    data.push_back(std::move(r));
  }
  return IntMat::from_rows(std::move(data));
}

py::list from_mat(const IntMat& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(from_int(m.at(i, j)));
    rows.append(row);
  }
  return rows;
}

py::list from_vec(const IntVec& v) {
  py::list out;
  for (const Int& x : v) out.append(from_int(x));
  return out;
}

BFieldParams params_from(py::handle bsq, py::handle bh, py::handle bs) {
  return BFieldParams{to_rat(bsq), to_rat(bh), to_rat(bs)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact integral-lattice toolkit: SNF, discriminant forms, K3/Mukai models, "
            "verification checks";

  m.def("snf", [](const py::sequence& a) {
    SnfDecomposition s = snf(to_mat(a));
    return py::make_tuple(from_mat(s.u), from_mat(s.d), from_mat(s.v));
  }, py::arg("matrix"), "Smith normal form (u, d, v) with u*a*v = d");

  m.def("determinant", [](const py::sequence& a) { return from_int(determinant(to_mat(a))); },
        py::arg("matrix"));

  m.def("hnf", [](const py::sequence& a) { return from_mat(hnf(to_mat(a))); }, py::arg("matrix"),
        "canonical row Hermite form");

  m.def("saturated_kernel",
        [](const py::sequence& a) { return from_mat(saturated_kernel(to_mat(a))); },
        py::arg("matrix"), "saturated basis of {x : x*a = 0}");

  m.def("solve_integral", [](const py::sequence& a, const py::sequence& b) -> py::object {
    IntVec rhs;
    for (py::handle v : b) rhs.push_back(to_int(v));
    auto x = solve_integral(to_mat(a), rhs);
    if (!x) return py::none();
    return from_vec(*x);
  }, py::arg("matrix"), py::arg("rhs"));

  m.def("signature", [](const py::sequence& gram) {
    Signature s = signature(Lattice(to_mat(gram)));
    return py::make_tuple(s.positives, s.negatives, s.zeros);
  }, py::arg("gram"));

  m.def("discriminant_group", [](const py::sequence& gram) {
    FiniteQuadraticForm f = discriminant_group(Lattice(to_mat(gram)));
    py::dict d;
    d["orders"] = from_vec(f.orders);
    py::list q;
    for (const Rat& v : f.q) q.append(rat_string(v));
    d["q"] = q;
    py::list b;
    for (std::size_t i = 0; i < f.orders.size(); ++i) {
      py::list row;
      for (std::size_t j = 0; j < f.orders.size(); ++j) row.append(rat_string(f.b.at(i, j)));
      b.append(row);
    }
    d["b"] = b;
    d["from_even_lattice"] = f.from_even_lattice;
    return d;
  }, py::arg("gram"), "orders, q (mod 2) and b (mod 1) of the discriminant form");

  m.def("orthogonal_complement", [](const py::sequence& gram, const py::sequence& basis) {
    Embedding e(Lattice(to_mat(gram)), to_mat(basis));
    return from_mat(orthogonal_complement(e).basis);
  }, py::arg("gram"), py::arg("basis"));

  m.def("overlattices_of_index", [](const py::sequence& gram, py::handle n) {
    py::list out;
    for (const Overlattice& o : overlattices_of_index(Lattice(to_mat(gram)), to_int(n))) {
      py::dict d;
      d["gram"] = from_mat(o.inclusion.ambient.gram);
      d["inclusion"] = from_mat(o.inclusion.basis);
      d["quotient"] = from_vec(o.quotient);
      out.append(d);
    }
    return out;
  }, py::arg("gram"), py::arg("index"));

  m.def("standard_gram",
        [](const std::string& name) { return from_mat(standard_lattice(name).gram); },
        py::arg("name"), "U, E8minus, K3 or Mukai");

  m.def("standard_labels", [](const std::string& name) {
    if (name == "U") return standard_labels(StandardLattice::U);
    if (name == "E8minus") return standard_labels(StandardLattice::E8minus);
    if (name == "K3") return standard_labels(StandardLattice::K3);
    if (name == "Mukai") return standard_labels(StandardLattice::Mukai);
    throw DomainError("unknown standard lattice name: " + name);
  }, py::arg("name"));

  m.def("realize_bfield", [](py::handle bsq, py::handle bh, py::handle bs) {
    ConcreteBField b = realize_bfield(params_from(bsq, bh, bs));
    py::list out;
    for (const Rat& c : b.coords) out.append(rat_string(c));
    return out;
  }, py::arg("bsq"), py::arg("bh"), py::arg("bs"),
     "concrete half-integral B-field with the given residues, as \"p/q\" strings");

  m.def("twisted_gram", [](py::handle bsq, py::handle bh, py::handle bs) {
    return from_mat(twisted_generator_gram(params_from(bsq, bh, bs)).gram);
  }, py::arg("bsq"), py::arg("bh"), py::arg("bs"),
     "Gram of (2e0+2B, h, s, e4) in the twisted Mukai lattice");

  m.def("transcendental_gram", [](py::handle bsq, py::handle bh, py::handle bs) {
    ConcreteBField b = realize_bfield(params_from(bsq, bh, bs));
    return from_mat(transcendental_models(b).tx.sublattice().gram);
  }, py::arg("bsq"), py::arg("bh"), py::arg("bs"),
     "Gram of the index-2 functional kernel inside the (h,s)-complement");

  m.def("check_registry", [] { return check_registry(); });

  m.def("run_check", [](const std::string& name, std::uint64_t seed, std::int64_t samples) {
    SweepConfig cfg;
    cfg.seed = seed;
    cfg.samples = samples;
    CheckResult r = run_check(name, cfg);
    py::dict d;
    d["name"] = r.name;
    d["status"] = to_string(r.status);
    d["ok"] = r.ok();
    d["statement"] = r.statement;
    d["witness_json"] = r.witness.dump();
    return d;
  }, py::arg("name"), py::arg("seed") = 0, py::arg("samples") = 100);

  m.def("run_all_json", [](std::uint64_t seed, std::int64_t samples) {
    SweepConfig cfg;
    cfg.seed = seed;
    cfg.samples = samples;
    return canonical_json(report_json(run_all(cfg)));
  }, py::arg("seed") = 0, py::arg("samples") = 100,
     "canonical JSON report of the full verification suite");

  // translators run newest-first: register the base before the subclasses
  py::register_exception<Error>(m, "LatticeError");
  py::register_exception<CapacityError>(m, "CapacityError");
  py::register_exception<AdmissibilityError>(m, "AdmissibilityError");
  py::register_exception<ParseError>(m, "ParseFailure");
}
