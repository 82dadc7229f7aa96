#include <optional>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bott/autgroup.hpp"
#include "bott/classify.hpp"
#include "bott/error.hpp"
#include "bott/json_io.hpp"
#include "bott/oracle.hpp"
#include "bott/ring.hpp"

namespace py = pybind11;
using namespace bott;

namespace {

// Classes cross the boundary as {(i, j, ...): coeff} with sorted index tuples.
using PyClass = py::dict;
using Rows = std::vector<std::vector<Coeff>>;

PyClass to_py(const CohomologyClass& c) {
  PyClass out;
  for (const auto& [m, coeff] : c.terms()) out[py::tuple(py::cast(m.indices()))] = coeff;
  return out;
}

CohomologyClass from_py(const PyClass& p) {
  CohomologyClass c;
  for (const auto& [idx, coeff] : p) c.add_term(Monomial::from_indices(idx.cast<std::vector<int>>()), coeff.cast<Coeff>());
  return c;
}

BottMatrix make_matrix(int n, const std::vector<std::tuple<int, int, Coeff>>& entries) {
  std::vector<UpperEntry> e;
  for (const auto& [i, j, v] : entries) e.push_back({i, j, v});
  return BottMatrix(n, e);
}

Rows rows_of(const IntMatrix& m) {
  Rows out(static_cast<std::size_t>(m.n()));
  for (int r = 0; r < m.n(); ++r)
    for (int c = 0; c < m.n(); ++c) out[static_cast<std::size_t>(r)].push_back(m(r, c));
  return out;
}

py::dict aut_to_py(const AutElement& a) {
  py::dict d;
  d["perm"] = a.perm;
  d["signs"] = a.signs;
  d["matrix"] = rows_of(a.matrix);
  return d;
}

}  // namespace

PYBIND11_MODULE(_bott, m) {
  m.doc() = "Integral cohomology rings of Bott manifolds";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "OverflowError", PyExc_ArithmeticError);
  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<BottMatrix>(m, "BottMatrix")
      .def(py::init(&make_matrix), py::arg("n"), py::arg("entries") = std::vector<std::tuple<int, int, Coeff>>{},
           "Strictly upper-triangular matrix from (i, j, value) entries, 1-based.")
      .def_property_readonly("n", &BottMatrix::n)
      .def("entry", &BottMatrix::entry)
      .def("entries",
           [](const BottMatrix& b) {
             std::vector<std::tuple<int, int, Coeff>> out;
             for (const auto& e : b.nonzero_entries()) out.emplace_back(e.i, e.j, e.value);
             return out;
           })
      .def("to_json", [](const BottMatrix& b) { return json::from_matrix(b).dump(); })
      .def_static("from_json", [](const std::string& s) { return json::to_matrix(json::parse(s)); })
      .def("__eq__", [](const BottMatrix& a, const BottMatrix& b) { return a == b; })
      .def("__repr__", [](const BottMatrix& b) { return "BottMatrix(" + json::from_matrix(b).dump() + ")"; });

  py::class_<BottRing>(m, "BottRing")
      .def(py::init<BottMatrix>())
      .def_property_readonly("n", &BottRing::n)
      .def_property_readonly("matrix", &BottRing::matrix)
      .def("alpha", [](const BottRing& r, int j) { return to_py(r.alpha(j)); })
      .def("mul", [](const BottRing& r, const PyClass& a, const PyClass& b) { return to_py(r.mul(from_py(a), from_py(b))); })
      .def("power", [](const BottRing& r, const PyClass& c, unsigned k) { return to_py(r.power(from_py(c), k)); })
      .def("chern_fiber_c1", [](const BottRing& r, int j) { return to_py(r.chern_fiber_c1(j)); });

  m.def("is_q_trivial", [](const BottMatrix& a) { return is_q_trivial(BottRing(a)); });
  m.def("square_zero_primitives", [](const BottMatrix& a) {
    std::vector<PyClass> out;
    for (const auto& f : square_zero_primitives(BottRing(a))) out.push_back(to_py(f.element));
    return out;
  });
  m.def("partition_invariant", [](const BottMatrix& a) { return partition_invariant(BottRing(a)).parts(); });
  m.def("classify", [](const BottMatrix& a) {
    const auto r = classify(BottRing(a));
    py::dict d;
    d["q_trivial"] = r.q_trivial;
    d["square_zero_count"] = r.square_zero_count;
    d["partition"] = r.partition ? py::cast(r.partition->parts()) : py::none();
    return d;
  });
  m.def("is_isomorphic", [](const BottMatrix& a, const BottMatrix& b) { return is_isomorphic(BottRing(a), BottRing(b)); });
  m.def("partitions_of", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& p : partitions_of(n)) out.push_back(p.parts());
    return out;
  });
  m.def("canonical_model", [](const std::vector<int>& parts) { return canonical_model(Partition(parts)); });
  m.def("aut_order", [](const std::vector<int>& parts) { return aut_order(Partition(parts)); });
  m.def("enumerate_automorphisms", [](int n) {
    py::list out;
    for (const auto& a : enumerate_automorphisms(n)) out.append(aut_to_py(a));
    return out;
  });
  m.def("brute_square_zero", [](const BottMatrix& a, int bound) {
    std::vector<PyClass> out;
    for (const auto& c : brute_square_zero(BottRing(a), bound)) out.push_back(to_py(c));
    return out;
  });
  m.def(
      "brute_iso_search",
      [](const BottMatrix& a, const BottMatrix& b, int bound) -> std::optional<Rows> {
        const auto w = brute_iso_search(BottRing(a), BottRing(b), bound);
        if (!w) return std::nullopt;
        return rows_of(w->matrix);
      },
      py::arg("a"), py::arg("b"), py::arg("bound") = 3,
      "Isomorphism H*(a) -> H*(b) with entries in [-bound, bound]; column j is the image of x_j.");
  m.def("betti_profile", [](const BottMatrix& a) { return betti_profile(BottRing(a)); });
}
