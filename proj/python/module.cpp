// Python bindings. Lattice points cross the boundary as lists of Python
// ints and rationals as fractions.Fraction, so nothing is rounded.

#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toriq/cli.hpp"
#include "toriq/conifold.hpp"
#include "toriq/io.hpp"
#include "toriq/metrics.hpp"
#include "toriq/states.hpp"

namespace py = pybind11;
using namespace toriq;

namespace {

Integer to_integer(const py::handle& h) {
  if (!py::isinstance<py::int_>(h)) throw py::type_error("lattice coordinates must be int");
  return Integer(py::str(h).cast<std::string>());
}

py::int_ from_integer(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::object from_rational(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(from_integer(numerator(q)), from_integer(denominator(q)));
}

LatticeVector to_lattice(const py::sequence& s) {
  std::vector<Integer> c;
  for (auto h : s) c.push_back(to_integer(h));
  return LatticeVector(std::move(c));
}

std::vector<LatticeVector> to_lattice_list(const py::sequence& s) {
  std::vector<LatticeVector> out;
  for (auto h : s) out.push_back(to_lattice(h.cast<py::sequence>()));
  return out;
}

py::list from_lattice(const LatticeVector& v) {
  py::list out;
  for (const auto& x : v) out.append(from_integer(x));
  return out;
}

py::list from_lattice_list(const std::vector<LatticeVector>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(from_lattice(v));
  return out;
}

py::list from_rational_vector(const RationalVector& v) {
  py::list out;
  for (const auto& x : v.coords()) out.append(from_rational(x));
  return out;
}

QState make_state(int m, const std::vector<Amplitude>& amps) { return QState(m, amps); }

int infer_qubits(std::size_t n) {
  int m = 0;
  while ((std::size_t{1} << m) < n) ++m;
  if ((std::size_t{1} << m) != n || m == 0) throw std::invalid_argument("amplitude count must be 2^m");
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Exact toric geometry and multi-qubit entanglement";

  py::register_exception<SchemaError>(mod, "SchemaError", PyExc_ValueError);

  py::class_<Cone>(mod, "Cone")
      .def_property_readonly("ambient_dim", &Cone::ambient_dim)
      .def_property_readonly("dimension", &Cone::dimension)
      .def_property_readonly("rays", [](const Cone& c) { return from_lattice_list(c.rays()); })
      .def_property_readonly("halfspaces", [](const Cone& c) { return from_lattice_list(c.halfspaces()); })
      .def_property_readonly("lineality", [](const Cone& c) { return from_lattice_list(c.lineality()); })
      .def("contains", [](const Cone& c, const py::sequence& v) { return cone_contains(c, to_lattice(v)); })
      .def("__eq__", [](const Cone& a, const Cone& b) { return a == b; })
      .def("__repr__", &Cone::to_string);

  mod.def("cone", [](const py::sequence& gens) { return cone_from_generators(to_lattice_list(gens)); },
          py::arg("generators"));
  mod.def("cone_from_halfspaces", [](const py::sequence& normals, std::size_t dim) {
    return Cone::from_halfspaces(to_lattice_list(normals), dim);
  });
  mod.def("dual_cone", &dual_cone);
  mod.def("is_smooth_cone", &is_smooth_cone);
  mod.def("is_simplicial", &is_simplicial);
  mod.def("cone_faces", &cone_faces);
  mod.def("intersect", &intersect);
  mod.def("hilbert_basis", [](const Cone& c) { return from_lattice_list(hilbert_basis(c).generators); });

  py::class_<Polytope>(mod, "Polytope")
      .def_property_readonly("ambient_dim", &Polytope::ambient_dim)
      .def_property_readonly("vertices", [](const Polytope& p) {
        py::list out;
        for (const auto& v : p.vertices()) out.append(from_rational_vector(v));
        return out;
      })
      .def("__eq__", [](const Polytope& a, const Polytope& b) { return a == b; });
  mod.def("cube_polytope", &cube_polytope, py::arg("m"));
  mod.def("polar", &polar);
  mod.def("polytope_json", &polytope_json);
  mod.def("polytope_off", &polytope_off);

  py::class_<Fan>(mod, "Fan")
      .def_property_readonly("ambient_dim", &Fan::ambient_dim)
      .def_property_readonly("cones", &Fan::cones)
      .def_property_readonly("maximal_cones", &Fan::maximal_cones)
      .def("__eq__", [](const Fan& a, const Fan& b) { return a == b; });
  mod.def("fan_from_cones", &fan_from_cones);
  mod.def("normal_fan", &normal_fan);
  mod.def("fan_is_smooth", &fan_is_smooth);
  mod.def("fan_json", &fan_json);

  mod.def("conifold_cone", &conifold_cone);
  mod.def("resolve_conifold", [](const std::string& d) {
    if (d != "a" && d != "b") throw std::invalid_argument("diagonal must be 'a' or 'b'");
    return resolve_conifold(d == "a" ? Diagonal::A : Diagonal::B);
  });
  mod.def("is_deformation_smooth", [](Complex omega) { return is_deformation_smooth(omega).smooth; });
  mod.def("quadric_to_matrix", [](Complex z1, Complex z2, Complex z3, Complex z4) {
    const auto m = quadric_to_matrix(QuadricPoint<Complex>{z1, z2, z3, z4});
    return py::make_tuple(m.a00, m.a01, m.a10, m.a11);
  });
  mod.def("matrix_to_quadric", [](Complex a00, Complex a01, Complex a10, Complex a11) {
    const auto z = matrix_to_quadric(AmplitudeMatrix<Complex>{a00, a01, a10, a11});
    return py::make_tuple(z.z1, z.z2, z.z3, z.z4);
  });

  // States are passed as flat amplitude lists of length 2^m, index x_m...x_1.
  auto state = [](const std::vector<Amplitude>& a) { return make_state(infer_qubits(a.size()), a); };
  mod.def("face_count", &face_count);
  mod.def("enumerate_faces", [](int m) {
    std::vector<std::string> out;
    for (const auto& f : enumerate_faces(m)) out.push_back(f.label(m));
    return out;
  });
  mod.def("face_minors", [state](const std::vector<Amplitude>& a) {
    const QState s = state(a);
    std::vector<std::pair<std::string, Amplitude>> out;
    for (const auto& e : face_minors(s).entries) out.emplace_back(e.face.label(s.num_qubits()), e.omega);
    return out;
  });
  mod.def("concurrence", [state](const std::vector<Amplitude>& a) { return concurrence_2qubit(state(a)); });
  mod.def("three_tangle", [state](const std::vector<Amplitude>& a) { return three_tangle(state(a)); });
  mod.def("flattening_rank", [state](const std::vector<Amplitude>& a, const std::vector<int>& subset) {
    return flattening_rank(state(a), subset);
  });
  mod.def("is_fully_separable", [state](const std::vector<Amplitude>& a) { return is_fully_separable(state(a)); });
  mod.def("factor_product", [state](const std::vector<Amplitude>& a) -> py::object {
    const auto f = factor_product(state(a));
    if (!f) return py::none();
    return py::cast(f->factors);
  });
  mod.def("segre_embed", [](const std::vector<std::pair<Amplitude, Amplitude>>& factors) {
    return segre_embed(ProductFactors{factors}).amplitudes();
  });

  py::class_<ConePoint>(mod, "ConePoint")
      .def(py::init<double, double, double, double, double, double>(), py::arg("r"), py::arg("psi"),
           py::arg("theta1"), py::arg("phi1"), py::arg("theta2"), py::arg("phi2"));
  py::class_<ResolvedParams>(mod, "ResolvedParams")
      .def(py::init<double, double, double>(), py::arg("a"), py::arg("rho"), py::arg("rho_prime"));
  mod.def("t11_metric", &t11_metric);
  mod.def("resolved_metric", &resolved_metric);

  mod.def("analyze", [](const std::string& json_text, bool normalize) {
    return analyze_report(parse_state_file(json_text), normalize);
  }, py::arg("json_text"), py::arg("normalize") = true);
  mod.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
