#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gconv/io.hpp"
#include "gconv/oracle.hpp"

namespace py = pybind11;
using namespace gconv;

namespace {

using carray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

Signal signal_from_array(const GroupSpec& spec, const cplx* data) {
  return Signal(spec, std::vector<cplx>(data, data + spec.cardinality()));
}

carray to_array(const Signal& s) {
  carray out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(s.size())});
  std::copy(s.values().begin(), s.values().end(), out.mutable_data());
  return out;
}

Signal signal_arg(const std::vector<std::size_t>& group, const carray& values) {
  GroupSpec spec(group);
  if (values.ndim() != 1 || static_cast<std::size_t>(values.shape(0)) != spec.cardinality()) {
    throw ShapeError("expected a 1-d array of length |G| = " + std::to_string(spec.cardinality()));
  }
  return signal_from_array(spec, values.data());
}

/// taps: (M, N, |G|) complex array.
FilterMatrix filter_from_array(const std::vector<std::size_t>& group, const carray& taps) {
  GroupSpec spec(group);
  if (taps.ndim() != 3 || static_cast<std::size_t>(taps.shape(2)) != spec.cardinality()) {
    throw ShapeError("filter taps must have shape (M, N, |G|)");
  }
  const auto rows = static_cast<std::size_t>(taps.shape(0));
  const auto cols = static_cast<std::size_t>(taps.shape(1));
  std::vector<Signal> entries;
  for (std::size_t k = 0; k < rows * cols; ++k) {
    entries.push_back(signal_from_array(spec, taps.data() + k * spec.cardinality()));
  }
  return FilterMatrix(spec, rows, cols, std::move(entries));
}

carray taps_array(const FilterMatrix& a) {
  const std::size_t order = a.spec().cardinality();
  carray out({static_cast<py::ssize_t>(a.rows()), static_cast<py::ssize_t>(a.cols()), static_cast<py::ssize_t>(order)});
  cplx* dst = out.mutable_data();
  for (const auto& e : a.entries()) dst = std::copy(e.values().begin(), e.values().end(), dst);
  return out;
}

carray symbol_array(const SymbolMatrix& s) {
  carray out({static_cast<py::ssize_t>(s.size()), static_cast<py::ssize_t>(s.rows()), static_cast<py::ssize_t>(s.cols())});
  auto view = out.mutable_unchecked<3>();
  for (std::size_t xi = 0; xi < s.size(); ++xi) {
    for (std::size_t m = 0; m < s.rows(); ++m) {
      for (std::size_t n = 0; n < s.cols(); ++n) view(xi, m, n) = s.at(xi)(m, n);
    }
  }
  return out;
}

carray matrix_array(const Eigen::MatrixXcd& m) {
  carray out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
  auto view = out.mutable_unchecked<2>();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) view(i, k) = m(i, k);
  }
  return out;
}

VectorSignal vector_from_array(const GroupSpec& spec, const carray& x) {
  if (x.ndim() != 2 || static_cast<std::size_t>(x.shape(1)) != spec.cardinality()) {
    throw ShapeError("vector signal must have shape (N, |G|)");
  }
  std::vector<Signal> comps;
  for (py::ssize_t n = 0; n < x.shape(0); ++n) comps.push_back(signal_from_array(spec, x.data() + n * x.shape(1)));
  return VectorSignal(spec, std::move(comps));
}

carray vector_array(const VectorSignal& x) {
  const std::size_t order = x.spec().cardinality();
  carray out({static_cast<py::ssize_t>(x.size()), static_cast<py::ssize_t>(order)});
  cplx* dst = out.mutable_data();
  for (const auto& c : x.components()) dst = std::copy(c.values().begin(), c.values().end(), dst);
  return out;
}

py::object json_to_py(const io::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

GeneratorSystem system_from_args(const std::vector<std::size_t>& ambient, const std::vector<std::size_t>& acting,
                                 const std::vector<std::vector<std::size_t>>& embedding, const carray& generators) {
  GroupSpec K(ambient);
  std::vector<Element> images;
  for (const auto& e : embedding) images.push_back(Element{e});
  if (generators.ndim() != 2 || static_cast<std::size_t>(generators.shape(1)) != K.cardinality()) {
    throw ShapeError("generators must have shape (N, |K|)");
  }
  std::vector<Signal> gens;
  for (py::ssize_t n = 0; n < generators.shape(0); ++n) {
    gens.push_back(signal_from_array(K, generators.data() + n * generators.shape(1)));
  }
  return GeneratorSystem(K, GroupSpec(acting), std::move(images), std::move(gens));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Translation-invariant operators on finite abelian groups";
  m.attr("__version__") = io::kToolVersion;

  py::register_exception<NotInvertible>(m, "NotInvertible", PyExc_ArithmeticError);
  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);

  py::class_<GroupSpec>(m, "GroupSpec")
      .def(py::init<std::vector<std::size_t>>(), py::arg("orders"))
      .def_property_readonly("orders", &GroupSpec::orders)
      .def_property_readonly("cardinality", &GroupSpec::cardinality)
      .def("index_of", [](const GroupSpec& s, const std::vector<std::size_t>& r) { return s.index_of(Element{r}); })
      .def("element_at", [](const GroupSpec& s, std::size_t i) { return s.element_at(i).residues; })
      .def("__len__", &GroupSpec::cardinality)
      .def("__repr__", [](const GroupSpec& s) { return "GroupSpec(" + s.to_string() + ")"; });

  m.def(
      "character",
      [](const std::vector<std::size_t>& g, const std::vector<std::size_t>& xi, const std::vector<std::size_t>& group) {
        return character(Element{g}, DualPoint{xi}, GroupSpec(group));
      },
      py::arg("g"), py::arg("xi"), py::arg("group"));

  m.def(
      "forward",
      [](const std::vector<std::size_t>& group, const carray& x) { return to_array(forward(signal_arg(group, x))); },
      py::arg("group"), py::arg("x"), "x^(xi) = sum_g x(g) conj(<g, xi>)");
  m.def(
      "inverse",
      [](const std::vector<std::size_t>& group, const carray& X) {
        Signal s = signal_arg(group, X);
        return to_array(inverse(Signal(s.spec(), {s.values().begin(), s.values().end()}, Domain::Dual)));
      },
      py::arg("group"), py::arg("X"));
  m.def(
      "convolve",
      [](const std::vector<std::size_t>& group, const carray& x, const carray& y) {
        return to_array(convolve(signal_arg(group, x), signal_arg(group, y)));
      },
      py::arg("group"), py::arg("x"), py::arg("y"));

  py::class_<FilterMatrix>(m, "FilterMatrix")
      .def(py::init(&filter_from_array), py::arg("group"), py::arg("taps"),
           "taps: complex array of shape (M, N, |G|) in element-index order")
      .def_static("identity", [](const std::vector<std::size_t>& group, std::size_t n) {
        return FilterMatrix::identity(GroupSpec(group), n);
      })
      .def_property_readonly("group", [](const FilterMatrix& a) { return a.spec().orders(); })
      .def_property_readonly("rows", &FilterMatrix::rows)
      .def_property_readonly("cols", &FilterMatrix::cols)
      .def_property_readonly("taps", &taps_array)
      .def("to_json", [](const FilterMatrix& a) { return io::to_json(a).dump(); })
      .def_static("from_json", [](const std::string& s) { return io::filter_from_json(io::parse_text(s)); });

  m.def("symbol", [](const FilterMatrix& a) { return symbol_array(symbol(a)); }, "Transfer matrix, shape (|G|, M, N)");
  m.def("compose", &compose, py::arg("b"), py::arg("a"), "Filter of B o A");
  m.def("adjoint", &adjoint);
  m.def(
      "apply",
      [](const FilterMatrix& a, const carray& x) { return vector_array(apply(a, vector_from_array(a.spec(), x))); },
      py::arg("a"), py::arg("x"), "x: shape (N, |G|); returns shape (M, |G|)");
  m.def("densify", [](const FilterMatrix& a) { return matrix_array(oracle::densify(a).matrix); });

  m.def("operator_norm", [](const FilterMatrix& a) { return operator_norm(symbol(a)).value; });
  m.def("benzi_bound", [](const FilterMatrix& a) { return benzi_bound(symbol(a)); });
  m.def(
      "inverse_filter", [](const FilterMatrix& a, std::optional<double> tol) { return inverse_filter(a, tol); },
      py::arg("a"), py::arg("det_tol") = py::none());
  m.def(
      "inverse_norm",
      [](const FilterMatrix& a, std::optional<double> tol) { return inverse_norm(symbol(a), tol).value; },
      py::arg("a"), py::arg("det_tol") = py::none());
  m.def(
      "analyze", [](const FilterMatrix& a, std::optional<double> tol) { return json_to_py(io::to_json(analyze(symbol(a), tol))); },
      py::arg("a"), py::arg("det_tol") = py::none(), "Spectral report as a dict");

  m.def(
      "riesz_analysis",
      [](const std::vector<std::size_t>& ambient, const std::vector<std::size_t>& acting,
         const std::vector<std::vector<std::size_t>>& embedding, const carray& generators, std::optional<double> tol) {
        return json_to_py(io::to_json(riesz_analysis(system_from_args(ambient, acting, embedding, generators), tol)));
      },
      py::arg("ambient"), py::arg("acting"), py::arg("embedding"), py::arg("generators"),
      py::arg("det_tol") = py::none(), "Riesz report as a dict; generators has shape (N, |K|)");
  m.def(
      "dense_synthesis",
      [](const std::vector<std::size_t>& ambient, const std::vector<std::size_t>& acting,
         const std::vector<std::vector<std::size_t>>& embedding, const carray& generators) {
        return matrix_array(oracle::dense_synthesis(system_from_args(ambient, acting, embedding, generators)));
      },
      py::arg("ambient"), py::arg("acting"), py::arg("embedding"), py::arg("generators"));
}
