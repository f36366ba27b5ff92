// Python bindings. Algebras cross the boundary as opaque handles; results come
// back as plain dicts with the same layout as the CLI report "results".

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grext/algebra.hpp"
#include "grext/construct.hpp"
#include "grext/equiv.hpp"
#include "grext/error.hpp"
#include "grext/io.hpp"
#include "grext/selfinj.hpp"

namespace py = pybind11;
using namespace grext;

namespace {

// The field is process-global; every handle remembers the prime it was built
// under and reinstates it before touching the algebra.
struct Algebra {
  AlgebraPtr ptr;
  std::uint32_t p;

  explicit Algebra(AlgebraPtr a) : ptr(std::move(a)), p(prime()) {}
  const AlgebraPtr& use() const {
    set_prime(p);
    return ptr;
  }
};

py::object to_py(const io::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Algebra from_json_text(const std::string& text) { return Algebra(io::parse_algebra(text)); }

}  // namespace

PYBIND11_MODULE(_grext, m) {
  m.doc() = "Graded algebras over prime fields";

  // leaked on purpose: the translator may run during interpreter shutdown
  static const auto* error_type =
      new py::object(py::reinterpret_steal<py::object>(PyErr_NewException("grext.GrextError", PyExc_RuntimeError, nullptr)));
  m.attr("GrextError") = *error_type;
  py::register_exception_translator([](std::exception_ptr e) {
    try {
      if (e) std::rethrow_exception(e);
    } catch (const Error& err) {
      py::object exc = (*error_type)(err.what());
      exc.attr("kind") = std::string(to_string(err.kind()));
      exc.attr("witness") = err.witness() ? py::cast(*err.witness()) : py::none();
      PyErr_SetObject(error_type->ptr(), exc.ptr());
    }
  });

  py::class_<Algebra>(m, "Algebra")
      .def_static("from_json", &from_json_text, py::arg("text"))
      .def_static("load", [](const std::string& path) { return Algebra(io::load_algebra(path)); }, py::arg("path"))
      .def_static("example", [](const std::string& kind, int param) { return Algebra(io::gen_example(kind, param)); },
                  py::arg("kind"), py::arg("param") = 0)
      .def("to_json", [](const Algebra& a) { return io::save_algebra(*a.use()); })
      .def_property_readonly("prime", [](const Algebra& a) { return a.p; })
      .def_property_readonly("dim", [](const Algebra& a) { return a.ptr->dim(); })
      .def_property_readonly("names", [](const Algebra& a) { return a.ptr->names(); })
      .def_property_readonly("degrees", [](const Algebra& a) { return a.ptr->degrees(); })
      .def_property_readonly("top_degree", [](const Algebra& a) { return a.ptr->top_degree(); })
      .def_property_readonly("component_dims", [](const Algebra& a) { return a.ptr->component_dims(); })
      .def_property_readonly("idempotent_count", [](const Algebra& a) { return a.ptr->idempotent_count(); })
      .def("__repr__", [](const Algebra& a) {
        return "<Algebra dim=" + std::to_string(a.ptr->dim()) + " c=" + std::to_string(a.ptr->top_degree()) +
               " p=" + std::to_string(a.p) + ">";
      });

  m.def("beilinson", [](const Algebra& a) { return Algebra(beilinson(a.use())); });
  m.def("trivial_extension", [](const Algebra& b) { return Algebra(T_of(b.use())); },
        "B ⋉ D(B) for a trivially graded B");
  m.def("beilinson_trivial_extension", [](const Algebra& a) { return Algebra(t_of(a.use())); }, "b(A) ⋉ x(A)");
  m.def("degree_zero_part", [](const Algebra& a) { return Algebra(degree_zero_part(*a.use())); });
  m.def("forget_grading", [](const Algebra& a) { return Algebra(forget_grading(*a.use())); });

  m.def("is_basic", [](const Algebra& a) { return is_basic(*a.use()); });
  m.def("is_left_well_graded", [](const Algebra& a) { return is_left_well_graded(*a.use()).holds; });
  m.def("is_right_well_graded", [](const Algebra& a) { return is_right_well_graded(*a.use()).holds; });
  m.def("is_graded_frobenius", [](const Algebra& a) { return is_graded_frobenius(a.use()); });
  m.def("is_top_component_faithful", [](const Algebra& a) { return is_Ac_faithful(*a.use()); });
  m.def("self_injectivity", [](const Algebra& a) { return to_py(io::to_json(is_graded_selfinjective(a.use()))); });
  m.def("nakayama", [](const Algebra& a) { return to_py(io::to_json(graded_nakayama(a.use()))); });
  m.def("global_dimension",
        [](const Algebra& a, int cutoff) { return to_py(io::to_json(global_dimension(a.use(), cutoff))); },
        py::arg("algebra"), py::arg("cutoff") = kDefaultGldimCutoff);
  m.def("derive_sigma",
        [](const Algebra& a, std::uint64_t seed) {
          const TData td = build_t(a.use());
          return to_py(io::to_json(extract_sigma(td.b, td.x, seed, td.t)));
        },
        py::arg("algebra"), py::arg("seed") = 1);
  m.def("equivalence_certificate",
        [](const Algebra& a, std::uint64_t seed, int window) {
          const EquivalenceCertificate cert = theorem_pipeline(a.use(), seed, window);
          return to_py(io::to_json(cert));
        },
        py::arg("algebra"), py::arg("seed") = 1, py::arg("window") = -1);
}
