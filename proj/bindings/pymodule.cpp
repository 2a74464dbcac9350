#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "starq/dirac.hpp"
#include "starq/oscillator.hpp"
#include "starq/spin.hpp"
#include "starq/suites.hpp"
#include "starq/susy.hpp"
#include "starq/wick.hpp"

namespace py = pybind11;
using namespace starq;

namespace {

DiracKind kind_from_name(const std::string& name) {
  if (name == "d4") return DiracKind::D4;
  if (name == "d5") return DiracKind::D5;
  if (name == "d6") return DiracKind::D6;
  throw std::invalid_argument("unknown Dirac representation: " + name);
}

}  // namespace

PYBIND11_MODULE(_starq, m) {
  m.doc() = "Exact Grassmann/Clifford algebra with configurable star products";

  py::class_<ExactScalar>(m, "ExactScalar")
      .def(py::init<long>())
      .def_static("rational", &ExactScalar::rational, py::arg("num"), py::arg("den") = 1)
      .def_static("i", &ExactScalar::i)
      .def_static("sqrt2", &ExactScalar::sqrt2)
      .def_static("h", &ExactScalar::h, py::arg("power") = 1)
      .def_static("c", &ExactScalar::c, py::arg("power") = 1)
      .def_static("hbar", &ExactScalar::hbar, py::arg("power") = 1)
      .def("is_zero", &ExactScalar::is_zero)
      .def("conj", &ExactScalar::conj)
      .def("inverse", &ExactScalar::inverse)
      .def("to_complex", &ExactScalar::to_complex, py::arg("hbar"), py::arg("c") = 1.0)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", &ExactScalar::to_string);

  py::class_<MultivectorX>(m, "Multivector")
      .def(py::init<int>(), py::arg("dim"))
      .def_static("unit", &MultivectorX::unit, py::arg("dim"))
      .def_static("scalar", &MultivectorX::scalar, py::arg("dim"), py::arg("value"))
      .def_static("generator", &MultivectorX::generator, py::arg("dim"), py::arg("index"),
                  "Grassmann generator theta_index, 1-based")
      .def("dim", &MultivectorX::dim)
      .def("is_zero", &MultivectorX::is_zero)
      .def("scalar_part", &MultivectorX::scalar_part)
      .def("grade_part", &MultivectorX::grade_part)
      .def("max_grade", &MultivectorX::max_grade)
      .def("involution", &MultivectorX::involution)
      .def("hodge", &MultivectorX::hodge)
      .def("berezin_integral", &MultivectorX::berezin_integral, py::arg("hbar"))
      .def("trace", &MultivectorX::trace, py::arg("hbar"), py::arg("normalization") = 0)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)  // wedge
      .def(py::self == py::self)
      .def("__rmul__", [](const MultivectorX& u, const ExactScalar& s) { return s * u; })
      .def("__mul__", [](const MultivectorX& u, const ExactScalar& s) { return u * s; })
      .def("__repr__", &MultivectorX::to_string);

  py::class_<BilinearFormX>(m, "BilinearForm")
      .def_static("zero", &BilinearFormX::zero, py::arg("dim"))
      .def_static("pauli", &BilinearFormX::pauli, py::arg("dim"),
                  "B = (hbar/2) identity, the Pauli-product Cliffordization")
      .def("dim", &BilinearFormX::dim)
      .def("get", [](const BilinearFormX& b, int i, int j) { return b(i, j); })
      .def("set", &BilinearFormX::set)
      .def("g", &BilinearFormX::g, "symmetric part entry")
      .def("a", &BilinearFormX::a, "antisymmetric part entry");

  m.def("wedge", [](const MultivectorX& a, const MultivectorX& b) { return a * b; });
  m.def("circle_product", &circle_product<ExactScalar>, py::arg("u"), py::arg("v"), py::arg("form"),
        "u o_B v, the fermionic circle product");
  m.def("pauli_product",
        [](const MultivectorX& u, const MultivectorX& v) {
          return circle_product(u, v, BilinearFormX::pauli(u.dim()));
        },
        "circle product with B = (hbar/2) identity");
  m.def("contract_rules", &contract_rules<ExactScalar>, py::arg("x"), py::arg("u"),
        py::arg("form"), "antiderivation x -|_B u by structural recursion");
  m.def("contract_closed", &contract_closed<ExactScalar>, py::arg("u"), py::arg("v"),
        py::arg("form"), "single-term closed form of the contraction");
  m.def("clifford_map", &clifford_map<ExactScalar>, py::arg("v"), py::arg("u"), py::arg("form"));
  m.def("grassmann_exp", &grassmann_exp<ExactScalar>, py::arg("f"));
  m.def("solve_wick_form",
        [](const BilinearFormX& B) { return solve_wick_form(B).form; },
        "grade-2 form relating Cl(g) and Cl(B)");
  m.def("scalar_equivalence_check", [](const std::vector<int>& indices, const BilinearFormX& B) {
    auto rep = scalar_equivalence_check(indices, B);
    return py::make_tuple(rep.lhs, rep.rhs, rep.pass);
  });
  m.def("wick_pairing_sum", &wick_pairing_sum<ExactScalar>, py::arg("indices"), py::arg("form"));

  m.def("sigma", &sigma_mv, py::arg("dim"), py::arg("i"), py::arg("base") = 0,
        "sigma^i = (2/i hbar) theta_j theta_k, cyclic");
  m.def("spin", &spin_mv, py::arg("dim"), py::arg("i"), py::arg("base") = 0,
        "S_i = (hbar/2) sigma^i");

  py::class_<DiracRep>(m, "DiracRep")
      .def_static("build", [](const std::string& kind) { return DiracRep::build(kind_from_name(kind)); },
                  py::arg("kind"), "kind is one of 'd4', 'd5', 'd6'")
      .def_readonly("d", &DiracRep::d)
      .def_readonly("beta", &DiracRep::beta)
      .def_readonly("gamma5", &DiracRep::gamma5)
      .def("alpha", [](const DiracRep& r, int i) { return r.alpha.at(i); })
      .def("gamma", [](const DiracRep& r, int mu) { return r.gamma.at(mu); })
      .def("star", &DiracRep::star, "Pauli star product of the representation");

  m.def("oscillator_energy",
        [](int n) {
          BosonicOscillator osc(ExactScalar(1), ExactScalar(1));
          return osc.energy(n);
        },
        "E_n = hbar w (n + 1/2) at unit mass and frequency");
  m.def("landau_eigenvalues", [](int n, int l) {
    LandauSystem sys(ExactScalar(1), ExactScalar(1));
    return py::make_tuple(sys.energy(n), sys.angular_eigenvalue(n, l));
  });

  m.def("witten_index", [](int n_trunc) {
    SusySystem sys{ExactScalar(1)};
    WittenReport rep = witten_index(sys, n_trunc);
    py::list levels;
    for (const auto& lvl : rep.levels) {
      py::dict row;
      row["level"] = lvl.level;
      row["bracket1"] = lvl.bracket1.to_complex(1.0, 1.0).real();
      row["bracket2"] = lvl.bracket2.to_complex(1.0, 1.0).real();
      row["contribution"] = lvl.contribution.to_complex(1.0, 1.0).real();
      levels.append(std::move(row));
    }
    py::dict out;
    out["index"] = rep.index.to_complex(1.0, 1.0).real();
    out["exact_supersymmetry"] = rep.exact_supersymmetry;
    out["levels"] = std::move(levels);
    return out;
  });

  m.def("run_suite",
        [](const std::vector<std::string>& names, const std::string& backend, double hbar,
           double tolerance, unsigned long seed, int trunc) {
          RunConfig cfg;
          cfg.backend =
              backend == "float" ? RunConfig::Backend::Float : RunConfig::Backend::Exact;
          cfg.hbar = hbar;
          cfg.tolerance = tolerance;
          cfg.seed = seed;
          cfg.witten_trunc = trunc;
          Recorder rec;
          run_suites(names, cfg, rec);
          py::list checks;
          for (const auto& r : rec.records()) {
            py::dict row;
            row["id"] = r.id;
            row["ref"] = r.ref;
            row["backend"] = r.backend;
            row["residual"] = r.residual;
            row["pass"] = r.pass;
            checks.append(std::move(row));
          }
          py::dict out;
          out["pass"] = rec.all_pass();
          out["max_residual"] = rec.max_residual();
          out["checks"] = std::move(checks);
          return out;
        },
        py::arg("suites"), py::arg("backend") = "exact", py::arg("hbar") = 1.0,
        py::arg("tolerance") = 1e-10, py::arg("seed") = 12345, py::arg("trunc") = 8);

  m.def("suite_names", [] { return suite_names(); });
}
