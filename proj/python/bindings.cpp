#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qha/berezin.hpp"
#include "qha/heisenberg.hpp"
#include "qha/qconv.hpp"
#include "qha/verify.hpp"

namespace py = pybind11;
using namespace qha;

namespace {

PhaseFunction fn(const PhaseSpaceModel& model, const CMatrix& values) { return PhaseFunction(model, values); }
Op op(const PhaseSpaceModel& model, const CMatrix& matrix) { return Op(model, matrix); }
StateVector vec(const PhaseSpaceModel& model, const CVector& values) { return StateVector(model, values); }

ConvexFunctional functional(const std::string& name, double param) {
  if (name == "exp") return ConvexFunctional::exp(param);
  if (name == "pos") return ConvexFunctional::positive_part();
  if (name == "abspow") return ConvexFunctional::abs_power(param);
  throw ConfigError("unknown functional '" + name + "'; expected exp, pos or abspow");
}

py::dict zero_report(const ZeroSetReport& r) {
  py::list points;
  for (const auto& z : r.zero_points) points.append(py::make_tuple(z.m, z.k));
  py::dict d;
  d["tolerance"] = r.tolerance;
  d["scanned"] = r.scanned;
  d["zero_points"] = points;
  d["min_modulus"] = r.min_modulus;
  d["classification"] = to_string(r.classification);
  return d;
}

py::dict bl_report(const BerezinLiebResult& r) {
  py::dict d;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["passed"] = r.passed;
  d["functional"] = r.functional.describe();
  return d;
}

}  // namespace

PYBIND11_MODULE(_qha, m) {
  m.doc() = "Quantum harmonic analysis on a discretized phase space";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> infeasible;
  infeasible.call_once_and_store_result(
      [&]() { return py::exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InfeasibleError& e) {
      const py::object& cls = infeasible.get_stored();
      py::object exc = cls(e.what());
      exc.attr("report") = zero_report(e.report());
      PyErr_SetObject(cls.ptr(), exc.ptr());
    }
  });

  py::class_<PhaseSpaceModel>(m, "Model")
      .def(py::init([](const std::string& kind, int n, std::optional<double> length) {
             return build_model(parse_model_kind(kind), n, length);
           }),
           py::arg("kind"), py::arg("n"), py::arg("L") = py::none())
      .def_property_readonly("kind", &PhaseSpaceModel::kind_name)
      .def_property_readonly("n", &PhaseSpaceModel::n)
      .def_property_readonly("length", &PhaseSpaceModel::length)
      .def_property_readonly("weight", &PhaseSpaceModel::weight)
      .def_property_readonly("dx", &PhaseSpaceModel::dx)
      .def_property_readonly("domega", &PhaseSpaceModel::domega)
      .def("x_coord", &PhaseSpaceModel::x_coord)
      .def("omega_coord", &PhaseSpaceModel::omega_coord)
      .def("__repr__", [](const PhaseSpaceModel& s) {
        return "Model('" + s.kind_name() + "', " + std::to_string(s.n()) + ")";
      });

  m.def("symplectic_fourier", [](const PhaseSpaceModel& md, const CMatrix& f) {
    return symplectic_fourier(fn(md, f)).values();
  });
  m.def("rho", [](const PhaseSpaceModel& md, const CMatrix& f) { return rho(fn(md, f)).matrix(); });
  m.def("fourier_wigner", [](const PhaseSpaceModel& md, const CMatrix& s) { return fourier_wigner(op(md, s)).values(); });
  m.def("twisted_conv", [](const PhaseSpaceModel& md, const CMatrix& f, const CMatrix& g) {
    return twisted_conv(fn(md, f), fn(md, g)).values();
  });
  m.def("conv_fn_op", [](const PhaseSpaceModel& md, const CMatrix& f, const CMatrix& s) {
    return conv_fn_op(fn(md, f), op(md, s)).matrix();
  });
  m.def("conv_op_op", [](const PhaseSpaceModel& md, const CMatrix& s, const CMatrix& t) {
    return conv_op_op(op(md, s), op(md, t)).values();
  });
  m.def("tf_shift", [](const PhaseSpaceModel& md, int mi, int k) { return tf_shift({md.reduce(mi), md.reduce(k)}, md).matrix(); });
  m.def("stft", [](const PhaseSpaceModel& md, const CVector& psi, const CVector& window) {
    return stft(vec(md, psi), vec(md, window)).values();
  });
  m.def("wigner", [](const PhaseSpaceModel& md, const CVector& psi) { return wigner(vec(md, psi)).values(); });
  m.def("gaussian_window", [](const PhaseSpaceModel& md) { return gaussian_window(md).values(); });
  m.def("rank_one", [](const PhaseSpaceModel& md, const CVector& xi, const CVector& eta) {
    return rank_one(vec(md, xi), vec(md, eta)).matrix();
  });

  m.def("random_density", [](const PhaseSpaceModel& md, int rank, std::uint64_t seed) {
    return random_density(md, rank, seed).matrix();
  }, py::arg("model"), py::arg("rank"), py::arg("seed"));
  m.def("random_function", [](const PhaseSpaceModel& md, std::uint64_t seed) {
    return random_function(md, seed).values();
  }, py::arg("model"), py::arg("seed"));

  m.def("husimi", [](const PhaseSpaceModel& md, const CMatrix& s, const CMatrix& sigma) {
    return husimi(op(md, s), op(md, sigma)).values();
  });
  m.def("berezin_quantize", [](const PhaseSpaceModel& md, const CMatrix& f, const CMatrix& sigma) {
    return berezin_quantize(fn(md, f), op(md, sigma)).matrix();
  });
  m.def(
      "glauber_sudarshan",
      [](const PhaseSpaceModel& md, const CMatrix& s, const CMatrix& sigma, const std::string& mode,
         std::optional<double> tol) {
        if (mode != "strict" && mode != "pseudo") throw ConfigError("mode must be 'strict' or 'pseudo'");
        const auto r = glauber_sudarshan(op(md, s), op(md, sigma), mode == "strict" ? GsMode::Strict : GsMode::Pseudo, tol);
        return py::make_tuple(r.symbol.values(), r.residual, zero_report(r.zeros));
      },
      py::arg("model"), py::arg("S"), py::arg("sigma"), py::arg("mode") = "strict", py::arg("tol") = py::none());
  m.def(
      "reconstruct",
      [](const PhaseSpaceModel& md, const CMatrix& s_sigma, const CMatrix& sigma, std::optional<double> tol) {
        return reconstruct(fn(md, s_sigma), op(md, sigma), tol).matrix();
      },
      py::arg("model"), py::arg("S_sigma"), py::arg("sigma"), py::arg("tol") = py::none());
  m.def(
      "zero_set",
      [](const PhaseSpaceModel& md, const CMatrix& sigma, std::optional<double> tol, std::optional<double> radius) {
        const Op window = op(md, sigma);
        return zero_report(zero_set(window, tol ? *tol : default_zero_tolerance(window), radius));
      },
      py::arg("model"), py::arg("sigma"), py::arg("tol") = py::none(), py::arg("radius") = py::none());
  m.def(
      "berezin_lieb_operator",
      [](const PhaseSpaceModel& md, const CMatrix& t, const CMatrix& s, const std::string& phi, double param) {
        return bl_report(berezin_lieb_operator(op(md, t), op(md, s), functional(phi, param)));
      },
      py::arg("model"), py::arg("T"), py::arg("S"), py::arg("phi") = "exp", py::arg("param") = 1.0);
  m.def(
      "berezin_lieb_function",
      [](const PhaseSpaceModel& md, const CMatrix& f, const CMatrix& s, const std::string& phi, double param) {
        return bl_report(berezin_lieb_function(fn(md, f), op(md, s), functional(phi, param)));
      },
      py::arg("model"), py::arg("f"), py::arg("S"), py::arg("phi") = "exp", py::arg("param") = 1.0);

  m.def("registered_identities", &registered_identities);
  m.def(
      "verify_identity",
      [](const std::string& name, std::uint64_t seed, const PhaseSpaceModel& md) {
        const auto r = verify_identity(name, seed, md);
        py::dict d;
        d["identity"] = r.identity_name;
        d["N"] = r.n;
        d["seed"] = r.seed;
        d["max_abs_error"] = r.max_abs_error;
        d["tolerance"] = r.tolerance;
        d["passed"] = r.passed;
        return d;
      },
      py::arg("name"), py::arg("seed"), py::arg("model"));
}
