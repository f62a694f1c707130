#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperratio/accuracy.hpp"
#include "hyperratio/bessel_bounds.hpp"
#include "hyperratio/confluent_bounds.hpp"
#include "hyperratio/gauss_bounds.hpp"
#include "hyperratio/oracle.hpp"
#include "hyperratio/pcf_bounds.hpp"
#include "hyperratio/riccati.hpp"
#include "hyperratio/verify.hpp"

namespace py = pybind11;
using namespace hyperratio;

namespace {

OracleConfig make_cfg(int depth, double target_width, int max_depth) {
  OracleConfig c;
  c.depth = depth;
  c.target_rel_width = target_width;
  c.max_depth = max_depth;
  c.validate();
  return c;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["id"] = r.id;
  d["grid"] = r.grid_summary;
  d["num_points"] = r.num_points;
  d["num_violations"] = r.num_violations;
  d["num_inconclusive"] = r.num_inconclusive;
  d["num_not_converged"] = r.num_not_converged;
  d["num_tight"] = r.num_tight;
  d["min_margin"] = r.min_margin;
  d["worst_params"] = r.worst_params;
  d["worst_x"] = r.worst_x;
  d["ok"] = r.ok();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rigorous enclosures and bounds for ratios of contiguous hypergeometric functions";

  static py::exception<Error> exc(m, "HyperratioError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  py::class_<Enclosure>(m, "Enclosure")
      .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
      .def_property_readonly("lo", &Enclosure::lo)
      .def_property_readonly("hi", &Enclosure::hi)
      .def_property_readonly("mid", &Enclosure::mid)
      .def_property_readonly("width", &Enclosure::width)
      .def("rel_width", &Enclosure::rel_width)
      .def("contains", &Enclosure::contains)
      .def("__add__", [](const Enclosure& a, const Enclosure& b) { return enclosure_add(a, b); })
      .def("__sub__", [](const Enclosure& a, const Enclosure& b) { return enclosure_sub(a, b); })
      .def("__mul__", [](const Enclosure& a, const Enclosure& b) { return enclosure_mul(a, b); })
      .def("__truediv__", [](const Enclosure& a, const Enclosure& b) { return enclosure_div(a, b); })
      .def("sqrt", [](const Enclosure& a) { return enclosure_sqrt(a); })
      .def("__repr__", [](const Enclosure& e) {
        return "Enclosure(" + std::to_string(e.lo()) + ", " + std::to_string(e.hi()) + ")";
      });

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("enclosure", &OracleResult::enclosure)
      .def_readonly("converged", &OracleResult::converged)
      .def_readonly("depth", &OracleResult::depth)
      .def_readonly("method", &OracleResult::method);

#define ORACLE(name, call, ...)                                                                              \
  m.def(                                                                                                     \
      name, call, __VA_ARGS__, py::arg("depth") = 60, py::arg("target_width") = 1e-12, py::arg("max_depth") = 400)
  ORACLE("pcf_ratio", [](double n, double x, int d, double t, int md) { return pcf_ratio_enclosure(n, x, make_cfg(d, t, md)); },
         py::arg("n"), py::arg("x"));
  ORACLE("bessel_i_ratio",
         [](double nu, double x, int d, double t, int md) { return bessel_i_ratio_enclosure(nu, x, make_cfg(d, t, md)); },
         py::arg("nu"), py::arg("x"));
  ORACLE("bessel_k_ratio",
         [](double nu, double x, int d, double t, int md) { return bessel_k_ratio_enclosure(nu, x, make_cfg(d, t, md)); },
         py::arg("nu"), py::arg("x"));
  ORACLE("kummer_ratio",
         [](double a, double b, double x, int d, double t, int md) {
           return kummer_ratio_enclosure(a, b, x, make_cfg(d, t, md));
         },
         py::arg("a"), py::arg("b"), py::arg("x"));
  ORACLE("gauss_ratio",
         [](double a, double b, double c, double x, int d, double t, int md) {
           return gauss_ratio_enclosure(a, b, c, x, make_cfg(d, t, md));
         },
         py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"));
#undef ORACLE

  m.def("kummer_series", [](double a, double b, double x) {
    const auto s = kummer_series(a, b, x);
    return py::make_tuple(s.value, s.err);
  });
  m.def("gauss_series", [](double a, double b, double c, double x) {
    const auto s = gauss_series(a, b, c, x);
    return py::make_tuple(s.value, s.err);
  });

  m.def("bound_ids", [] {
    std::vector<std::string> ids;
    for (const auto& d : full_catalog()) ids.push_back(d.id);
    return ids;
  });
  m.def("bound_info", [](const std::string& id) {
    const auto& d = find_bound(id);
    py::dict out;
    out["id"] = d.id;
    out["group"] = std::string(to_string(d.group));
    out["ratio"] = std::string(to_string(d.ratio));
    out["side"] = std::string(to_string(d.side));
    out["accuracy"] = d.accuracy ? py::object(py::make_tuple(d.accuracy->left, d.accuracy->right)) : py::none();
    out["provenance"] = d.provenance;
    return out;
  });
  m.def("evaluate_bound", [](const std::string& id, const Params& p, double x) { return find_bound(id).evaluate(p, x); },
        py::arg("id"), py::arg("params"), py::arg("x"));
  m.def(
      "verify_bound",
      [](const std::string& id, std::optional<std::vector<Params>> params, std::optional<std::vector<double>> xs) {
        const auto& d = find_bound(id);
        Grid g = default_grid(family_of(d.ratio));
        if (params) g.params = *params;
        if (xs) g.xs = *xs;
        return report_dict(verify_bound(d, g));
      },
      py::arg("id"), py::arg("params") = py::none(), py::arg("xs") = py::none());

  m.def("riccati_instances", [] {
    std::vector<std::string> ids;
    for (const auto& i : riccati::registry()) ids.push_back(i.id);
    return ids;
  });
  m.def("run_riccati", [](const std::string& id) {
    const auto r = riccati::run_instance(riccati::find_instance(id));
    py::dict d;
    d["id"] = r.id;
    d["verdict"] = std::string(riccati::to_string(r.verdict));
    d["expected"] = std::string(riccati::to_string(r.expected));
    d["as_expected"] = r.as_expected;
    return d;
  });
  m.def("cubic_nullcline_root", [](double param, double x, const std::string& family) {
    if (family != "pcf" && family != "bessel") throw Error(ErrorCode::Config, "family must be pcf or bessel");
    return riccati::cubic_nullcline_root(param, x, family == "pcf" ? riccati::CubicFamily::Pcf
                                                                   : riccati::CubicFamily::Bessel);
  });

  m.def(
      "estimate_order",
      [](const std::string& id, const Params& p, const std::string& side, double lo, double hi, int count) {
        FitSide s = side == "zero" ? FitSide::AtZero : side == "+inf" ? FitSide::AtPlusInf : FitSide::AtMinusInf;
        if (side != "zero" && side != "+inf" && side != "-inf")
          throw Error(ErrorCode::Config, "side must be zero, +inf or -inf");
        const OrderFit f = estimate_order(id, p, s, Window{lo, hi, count});
        py::dict d;
        d["exponent"] = f.exponent;
        d["stderr"] = f.stderr_exponent;
        d["coefficient"] = f.coefficient;
        d["residual"] = f.residual;
        d["npts"] = f.npts;
        return d;
      },
      py::arg("id"), py::arg("params"), py::arg("side"), py::arg("lo"), py::arg("hi"), py::arg("count") = 12);

  auto pcf = m.def_submodule("pcf");
  pcf.def("b21", &pcf::b21).def("b12", &pcf::b12).def("b30", &pcf::b30).def("b03", &pcf::b03);
  pcf.def("b40", &pcf::b40).def("trig33", &pcf::trig33).def("alg33", &pcf::alg33);
  pcf.def("b24", &pcf::b24).def("b42", &pcf::b42);

  auto bes = m.def_submodule("bessel");
  bes.def("lower_I", &bessel::lower_I).def("upper_I", &bessel::upper_I);
  bes.def("lower_K", &bessel::lower_K).def("upper_K", &bessel::upper_K);
  bes.def("trig_upper_I", &bessel::trig_upper_I).def("trig_upper_Kratio", &bessel::trig_upper_Kratio);

  auto con = m.def_submodule("confluent");
  con.def("lambda_", &confluent::lambda).def("lambda_tilde", &confluent::lambda_tilde);
  con.def("b03", &confluent::b03).def("eta", &confluent::eta).def("eta_tilde", &confluent::eta_tilde);

  auto gau = m.def_submodule("gauss");
  gau.def("lambda_", &gauss::lambda).def("lower_H", &gauss::lower_H).def("upper_H", &gauss::upper_H);
}
