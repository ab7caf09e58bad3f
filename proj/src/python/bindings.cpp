#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cap2/capability.hpp"
#include "cap2/cli.hpp"
#include "cap2/oracle.hpp"

namespace py = pybind11;
using namespace cap2;

namespace {

TypeParams params_from(const std::string& kind, std::optional<int> alpha, std::optional<int> beta,
                       std::optional<int> gamma, std::optional<int> sigma) {
  RawParams raw;
  raw.kind = parse_kind(kind);
  if (!raw.kind) throw ParameterError("type", "unknown type '" + kind + "'");
  raw.alpha = alpha;
  raw.beta = beta;
  raw.gamma = gamma;
  raw.sigma = sigma;
  return validate(raw);
}

std::tuple<Int, Int, Int, Int, Int> coords(const FreeElt& x) { return {x.r, x.s, x.t, x.u, x.v}; }
std::tuple<Int, Int, Int, Int, Int> coords(const NilElt& x) { return {x.r, x.s, x.t, x.u, x.v}; }

}  // namespace

PYBIND11_MODULE(_cap2, m) {
  m.doc() = "Capability of two-generator 2-groups of class two";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<NotCapable>(m, "NotCapable", PyExc_RuntimeError);
  py::register_exception<ArithmeticOverflow>(m, "ArithmeticOverflow", PyExc_OverflowError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<TypeI>(m, "TypeI")
      .def(py::init<int, int, int>(), py::arg("alpha"), py::arg("beta"), py::arg("gamma"))
      .def_readonly("alpha", &TypeI::alpha)
      .def_readonly("beta", &TypeI::beta)
      .def_readonly("gamma", &TypeI::gamma)
      .def(py::self == py::self)
      .def("__repr__", [](const TypeI& p) { return to_string(TypeParams{p}); });
  py::class_<TypeII>(m, "TypeII")
      .def(py::init<int, int, int, int>(), py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("sigma"))
      .def_readonly("alpha", &TypeII::alpha)
      .def_readonly("beta", &TypeII::beta)
      .def_readonly("gamma", &TypeII::gamma)
      .def_readonly("sigma", &TypeII::sigma)
      .def(py::self == py::self)
      .def("__repr__", [](const TypeII& p) { return to_string(TypeParams{p}); });
  py::class_<TypeIII>(m, "TypeIII")
      .def(py::init<int>(), py::arg("gamma"))
      .def_readonly("gamma", &TypeIII::gamma)
      .def(py::self == py::self)
      .def("__repr__", [](const TypeIII& p) { return to_string(TypeParams{p}); });

  m.def("params", &params_from, py::arg("kind"), py::arg("alpha") = py::none(), py::arg("beta") = py::none(),
        py::arg("gamma") = py::none(), py::arg("sigma") = py::none(),
        "Validated parameters; kind is 'i', 'ii' or 'iii'.");
  m.def("validate", py::overload_cast<const TypeParams&>(&validate));
  m.def("order_log2", &order_log2);
  m.def("params_of_order", &params_of_order);
  m.def("isomorphic_alias", &isomorphic_alias);

  py::class_<Fingerprint>(m, "Fingerprint")
      .def_readonly("order", &Fingerprint::order)
      .def_readonly("exponent", &Fingerprint::exponent)
      .def_readonly("center_order", &Fingerprint::center_order)
      .def_readonly("derived_order", &Fingerprint::derived_order)
      .def_readonly("abelian_invariants", &Fingerprint::abelian_invariants)
      .def_readonly("order_histogram", &Fingerprint::order_histogram)
      .def("__repr__", [](const Fingerprint& f) {
        std::ostringstream os;
        os << f;
        return os.str();
      });
  m.def("fingerprint", [](const TypeParams& p) { return fingerprint(model(p)); });

  py::enum_<Clause>(m, "Clause")
      .value("a", Clause::a)
      .value("b", Clause::b)
      .value("c", Clause::c)
      .value("d", Clause::d)
      .value("none", Clause::none);
  py::enum_<Obstruction>(m, "Obstruction")
      .value("none", Obstruction::none)
      .value("generator_orders", Obstruction::generator_orders)
      .value("commutator_order", Obstruction::commutator_order)
      .value("half_step", Obstruction::half_step)
      .value("exceptional", Obstruction::exceptional);
  py::class_<Verdict>(m, "Verdict")
      .def_readonly("capable", &Verdict::capable)
      .def_readonly("clause", &Verdict::clause)
      .def_readonly("obstruction", &Verdict::obstruction)
      .def_readonly("rationale", &Verdict::rationale)
      .def("__repr__", [](const Verdict& v) {
        return std::string(v.capable ? "capable" : "not capable") + " (" +
               (v.capable ? to_string(v.clause) : to_string(v.obstruction)) + ")";
      });
  m.def("decide", &decide);
  m.def("order_conditions", [](const std::vector<int>& r) { return order_conditions(r); });

  py::class_<WitnessSpec>(m, "WitnessSpec")
      .def_property_readonly("alpha", [](const WitnessSpec& w) { return w.ambient.alpha; })
      .def_property_readonly("beta", [](const WitnessSpec& w) { return w.ambient.beta; })
      .def_property_readonly("extras",
                             [](const WitnessSpec& w) {
                               std::vector<std::tuple<Int, Int, Int, Int, Int>> out;
                               for (const auto& e : w.ambient.extra_central) out.push_back(coords(e));
                               return out;
                             })
      .def_readonly("target", &WitnessSpec::target)
      .def_readonly("construction", &WitnessSpec::construction)
      .def("__repr__", [](const WitnessSpec& w) { return to_string(w.ambient); });
  m.def("build_witness", &build_witness);

  py::enum_<VerifyStatus>(m, "VerifyStatus")
      .value("passed", VerifyStatus::pass)
      .value("failed", VerifyStatus::fail)
      .value("budget_exceeded", VerifyStatus::budget_exceeded);
  py::class_<WitnessReport>(m, "WitnessReport")
      .def_readonly("status", &WitnessReport::status)
      .def_readonly("k_order", &WitnessReport::k_order)
      .def_readonly("center_order", &WitnessReport::center_order)
      .def_readonly("kernel_order", &WitnessReport::kernel_order)
      .def_readonly("image_a", &WitnessReport::image_a)
      .def_readonly("image_b", &WitnessReport::image_b)
      .def_readonly("message", &WitnessReport::message)
      .def_property_readonly("passed", &WitnessReport::passed)
      .def("__str__", &format_report);
  m.def(
      "verify_witness",
      [](const WitnessSpec& w, std::size_t max_order) {
        py::gil_scoped_release release;
        return verify_witness(w, {max_order});
      },
      py::arg("witness"), py::arg("max_order") = kDefaultEnumerationBound);

  m.def(
      "collect_word", [](const std::string& w) { return coords(collect_word(std::string_view(w))); },
      "Normal form (r,s,t,u,v) of a word over a, A, b, B in the free class-3 group.");
  m.def("hall_mul", [](const std::tuple<Int, Int, Int, Int, Int>& x, const std::tuple<Int, Int, Int, Int, Int>& y) {
    const auto [r1, s1, t1, u1, v1] = x;
    const auto [r2, s2, t2, u2, v2] = y;
    return coords(hall::mul({r1, s1, t1, u1, v1}, {r2, s2, t2, u2, v2}));
  });

  m.def(
      "group_order",
      [](int alpha, int beta) { return build({alpha, beta, {}}).order(); }, py::arg("alpha"), py::arg("beta"),
      "Order of the 3-nilpotent product of cyclic groups of orders 2^alpha and 2^beta.");
  m.def(
      "center_generators",
      [](int alpha, int beta) {
        std::vector<std::tuple<Int, Int, Int, Int, Int>> out;
        for (const auto& z : center(build({alpha, beta, {}}))) out.push_back(coords(z));
        return out;
      },
      py::arg("alpha"), py::arg("beta"));

  m.def(
      "sweep_tsv",
      [](int max_alpha, std::size_t max_order, unsigned threads, bool verify) {
        std::vector<cli::SweepRow> rows;
        {
          py::gil_scoped_release release;
          rows = cli::sweep(max_alpha, {max_order, threads, verify});
        }
        std::vector<std::string> lines{cli::tsv_header()};
        for (const auto& r : rows) lines.push_back(cli::tsv_row(r.params, r.verdict, r.verified, verify));
        return lines;
      },
      py::arg("max_alpha"), py::arg("max_order") = kDefaultEnumerationBound, py::arg("threads") = 1,
      py::arg("verify") = true);
  m.def("parse_tsv_row", [](const std::string& line) { return cli::parse_tsv_row(line); });
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      "Runs a command line; returns (exit code, stdout, stderr).");
}
