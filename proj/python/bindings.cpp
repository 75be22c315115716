#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "stonework/boolalg.hpp"
#include "stonework/cli.hpp"
#include "stonework/error.hpp"
#include "stonework/interval.hpp"
#include "stonework/zhomology.hpp"

namespace py = pybind11;
namespace sw = stonework;
using namespace stonework;

namespace {

py::int_ to_py(const Int& v) { return py::int_(py::str(v.str())); }

Int from_py(const py::int_& v) { return Int(py::str(v).cast<std::string>()); }

boolalg::Presentation presentation(const std::vector<std::string>& gens, const std::vector<std::string>& rels) {
  std::vector<boolalg::Term> terms;
  for (const auto& r : rels) terms.push_back(cli::parse_term(r));
  return boolalg::Presentation(gens, terms);
}

py::list dense(const zhomology::IntMatrix& m) {
  py::list rows;
  for (const auto& row : m.to_dense()) {
    py::list r;
    for (const auto& x : row) r.append(to_py(x));
    rows.append(r);
  }
  return rows;
}

py::dict invariants(const zhomology::AbInvariants& a) {
  py::list torsion;
  for (const auto& t : a.torsion) torsion.append(to_py(t));
  py::dict d;
  d["rank"] = a.rank;
  d["torsion"] = torsion;
  d["text"] = a.to_string();
  return d;
}

py::dict cohomology(const zhomology::CohomologyResult& r) {
  py::dict d;
  d["level"] = r.level;
  d["dims"] = r.dims;
  d["h0"] = invariants(r.homology.h0);
  d["h1"] = invariants(r.homology.h1);
  d["exact"] = r.homology.exact;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite Boolean algebras, profinite towers, dyadic intervals and integral Cech cohomology.";

  // Translators run newest first, so the base class goes in before its subclasses.
  auto error = py::register_exception<sw::Error>(m, "StoneworkError", PyExc_ValueError);
  py::register_exception<sw::CapExceeded>(m, "CapExceeded", error.ptr());
  py::register_exception<sw::ParseError>(m, "ParseError", error.ptr());

  m.def("normalize_term", [](const std::string& t) { return cli::parse_term(t).to_string(); }, py::arg("term"));

  m.def(
      "spectrum",
      [](const std::vector<std::string>& gens, const std::vector<std::string>& rels) {
        auto a = boolalg::spectrum(presentation(gens, rels));
        std::vector<std::string> points;
        for (std::size_t i = 0; i < a.size(); ++i) points.push_back(a.point_string(i));
        return points;
      },
      py::arg("gens"), py::arg("rels") = std::vector<std::string>{});

  m.def(
      "check_duality",
      [](const std::vector<std::string>& gens, const std::vector<std::string>& rels) {
        auto r = boolalg::check_duality(presentation(gens, rels));
        py::dict d;
        d["points"] = r.points;
        d["injective"] = r.injective;
        d["surjective"] = r.surjective;
        d["bijective"] = r.bijective();
        d["exhaustive"] = r.mode == boolalg::DualityReport::Mode::Exhaustive;
        return d;
      },
      py::arg("gens"), py::arg("rels") = std::vector<std::string>{});

  m.def(
      "llpo_split",
      [](std::size_t n) {
        auto r = boolalg::llpo_split(n);
        py::dict d;
        d["stage"] = r.stage;
        d["injective"] = r.injective();
        d["surjective"] = r.surjective();
        d["all_ok"] = r.all_ok();
        return d;
      },
      py::arg("n"));

  m.def(
      "wlpo_counterexample",
      [](const std::string& term) {
        auto w = boolalg::wlpo_counterexample(cli::parse_term(term));
        py::dict d;
        d["k"] = w.k ? py::cast(*w.k) : py::none();
        d["beta"] = w.beta;
        d["gamma"] = w.gamma;
        d["value_beta"] = w.value_beta;
        d["value_gamma"] = w.value_gamma;
        d["verdict"] = w.verdict == boolalg::WlpoReport::Verdict::FailsOnBeta ? "fails_on_beta" : "fails_on_gamma";
        return d;
      },
      py::arg("term"));

  m.def(
      "near",
      [](std::size_t n, const std::string& s, const std::string& t) {
        return interval::near(n, interval::BitWord::parse(s), interval::BitWord::parse(t));
      },
      py::arg("n"), py::arg("s"), py::arg("t"));
  m.def(
      "near_companion",
      [](std::size_t n, const std::string& s, const std::string& t) {
        return interval::near_companion(n, interval::BitWord::parse(s), interval::BitWord::parse(t));
      },
      py::arg("n"), py::arg("s"), py::arg("t"));

  m.def(
      "decidable_image",
      [](const std::vector<std::string>& words) {
        std::vector<interval::BitWord> ws;
        for (const auto& w : words) ws.push_back(interval::BitWord::parse(w));
        auto image = interval::decidable_image(ws);
        return py::make_tuple(image.to_string(), interval::complement(image).to_string());
      },
      py::arg("words"));

  m.def("interval_cohomology", [](std::size_t n) { return cohomology(zhomology::interval_cohomology(n)); },
        py::arg("n"));
  m.def("circle_cohomology", [](std::size_t n) { return cohomology(zhomology::circle_cohomology(n)); },
        py::arg("n"));

  m.def(
      "snf",
      [](const std::vector<std::vector<py::int_>>& rows, std::size_t cols) {
        std::vector<std::vector<Int>> d;
        for (const auto& row : rows) {
          d.emplace_back();
          for (const auto& x : row) d.back().push_back(from_py(x));
        }
        auto s = zhomology::snf(zhomology::IntMatrix::from_dense(d, cols));
        py::list diagonal;
        for (const auto& x : s.diagonal) diagonal.append(to_py(x));
        py::dict out;
        out["u"] = dense(s.u);
        out["d"] = dense(s.d);
        out["v"] = dense(s.v);
        out["rank"] = s.rank;
        out["diagonal"] = diagonal;
        return out;
      },
      py::arg("rows"), py::arg("cols") = 0);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> owned{"stonework"};
        owned.insert(owned.end(), args.begin(), args.end());
        std::vector<char*> argv;
        for (auto& a : owned) argv.push_back(a.data());
        std::ostringstream out, err;
        int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in process; returns (exit code, stdout, stderr).");
}
