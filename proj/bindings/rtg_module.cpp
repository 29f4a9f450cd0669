#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "rtg/arithmetic.hpp"
#include "rtg/constraint.hpp"
#include "rtg/davkd.hpp"
#include "rtg/davkd_enum.hpp"
#include "rtg/decide.hpp"
#include "rtg/fulfill.hpp"
#include "rtg/presentation.hpp"
#include "rtg/rational.hpp"
#include "rtg/sampling.hpp"
#include "rtg/threshold.hpp"

namespace py = pybind11;
using namespace rtg;

namespace {

Presentation presentation_from_text(const std::string& text) {
  return parse_presentation_text(text);
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["outcome"] = outcome_name(v.outcome);
  d["stage"] = stage_name(v.stage);
  d["cosets_defined"] = v.spent.cosets_defined;
  d["cascade_merges"] = v.spent.cascade_merges;
  return d;
}

}  // namespace

PYBIND11_MODULE(rtg, m) {
  m.doc() = "Random triangular group laboratory: sampling, collapse "
            "certificates, diagram analysis";

  m.def("relator_count", &relator_count, py::arg("n"),
        "Cyclically reduced length-3 words over n generators");

  py::class_<Presentation>(m, "Presentation")
      .def(py::init<std::uint32_t>(), py::arg("n"))
      .def_readonly("n", &Presentation::n)
      .def("__len__", [](const Presentation& p) { return p.size(); })
      .def("text", &serialize_presentation_text)
      .def_static("from_text", &presentation_from_text, py::arg("text"));

  m.def(
      "sample_presentation",
      [](std::uint32_t n, double p, std::uint64_t seed, bool cyclic) {
        return sample_presentation({n, p, seed, cyclic});
      },
      py::arg("n"), py::arg("p"), py::arg("seed") = 0,
      py::arg("cyclic") = false);

  m.def(
      "decide",
      [](const Presentation& p, std::uint64_t max_cosets) {
        DecideBudget budget;
        budget.max_cosets = max_cosets;
        return verdict_dict(rtg::decide(p, budget));
      },
      py::arg("presentation"), py::arg("max_cosets") = 0,
      "Three-valued collapse verdict: outcome, deciding stage, budget spent");

  m.def(
      "estimate_h",
      [](std::uint32_t n, double p, std::uint64_t trials, std::uint64_t seed,
         std::uint64_t max_cosets, unsigned threads) {
        EstimateOptions opt;
        opt.budget.max_cosets = max_cosets;
        opt.threads = threads;
        HEstimate e = rtg::estimate_h(n, p, trials, seed, opt);
        py::dict d;
        d["lower"] = e.lower();
        d["upper"] = e.upper();
        d["undecided"] = e.undecided_frac;
        d["exact"] = e.exact;
        return d;
      },
      py::arg("n"), py::arg("p"), py::arg("trials"), py::arg("seed") = 0,
      py::arg("max_cosets") = 0, py::arg("threads") = 1,
      "Bracketed collapse-probability estimate at one (n, p)");

  m.def(
      "analyze_diagram",
      [](const std::string& diagram_json_text, const std::string& f_decimal) {
        Diagram d = parse_diagram_json(diagram_json_text);
        return analysis_json(d, rational_from_decimal(f_decimal));
      },
      py::arg("diagram_json"), py::arg("f") = "0.5",
      "Constraint-graph analysis of a diagram JSON; returns a JSON row");

  m.def(
      "enumerate_davkd",
      [](std::uint32_t m_faces, const std::string& mode, std::uint64_t limit) {
        EnumMode em = mode == "raw" ? EnumMode::Raw : EnumMode::Canonical;
        std::vector<std::string> rows;
        for_each_davkd(m_faces, em, [&](const Diagram& d) {
          rows.push_back(diagram_json(d));
          return limit == 0 || rows.size() < limit;
        });
        return rows;
      },
      py::arg("m"), py::arg("mode") = "canonical", py::arg("limit") = 0,
      "Diagram JSON strings; limit = 0 streams the whole class");

  m.def(
      "fulfillability_upper_bound",
      [](const std::string& diagram_json_text, std::uint32_t n, double p) {
        return fulfillability_upper_bound(parse_diagram_json(diagram_json_text),
                                          n, p);
      },
      py::arg("diagram_json"), py::arg("n"), py::arg("p"));

  m.def(
      "arithmetic_params",
      [](std::uint64_t n, double a, double b) {
        ArithmeticParams ap = rtg::arithmetic_params(n, a, b);
        py::dict d;
        d["f"] = ap.f;
        d["density"] = ap.density;
        d["p"] = ap.p;
        d["window_lo"] = ap.window_lo;
        d["window_hi"] = ap.window_hi;
        d["log_tail_sum"] = ap.log_tail_sum;
        d["log_majorant"] = ap.log_majorant;
        d["majorant_holds"] = ap.majorant_holds;
        return d;
      },
      py::arg("n"), py::arg("a") = 30.0, py::arg("b") = 3e7);
}
