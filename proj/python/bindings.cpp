#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "e8lab/cli.hpp"
#include "e8lab/errors.hpp"
#include "e8lab/report.hpp"

namespace py = pybind11;
using namespace e8lab;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

ArtinGroupPtr group_of(const std::string& diagram) { return ArtinGroup::create(parse_diagram(diagram)); }

SymplecticConfig config_of(const std::string& diagram) { return build_config(parse_diagram(diagram)); }

std::vector<Rational> rationals(const std::vector<std::string>& values) {
  std::vector<Rational> out;
  for (const auto& v : values) out.push_back(parse_rational(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Root systems, Garside normal forms, Milnor algebras, semigroups and transvection representations.";

  m.def("diagram_info", [](const std::string& d) { return to_python(diagram_info(parse_diagram(d))); },
        py::arg("diagram"));
  m.def("positive_roots", [](const std::string& d) { return RootSystem(parse_diagram(d)).positive_roots(); },
        py::arg("diagram"));
  m.def("invariant_degrees", [](const std::string& d) { return invariant_degrees(parse_diagram(d)); },
        py::arg("diagram"));

  m.def("garside_element", [](const std::string& d) { return garside_element(group_of(d)).letters(); },
        py::arg("diagram"));
  m.def(
      "normal_form",
      [](const std::string& d, std::vector<int> word) {
        const auto g = group_of(d);
        const auto nf = normal_form(ArtinWord(g, std::move(word)));
        return py::make_tuple(nf.delta_power, simples_as_words(*g, nf));
      },
      py::arg("diagram"), py::arg("word"), "(delta_power, simples) with each simple as a reduced word.");
  m.def(
      "are_equal",
      [](const std::string& d, std::vector<int> a, std::vector<int> b) {
        const auto g = group_of(d);
        return are_equal(ArtinWord(g, std::move(a)), ArtinWord(g, std::move(b)));
      },
      py::arg("diagram"), py::arg("a"), py::arg("b"));
  m.def(
      "degree", [](const std::string& d, std::vector<int> w) { return degree(ArtinWord(group_of(d), std::move(w))); },
      py::arg("diagram"), py::arg("word"));
  m.def(
      "is_central",
      [](const std::string& d, std::vector<int> w) { return is_central(ArtinWord(group_of(d), std::move(w))); },
      py::arg("diagram"), py::arg("word"));
  m.def(
      "inn_equal",
      [](const std::string& d, std::vector<int> a, std::vector<int> b) {
        const auto g = group_of(d);
        const auto r = inn_equal(ArtinWord(g, std::move(a)), ArtinWord(g, std::move(b)));
        py::dict out;
        out["equal"] = r.equal;
        out["witness"] = r.witness ? py::cast(*r.witness) : py::none();
        out["modulo"] = r.modulo == CenterGenerator::Delta ? "delta" : "delta_squared";
        return out;
      },
      py::arg("diagram"), py::arg("a"), py::arg("b"));

  m.def(
      "milnor",
      [](const std::string& f) {
        const auto p = parse_poly(f);
        return to_python(milnor_json(p, milnor(p)));
      },
      py::arg("poly"));
  m.def("build_versal", [](const std::string& f) { return to_python(versal_json(build_versal(parse_poly(f)))); },
        py::arg("poly"));
  m.def(
      "fiber_is_smooth",
      [](const std::string& f, const std::vector<std::string>& s) {
        return fiber_is_smooth(build_versal(parse_poly(f)), rationals(s));
      },
      py::arg("poly"), py::arg("s"), "Parameter values are rational strings such as \"1/2\".");

  m.def(
      "semigroup_from_generators",
      [](const std::vector<int>& gens) { return to_python(semigroup_json(from_generators(gens))); },
      py::arg("generators"));
  m.def(
      "semigroup_from_gaps",
      [](std::vector<int> gaps) { return to_python(semigroup_json(gaps_to_semigroup(GapSequence(std::move(gaps))))); },
      py::arg("gaps"));
  m.def(
      "spin_parity",
      [](std::vector<int> gaps) {
        const auto p = spin_parity(GapSequence(std::move(gaps)));
        return py::make_tuple(p.h0, to_string(p.parity));
      },
      py::arg("gaps"));

  m.def("check_relations", [](const std::string& d) { return to_python(relation_report_json(check_geometric_relations(config_of(d)))); },
        py::arg("diagram"));
  m.def(
      "rep_word",
      [](const std::string& d, std::vector<int> w) {
        const auto cfg = config_of(d);
        return rep_word(cfg, ArtinWord(cfg.group(), std::move(w))).rows();
      },
      py::arg("diagram"), py::arg("word"));
  m.def(
      "delta_image",
      [](const std::string& d) {
        const auto img = delta_image(config_of(d));
        return py::make_tuple(img.matrix.rows(), img.order ? py::cast(*img.order) : py::none());
      },
      py::arg("diagram"));
  m.def(
      "kernel_search",
      [](const std::string& d, int max_length, double budget_seconds) {
        const auto cfg = config_of(d);
        auto options = default_kernel_search_options();
        if (budget_seconds > 0) options.budget_seconds = budget_seconds;
        KernelSearchResult r;
        {
          py::gil_scoped_release release;
          r = kernel_search(cfg, max_length, options);
        }
        std::vector<std::vector<int>> words;
        for (const auto& w : r.words) words.push_back(w.letters());
        py::dict out;
        out["words"] = words;
        out["explored_depth"] = r.explored_depth;
        out["complete"] = r.complete;
        return out;
      },
      py::arg("diagram"), py::arg("max_length"), py::arg("budget_seconds") = 0.0);
  m.def(
      "verify_kernel_certificate",
      [](const std::string& d, std::vector<int> w) {
        const auto cfg = config_of(d);
        const auto c = verify_kernel_certificate(cfg, ArtinWord(cfg.group(), std::move(w)));
        return py::make_tuple(c.group_trivial, c.homology_trivial);
      },
      py::arg("diagram"), py::arg("word"));

  m.def(
      "verify_paper",
      [](const std::string& suite) {
        Json out = Json::array();
        for (const auto& c : run_verification_suite(suite)) out.push_back(check_json(c));
        return to_python(out);
      },
      py::arg("suite") = "all");
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line front-end in process: (exit code, stdout, stderr).");
}
