#include "e8lab/cli.hpp"

#include <chrono>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "e8lab/errors.hpp"
#include "e8lab/report.hpp"

namespace e8lab::cli {

namespace {

constexpr const char* kFooter =
    "Environment:\n"
    "  E8LAB_BUDGET_SECONDS   time budget for monodromy kernel-search (default 300)\n"
    "  E8LAB_MAX_TRUNCATION   truncation bound for Milnor computations (default 64)\n"
    "\n"
    "Exit codes: 0 success, 1 domain error (JSON error object on stdout), 2 usage error.";

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string token;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    token = text.substr(pos, comma - pos);
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) throw ValidationError(std::string("empty entry in ") + what);
    token = token.substr(first, last - first + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ValidationError(std::string("bad integer '") + token + "' in " + what);
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

Json word_json(const ArtinWord& w) { return w.letters(); }

GermConvention parse_convention(const std::string& s) {
  return s == "classical" ? GermConvention::Classical : GermConvention::Tabulated;
}

struct Options {
  bool pretty = false;
  bool timing = false;

  std::string diagram;
  std::string action;
  std::string word;
  std::string other;

  std::string poly;
  std::string curve;
  std::string convention = "tabulated";
  int max_truncation = 0;

  std::string smooth;
  std::string batch;

  std::string gens;
  std::string gaps;
  bool classify = false;

  int max_len = 8;
  double budget_seconds = 0.0;

  std::string suite;
};

struct Outcome {
  Json result;
  Json notes = Json::array();
  int exit_code = 0;
};

MilnorOptions milnor_options(const Options& o) {
  MilnorOptions m = default_milnor_options();
  if (o.max_truncation > 0) m.max_truncation = o.max_truncation;
  return m;
}

BivariatePoly germ_from(const Options& o, Json& notes) {
  const int given = !o.poly.empty() + !o.diagram.empty() + !o.curve.empty();
  if (given != 1) throw ValidationError("give exactly one of --poly, --diagram, --curve");
  if (!o.poly.empty()) return parse_poly(o.poly);
  if (!o.diagram.empty()) {
    const auto d = parse_diagram(o.diagram);
    if (d.family() == Family::A) notes.push_back("A_n germ convention: " + o.convention);
    return germ_for_diagram(d, parse_convention(o.convention));
  }
  const auto ab = parse_int_list(o.curve, "--curve");
  if (ab.size() != 2) throw ValidationError("--curve expects two integers a,b");
  return monomial_curve(ab[0], ab[1]);
}

Outcome run_dynkin(const Options& o) {
  const auto d = parse_diagram(o.diagram);
  if (o.action == "info") return {diagram_info(d)};
  const RootSystem rs(d);
  return {Json{{"diagram", d.name()}, {"count", rs.positive_roots().size()}, {"positive_roots", rs.positive_roots()}}};
}

Outcome run_artin(const Options& o) {
  const auto group = ArtinGroup::create(parse_diagram(o.diagram));
  const auto word = [&](const std::string& text) { return ArtinWord(group, parse_letters(text)); };
  const ArtinWord w = word(o.word);
  Outcome out;
  if (o.action == "normal-form") {
    out.result = normal_form_json(*group, normal_form(w));
  } else if (o.action == "equal") {
    out.result = {{"equal", are_equal(w, word(o.other))}};
  } else if (o.action == "degree") {
    out.result = {{"degree", degree(w)}};
  } else if (o.action == "central") {
    out.result = {{"central", is_central(w)}};
  } else if (o.action == "delta") {
    const ArtinWord delta = garside_element(group);
    out.result = {{"word", word_json(delta)},
                  {"degree", degree(delta)},
                  {"normal_form", normal_form_json(*group, normal_form(delta))},
                  {"central", group->delta_is_central()}};
  } else if (o.action == "inn-equal") {
    const auto r = inn_equal(w, word(o.other));
    out.result = {{"equal", r.equal},
                  {"witness", r.witness ? Json(*r.witness) : Json(nullptr)},
                  {"modulo", r.modulo == CenterGenerator::Delta ? "delta" : "delta_squared"}};
    if (r.modulo == CenterGenerator::DeltaSquared)
      out.notes.push_back("Delta is not central for " + group->diagram().name() + "; comparing modulo Delta^2");
  } else {
    Json perm = Json::array();
    std::vector<int> image;
    for (int i = 1; i <= group->rank(); ++i) perm.push_back(conjugation_by_delta(*group, i));
    for (int l : w.letters()) image.push_back(l > 0 ? conjugation_by_delta(*group, l) : -conjugation_by_delta(*group, -l));
    out.result = {{"permutation", perm}, {"word", image}};
  }
  return out;
}

Outcome run_milnor(const Options& o) {
  Outcome out;
  const auto f = germ_from(o, out.notes);
  out.result = milnor_json(f, milnor(f, milnor_options(o)));
  return out;
}

Json smoothness_json(const VersalFamily& fam, const std::vector<Rational>& s) {
  Json values = Json::array();
  for (const auto& q : s) values.push_back(to_string(q));
  return Json{{"s", values}, {"fiber", fam.specialize(s).to_string()}, {"smooth", fiber_is_smooth(fam, s)}};
}

Outcome run_versal(const Options& o) {
  Outcome out;
  const auto f = germ_from(o, out.notes);
  const auto fam = build_versal(f, milnor_options(o));
  out.result = versal_json(fam);
  if (!o.smooth.empty()) out.result["smoothness"] = smoothness_json(fam, parse_rational_vector(o.smooth));
  if (!o.batch.empty()) {
    std::ifstream in(o.batch);
    if (!in) throw ValidationError("cannot read batch file '" + o.batch + "'");
    Json rows = Json::array();
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') continue;
      rows.push_back(smoothness_json(fam, parse_rational_vector(line)));
    }
    out.result["batch"] = rows;
  }
  return out;
}

Outcome run_semigroup(const Options& o) {
  if (o.gens.empty() == o.gaps.empty()) throw ValidationError("give exactly one of --gens, --gaps");
  const NumericalSemigroup s = o.gens.empty()
                                   ? gaps_to_semigroup(GapSequence(parse_int_list(o.gaps, "--gaps")))
                                   : from_generators(parse_int_list(o.gens, "--gens"));
  if (o.classify && s.genus() != 4)
    throw ValidationError("classification is defined for genus 4 only (genus is " + std::to_string(s.genus()) + ")");
  return {semigroup_json(s)};
}

Outcome run_monodromy(const Options& o) {
  const auto cfg = build_config(parse_diagram(o.diagram));
  Outcome out;
  if (o.action == "check-relations") {
    out.result = relation_report_json(check_geometric_relations(cfg));
    out.result["gram"] = matrix_json(cfg.gram());
    out.result["determinant"] = cfg.determinant();
    out.result["unimodular"] = cfg.unimodular();
  } else if (o.action == "image") {
    const auto m = rep_word(cfg, ArtinWord(cfg.group(), parse_letters(o.word)));
    out.result = {{"matrix", matrix_json(m)}, {"preserves_form", preserves_form(cfg, m)}};
  } else if (o.action == "delta") {
    const auto img = delta_image(cfg);
    out.result = {{"matrix", matrix_json(img.matrix)},
                  {"order", img.order ? Json(*img.order) : Json(nullptr)}};
  } else if (o.action == "kernel-search") {
    auto options = default_kernel_search_options();
    if (o.budget_seconds > 0) options.budget_seconds = o.budget_seconds;
    const auto r = kernel_search(cfg, o.max_len, options);
    Json words = Json::array();
    for (const auto& w : r.words) words.push_back(word_json(w));
    out.result = {{"max_length", o.max_len},
                  {"words", words},
                  {"explored_depth", r.explored_depth},
                  {"complete", r.complete}};
    if (!r.complete) out.notes.push_back("budget exhausted; only words up to explored_depth are exhaustive");
  } else {
    const auto c = verify_kernel_certificate(cfg, ArtinWord(cfg.group(), parse_letters(o.word)));
    out.result = {{"group_trivial", c.group_trivial}, {"homology_trivial", c.homology_trivial}, {"valid", c.valid()}};
  }
  return out;
}

Outcome run_verify(const Options& o) {
  const auto& names = verification_suite_names();
  if (o.suite != "all" && std::find(names.begin(), names.end(), o.suite) == names.end())
    throw CLI::ValidationError("suite", "unknown suite '" + o.suite + "'");
  Outcome out;
  Json checks = Json::array();
  Json failed = Json::array();
  for (const auto& c : run_verification_suite(o.suite)) {
    checks.push_back(check_json(c));
    out.notes.push_back(c.id + ": " + c.statement);
    if (!c.passed) failed.push_back(c.id);
  }
  out.result = {{"suite", o.suite}, {"checks", checks}, {"failed", failed}, {"all_passed", failed.empty()}};
  out.exit_code = failed.empty() ? 0 : 1;
  return out;
}

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse_error";
  if (dynamic_cast<const ValidationError*>(&e)) return "validation_error";
  if (dynamic_cast<const ComputationError*>(&e)) return "computation_error";
  if (dynamic_cast<const std::overflow_error*>(&e)) return "overflow_error";
  return "internal_error";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations on simply-laced root systems, Artin groups, plane-curve germs, "
               "numerical semigroups and transvection representations.",
               "e8lab"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", o.pretty, "Indent the JSON output");
  app.add_flag("--timing", o.timing, "Add wall-clock timing to the report");

  const auto diagram_arg = [&](CLI::App* sub) {
    sub->add_option("diagram", o.diagram, "A<n>, D<n>, E6, E7, E8 or a JSON {vertices, edges} object")->required();
  };

  auto* dynkin = app.add_subcommand("dynkin", "Root system data of a diagram");
  dynkin->add_option("action", o.action, "info | roots")->required()->check(CLI::IsMember({"info", "roots"}));
  diagram_arg(dynkin);

  auto* artin = app.add_subcommand("artin", "Artin group word problem and Garside structure");
  artin->add_option("action", o.action)
      ->required()
      ->check(CLI::IsMember({"normal-form", "equal", "degree", "central", "delta", "inn-equal", "conjugate-delta"}));
  diagram_arg(artin);
  artin->add_option("--word", o.word, "Signed letters, e.g. \"1 2 -3\"");
  artin->add_option("--other", o.other, "Second word for equal / inn-equal");

  auto* mil = app.add_subcommand("milnor", "Milnor number and local algebra basis");
  auto* ver = app.add_subcommand("versal", "Miniversal deformation and fiber smoothness");
  for (auto* sub : {mil, ver}) {
    sub->add_option("--poly", o.poly, "Polynomial in x, y with rational coefficients");
    sub->add_option("--diagram", o.diagram, "Use the standard germ of this diagram");
    sub->add_option("--convention", o.convention, "A_n germ: tabulated (x^2+y^(n+2)) or classical (x^2+y^(n+1))")
        ->check(CLI::IsMember({"tabulated", "classical"}));
    sub->add_option("--max-truncation", o.max_truncation, "Truncation bound")->check(CLI::PositiveNumber);
  }
  mil->add_option("--curve", o.curve, "a,b: the monomial curve x^b - y^a");
  ver->add_option("--smooth", o.smooth, "Comma-separated parameter values s");
  ver->add_option("--batch", o.batch, "File with one parameter vector per line");

  auto* semi = app.add_subcommand("semigroup", "Numerical semigroups, gaps and spin parity");
  semi->add_option("--gens", o.gens, "Comma-separated generators");
  semi->add_option("--gaps", o.gaps, "Comma-separated gap sequence");
  semi->add_flag("--classify", o.classify, "Require a genus 4 classification");

  auto* mono = app.add_subcommand("monodromy", "Transvection representation on homology");
  mono->add_option("action", o.action)
      ->required()
      ->check(CLI::IsMember({"check-relations", "image", "delta", "kernel-search", "certificate"}));
  diagram_arg(mono);
  mono->add_option("--word", o.word, "Signed letters for image / certificate");
  mono->add_option("--max-len", o.max_len, "Longest kernel word to search for")->check(CLI::NonNegativeNumber);
  mono->add_option("--budget-seconds", o.budget_seconds, "Time budget for kernel-search")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify-paper", "Run a named verification suite or all of them");
  verify->add_option("suite", o.suite, "all | " + [] {
    const auto& n = verification_suite_names();
    return std::accumulate(std::next(n.begin()), n.end(), n.front(),
                           [](std::string a, const std::string& b) { return a + " | " + b; });
  }())->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "e8lab: " << e.what() << "\n";
    return 2;
  }

  Json report{{"schema_version", kReportSchemaVersion}, {"command", args}};
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (*dynkin) outcome = run_dynkin(o);
    else if (*artin) outcome = run_artin(o);
    else if (*mil) outcome = run_milnor(o);
    else if (*ver) outcome = run_versal(o);
    else if (*semi) outcome = run_semigroup(o);
    else if (*mono) outcome = run_monodromy(o);
    else outcome = run_verify(o);
  } catch (const CLI::ValidationError& e) {
    err << "e8lab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    report["error"] = {{"type", error_type(e)}, {"message", e.what()}};
    out << report.dump(o.pretty ? 2 : -1) << "\n";
    return 1;
  }
  report["result"] = std::move(outcome.result);
  report["notes"] = std::move(outcome.notes);
  if (o.timing)
    report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  out << report.dump(o.pretty ? 2 : -1) << "\n";
  return outcome.exit_code;
}

}  // namespace e8lab::cli
