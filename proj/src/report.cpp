#include "e8lab/report.hpp"

#include <numeric>

#include "e8lab/errors.hpp"

namespace e8lab {

Json diagram_info(const DynkinDiagram& d) {
  const RootSystem rs(d);
  const WeylElement w0 = longest_element(rs);
  const auto degrees = invariant_degrees(rs);
  int gcd = 0;
  for (int deg : degrees) gcd = std::gcd(gcd, deg);
  const auto group = ArtinGroup::create(d);
  const auto orbit = orbit_descriptor(degrees);

  Json edges = Json::array();
  for (const auto& e : d.edges()) edges.push_back({e.first, e.second});
  Json tau = Json::array();
  for (int i = 1; i <= d.rank(); ++i) tau.push_back(conjugation_by_delta(*group, i));

  return Json{
      {"diagram", d.name()},
      {"family", std::string(1, family_letter(d.family()))},
      {"rank", d.rank()},
      {"edges", edges},
      {"positive_roots", rs.positive_roots().size()},
      {"coxeter_number", coxeter_number(rs)},
      {"degrees", degrees},
      {"degrees_gcd", gcd},
      {"w0_length", rs.length(w0)},
      {"w0_is_minus_id", w0.is_minus_identity()},
      {"delta_conjugation", tau},
      {"orbit", {{"closes", orbit.closes}, {"quotient_order", orbit.quotient_order}}},
  };
}

Json normal_form_json(const ArtinGroup& group, const GarsideNormalForm& nf) {
  return Json{{"delta_power", nf.delta_power}, {"simples", simples_as_words(group, nf)}};
}

Json milnor_json(const BivariatePoly& f, const MilnorData& data) {
  Json basis = Json::array();
  for (const auto& m : data.basis) basis.push_back(to_string(m));
  return Json{{"poly", f.to_string()},
              {"milnor_number", data.milnor_number},
              {"basis", basis},
              {"truncation", data.truncation}};
}

Json versal_json(const VersalFamily& family) {
  Json params = Json::array();
  for (const auto& p : family.parameters) params.push_back({{"name", p.name}, {"monomial", to_string(p.monomial)}});
  return Json{{"base", family.base.to_string()}, {"parameters", params}};
}

VersalFamily versal_from_json(const Json& j) {
  try {
    VersalFamily family{parse_poly(j.at("base").get<std::string>()), {}};
    for (const auto& p : j.at("parameters")) {
      const auto mono = parse_poly(p.at("monomial").get<std::string>());
      if (mono.terms().size() != 1 || mono.leading_coefficient() != 1) {
        throw ValidationError("parameter monomial must be a single monic monomial");
      }
      family.parameters.push_back({p.at("name").get<std::string>(), mono.leading_monomial()});
    }
    return family;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("versal family JSON has the wrong shape: ") + e.what());
  }
}

Json semigroup_json(const NumericalSemigroup& s) {
  const GapSequence gs = s.gap_sequence();
  const SpinParity parity = spin_parity(gs);
  Json out{{"generators", s.generators},
           {"gaps", s.gaps},
           {"genus", s.genus()},
           {"frobenius", s.frobenius ? Json(*s.frobenius) : Json(nullptr)},
           {"parity", {{"h0", parity.h0}, {"parity", to_string(parity.parity)}}},
           {"classification", nullptr}};
  if (s.genus() == 4) out["classification"] = to_string(classify_genus4(gs));
  return out;
}

Json relation_report_json(const RelationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"pair", {c.i, c.j}},
                      {"kind", c.kind == RelationCheck::Kind::Braid ? "braid" : "commutation"},
                      {"passed", c.passed}});
  }
  return Json{{"all_passed", report.all_passed()},
              {"braid_relations", report.count(RelationCheck::Kind::Braid)},
              {"commutation_relations", report.count(RelationCheck::Kind::Commutation)},
              {"relations", checks}};
}

Json matrix_json(const IntMatrix& m) { return m.rows(); }

Json check_json(const CheckResult& c) {
  return Json{{"id", c.id}, {"statement", c.statement}, {"passed", c.passed}, {"detail", c.detail},
              {"limit_seconds", c.limit_seconds}};
}

}  // namespace e8lab
