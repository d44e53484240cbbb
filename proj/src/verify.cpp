#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "e8lab/errors.hpp"
#include "e8lab/report.hpp"

namespace e8lab {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

template <typename Fn>
CheckResult timed(std::string id, std::string statement, double limit_seconds, Fn&& fn) {
  CheckResult r{std::move(id), std::move(statement), false, "", 0.0, limit_seconds};
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = o.passed && r.seconds < limit_seconds;
  r.detail = o.detail;
  if (o.passed && !r.passed) r.detail += " (over time limit)";
  return r;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream s;
  s << "{";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << "}";
  return s.str();
}

DynkinDiagram e8() { return DynkinDiagram::standard(Family::E, 8); }

std::vector<CheckResult> suite_gaps() {
  return {timed("gaps", "the semigroup <3,5> has gaps {1,2,4,7} and lies in the even component", 1e-3, [] {
    const int gens[] = {3, 5};
    const auto s = from_generators(gens);
    const auto cls = classify_genus4(s.gap_sequence());
    return Outcome{s.gaps == std::vector<int>{1, 2, 4, 7} && cls == Genus4Class::EvenComponent,
                   "gaps " + join(s.gaps) + ", " + to_string(cls)};
  })};
}

std::vector<CheckResult> suite_spin() {
  return {timed("spin", "parity of {1,2,4,7} is even with h0 = 2; parity of {1,2,3,7} is odd with h0 = 1", 1e-3, [] {
    const auto even = spin_parity(GapSequence({1, 2, 4, 7}));
    const auto odd = spin_parity(GapSequence({1, 2, 3, 7}));
    const bool ok = even.h0 == 2 && even.parity == Parity::Even && odd.h0 == 1 && odd.parity == Parity::Odd;
    return Outcome{ok, "h0 = " + std::to_string(even.h0) + " (" + to_string(even.parity) + "), " +
                           std::to_string(odd.h0) + " (" + to_string(odd.parity) + ")"};
  })};
}

std::vector<CheckResult> suite_milnor() {
  return {timed("milnor",
                "mu(x^3+y^5) = 8 with basis x^a y^b (a<=1, b<=3), mu(x^3+y^4) = 6, mu(x^3+xy^3) = 7, "
                "mu(x^2y+y^(n-1)) = n for n = 4..8, and 8 = 2g+n-1 for (g,n) = (4,1)",
                1.0, [] {
                  std::ostringstream detail;
                  bool ok = true;
                  const auto e8_data = milnor(parse_poly("x^3+y^5"));
                  std::set<Monomial> expected;
                  for (int a = 0; a <= 1; ++a)
                    for (int b = 0; b <= 3; ++b) expected.insert({a, b});
                  const std::set<Monomial> got(e8_data.basis.begin(), e8_data.basis.end());
                  ok &= e8_data.milnor_number == 8 && got == expected;
                  ok &= e8_data.milnor_number == 2 * 4 + 1 - 1;
                  const int e6 = milnor(parse_poly("x^3+y^4")).milnor_number;
                  const int e7 = milnor(parse_poly("x^3+x*y^3")).milnor_number;
                  ok &= e6 == 6 && e7 == 7;
                  detail << "E8 " << e8_data.milnor_number << ", E6 " << e6 << ", E7 " << e7 << ", D:";
                  for (int n = 4; n <= 8; ++n) {
                    const int mu = milnor(parse_poly("x^2*y+y^" + std::to_string(n - 1))).milnor_number;
                    ok &= mu == n;
                    detail << " " << mu;
                  }
                  return Outcome{ok, detail.str()};
                })};
}

std::vector<CheckResult> suite_roots() {
  return {timed("roots", "E8 has 120 positive roots, w0(E8) = -id and w0(E6) != -id", 5.0, [] {
    const RootSystem rs(e8());
    const bool e8_minus = longest_element(rs).is_minus_identity();
    const bool e6_minus = longest_element(DynkinDiagram::standard(Family::E, 6)).is_minus_identity();
    const bool ok = rs.positive_roots().size() == 120 && e8_minus && !e6_minus;
    return Outcome{ok, std::to_string(rs.positive_roots().size()) + " roots, w0(E8) = -id: " +
                           (e8_minus ? "yes" : "no") + ", w0(E6) = -id: " + (e6_minus ? "yes" : "no")};
  })};
}

std::vector<CheckResult> suite_degrees() {
  return {timed("degrees", "E8 invariant degrees are 2,8,12,14,18,20,24,30 with gcd 2 and sum(d-1) = 120", 10.0, [] {
    const auto d = invariant_degrees(e8());
    const int g = std::accumulate(d.begin(), d.end(), 0, [](int a, int b) { return std::gcd(a, b); });
    const int sum = std::accumulate(d.begin(), d.end(), 0) - static_cast<int>(d.size());
    const bool ok = d == std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30} && g == 2 && sum == 120;
    return Outcome{ok, "degrees " + join(d) + ", gcd " + std::to_string(g) + ", sum(d-1) " + std::to_string(sum)};
  })};
}

std::vector<CheckResult> suite_garside() {
  return {timed("garside",
                "Delta(E8) has normal form (1, []), degree 120, is central; no generator is central; "
                "conjugation by Delta fixes every vertex",
                60.0, [] {
                  const auto g = ArtinGroup::create(e8());
                  const ArtinWord delta = garside_element(g);
                  const auto nf = normal_form(delta);
                  bool ok = nf.delta_power == 1 && nf.simples.empty() && degree(delta) == 120 && is_central(delta);
                  for (int i = 1; i <= 8; ++i) {
                    ok &= !is_central(ArtinWord(g, {i}));
                    ok &= conjugation_by_delta(*g, i) == i;
                    ok &= are_equal(delta.inverse() * ArtinWord(g, {i}) * delta, ArtinWord(g, {i}));
                  }
                  return Outcome{ok, "normal form (" + std::to_string(nf.delta_power) + ", " +
                                         std::to_string(nf.simples.size()) + " simples), degree " +
                                         std::to_string(degree(delta))};
                })};
}

std::vector<CheckResult> suite_central() {
  return {timed("central", "for each E8 generator g: g Delta g^-1 = Delta and g Delta g^-1 != Delta^n for n = 2..5",
                60.0, [] {
                  const auto g = ArtinGroup::create(e8());
                  const ArtinWord delta = garside_element(g);
                  bool ok = true;
                  int failures = 0;
                  for (int i = 1; i <= 8; ++i) {
                    const ArtinWord a(g, {i});
                    const ArtinWord conj = a * delta * a.inverse();
                    if (!are_equal(conj, delta)) {
                      ok = false;
                      ++failures;
                    }
                    for (int n = 2; n <= 5; ++n) {
                      if (are_equal(conj, delta.power(n))) {
                        ok = false;
                        ++failures;
                      }
                    }
                  }
                  return Outcome{ok, std::to_string(8 * 5 - failures) + "/40 comparisons as expected"};
                })};
}

std::vector<int> random_relator(const DynkinDiagram& d, std::mt19937& rng) {
  const int n = d.rank();
  std::uniform_int_distribution<int> vertex(1, n);
  std::vector<int> r;
  const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
  const int i = vertex(rng);
  if (kind == 0 || n == 1) {
    r = {i, -i};
  } else {
    int j = vertex(rng);
    while (j == i) j = vertex(rng);
    if (d.adjacent(i, j)) {
      r = {i, j, i, -j, -i, -j};
    } else {
      r = {i, j, -i, -j};
    }
  }
  if (std::bernoulli_distribution(0.5)(rng)) {
    std::reverse(r.begin(), r.end());
    for (int& l : r) l = -l;
  }
  std::rotate(r.begin(), r.begin() + std::uniform_int_distribution<std::size_t>(0, r.size() - 1)(rng), r.end());
  return r;
}

std::vector<CheckResult> suite_canonicity() {
  return {timed("canonicity", "500 random relator insertions over A2, A3, D4, E6, E8 preserve normal forms", 120.0, [] {
    std::mt19937 rng(20240611u);
    const std::vector<DynkinDiagram> diagrams{
        DynkinDiagram::standard(Family::A, 2), DynkinDiagram::standard(Family::A, 3),
        DynkinDiagram::standard(Family::D, 4), DynkinDiagram::standard(Family::E, 6), e8()};
    int preserved = 0;
    for (const auto& d : diagrams) {
      const auto g = ArtinGroup::create(d);
      std::uniform_int_distribution<int> letter(1, d.rank());
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> w(std::uniform_int_distribution<int>(0, 12)(rng));
        for (int& l : w) l = letter(rng) * (std::bernoulli_distribution(0.5)(rng) ? 1 : -1);
        std::vector<int> inserted = w;
        const auto r = random_relator(d, rng);
        const auto at = std::uniform_int_distribution<std::size_t>(0, w.size())(rng);
        inserted.insert(inserted.begin() + static_cast<std::ptrdiff_t>(at), r.begin(), r.end());
        if (normal_form(ArtinWord(g, w)) == normal_form(ArtinWord(g, inserted))) ++preserved;
      }
    }
    return Outcome{preserved == 500, std::to_string(preserved) + "/500 preserved"};
  })};
}

std::vector<CheckResult> suite_picard_lefschetz() {
  return {timed("picard-lefschetz",
                "E8 transvections satisfy 7 braid and 21 commutation relations, preserve the form, and the "
                "Gram matrix is unimodular",
                1.0, [] {
                  const auto cfg = build_config(e8());
                  const auto report = check_geometric_relations(cfg);
                  bool ok = report.all_passed() && report.count(RelationCheck::Kind::Braid) == 7 &&
                            report.count(RelationCheck::Kind::Commutation) == 21 && cfg.unimodular();
                  for (int i = 1; i <= 8; ++i) ok &= preserves_form(cfg, transvection(cfg, i));
                  return Outcome{ok, std::to_string(report.count(RelationCheck::Kind::Braid)) + " braid, " +
                                         std::to_string(report.count(RelationCheck::Kind::Commutation)) +
                                         " commutation, det " + std::to_string(cfg.determinant())};
                })};
}

std::vector<CheckResult> suite_versal() {
  return {timed("versal",
                "the versal family of x^3+y^5 has 8 parameters, its central fiber is singular and the fiber "
                "x^3+y^5+1 is smooth",
                5.0, [] {
                  const auto fam = build_versal(parse_poly("x^3+y^5"));
                  std::vector<Rational> zero(fam.size(), 0);
                  std::vector<Rational> unit(fam.size(), 0);
                  for (std::size_t k = 0; k < fam.size(); ++k)
                    if (fam.parameters[k].monomial == Monomial{0, 0}) unit[k] = 1;
                  const bool central = fiber_is_smooth(fam, zero);
                  const bool shifted = fiber_is_smooth(fam, unit);
                  const bool ok = fam.size() == 8 && !central && shifted &&
                                  fam.specialize(unit) == parse_poly("x^3+y^5+1");
                  return Outcome{ok, std::to_string(fam.size()) + " parameters, s=0 smooth: " +
                                         (central ? "yes" : "no") + ", constant shift smooth: " +
                                         (shifted ? "yes" : "no")};
                })};
}

std::vector<CheckResult> suite_orbit() {
  const auto degrees = invariant_degrees(e8());
  return {timed("orbit", "the weight orbit for the E8 degrees closes and is C* modulo Z/2", 1e-3, [&] {
    const auto o = orbit_descriptor(degrees);
    return Outcome{o.closes && o.quotient_order == 2,
                   std::string("closes ") + (o.closes ? "true" : "false") + ", quotient order " +
                       std::to_string(o.quotient_order)};
  })};
}

std::vector<CheckResult> suite_kernel() {
  return {timed("kernel", "kernel search over E8 up to length 8 is reproducible and every hit is a valid certificate",
                300.0, [] {
                  const auto cfg = build_config(e8());
                  KernelSearchOptions options = default_kernel_search_options();
                  const auto first = kernel_search(cfg, 8, options);
                  const auto second = kernel_search(cfg, 8, options);
                  bool same = first.words.size() == second.words.size() && first.complete && second.complete;
                  for (std::size_t k = 0; same && k < first.words.size(); ++k)
                    same = first.words[k].letters() == second.words[k].letters();
                  bool valid = true;
                  for (const auto& w : first.words) valid &= verify_kernel_certificate(cfg, w).valid();
                  return Outcome{same && valid, std::to_string(first.words.size()) + " kernel words, runs " +
                                                    (same ? "agree" : "differ")};
                })};
}

using Suite = std::vector<CheckResult> (*)();

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> table{
      {"gaps", suite_gaps},         {"spin", suite_spin},
      {"milnor", suite_milnor},     {"roots", suite_roots},
      {"degrees", suite_degrees},   {"garside", suite_garside},
      {"central", suite_central},   {"canonicity", suite_canonicity},
      {"picard-lefschetz", suite_picard_lefschetz},
      {"versal", suite_versal},     {"orbit", suite_orbit},
      {"kernel", suite_kernel},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& verification_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_verification_suite(const std::string& name) {
  std::vector<CheckResult> out;
  for (const auto& [suite_name, fn] : suites()) {
    if (name != "all" && name != suite_name) continue;
    auto checks = fn();
    out.insert(out.end(), checks.begin(), checks.end());
  }
  if (out.empty()) throw ValidationError("unknown verification suite '" + name + "'");
  return out;
}

}  // namespace e8lab
