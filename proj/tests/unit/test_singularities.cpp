#include <random>
#include <set>

#include "doctest.h"
#include "e8lab/errors.hpp"
#include "e8lab/groebner.hpp"
#include "e8lab/semigroup.hpp"
#include "e8lab/singularity.hpp"

using namespace e8lab;

namespace {

int mu(const std::string& f) { return milnor(parse_poly(f)).milnor_number; }

// Milnor-Orlik: a weighted homogeneous isolated singularity with weights
// (w_x, w_y) of total degree 1 has mu = (1/w_x - 1)(1/w_y - 1).
int milnor_orlik(const BivariatePoly& f, const Rational& wx, const Rational& wy) {
  for (const auto& [m, c] : f.terms()) REQUIRE(wx * m.x_exp + wy * m.y_exp == 1);
  const Rational value = (1 / wx - 1) * (1 / wy - 1);
  REQUIRE(value.get_den() == 1);
  return static_cast<int>(value.get_num().get_si());
}

}  // namespace

TEST_CASE("polynomial parsing and printing") {
  CHECK(parse_poly("x^3+y^5").to_string() == "y^5+x^3");
  CHECK(parse_poly("(x+y)^2") == parse_poly("x^2+2*x*y+y^2"));
  CHECK(parse_poly("1/2*x - x/2").is_zero());
  CHECK(parse_poly("-x*(y-1)") == parse_poly("x - x*y"));
  CHECK(parse_poly("3/6").constant_term() == Rational(1, 2));
  CHECK(parse_poly("x^3+x*y^3").to_string() == "x*y^3+x^3");
  try {
    parse_poly("x^2 + z");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(parse_poly("x^-1"), ParseError);
  CHECK_THROWS_AS(parse_poly("x/y"), ParseError);
  CHECK_THROWS_AS(parse_poly("x/0"), ParseError);
  CHECK_THROWS_AS(parse_poly("(x+y"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("x y"), ParseError);
}

TEST_CASE("polynomial arithmetic") {
  const auto f = parse_poly("x^3+y^5");
  CHECK(f.dx() == parse_poly("3*x^2"));
  CHECK(f.dy() == parse_poly("5*y^4"));
  CHECK(f.degree() == 5);
  CHECK(f.order() == 3);
  CHECK(f.leading_monomial() == Monomial{0, 5});
  CHECK(f.evaluate(1, -1) == 0);
  CHECK(parse_poly("x+y").pow(3).truncate(3).is_zero());
}

TEST_CASE("Milnor numbers of the simple germs") {
  CHECK(mu("x^3+y^5") == 8);
  CHECK(mu("x^3+y^4") == 6);
  CHECK(mu("x^3+x*y^3") == 7);
  for (int n = 4; n <= 8; ++n) CHECK(mu("x^2*y+y^" + std::to_string(n - 1)) == n);
  const auto e8 = milnor(parse_poly("x^3+y^5"));
  std::set<Monomial> expected;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 3; ++b) expected.insert({a, b});
  CHECK(std::set<Monomial>(e8.basis.begin(), e8.basis.end()) == expected);
  CHECK(std::is_sorted(e8.basis.begin(), e8.basis.end(), GradedLexLess{}));
  const auto e7 = milnor(parse_poly("x^3+x*y^3"));
  CHECK(e7.basis == std::vector<Monomial>{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {0, 3}, {0, 4}});
  // stratum dimension 2g + n - 1 for (g, n) = (4, 1)
  CHECK(e8.milnor_number == 2 * 4 + 1 - 1);
}

TEST_CASE("germ table") {
  for (int n = 4; n <= 8; ++n)
    CHECK(milnor(germ_for_diagram(DynkinDiagram::standard(Family::D, n))).milnor_number == n);
  for (int n = 6; n <= 8; ++n)
    CHECK(milnor(germ_for_diagram(DynkinDiagram::standard(Family::E, n))).milnor_number == n);
  for (int n = 1; n <= 8; ++n) {
    const auto d = DynkinDiagram::standard(Family::A, n);
    CHECK(milnor(germ_for_diagram(d)).milnor_number == n + 1);
    CHECK(milnor(germ_for_diagram(d, GermConvention::Classical)).milnor_number == n);
  }
}

TEST_CASE("Milnor number agrees with the weighted homogeneous formula") {
  for (int p = 2; p <= 4; ++p)
    for (int q = 2; q <= 6; ++q) {
      const auto f = parse_poly("x^" + std::to_string(p) + "+y^" + std::to_string(q));
      CHECK(milnor(f).milnor_number == milnor_orlik(f, Rational(1, p), Rational(1, q)));
      CHECK(milnor(f).milnor_number == (p - 1) * (q - 1));
    }
  CHECK(mu("x^3+x*y^3") == milnor_orlik(parse_poly("x^3+x*y^3"), Rational(1, 3), Rational(2, 9)));
  for (int n = 4; n <= 8; ++n) {
    const auto f = parse_poly("x^2*y+y^" + std::to_string(n - 1));
    CHECK(milnor(f).milnor_number == milnor_orlik(f, Rational(n - 2, 2 * (n - 1)), Rational(1, n - 1)));
  }
  const auto g = parse_poly("x^4+x^2*y^2+y^4");
  CHECK(milnor(g).milnor_number == milnor_orlik(g, Rational(1, 4), Rational(1, 4)));
}

TEST_CASE("Milnor number is invariant under a coordinate change") {
  // x -> x + y^2 in x^3 + y^5
  CHECK(mu("(x+y^2)^3+y^5") == 8);
  CHECK(mu("x^3+y^5+x*y^4") == 8);
}

TEST_CASE("Milnor computation errors") {
  CHECK_THROWS_AS(milnor(parse_poly("x^2*y^2")), ComputationError);
  CHECK_THROWS_AS(milnor(parse_poly("x^2*y^2"), MilnorOptions{8}), ComputationError);
  CHECK_THROWS_AS(milnor(parse_poly("1+x^2")), ValidationError);
  CHECK(mu("x") == 0);
  CHECK(mu("x^2+y^2") == 1);
}

TEST_CASE("delta invariant of monomial curves equals the semigroup genus") {
  for (int a = 2; a <= 6; ++a)
    for (int b = a + 1; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      CAPTURE(a);
      CAPTURE(b);
      const int m = milnor(monomial_curve(a, b)).milnor_number;
      CHECK(m % 2 == 0);
      const int gens[] = {a, b};
      CHECK(m / 2 == from_generators(gens).genus());
    }
  CHECK(milnor(monomial_curve(3, 5)).milnor_number / 2 == 4);
  CHECK_THROWS_AS(monomial_curve(4, 6), ValidationError);
  CHECK_THROWS_AS(monomial_curve(5, 3), ValidationError);
}

TEST_CASE("versal families") {
  const auto fam = build_versal(parse_poly("x^3+y^5"));
  CHECK(fam.size() == 8);
  CHECK(fam.parameters.front().name == "s1");
  CHECK(fam.parameters.front().monomial == Monomial{0, 0});
  for (const char* f : {"x^3+y^4", "x^3+x*y^3", "x^2*y+y^4", "x^2+y^7"})
    CHECK(static_cast<int>(build_versal(parse_poly(f)).size()) == mu(f));
  std::vector<Rational> wrong(3, 0);
  CHECK_THROWS_AS(fam.specialize(wrong), ValidationError);
  CHECK_THROWS_AS(fiber_is_smooth(fam, wrong), ValidationError);
}

TEST_CASE("fiber smoothness") {
  const auto fam = build_versal(parse_poly("x^3+y^5"));
  std::vector<Rational> s(8, 0);
  CHECK_FALSE(fiber_is_smooth(fam, s));
  s[0] = 1;
  CHECK(fiber_is_smooth(fam, s));
  CHECK(fam.specialize(s) == parse_poly("x^3+y^5+1"));
  // x^3 + y^5 + y: the only critical points have 5 y^4 = -1, x = 0, and F != 0 there
  std::vector<Rational> t(8, 0);
  t[1] = 1;
  CHECK(fam.parameters[1].monomial == Monomial{0, 1});
  CHECK(fiber_is_smooth(fam, t));
  // singular fibers of other germs
  const auto a1 = build_versal(parse_poly("x^2+y^2"));
  std::vector<Rational> zero(1, 0);
  CHECK_FALSE(fiber_is_smooth(a1, zero));
}

TEST_CASE("smoothness is invariant under the weighted rescaling") {
  // F(l^5 x, l^3 y; s) = l^15 F(x, y; s') with s'_i = s_i l^(5a+3b-15)
  const auto fam = build_versal(parse_poly("x^3+y^5"));
  std::mt19937 rng(17);
  const Rational lambda(2);
  int smooth_count = 0;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rational> s(8), scaled(8);
    for (std::size_t i = 0; i < 8; ++i) {
      s[i] = Rational(std::uniform_int_distribution<int>(-3, 3)(rng), std::uniform_int_distribution<int>(1, 3)(rng));
      s[i].canonicalize();
      const auto& m = fam.parameters[i].monomial;
      const int w = 5 * m.x_exp + 3 * m.y_exp - 15;
      Rational factor = 1;
      for (int k = 0; k < -w; ++k) factor /= lambda;
      scaled[i] = s[i] * factor;
    }
    const bool a = fiber_is_smooth(fam, s);
    CHECK(a == fiber_is_smooth(fam, scaled));
    smooth_count += a;
  }
  CHECK(smooth_count > 0);
}

TEST_CASE("Groebner bases") {
  const auto p = [](const char* s) { return parse_poly(s); };
  CHECK(ideal_contains_one({p("x"), p("x-1")}));
  CHECK_FALSE(ideal_contains_one({p("x"), p("y-1")}));
  CHECK(ideal_contains_one({p("x*y-1"), p("x"), p("y")}));
  const std::vector<BivariatePoly> gens{p("x^2-y"), p("x*y-1")};
  const auto basis = groebner_basis(gens);
  for (const auto& g : gens) CHECK(reduce(g, basis).is_zero());
  CHECK(reduce(p("y^3-1"), basis).is_zero());
  CHECK_FALSE(reduce(p("y-1"), basis).is_zero());
}

TEST_CASE("orbit descriptor") {
  const std::vector<int> e8{2, 8, 12, 14, 18, 20, 24, 30};
  const auto o = orbit_descriptor(e8);
  CHECK(o.closes);
  CHECK(o.quotient_order == 2);
  const std::vector<int> e6{2, 5, 6, 8, 9, 12};
  CHECK(orbit_descriptor(e6).quotient_order == 1);
  CHECK_FALSE(orbit_descriptor(e6).closes);
}

TEST_CASE("rational vectors") {
  const auto v = parse_rational_vector("1, 0, -1/2");
  REQUIRE(v.size() == 3);
  CHECK(v[2] == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational_vector("1,,2"), ValidationError);
  CHECK_THROWS_AS(parse_rational_vector("1/0"), ValidationError);
}
