#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace e8lab {

using Rational = mpq_class;

/// Parses "3", "-2/5", "7/1". Denominator must be nonzero.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// x^x_exp y^y_exp
struct Monomial {
  int x_exp = 0;
  int y_exp = 0;

  int degree() const noexcept { return x_exp + y_exp; }
  auto operator<=>(const Monomial&) const = default;
};

/// Degree first, then the power of x (so y < x within a degree).
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.x_exp < b.x_exp;
  }
};

std::string to_string(const Monomial& m);

/// Sparse polynomial in x, y with rational coefficients. No zero terms are
/// ever stored.
class BivariatePoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexLess>;

  BivariatePoly() = default;
  BivariatePoly(const Rational& constant);  // NOLINT: implicit on purpose
  static BivariatePoly monomial(Monomial m, const Rational& coefficient = 1);
  static BivariatePoly x() { return monomial({1, 0}); }
  static BivariatePoly y() { return monomial({0, 1}); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational coefficient(Monomial m) const;
  Rational constant_term() const { return coefficient({0, 0}); }

  /// Highest total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  /// Lowest total degree; -1 for the zero polynomial.
  int order() const noexcept;

  /// Leading term under graded lex with x > y.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  BivariatePoly dx() const;
  BivariatePoly dy() const;
  BivariatePoly pow(int exponent) const;
  /// Drops every term of total degree >= n.
  BivariatePoly truncate(int n) const;
  Rational evaluate(const Rational& x, const Rational& y) const;

  BivariatePoly& operator+=(const BivariatePoly& other);
  BivariatePoly& operator-=(const BivariatePoly& other);
  BivariatePoly& operator*=(const Rational& c);
  void add_term(Monomial m, const Rational& c);

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator-(BivariatePoly a) { return a *= -1; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(BivariatePoly a, const Rational& c) { return a *= c; }

  bool operator==(const BivariatePoly& other) const { return terms_ == other.terms_; }

  /// Highest degree first, e.g. "x^3+x*y^3-1/2".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Grammar: sums and products of rational literals, x, y, powers with
/// nonnegative integer exponents, unary minus and parentheses.
BivariatePoly parse_poly(std::string_view text);

}  // namespace e8lab
