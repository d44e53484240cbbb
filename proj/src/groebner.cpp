#include "e8lab/groebner.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace e8lab {

namespace {

bool divides(const Monomial& a, const Monomial& b) { return a.x_exp <= b.x_exp && a.y_exp <= b.y_exp; }

Monomial lcm(const Monomial& a, const Monomial& b) {
  return {std::max(a.x_exp, b.x_exp), std::max(a.y_exp, b.y_exp)};
}

BivariatePoly shifted(const BivariatePoly& p, Monomial by, const Rational& scale) {
  BivariatePoly out;
  for (const auto& [m, c] : p.terms()) out.add_term({m.x_exp + by.x_exp, m.y_exp + by.y_exp}, c * scale);
  return out;
}

BivariatePoly monic(BivariatePoly p) {
  if (!p.is_zero()) p *= 1 / p.leading_coefficient();
  return p;
}

BivariatePoly s_polynomial(const BivariatePoly& f, const BivariatePoly& g) {
  const Monomial& lf = f.leading_monomial();
  const Monomial& lg = g.leading_monomial();
  const Monomial l = lcm(lf, lg);
  return shifted(f, {l.x_exp - lf.x_exp, l.y_exp - lf.y_exp}, 1 / f.leading_coefficient()) -
         shifted(g, {l.x_exp - lg.x_exp, l.y_exp - lg.y_exp}, 1 / g.leading_coefficient());
}

// Buchberger's algorithm. Returns {1} as soon as a nonzero constant shows up.
std::vector<BivariatePoly> buchberger(std::vector<BivariatePoly> generators) {
  std::vector<BivariatePoly> basis;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return {BivariatePoly(Rational(1))};
    basis.push_back(monic(std::move(g)));
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const Monomial& li = basis[i].leading_monomial();
    const Monomial& lj = basis[j].leading_monomial();
    // Coprime leading monomials: the S-polynomial reduces to zero.
    if ((li.x_exp == 0 || lj.x_exp == 0) && (li.y_exp == 0 || lj.y_exp == 0)) continue;
    BivariatePoly r = reduce(s_polynomial(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {BivariatePoly(Rational(1))};
    basis.push_back(monic(std::move(r)));
    const std::size_t k = basis.size() - 1;
    for (std::size_t m = 0; m < k; ++m) pairs.emplace_back(m, k);
  }
  return basis;
}

}  // namespace

BivariatePoly reduce(BivariatePoly p, const std::vector<BivariatePoly>& divisors) {
  BivariatePoly remainder;
  while (!p.is_zero()) {
    const Monomial lead = p.leading_monomial();
    const Rational coeff = p.leading_coefficient();
    bool divided = false;
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      const Monomial& lg = g.leading_monomial();
      if (divides(lg, lead)) {
        p -= shifted(g, {lead.x_exp - lg.x_exp, lead.y_exp - lg.y_exp}, coeff / g.leading_coefficient());
        divided = true;
        break;
      }
    }
    if (!divided) {
      remainder.add_term(lead, coeff);
      p.add_term(lead, -coeff);
    }
  }
  return remainder;
}

std::vector<BivariatePoly> groebner_basis(std::vector<BivariatePoly> generators) {
  std::vector<BivariatePoly> basis = buchberger(std::move(generators));

  // Minimise: drop elements whose leading monomial is divisible by another's.
  std::vector<BivariatePoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& li = basis[i].leading_monomial();
      const Monomial& lj = basis[j].leading_monomial();
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<BivariatePoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Monomial lead = minimal[i].leading_monomial();
    BivariatePoly tail = minimal[i];
    tail.add_term(lead, -tail.leading_coefficient());
    minimal[i] = monic(BivariatePoly::monomial(lead) + reduce(tail, others));
  }
  std::sort(minimal.begin(), minimal.end(), [](const BivariatePoly& a, const BivariatePoly& b) {
    return GradedLexLess{}(a.leading_monomial(), b.leading_monomial());
  });
  return minimal;
}

bool ideal_contains_one(const std::vector<BivariatePoly>& generators) {
  const auto basis = buchberger(generators);
  return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
}

}  // namespace e8lab
