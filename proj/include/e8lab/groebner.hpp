#pragma once

#include <vector>

#include "e8lab/polynomial.hpp"

namespace e8lab {

/// Full reduction of p modulo `divisors` under graded lex order (x > y).
BivariatePoly reduce(BivariatePoly p, const std::vector<BivariatePoly>& divisors);

/// Reduced, monic Groebner basis of the ideal generated by `generators`,
/// sorted by leading monomial. The zero ideal gives an empty basis.
std::vector<BivariatePoly> groebner_basis(std::vector<BivariatePoly> generators);

/// 1 in (generators) over the rationals.
bool ideal_contains_one(const std::vector<BivariatePoly>& generators);

}  // namespace e8lab
