#pragma once

#include <span>
#include <string>
#include <vector>

#include "e8lab/dynkin.hpp"
#include "e8lab/polynomial.hpp"

namespace e8lab {

struct MilnorData {
  int milnor_number = 0;
  /// Monomials spanning C[x,y] / (f_x, f_y) near the origin, graded-lex order.
  std::vector<Monomial> basis;
  /// Truncation degree N at which the quotient dimension stabilised.
  int truncation = 0;
};

struct MilnorOptions {
  /// Give up (non-isolated singularity) once the truncation degree passes this.
  int max_truncation = 64;
};

/// Reads E8LAB_MAX_TRUNCATION, falling back to 64.
MilnorOptions default_milnor_options();

/// Milnor number and monomial basis of the Milnor algebra at the origin.
///
/// Works in C[x,y] / m^N: the quotient by (f_x, f_y) + m^N has dimension
/// non-decreasing in N, and two equal consecutive values mean m^N already
/// lies in the Jacobian ideal, so the value is the Milnor number. Pivots are
/// chosen on the lowest-degree monomials (x-heavy first inside a degree), so
/// the basis consists of the standard monomials of a local degree order.
MilnorData milnor(const BivariatePoly& f, const MilnorOptions& options = default_milnor_options());

/// Convention for the A_n germ. `Tabulated` is x^2 + y^(n+2), whose Milnor
/// number is n + 1; `Classical` is x^2 + y^(n+1) with Milnor number n.
enum class GermConvention { Tabulated, Classical };

/// A_n: x^2+y^(n+2) (or x^2+y^(n+1)), D_n: y(x^2+y^(n-2)), E6: x^3+y^4,
/// E7: x(x^2+y^3), E8: x^3+y^5.
BivariatePoly germ_for_diagram(const DynkinDiagram& d, GermConvention convention = GermConvention::Tabulated);

struct VersalParameter {
  std::string name;
  Monomial monomial;
};

/// F(x, y, s) = f(x, y) + sum_i s_i g_i(x, y)
struct VersalFamily {
  BivariatePoly base;
  std::vector<VersalParameter> parameters;

  std::size_t size() const noexcept { return parameters.size(); }
  BivariatePoly specialize(std::span<const Rational> s) const;
};

VersalFamily build_versal(const BivariatePoly& f, const MilnorOptions& options = default_milnor_options());

/// The affine curve F(., ., s) = 0 has no singular point over C, i.e.
/// 1 lies in (F, F_x, F_y).
bool fiber_is_smooth(const VersalFamily& family, std::span<const Rational> s);

/// x^b - y^a, the plane curve parametrised by (t^a, t^b). Needs a < b coprime.
BivariatePoly monomial_curve(int a, int b);

struct OrbitDescriptor {
  /// All weights even, so the half-turn path closes up in the quotient.
  bool closes = false;
  /// gcd of the weights: the orbit is C* modulo this many roots of unity.
  int quotient_order = 1;
};

OrbitDescriptor orbit_descriptor(std::span<const int> degrees);

/// Parses one comma-separated rational vector, e.g. "1, 0, -1/2".
std::vector<Rational> parse_rational_vector(std::string_view line);

}  // namespace e8lab
