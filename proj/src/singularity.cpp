#include "e8lab/singularity.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>

#include "e8lab/errors.hpp"
#include "e8lab/groebner.hpp"

namespace e8lab {

namespace {

// Column order for the truncated linear algebra: degree ascending, and inside
// one degree x-heavy monomials first, so those become pivots.
int column_index(const Monomial& m) {
  const int d = m.degree();
  return d * (d + 1) / 2 + (d - m.x_exp);
}

Monomial column_monomial(int index) {
  int d = 0;
  while ((d + 1) * (d + 2) / 2 <= index) ++d;
  const int offset = index - d * (d + 1) / 2;
  return {d - offset, offset};
}

using SparseRow = std::map<int, Rational>;

class Echelon {
 public:
  explicit Echelon(int columns) : pivots_(columns) {}

  void insert(SparseRow row) {
    while (!row.empty()) {
      auto lead = row.begin();
      const int col = lead->first;
      if (!pivots_[col]) {
        const Rational scale = 1 / lead->second;
        for (auto& [c, v] : row) v *= scale;
        pivots_[col] = std::move(row);
        ++rank_;
        return;
      }
      const Rational factor = lead->second;
      for (const auto& [c, v] : *pivots_[col]) {
        auto [it, inserted] = row.try_emplace(c, 0);
        it->second -= factor * v;
        if (it->second == 0) row.erase(it);
      }
    }
  }

  int rank() const noexcept { return rank_; }
  bool is_pivot(int col) const { return pivots_[col].has_value(); }

 private:
  std::vector<std::optional<SparseRow>> pivots_;
  int rank_ = 0;
};

struct Truncated {
  int dimension;
  std::vector<Monomial> standard;
};

Truncated quotient_dimension(const BivariatePoly& fx, const BivariatePoly& fy, int n) {
  const int columns = n * (n + 1) / 2;
  Echelon echelon(columns);
  for (const BivariatePoly* g : {&fx, &fy}) {
    if (g->is_zero() || g->order() >= n) continue;
    for (int d = 0; d + g->order() < n; ++d) {
      for (int a = d; a >= 0; --a) {
        SparseRow row;
        for (const auto& [m, c] : g->terms()) {
          const Monomial product{m.x_exp + a, m.y_exp + d - a};
          if (product.degree() < n) row.emplace(column_index(product), c);
        }
        if (!row.empty()) echelon.insert(std::move(row));
      }
    }
  }
  Truncated out{columns - echelon.rank(), {}};
  for (int c = 0; c < columns; ++c)
    if (!echelon.is_pivot(c)) out.standard.push_back(column_monomial(c));
  std::sort(out.standard.begin(), out.standard.end(), GradedLexLess{});
  return out;
}

}  // namespace

MilnorOptions default_milnor_options() {
  MilnorOptions options;
  if (const char* env = std::getenv("E8LAB_MAX_TRUNCATION")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 2 && value <= 1024) options.max_truncation = static_cast<int>(value);
  }
  return options;
}

MilnorData milnor(const BivariatePoly& f, const MilnorOptions& options) {
  if (f.constant_term() != 0) {
    throw ValidationError("germ must vanish at the origin, constant term is " + to_string(f.constant_term()));
  }
  const BivariatePoly fx = f.dx();
  const BivariatePoly fy = f.dy();
  std::optional<int> previous;
  for (int n = 1; n <= options.max_truncation; ++n) {
    Truncated t = quotient_dimension(fx, fy, n);
    if (previous && *previous == t.dimension) {
      return MilnorData{t.dimension, std::move(t.standard), n};
    }
    previous = t.dimension;
  }
  throw ComputationError("singularity of " + f.to_string() + " at the origin is not isolated: the local " +
                         "algebra dimension still grows at truncation degree " +
                         std::to_string(options.max_truncation));
}

BivariatePoly germ_for_diagram(const DynkinDiagram& d, GermConvention convention) {
  const auto x = BivariatePoly::x();
  const auto y = BivariatePoly::y();
  const int n = d.rank();
  switch (d.family()) {
    case Family::A:
      return x.pow(2) + y.pow(convention == GermConvention::Tabulated ? n + 2 : n + 1);
    case Family::D:
      return y * (x.pow(2) + y.pow(n - 2));
    case Family::E:
      if (n == 6) return x.pow(3) + y.pow(4);
      if (n == 7) return x * (x.pow(2) + y.pow(3));
      return x.pow(3) + y.pow(5);
  }
  throw InternalError("unknown diagram family");
}

BivariatePoly VersalFamily::specialize(std::span<const Rational> s) const {
  if (s.size() != parameters.size()) {
    throw ValidationError("expected " + std::to_string(parameters.size()) + " parameter values, got " +
                          std::to_string(s.size()));
  }
  BivariatePoly out = base;
  for (std::size_t i = 0; i < s.size(); ++i) out.add_term(parameters[i].monomial, s[i]);
  return out;
}

VersalFamily build_versal(const BivariatePoly& f, const MilnorOptions& options) {
  const MilnorData data = milnor(f, options);
  VersalFamily family{f, {}};
  for (std::size_t i = 0; i < data.basis.size(); ++i) {
    family.parameters.push_back({"s" + std::to_string(i + 1), data.basis[i]});
  }
  return family;
}

bool fiber_is_smooth(const VersalFamily& family, std::span<const Rational> s) {
  const BivariatePoly f = family.specialize(s);
  return ideal_contains_one({f, f.dx(), f.dy()});
}

BivariatePoly monomial_curve(int a, int b) {
  if (a <= 0 || b <= 0) throw ValidationError("semigroup generators must be positive");
  if (a >= b) throw ValidationError("expected a < b");
  if (std::gcd(a, b) != 1) {
    throw ValidationError("generators " + std::to_string(a) + " and " + std::to_string(b) + " are not coprime");
  }
  return BivariatePoly::x().pow(b) - BivariatePoly::y().pow(a);
}

OrbitDescriptor orbit_descriptor(std::span<const int> degrees) {
  if (degrees.empty()) throw ValidationError("need at least one weight");
  OrbitDescriptor out;
  out.closes = std::all_of(degrees.begin(), degrees.end(), [](int d) { return d % 2 == 0; });
  int g = 0;
  for (int d : degrees) {
    if (d <= 0) throw ValidationError("weights must be positive");
    g = std::gcd(g, d);
  }
  out.quotient_order = g;
  return out;
}

std::vector<Rational> parse_rational_vector(std::string_view line) {
  std::vector<Rational> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    const auto field = line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(parse_rational(field));
    } catch (const ParseError& e) {
      throw ParseError("invalid vector entry '" + std::string(field) + "'", start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace e8lab
