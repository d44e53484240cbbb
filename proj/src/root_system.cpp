#include "e8lab/root_system.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include <gmpxx.h>

#include "e8lab/errors.hpp"

namespace e8lab {

namespace {

std::int8_t narrow(int value) {
  if (value < -127 || value > 127) throw InternalError("Weyl matrix entry out of range");
  return static_cast<std::int8_t>(value);
}

bool is_negative_column(const std::vector<std::int8_t>& m, int rank, int col) {
  for (int r = 0; r < rank; ++r) {
    if (m[r * rank + col] < 0) return true;
  }
  return false;
}

std::vector<std::int8_t> multiply(const std::vector<std::int8_t>& a, const std::vector<std::int8_t>& b,
                                  int n) {
  std::vector<std::int8_t> out(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      int sum = 0;
      for (int k = 0; k < n; ++k) sum += a[r * n + k] * b[k * n + c];
      out[r * n + c] = narrow(sum);
    }
  }
  return out;
}

bool is_positive_root(const RootVector& v) {
  bool nonzero = false;
  for (int x : v) {
    if (x < 0) return false;
    if (x != 0) nonzero = true;
  }
  return nonzero;
}

bool is_negative_root(const RootVector& v) {
  return std::any_of(v.begin(), v.end(), [](int x) { return x < 0; });
}

using IntPoly = std::vector<long long>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial; returns false if there is a remainder.
bool divide_monic(const IntPoly& num, const IntPoly& den, IntPoly& quotient) {
  if (num.size() < den.size()) return false;
  IntPoly rem = num;
  quotient.assign(num.size() - den.size() + 1, 0);
  for (std::size_t k = quotient.size(); k-- > 0;) {
    long long lead = rem[k + den.size() - 1];
    quotient[k] = lead;
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= lead * den[j];
  }
  trim(quotient);
  return std::all_of(rem.begin(), rem.end(), [](long long c) { return c == 0; });
}

}  // namespace

WeylElement WeylElement::identity(int rank) {
  std::vector<std::int8_t> m(static_cast<std::size_t>(rank) * rank, 0);
  for (int i = 0; i < rank; ++i) m[i * rank + i] = 1;
  return WeylElement(rank, m, m);
}

std::vector<std::vector<int>> WeylElement::matrix() const {
  std::vector<std::vector<int>> out(rank_, std::vector<int>(rank_));
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c) out[r][c] = at(r, c);
  return out;
}

WeylElement WeylElement::inverse() const { return WeylElement(rank_, inverse_, matrix_); }

RootVector WeylElement::apply(std::span<const int> v) const {
  RootVector out(rank_, 0);
  for (int r = 0; r < rank_; ++r) {
    int sum = 0;
    for (int c = 0; c < rank_; ++c) sum += matrix_[r * rank_ + c] * v[c];
    out[r] = sum;
  }
  return out;
}

bool WeylElement::is_identity() const {
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

bool WeylElement::is_minus_identity() const {
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c)
      if (at(r, c) != (r == c ? -1 : 0)) return false;
  return true;
}

VertexMask WeylElement::right_descents() const {
  VertexMask mask = 0;
  for (int c = 0; c < rank_; ++c)
    if (is_negative_column(matrix_, rank_, c)) mask |= VertexMask{1} << c;
  return mask;
}

VertexMask WeylElement::left_descents() const {
  VertexMask mask = 0;
  for (int c = 0; c < rank_; ++c)
    if (is_negative_column(inverse_, rank_, c)) mask |= VertexMask{1} << c;
  return mask;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.rank_ != b.rank_) throw ValidationError("Weyl elements of different rank");
  return WeylElement(a.rank_, multiply(a.matrix_, b.matrix_, a.rank_),
                     multiply(b.inverse_, a.inverse_, a.rank_));
}

std::size_t WeylElement::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : matrix_) {
    h ^= static_cast<std::uint8_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

RootSystem::RootSystem(DynkinDiagram diagram) : diagram_(std::move(diagram)) {
  const int n = diagram_.rank();
  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  for (const auto& e : diagram_.edges()) {
    cartan_[e.first - 1][e.second - 1] = -1;
    cartan_[e.second - 1][e.first - 1] = -1;
  }

  for (int i = 0; i < n; ++i) {
    // s_i(alpha_j) = alpha_j - C_ij alpha_i
    std::vector<std::int8_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int j = 0; j < n; ++j) {
      m[j * n + j] = 1;
      m[i * n + j] = narrow(m[i * n + j] - cartan_[i][j]);
    }
    reflections_.push_back(WeylElement(n, m, m));
  }

  std::set<RootVector> seen;
  std::vector<RootVector> frontier;
  for (int i = 0; i < n; ++i) {
    RootVector simple(n, 0);
    simple[i] = 1;
    seen.insert(simple);
    frontier.push_back(simple);
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += cartan_[i][j] * beta[j];
        if (pairing == 0) continue;
        RootVector image = beta;
        image[i] -= pairing;
        if (is_positive_root(image) && seen.insert(image).second) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  positive_.assign(seen.begin(), seen.end());
  std::stable_sort(positive_.begin(), positive_.end(), [](const RootVector& a, const RootVector& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
}

int RootSystem::length(const WeylElement& w) const {
  int count = 0;
  for (const auto& beta : positive_) {
    if (is_negative_root(w.apply(beta))) ++count;
  }
  return count;
}

std::vector<int> RootSystem::reduced_word(WeylElement w) const {
  std::vector<int> word;
  while (VertexMask left = w.left_descents()) {
    int i = std::countr_zero(left);
    word.push_back(i + 1);
    w = reflections_[i] * w;
  }
  return word;
}

namespace {

// M <- M s_i: column i flips sign, each neighbour column j gains column i.
void column_step(std::vector<std::int8_t>& m, int n, int i, const std::vector<int>& neighbors) {
  for (int r = 0; r < n; ++r) {
    const int v = m[r * n + i];
    m[r * n + i] = narrow(-v);
    for (int j : neighbors) m[r * n + j - 1] = narrow(m[r * n + j - 1] + v);
  }
}

// M <- s_i M: row i becomes minus itself plus the neighbour rows.
void row_step(std::vector<std::int8_t>& m, int n, int i, const std::vector<int>& neighbors) {
  for (int c = 0; c < n; ++c) {
    int v = -m[i * n + c];
    for (int j : neighbors) v += m[(j - 1) * n + c];
    m[i * n + c] = narrow(v);
  }
}

}  // namespace

void RootSystem::multiply_simple(WeylElement& w, int i, Side side) const {
  const int n = rank();
  const auto& nb = diagram_.neighbors(i);
  if (side == Side::Right) {
    column_step(w.matrix_, n, i - 1, nb);
    row_step(w.inverse_, n, i - 1, nb);
  } else {
    row_step(w.matrix_, n, i - 1, nb);
    column_step(w.inverse_, n, i - 1, nb);
  }
}

WeylElement RootSystem::from_word(std::span<const int> word) const {
  WeylElement w = WeylElement::identity(rank());
  for (int letter : word) {
    int i = letter < 0 ? -letter : letter;
    if (!diagram_.has_vertex(i)) throw ValidationError("no vertex " + std::to_string(i));
    w = w * reflections_[i - 1];
  }
  return w;
}

RootSystem enumerate_positive_roots(const DynkinDiagram& d) { return RootSystem(d); }

WeylElement longest_element(const RootSystem& rs) {
  WeylElement w = WeylElement::identity(rs.rank());
  const VertexMask all = rs.rank() == 32 ? ~VertexMask{0} : (VertexMask{1} << rs.rank()) - 1;
  for (VertexMask right = w.right_descents(); right != all; right = w.right_descents()) {
    int i = std::countr_zero(static_cast<VertexMask>(~right & all));
    w = w * rs.simple_reflection(i + 1);
  }
  if (rs.length(w) != static_cast<int>(rs.positive_roots().size())) {
    throw InternalError("greedy longest element has the wrong length");
  }
  return w;
}

WeylElement longest_element(const DynkinDiagram& d) { return longest_element(RootSystem(d)); }

int coxeter_number(const RootSystem& rs) {
  WeylElement c = WeylElement::identity(rs.rank());
  for (int i = 1; i <= rs.rank(); ++i) c = c * rs.simple_reflection(i);
  WeylElement power = c;
  // h <= 2 * rank for the admitted families; the bound only guards bugs.
  const int bound = 4 * rs.rank() + 4;
  for (int h = 1; h <= bound; ++h) {
    if (power.is_identity()) return h;
    power = power * c;
  }
  throw InternalError("Coxeter element order exceeds " + std::to_string(bound));
}

int coxeter_number(const DynkinDiagram& d) { return coxeter_number(RootSystem(d)); }

std::vector<long long> characteristic_polynomial(const std::vector<std::vector<long long>>& a) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = a.size();
  std::vector<mpz_class> coeff(n + 1);
  coeff[n] = 1;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<mpz_class>> am(n, std::vector<mpz_class>(n, 0));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        mpz_class sum = 0;
        for (std::size_t j = 0; j < n; ++j) sum += static_cast<long>(a[r][j]) * m[j][c];
        am[r][c] = sum;
      }
    for (std::size_t r = 0; r < n; ++r) am[r][r] += coeff[n - k + 1];
    m = std::move(am);
    mpz_class trace = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t j = 0; j < n; ++j) trace += static_cast<long>(a[r][j]) * m[j][r];
    if (trace % static_cast<long>(k) != 0) throw InternalError("non-integral characteristic polynomial");
    coeff[n - k] = -trace / static_cast<long>(k);
  }
  std::vector<long long> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (!coeff[i].fits_slong_p()) throw InternalError("characteristic polynomial coefficient overflow");
    out[i] = coeff[i].get_si();
  }
  return out;
}

std::vector<long long> cyclotomic_polynomial(int d) {
  if (d < 1) throw ValidationError("cyclotomic index must be positive");
  IntPoly p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    IntPoly q;
    if (!divide_monic(p, cyclotomic_polynomial(e), q)) throw InternalError("cyclotomic division failed");
    p = std::move(q);
  }
  return p;
}

std::vector<int> invariant_degrees(const RootSystem& rs) {
  const int n = rs.rank();
  const int h = coxeter_number(rs);
  WeylElement c = WeylElement::identity(n);
  for (int i = 1; i <= n; ++i) c = c * rs.simple_reflection(i);
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (int r = 0; r < n; ++r)
    for (int col = 0; col < n; ++col) m[r][col] = c.at(r, col);
  IntPoly remaining = characteristic_polynomial(m);

  // Every eigenvalue is an h-th root of unity, so only Phi_d with d | h occur.
  std::vector<int> exponents;
  for (int d = 1; d <= h; ++d) {
    if (h % d != 0) continue;
    const IntPoly phi = cyclotomic_polynomial(d);
    IntPoly q;
    while (remaining.size() >= phi.size() && divide_monic(remaining, phi, q)) {
      remaining = q;
      for (int k = (d == 1 ? 0 : 1); k < d; ++k) {
        if (std::gcd(k, d) == 1) exponents.push_back(k * (h / d));
      }
    }
  }
  if (remaining != IntPoly{1}) {
    throw InternalError("characteristic polynomial of the Coxeter element does not split into "
                        "cyclotomic factors");
  }
  std::vector<int> degrees;
  for (int m_j : exponents) degrees.push_back(m_j + 1);
  std::sort(degrees.begin(), degrees.end());

  long total = 0;
  for (int d : degrees) total += d - 1;
  if (static_cast<int>(degrees.size()) != n || total != static_cast<long>(rs.positive_roots().size())) {
    throw InternalError("invariant degrees fail the sum check sum(d - 1) = #positive roots");
  }
  return degrees;
}

std::vector<int> invariant_degrees(const DynkinDiagram& d) { return invariant_degrees(RootSystem(d)); }

std::vector<int> mask_to_vertices(VertexMask mask) {
  std::vector<int> out;
  while (mask) {
    int i = std::countr_zero(mask);
    out.push_back(i + 1);
    mask &= mask - 1;
  }
  return out;
}

std::vector<int> weyl_descents(const WeylElement& w, Side side) {
  return mask_to_vertices(side == Side::Left ? w.left_descents() : w.right_descents());
}

}  // namespace e8lab
