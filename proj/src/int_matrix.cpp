#include "e8lab/int_matrix.hpp"

#include <stdexcept>

#include <gmpxx.h>

namespace e8lab {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer matrix entry overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer matrix entry overflow");
  return r;
}

}  // namespace

IntMatrix::IntMatrix(const std::vector<std::vector<std::int64_t>>& rows) : IntMatrix(static_cast<int>(rows.size())) {
  for (int r = 0; r < n_; ++r) {
    if (static_cast<int>(rows[r].size()) != n_) throw std::invalid_argument("matrix must be square");
    for (int c = 0; c < n_; ++c) (*this)(r, c) = rows[r][c];
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_identity() const {
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::vector<std::vector<std::int64_t>> IntMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(n_, std::vector<std::int64_t>(n_));
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  const int n = a.n_;
  IntMatrix out(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const std::int64_t ark = a(r, k);
      if (ark == 0) continue;
      for (int c = 0; c < n; ++c) {
        if (b(k, c) != 0) out(r, c) = checked_add(out(r, c), checked_mul(ark, b(k, c)));
      }
    }
  }
  return out;
}

std::size_t IntMatrix::hash() const noexcept {
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(n_);
  for (auto v : data_) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::int64_t determinant(const IntMatrix& m) {
  const int n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[r][c] = static_cast<long>(m(r, c));
  mpz_class previous = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / previous;
      }
    }
    previous = a[k][k];
  }
  mpz_class det = sign * a[n - 1][n - 1];
  if (!det.fits_slong_p()) throw std::overflow_error("determinant overflow");
  return det.get_si();
}

}  // namespace e8lab
