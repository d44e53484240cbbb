#pragma once

#include <cstdint>
#include <vector>

namespace e8lab {

/// Dense square integer matrix. Arithmetic throws std::overflow_error instead
/// of wrapping.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}
  explicit IntMatrix(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(int n);

  int size() const noexcept { return n_; }
  std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }

  IntMatrix transpose() const;
  bool is_identity() const;
  std::vector<std::vector<std::int64_t>> rows() const;
  const std::vector<std::int64_t>& raw() const noexcept { return data_; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix&) const = default;

  std::size_t hash() const noexcept;

 private:
  int n_ = 0;
  std::vector<std::int64_t> data_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept { return m.hash(); }
};

/// Exact determinant (fraction-free Bareiss elimination).
std::int64_t determinant(const IntMatrix& m);

}  // namespace e8lab
