#pragma once

#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

#include "e8lab/dynkin.hpp"

namespace e8lab {

/// Root coordinates with respect to the simple roots.
using RootVector = std::vector<int>;

/// Bit k set means vertex k + 1.
using VertexMask = std::uint32_t;

/// Element of a Weyl group acting on simple-root coordinates.
///
/// Column j of the matrix is w(alpha_j). The inverse is carried alongside so
/// that both descent sets are column sign tests.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(int rank);

  int rank() const noexcept { return rank_; }
  int at(int row, int col) const { return matrix_[row * rank_ + col]; }
  std::vector<std::vector<int>> matrix() const;

  WeylElement inverse() const;
  RootVector apply(std::span<const int> v) const;

  bool is_identity() const;
  bool is_minus_identity() const;

  /// {s : w alpha_s < 0}
  VertexMask right_descents() const;
  /// {s : w^-1 alpha_s < 0}
  VertexMask left_descents() const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  bool operator==(const WeylElement& other) const {
    return rank_ == other.rank_ && matrix_ == other.matrix_;
  }

  std::size_t hash() const noexcept;
  const std::vector<std::int8_t>& raw() const noexcept { return matrix_; }

 private:
  friend class RootSystem;
  WeylElement(int rank, std::vector<std::int8_t> m, std::vector<std::int8_t> inv)
      : rank_(rank), matrix_(std::move(m)), inverse_(std::move(inv)) {}

  int rank_ = 0;
  std::vector<std::int8_t> matrix_;
  std::vector<std::int8_t> inverse_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept { return w.hash(); }
};

enum class Side { Left, Right };

/// Positive roots of a simply-laced diagram, obtained by closing the simple
/// roots under simple reflections.
class RootSystem {
 public:
  explicit RootSystem(DynkinDiagram diagram);

  const DynkinDiagram& diagram() const noexcept { return diagram_; }
  int rank() const noexcept { return diagram_.rank(); }
  const std::vector<std::vector<int>>& cartan_matrix() const noexcept { return cartan_; }
  const std::vector<RootVector>& positive_roots() const noexcept { return positive_; }

  /// Reflection in the simple root of vertex i (1-based).
  const WeylElement& simple_reflection(int i) const { return reflections_.at(i - 1); }

  /// Number of positive roots sent to negative roots.
  int length(const WeylElement& w) const;

  /// Greedy reduced expression, always taking the smallest left descent.
  std::vector<int> reduced_word(WeylElement w) const;

  WeylElement from_word(std::span<const int> word) const;
  /// w <- w s_i (Side::Right) or s_i w (Side::Left), in place.
  void multiply_simple(WeylElement& w, int i, Side side) const;

 private:
  DynkinDiagram diagram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootVector> positive_;
  std::vector<WeylElement> reflections_;
};


RootSystem enumerate_positive_roots(const DynkinDiagram& d);

/// w0, built by right-multiplying simple reflections while the length grows.
WeylElement longest_element(const RootSystem& rs);
WeylElement longest_element(const DynkinDiagram& d);

/// Order of s_1 s_2 ... s_n.
int coxeter_number(const RootSystem& rs);
int coxeter_number(const DynkinDiagram& d);

/// Degrees of the basic invariants, read off from the cyclotomic factorisation
/// of the characteristic polynomial of a Coxeter element.
std::vector<int> invariant_degrees(const RootSystem& rs);
std::vector<int> invariant_degrees(const DynkinDiagram& d);

/// Descent set as sorted 1-based vertex labels.
std::vector<int> weyl_descents(const WeylElement& w, Side side);

std::vector<int> mask_to_vertices(VertexMask mask);

/// Coefficients (constant term first) of det(t I - M) for an integer matrix.
std::vector<long long> characteristic_polynomial(const std::vector<std::vector<long long>>& m);

/// Coefficients (constant term first) of the d-th cyclotomic polynomial.
std::vector<long long> cyclotomic_polynomial(int d);

}  // namespace e8lab
