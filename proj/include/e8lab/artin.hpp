#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "e8lab/dynkin.hpp"
#include "e8lab/root_system.hpp"

namespace e8lab {

/// The Artin group of a simply-laced Dynkin diagram together with the Weyl
/// group data its Garside structure is built from. Immutable; share it.
class ArtinGroup {
 public:
  static std::shared_ptr<const ArtinGroup> create(const DynkinDiagram& d);

  const DynkinDiagram& diagram() const noexcept { return roots_.diagram(); }
  const RootSystem& roots() const noexcept { return roots_; }
  int rank() const noexcept { return roots_.rank(); }

  const WeylElement& w0() const noexcept { return w0_; }
  /// Simple element with Weyl image w0 s_i, i.e. Delta a_i^-1.
  const WeylElement& left_complement(int i) const { return left_complements_.at(i - 1); }
  /// tau(i) = j where Delta^-1 a_i Delta = a_j.
  int tau(int i) const { return tau_.at(i - 1); }
  bool tau_is_trivial() const noexcept { return tau_trivial_; }
  /// True when Delta itself (not only Delta^2) is central.
  bool delta_is_central() const noexcept { return tau_trivial_; }

  WeylElement apply_tau(const WeylElement& w) const;

 private:
  explicit ArtinGroup(const DynkinDiagram& d);

  RootSystem roots_;
  WeylElement w0_;
  std::vector<WeylElement> left_complements_;
  std::vector<int> tau_;
  bool tau_trivial_ = true;
};

using ArtinGroupPtr = std::shared_ptr<const ArtinGroup>;

/// Signed letters: +i is a_i, -i is a_i^-1.
class ArtinWord {
 public:
  ArtinWord(ArtinGroupPtr group, std::vector<int> letters);

  const ArtinGroupPtr& group() const noexcept { return group_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  ArtinWord inverse() const;
  ArtinWord power(int k) const;
  friend ArtinWord operator*(const ArtinWord& a, const ArtinWord& b);

 private:
  ArtinGroupPtr group_;
  std::vector<int> letters_;
};

/// Parses whitespace-separated signed integers, e.g. "1 2 -3".
std::vector<int> parse_letters(std::string_view text);

/// Delta^delta_power s_1 ... s_r with every adjacent pair left-weighted and
/// no s_k equal to 1 or to Delta.
struct GarsideNormalForm {
  std::int64_t delta_power = 0;
  std::vector<WeylElement> simples;

  bool is_delta_power() const noexcept { return simples.empty(); }
  bool operator==(const GarsideNormalForm&) const = default;
  std::size_t hash() const noexcept;
};

struct GarsideNormalFormHash {
  std::size_t operator()(const GarsideNormalForm& nf) const noexcept { return nf.hash(); }
};

/// Incremental left normal form: feed letters left to right.
class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(const ArtinGroup& group) : group_(&group) {}

  void push(int letter);
  void push(std::span<const int> letters) {
    for (int l : letters) push(l);
  }
  GarsideNormalForm result() const;

 private:
  void append_simple(WeylElement x);

  const ArtinGroup* group_;
  std::int64_t delta_power_ = 0;
  // Factors are kept in the frame tau^flipped_ of the actual factors, so that
  // passing Delta^-1 across the whole list is a single flag toggle.
  bool flipped_ = false;
  std::vector<WeylElement> factors_;
};

ArtinWord garside_element(const ArtinGroupPtr& group);
ArtinWord garside_element(const DynkinDiagram& d);

GarsideNormalForm normal_form(const ArtinWord& w);

/// A word representing the normal form: Delta^k spelled out, then each simple
/// as its greedy reduced word.
ArtinWord normal_form_word(const ArtinGroupPtr& group, const GarsideNormalForm& nf);

/// Each simple factor as a reduced word.
std::vector<std::vector<int>> simples_as_words(const ArtinGroup& group, const GarsideNormalForm& nf);

bool are_equal(const ArtinWord& a, const ArtinWord& b);

/// Image under the homomorphism sending every generator to 1.
std::int64_t degree(const ArtinWord& w);

bool is_central(const ArtinWord& w);

/// The vertex j with Delta^-1 a_i Delta = a_j.
int conjugation_by_delta(const ArtinGroup& group, int i);

enum class CenterGenerator { Delta, DeltaSquared };

struct InnEquality {
  bool equal = false;
  /// w1 w2^-1 = Delta^witness when equal.
  std::optional<std::int64_t> witness;
  /// The quotient is taken modulo this central element.
  CenterGenerator modulo = CenterGenerator::Delta;
};

/// Equality modulo the centre: Delta when Delta is central, Delta^2 otherwise.
InnEquality inn_equal(const ArtinWord& a, const ArtinWord& b);

}  // namespace e8lab
