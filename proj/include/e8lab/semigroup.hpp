#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace e8lab {

/// Sorted gaps of a numerical semigroup. Construction validates that the
/// complement in N is closed under addition.
class GapSequence {
 public:
  explicit GapSequence(std::vector<int> gaps);

  const std::vector<int>& gaps() const noexcept { return gaps_; }
  int genus() const noexcept { return static_cast<int>(gaps_.size()); }
  bool contains(int n) const;

 private:
  std::vector<int> gaps_;
};

struct NumericalSemigroup {
  /// Minimal generating set.
  std::vector<int> generators;
  std::vector<int> gaps;
  std::optional<int> frobenius;

  int genus() const noexcept { return static_cast<int>(gaps.size()); }
  GapSequence gap_sequence() const { return GapSequence(gaps); }
  bool contains(int n) const;
};

NumericalSemigroup from_generators(std::span<const int> generators);

enum class Parity { Even, Odd };

struct SpinParity {
  /// Number of gaps that are >= genus.
  int h0 = 0;
  Parity parity = Parity::Even;
};

SpinParity spin_parity(const GapSequence& gs);

enum class Genus4Class { Hyperelliptic, EvenComponent, OddComponent, NotMinimal };

std::string to_string(Parity p);
std::string to_string(Genus4Class c);

/// {1,3,5,7} hyperelliptic, {1,2,4,7} even, {1,2,3,7} odd; any other
/// genus-4 sequence misses 7 and cannot carry a differential with a single
/// zero of order 6.
Genus4Class classify_genus4(const GapSequence& gs);

NumericalSemigroup gaps_to_semigroup(const GapSequence& gs);

/// All gap sequences of the given genus, by brute force over subsets of
/// [1, 2g-1]. Small g only.
std::vector<GapSequence> enumerate_gap_sequences(int genus);

}  // namespace e8lab
