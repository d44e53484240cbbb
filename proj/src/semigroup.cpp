#include "e8lab/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "e8lab/errors.hpp"

namespace e8lab {

namespace {

// Membership table for [0, limit). Index 0 is the identity.
std::vector<bool> complement_table(const std::vector<int>& gaps, int limit) {
  std::vector<bool> member(limit, true);
  for (int g : gaps)
    if (g < limit) member[g] = false;
  return member;
}

std::vector<int> minimal_generators(const std::vector<int>& gaps) {
  if (gaps.empty()) return {1};
  const int frobenius = gaps.back();
  int multiplicity = 1;
  while (std::binary_search(gaps.begin(), gaps.end(), multiplicity)) ++multiplicity;
  const int limit = frobenius + multiplicity + 1;
  const auto member = complement_table(gaps, limit);
  std::vector<int> out;
  for (int n = 1; n < limit; ++n) {
    if (!member[n]) continue;
    bool decomposable = false;
    for (int a = 1; a <= n / 2 && !decomposable; ++a) decomposable = member[a] && member[n - a];
    if (!decomposable) out.push_back(n);
  }
  return out;
}

}  // namespace

GapSequence::GapSequence(std::vector<int> gaps) : gaps_(std::move(gaps)) {
  std::sort(gaps_.begin(), gaps_.end());
  if (std::adjacent_find(gaps_.begin(), gaps_.end()) != gaps_.end()) {
    throw ValidationError("gap sequence has repeated entries");
  }
  if (!gaps_.empty() && gaps_.front() < 1) throw ValidationError("gaps must be positive integers");
  const int g = genus();
  if (g == 0) return;
  if (gaps_.front() != 1) throw ValidationError("1 must be a gap when the genus is positive");
  if (gaps_.back() > 2 * g - 1) {
    throw ValidationError("gap " + std::to_string(gaps_.back()) + " exceeds the bound 2g-1 = " +
                          std::to_string(2 * g - 1));
  }
  const auto member = complement_table(gaps_, gaps_.back() + 1);
  for (int a = 1; a <= gaps_.back(); ++a) {
    for (int b = a; a + b <= gaps_.back(); ++b) {
      if (member[a] && member[b] && !member[a + b]) {
        throw ValidationError("complement is not closed under addition: " + std::to_string(a) + " + " +
                              std::to_string(b) + " = " + std::to_string(a + b) + " is a gap");
      }
    }
  }
}

bool GapSequence::contains(int n) const { return std::binary_search(gaps_.begin(), gaps_.end(), n); }

bool NumericalSemigroup::contains(int n) const {
  return n >= 0 && !std::binary_search(gaps.begin(), gaps.end(), n);
}

NumericalSemigroup from_generators(std::span<const int> generators) {
  if (generators.empty()) throw ValidationError("need at least one generator");
  int g = 0;
  for (int a : generators) {
    if (a <= 0) throw ValidationError("generators must be positive, got " + std::to_string(a));
    g = std::gcd(g, a);
  }
  if (g != 1) {
    throw ValidationError("generators have gcd " + std::to_string(g) + ", so infinitely many gaps");
  }
  const int smallest = *std::min_element(generators.begin(), generators.end());

  // Sieve until `smallest` consecutive members appear; everything beyond is
  // then reachable by adding `smallest`.
  std::vector<bool> member{true};
  std::vector<int> gaps;
  int run = 1;
  for (int n = 1; run < smallest; ++n) {
    bool reachable = false;
    for (int a : generators)
      if (a <= n && member[n - a]) reachable = true;
    member.push_back(reachable);
    if (reachable) {
      ++run;
    } else {
      run = 0;
      gaps.push_back(n);
    }
  }
  NumericalSemigroup s;
  s.gaps = gaps;
  if (!gaps.empty()) s.frobenius = gaps.back();
  s.generators = minimal_generators(gaps);
  return s;
}

SpinParity spin_parity(const GapSequence& gs) {
  const int g = gs.genus();
  SpinParity out;
  out.h0 = static_cast<int>(std::count_if(gs.gaps().begin(), gs.gaps().end(), [g](int gap) { return gap >= g; }));
  out.parity = out.h0 % 2 == 0 ? Parity::Even : Parity::Odd;
  return out;
}

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string to_string(Genus4Class c) {
  switch (c) {
    case Genus4Class::Hyperelliptic: return "hyperelliptic";
    case Genus4Class::EvenComponent: return "even_component";
    case Genus4Class::OddComponent: return "odd_component";
    case Genus4Class::NotMinimal: return "not_minimal";
  }
  return "?";
}

Genus4Class classify_genus4(const GapSequence& gs) {
  if (gs.genus() != 4) {
    throw ValidationError("classification needs genus 4, got genus " + std::to_string(gs.genus()));
  }
  if (!gs.contains(7)) return Genus4Class::NotMinimal;
  if (gs.gaps() == std::vector<int>{1, 3, 5, 7}) return Genus4Class::Hyperelliptic;
  return spin_parity(gs).parity == Parity::Even ? Genus4Class::EvenComponent : Genus4Class::OddComponent;
}

NumericalSemigroup gaps_to_semigroup(const GapSequence& gs) {
  NumericalSemigroup s;
  s.gaps = gs.gaps();
  if (!s.gaps.empty()) s.frobenius = s.gaps.back();
  s.generators = minimal_generators(s.gaps);
  return s;
}

std::vector<GapSequence> enumerate_gap_sequences(int genus) {
  if (genus < 0 || genus > 12) throw ValidationError("enumeration supports genus 0..12");
  if (genus == 0) return {GapSequence({})};
  // Gaps live in [1, 2g-1] and always contain 1.
  const int span = 2 * genus - 1;
  std::vector<GapSequence> out;
  for (unsigned mask = 0; mask < (1u << (span - 1)); ++mask) {
    if (std::popcount(mask) != genus - 1) continue;
    std::vector<int> gaps{1};
    for (int k = 0; k < span - 1; ++k)
      if (mask & (1u << k)) gaps.push_back(k + 2);
    try {
      out.emplace_back(std::move(gaps));
    } catch (const ValidationError&) {
    }
  }
  return out;
}

}  // namespace e8lab
