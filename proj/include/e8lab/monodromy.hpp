#pragma once

#include <map>
#include <optional>
#include <vector>

#include "e8lab/artin.hpp"
#include "e8lab/dynkin.hpp"
#include "e8lab/int_matrix.hpp"

namespace e8lab {

/// Sign of the intersection number <c_i, c_j> for each edge i < j.
using Orientation = std::map<Edge, int>;

/// +1 on every edge, oriented from the smaller to the larger label.
Orientation default_orientation(const DynkinDiagram& d);

/// Curves c_1..c_n, one per vertex, meeting once when adjacent; the Gram
/// matrix holds their algebraic intersection numbers.
class SymplecticConfig {
 public:
  SymplecticConfig(const DynkinDiagram& d, Orientation orientation);

  const DynkinDiagram& diagram() const noexcept { return group_->diagram(); }
  const ArtinGroupPtr& group() const noexcept { return group_; }
  const Orientation& orientation() const noexcept { return orientation_; }
  const IntMatrix& gram() const noexcept { return gram_; }
  std::int64_t determinant() const noexcept { return determinant_; }
  bool unimodular() const noexcept { return determinant_ == 1 || determinant_ == -1; }

  /// <x, y> = x^T G y
  std::int64_t pairing(int i, int j) const { return gram_(i - 1, j - 1); }

 private:
  ArtinGroupPtr group_;
  Orientation orientation_;
  IntMatrix gram_;
  std::int64_t determinant_ = 0;
};

SymplecticConfig build_config(const DynkinDiagram& d, std::optional<Orientation> orientation = std::nullopt);

/// Matrix of x -> x + <x, c_i> c_i in the basis c_1..c_n.
IntMatrix transvection(const SymplecticConfig& cfg, int i);
/// x -> x - <x, c_i> c_i
IntMatrix inverse_transvection(const SymplecticConfig& cfg, int i);

/// M^T G M == G
bool preserves_form(const SymplecticConfig& cfg, const IntMatrix& m);

/// Product of generator images, left to right.
IntMatrix rep_word(const SymplecticConfig& cfg, const ArtinWord& w);

struct RelationCheck {
  enum class Kind { Braid, Commutation };
  int i;
  int j;
  Kind kind;
  bool passed;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_passed() const;
  int count(RelationCheck::Kind kind) const;
};

/// Checks T_i T_j T_i = T_j T_i T_j for adjacent i, j and T_i T_j = T_j T_i
/// otherwise, over all pairs i < j.
RelationReport check_geometric_relations(const SymplecticConfig& cfg);

struct DeltaImage {
  IntMatrix matrix;
  /// Multiplicative order; empty when it exceeds the bound.
  std::optional<int> order;
};

/// Image of the Garside element and its order, found by powering up to
/// `order_bound`. Entry overflow while powering means the order is infinite.
DeltaImage delta_image(const SymplecticConfig& cfg, int order_bound = 10000);

struct KernelSearchOptions {
  int safety_bound = 14;
  double budget_seconds = 300.0;
};

/// Reads E8LAB_BUDGET_SECONDS for the time budget.
KernelSearchOptions default_kernel_search_options();

struct KernelSearchResult {
  /// One shortest word per group element, sorted by (length, letters).
  std::vector<ArtinWord> words;
  /// Every kernel element of word length <= explored_depth is listed.
  int explored_depth = 0;
  bool complete = true;
};

/// Words of length <= max_length that act trivially on homology but are
/// nontrivial in the Artin group, one per group element.
///
/// Meet in the middle: enumerate the ball of group elements (deduplicated by
/// normal form) up to radius ceil(L/2), bucket by homology image, and pair
/// elements u != v of one bucket into u v^-1.
KernelSearchResult kernel_search(const SymplecticConfig& cfg, int max_length,
                                 const KernelSearchOptions& options = default_kernel_search_options());

struct KernelCertificate {
  bool group_trivial = false;
  bool homology_trivial = false;
  /// Nontrivial in the group, trivial on homology.
  bool valid() const noexcept { return !group_trivial && homology_trivial; }
};

KernelCertificate verify_kernel_certificate(const SymplecticConfig& cfg, const ArtinWord& w);

}  // namespace e8lab
