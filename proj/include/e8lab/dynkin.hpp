#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace e8lab {

enum class Family { A, D, E };

char family_letter(Family f);

/// Undirected edge between two vertex labels, stored with first < second.
struct Edge {
  int first;
  int second;

  Edge(int a, int b) : first(a < b ? a : b), second(a < b ? b : a) {}
  auto operator<=>(const Edge&) const = default;
};

/// A simply-laced Dynkin diagram of type A_n, D_n, E6, E7 or E8.
///
/// Vertices are labelled 1..rank. The standard diagrams use Bourbaki
/// numbering:
///
///   A_n:  1 - 2 - ... - n
///   D_n:  1 - 2 - ... - (n-2) - (n-1), with n attached to n-2
///   E_n:  1 - 3 - 4 - 5 - ... - n,     with 2 attached to 4
///
/// Diagrams built from an explicit edge list may use any labelling; the
/// family and rank are recovered from the shape of the tree.
class DynkinDiagram {
 public:
  /// Largest supported rank. Descent sets are stored as 32-bit masks.
  static constexpr int kMaxRank = 32;

  static DynkinDiagram standard(Family family, int rank);

  /// Validates that `edges` form one of the admitted trees on 1..rank.
  static DynkinDiagram from_edges(int rank, std::vector<Edge> edges);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool adjacent(int i, int j) const;
  const std::vector<int>& neighbors(int i) const { return neighbors_.at(i - 1); }
  int degree(int i) const { return static_cast<int>(neighbors(i).size()); }
  bool has_vertex(int i) const noexcept { return i >= 1 && i <= rank_; }

  /// "E8", "A3", ...
  std::string name() const;

  bool operator==(const DynkinDiagram& other) const {
    return rank_ == other.rank_ && edges_ == other.edges_;
  }

 private:
  DynkinDiagram(Family family, int rank, std::vector<Edge> edges);

  Family family_;
  int rank_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> neighbors_;
};

DynkinDiagram build_diagram(Family family, int rank);

/// Accepts `E8`, `A5`, `D4`, ... or a JSON object
/// `{"vertices": [1, ...], "edges": [[i, j], ...]}`.
DynkinDiagram parse_diagram(std::string_view text);

}  // namespace e8lab
