#include "e8lab/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "json.hpp"

#include "e8lab/errors.hpp"

namespace e8lab {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

DynkinDiagram::DynkinDiagram(Family family, int rank, std::vector<Edge> edges)
    : family_(family), rank_(rank), edges_(std::move(edges)), neighbors_(rank) {
  std::sort(edges_.begin(), edges_.end());
  for (const auto& e : edges_) {
    neighbors_[e.first - 1].push_back(e.second);
    neighbors_[e.second - 1].push_back(e.first);
  }
  for (auto& n : neighbors_) std::sort(n.begin(), n.end());
}

DynkinDiagram DynkinDiagram::standard(Family family, int rank) {
  if (rank < 1) throw ValidationError("rank must be positive");
  if (rank > kMaxRank) {
    throw ValidationError("rank " + std::to_string(rank) + " exceeds the supported maximum " +
                          std::to_string(kMaxRank));
  }
  std::vector<Edge> edges;
  switch (family) {
    case Family::A:
      for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      if (rank < 3) throw ValidationError("D_n requires n >= 3, got n = " + std::to_string(rank));
      for (int i = 1; i < rank - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 2, rank);
      break;
    case Family::E:
      if (rank < 6 || rank > 8) {
        throw ValidationError("E_n requires 6 <= n <= 8, got n = " + std::to_string(rank));
      }
      edges.emplace_back(1, 3);
      for (int i = 3; i < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(2, 4);
      break;
  }
  return DynkinDiagram(family, rank, std::move(edges));
}

DynkinDiagram DynkinDiagram::from_edges(int rank, std::vector<Edge> edges) {
  if (rank < 1) throw ValidationError("diagram must have at least one vertex");
  if (rank > kMaxRank) {
    throw ValidationError("rank " + std::to_string(rank) + " exceeds the supported maximum " +
                          std::to_string(kMaxRank));
  }
  std::set<Edge> seen;
  for (const auto& e : edges) {
    if (e.first == e.second) throw ValidationError("self-loop at vertex " + std::to_string(e.first));
    if (e.first < 1 || e.second > rank) {
      throw ValidationError("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                            ") names a vertex outside 1.." + std::to_string(rank));
    }
    if (!seen.insert(e).second) {
      throw ValidationError("multiple edge between " + std::to_string(e.first) + " and " +
                            std::to_string(e.second));
    }
  }
  if (static_cast<int>(edges.size()) != rank - 1) {
    throw ValidationError("a tree on " + std::to_string(rank) + " vertices needs " +
                          std::to_string(rank - 1) + " edges, got " + std::to_string(edges.size()));
  }

  std::vector<std::vector<int>> adj(rank + 1);
  for (const auto& e : edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<bool> visited(rank + 1, false);
  std::vector<int> stack{1};
  visited[1] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v]) {
      if (!visited[u]) {
        visited[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != rank) throw ValidationError("diagram is not connected");

  std::vector<int> branch;
  for (int v = 1; v <= rank; ++v) {
    if (adj[v].size() > 3) {
      throw ValidationError("vertex " + std::to_string(v) + " has degree " +
                            std::to_string(adj[v].size()) + "; admitted diagrams have degree <= 3");
    }
    if (adj[v].size() == 3) branch.push_back(v);
  }
  if (branch.empty()) return DynkinDiagram(Family::A, rank, std::move(edges));
  if (branch.size() > 1) throw ValidationError("diagram has more than one branch vertex");

  // Arm lengths seen from the branch vertex.
  std::vector<int> arms;
  for (int start : adj[branch[0]]) {
    int prev = branch[0];
    int cur = start;
    int length = 1;
    while (adj[cur].size() == 2) {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return DynkinDiagram(Family::D, rank, std::move(edges));
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    return DynkinDiagram(Family::E, rank, std::move(edges));
  }
  throw ValidationError("tree with arms (" + std::to_string(arms[0]) + "," + std::to_string(arms[1]) +
                        "," + std::to_string(arms[2]) + ") is not of type A, D or E");
}

bool DynkinDiagram::adjacent(int i, int j) const {
  if (!has_vertex(i) || !has_vertex(j)) return false;
  const auto& n = neighbors_[i - 1];
  return std::binary_search(n.begin(), n.end(), j);
}

std::string DynkinDiagram::name() const { return family_letter(family_) + std::to_string(rank_); }

DynkinDiagram build_diagram(Family family, int rank) { return DynkinDiagram::standard(family, rank); }

namespace {

DynkinDiagram parse_json_diagram(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed diagram JSON", e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw ValidationError("diagram JSON needs \"vertices\" and \"edges\"");
  }
  try {
    auto vertices = j.at("vertices").get<std::vector<int>>();
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (sorted[k] != static_cast<int>(k) + 1) {
        throw ValidationError("diagram vertices must be exactly 1.." + std::to_string(sorted.size()));
      }
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      auto pair = e.get<std::vector<int>>();
      if (pair.size() != 2) throw ValidationError("each edge must be a pair [i, j]");
      edges.emplace_back(pair[0], pair[1]);
    }
    return DynkinDiagram::from_edges(static_cast<int>(vertices.size()), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("diagram JSON has the wrong shape: ") + e.what());
  }
}

}  // namespace

DynkinDiagram parse_diagram(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty diagram name", 0);
  if (text.front() == '{') return parse_json_diagram(text);

  Family family;
  switch (std::toupper(static_cast<unsigned char>(text.front()))) {
    case 'A': family = Family::A; break;
    case 'D': family = Family::D; break;
    case 'E': family = Family::E; break;
    default: throw ParseError("diagram family must be A, D or E", 0);
  }
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("expected a rank after the family letter", 1);
  }
  return DynkinDiagram::standard(family, rank);
}

}  // namespace e8lab
