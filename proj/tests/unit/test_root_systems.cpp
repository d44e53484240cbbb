#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "e8lab/errors.hpp"
#include "e8lab/root_system.hpp"

using namespace e8lab;

namespace {

std::vector<DynkinDiagram> all_diagrams(int max_rank) {
  std::vector<DynkinDiagram> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back(DynkinDiagram::standard(Family::A, n));
  for (int n = 3; n <= max_rank; ++n) out.push_back(DynkinDiagram::standard(Family::D, n));
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back(DynkinDiagram::standard(Family::E, n));
  return out;
}

// Positive roots of a simply-laced system are the nonnegative integer vectors
// v with q(v) = sum v_i^2 - sum_{edges} v_i v_j = 1. Coefficients never exceed 6.
std::vector<std::vector<int>> brute_force_roots(const DynkinDiagram& d) {
  const int n = d.rank();
  const int cap = d.family() == Family::E ? 6 : 2;
  std::vector<std::vector<int>> roots;
  std::vector<int> v(n, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      long q = 0;
      for (int x : v) q += x * x;
      for (const auto& e : d.edges()) q -= v[e.first - 1] * v[e.second - 1];
      if (q == 1) roots.push_back(v);
      return;
    }
    for (int c = 0; c <= cap; ++c) {
      v[k] = c;
      rec(k + 1);
    }
  };
  rec(0);
  return roots;
}

int classical_count(const DynkinDiagram& d) {
  const int n = d.rank();
  switch (d.family()) {
    case Family::A: return n * (n + 1) / 2;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  return -1;
}

// Exponents are the dual partition of the root height distribution.
std::vector<int> degrees_from_heights(const DynkinDiagram& d) {
  const auto roots = brute_force_roots(d);
  std::map<int, int> per_height;
  int top = 0;
  for (const auto& r : roots) {
    const int h = std::accumulate(r.begin(), r.end(), 0);
    ++per_height[h];
    top = std::max(top, h);
  }
  std::vector<int> degrees;
  for (int i = 0; i < d.rank(); ++i) {
    int m = 0;
    for (int k = 1; k <= top; ++k)
      if (per_height[k] > i) m = k;
    degrees.push_back(m + 1);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

DynkinDiagram relabelled(const DynkinDiagram& d, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const auto& e : d.edges()) edges.emplace_back(perm[e.first - 1], perm[e.second - 1]);
  return DynkinDiagram::from_edges(d.rank(), edges);
}

}  // namespace

TEST_CASE("standard diagrams use Bourbaki numbering") {
  const auto e8 = DynkinDiagram::standard(Family::E, 8);
  CHECK(e8.name() == "E8");
  CHECK(e8.adjacent(1, 3));
  CHECK(e8.adjacent(2, 4));
  CHECK(e8.degree(4) == 3);
  CHECK_FALSE(e8.adjacent(1, 2));
  const auto d5 = DynkinDiagram::standard(Family::D, 5);
  CHECK(d5.adjacent(3, 5));
  CHECK(d5.degree(3) == 3);
}

TEST_CASE("diagram parsing") {
  CHECK(parse_diagram("E8") == DynkinDiagram::standard(Family::E, 8));
  CHECK(parse_diagram("A1").rank() == 1);
  const auto j = parse_diagram(R"({"vertices":[1,2,3,4],"edges":[[1,2],[2,3],[2,4]]})");
  CHECK(j.family() == Family::D);
  CHECK(j.rank() == 4);
  CHECK_THROWS_AS(parse_diagram("E9"), ValidationError);
  CHECK_THROWS_AS(parse_diagram("D2"), ValidationError);
  CHECK(parse_diagram("D3").rank() == 3);
  CHECK_THROWS_AS(parse_diagram("B3"), ValidationError);
  CHECK_THROWS_AS(parse_diagram("A0"), ValidationError);
  // cycle
  CHECK_THROWS_AS(parse_diagram(R"({"vertices":[1,2,3],"edges":[[1,2],[2,3],[3,1]]})"), ValidationError);
  // disconnected
  CHECK_THROWS_AS(parse_diagram(R"({"vertices":[1,2,3],"edges":[[1,2]]})"), ValidationError);
  // affine E8 shape (arms 1,2,5)
  CHECK_THROWS_AS(DynkinDiagram::from_edges(9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {6, 9}}),
                  ValidationError);
  CHECK_THROWS_AS(parse_diagram("{not json"), ValidationError);
}

TEST_CASE("positive roots match brute force and classical counts") {
  for (const auto& d : all_diagrams(8)) {
    CAPTURE(d.name());
    const RootSystem rs(d);
    auto expected = brute_force_roots(d);
    auto got = rs.positive_roots();
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
    CHECK(static_cast<int>(got.size()) == classical_count(d));
  }
}

TEST_CASE("longest element: length, involution and -identity table") {
  for (const auto& d : all_diagrams(8)) {
    CAPTURE(d.name());
    const RootSystem rs(d);
    const auto w0 = longest_element(rs);
    CHECK(rs.length(w0) == static_cast<int>(rs.positive_roots().size()));
    CHECK((w0 * w0).is_identity());
    const int n = d.rank();
    bool minus = false;
    switch (d.family()) {
      case Family::A: minus = n == 1; break;
      case Family::D: minus = n % 2 == 0; break;
      case Family::E: minus = n != 6; break;
    }
    CHECK(w0.is_minus_identity() == minus);
    CHECK(weyl_descents(w0, Side::Left).size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("reduced words round trip") {
  const RootSystem rs(DynkinDiagram::standard(Family::E, 6));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> word(20);
    for (int& l : word) l = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto w = rs.from_word(word);
    const auto reduced = rs.reduced_word(w);
    CHECK(static_cast<int>(reduced.size()) == rs.length(w));
    CHECK(rs.from_word(reduced) == w);
    CHECK((w * w.inverse()).is_identity());
  }
}

TEST_CASE("invariant degrees") {
  CHECK(invariant_degrees(DynkinDiagram::standard(Family::E, 8)) == std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});
  CHECK(invariant_degrees(DynkinDiagram::standard(Family::E, 6)) == std::vector<int>{2, 5, 6, 8, 9, 12});
  CHECK(coxeter_number(DynkinDiagram::standard(Family::E, 8)) == 30);
  for (const auto& d : all_diagrams(8)) {
    CAPTURE(d.name());
    const RootSystem rs(d);
    const auto degrees = invariant_degrees(rs);
    CHECK(degrees == degrees_from_heights(d));
    const int sum = std::accumulate(degrees.begin(), degrees.end(), 0) - d.rank();
    CHECK(sum == static_cast<int>(rs.positive_roots().size()));
    CHECK(coxeter_number(rs) == degrees.back());
  }
}

TEST_CASE("relabelling preserves root data") {
  std::mt19937 rng(11);
  for (const auto& d : all_diagrams(8)) {
    CAPTURE(d.name());
    std::vector<int> perm(d.rank());
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto r = relabelled(d, perm);
    // D3 is the path A3 once relabelled
    if (d.name() != "D3") CHECK(r.family() == d.family());
    CHECK(invariant_degrees(r) == invariant_degrees(d));
    CHECK(RootSystem(r).positive_roots().size() == RootSystem(d).positive_roots().size());
    CHECK(longest_element(r).is_minus_identity() == longest_element(d).is_minus_identity());
  }
}

TEST_CASE("cyclotomic and characteristic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(characteristic_polynomial({{0, -1}, {1, 0}}) == std::vector<long long>{1, 0, 1});
}

TEST_CASE("in-place simple multiplication matches matrix products") {
  const RootSystem rs(DynkinDiagram::standard(Family::E, 7));
  std::mt19937 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> word(12);
    for (int& l : word) l = std::uniform_int_distribution<int>(1, 7)(rng);
    const auto w = rs.from_word(word);
    const int i = std::uniform_int_distribution<int>(1, 7)(rng);
    auto right = w;
    rs.multiply_simple(right, i, Side::Right);
    CHECK(right == w * rs.simple_reflection(i));
    CHECK(right.inverse() == (w * rs.simple_reflection(i)).inverse());
    auto left = w;
    rs.multiply_simple(left, i, Side::Left);
    CHECK(left == rs.simple_reflection(i) * w);
    CHECK(left.left_descents() == (rs.simple_reflection(i) * w).left_descents());
  }
}
