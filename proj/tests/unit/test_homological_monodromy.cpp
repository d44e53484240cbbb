#include <random>

#include "doctest.h"
#include "e8lab/errors.hpp"
#include "e8lab/monodromy.hpp"

using namespace e8lab;

namespace {

using Mat = std::vector<std::vector<long long>>;

Mat to_mat(const IntMatrix& m) {
  Mat out;
  for (const auto& row : m.rows()) out.emplace_back(row.begin(), row.end());
  return out;
}

Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Mat identity(std::size_t n) {
  Mat m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Intersection form from scratch: +o on (i, j) for an edge i < j with sign o.
Mat skew_form(const DynkinDiagram& d, const Orientation& o) {
  Mat g(d.rank(), std::vector<long long>(d.rank(), 0));
  for (const auto& e : d.edges()) {
    g[e.first - 1][e.second - 1] = o.at(e);
    g[e.second - 1][e.first - 1] = -o.at(e);
  }
  return g;
}

// Column k of T_i is c_k + <c_k, c_i> c_i.
Mat twist(const Mat& form, int i) {
  Mat t = identity(form.size());
  for (std::size_t k = 0; k < form.size(); ++k) t[i - 1][k] += form[k][i - 1];
  return t;
}

long long det(Mat m) {
  // Bareiss
  const std::size_t n = m.size();
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<DynkinDiagram> diagrams() {
  std::vector<DynkinDiagram> out;
  for (int n = 1; n <= 8; ++n) out.push_back(DynkinDiagram::standard(Family::A, n));
  for (int n = 4; n <= 8; ++n) out.push_back(DynkinDiagram::standard(Family::D, n));
  for (int n = 6; n <= 8; ++n) out.push_back(DynkinDiagram::standard(Family::E, n));
  return out;
}

std::vector<int> random_word(std::mt19937& rng, int rank, int max_len) {
  std::vector<int> w(std::uniform_int_distribution<int>(0, max_len)(rng));
  for (int& l : w) l = std::uniform_int_distribution<int>(1, rank)(rng) * (rng() % 2 ? 1 : -1);
  return w;
}

}  // namespace

TEST_CASE("generator images match an independent construction") {
  for (const auto& d : diagrams()) {
    CAPTURE(d.name());
    const auto cfg = build_config(d);
    const Mat form = skew_form(d, cfg.orientation());
    CHECK(to_mat(cfg.gram()) == form);
    for (int i = 1; i <= d.rank(); ++i) {
      CHECK(to_mat(transvection(cfg, i)) == twist(form, i));
      CHECK((transvection(cfg, i) * inverse_transvection(cfg, i)).is_identity());
    }
    CHECK(cfg.determinant() == det(form));
  }
}

TEST_CASE("every orientation: form preservation, determinant one, relations") {
  for (const auto& d : diagrams()) {
    CAPTURE(d.name());
    const auto& edges = d.edges();
    for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
      Orientation o;
      for (std::size_t k = 0; k < edges.size(); ++k) o[edges[k]] = (mask >> k) & 1 ? -1 : 1;
      const auto cfg = build_config(d, o);
      for (int i = 1; i <= d.rank(); ++i) {
        const auto t = transvection(cfg, i);
        CHECK(preserves_form(cfg, t));
        CHECK(determinant(t) == 1);
      }
      CHECK(check_geometric_relations(cfg).all_passed());
    }
  }
}

TEST_CASE("relation report counts") {
  const auto report = check_geometric_relations(build_config(DynkinDiagram::standard(Family::E, 8)));
  CHECK(report.checks.size() == 28);
  CHECK(report.count(RelationCheck::Kind::Braid) == 7);
  CHECK(report.count(RelationCheck::Kind::Commutation) == 21);
  CHECK(report.all_passed());
}

TEST_CASE("Gram determinants") {
  const auto det_of = [](Family f, int n) { return build_config(DynkinDiagram::standard(f, n)).determinant(); };
  CHECK(std::abs(det_of(Family::E, 8)) == 1);
  CHECK(det_of(Family::E, 7) == 0);
  CHECK(std::abs(det_of(Family::E, 6)) == 1);
  CHECK(det_of(Family::A, 1) == 0);
  for (int n = 1; n <= 8; ++n) CHECK(std::abs(det_of(Family::A, n)) == (n % 2 == 0 ? 1 : 0));
  CHECK(build_config(DynkinDiagram::standard(Family::E, 8)).unimodular());
  CHECK(DynkinDiagram::standard(Family::E, 8).rank() == 2 * 4);
}

TEST_CASE("representation is a homomorphism") {
  std::mt19937 rng(8);
  for (const auto& d : diagrams()) {
    const auto cfg = build_config(d);
    for (int trial = 0; trial < 10; ++trial) {
      const ArtinWord u(cfg.group(), random_word(rng, d.rank(), 8));
      const ArtinWord v(cfg.group(), random_word(rng, d.rank(), 8));
      CHECK(rep_word(cfg, u * v) == rep_word(cfg, u) * rep_word(cfg, v));
      CHECK((rep_word(cfg, u) * rep_word(cfg, u.inverse())).is_identity());
    }
  }
}

TEST_CASE("flipping an edge conjugates by a diagonal sign matrix") {
  for (const auto& d : diagrams()) {
    if (d.rank() < 2) continue;
    CAPTURE(d.name());
    const auto base = build_config(d);
    for (const auto& flipped_edge : d.edges()) {
      Orientation o = base.orientation();
      o[flipped_edge] = -o[flipped_edge];
      const auto flipped = build_config(d, o);
      // vertices on the far side of the edge get sign -1
      std::vector<int> sign(d.rank(), 1);
      std::vector<int> stack{flipped_edge.second};
      sign[flipped_edge.second - 1] = -1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : d.neighbors(v)) {
          if (u == flipped_edge.first || sign[u - 1] == -1) continue;
          sign[u - 1] = -1;
          stack.push_back(u);
        }
      }
      for (int i = 1; i <= d.rank(); ++i) {
        const Mat a = to_mat(transvection(base, i));
        const Mat b = to_mat(transvection(flipped, i));
        for (int r = 0; r < d.rank(); ++r)
          for (int c = 0; c < d.rank(); ++c) CHECK(b[r][c] == sign[r] * a[r][c] * sign[c]);
      }
      const auto ra = check_geometric_relations(base);
      const auto rb = check_geometric_relations(flipped);
      REQUIRE(ra.checks.size() == rb.checks.size());
      for (std::size_t k = 0; k < ra.checks.size(); ++k) {
        CHECK(ra.checks[k].kind == rb.checks[k].kind);
        CHECK(ra.checks[k].passed == rb.checks[k].passed);
      }
    }
  }
}

TEST_CASE("image of Delta") {
  // E8: the Coxeter element acts with order 15 and Delta = c^15, so Delta acts trivially.
  const auto e8 = build_config(DynkinDiagram::standard(Family::E, 8));
  const Mat form = skew_form(e8.diagram(), e8.orientation());
  Mat c = identity(8);
  for (int i = 1; i <= 8; ++i) c = mul(c, twist(form, i));
  Mat p = c;
  int order = 1;
  while (p != identity(8) && order < 100) {
    p = mul(p, c);
    ++order;
  }
  CHECK(order == 15);
  const auto img = delta_image(e8);
  CHECK(img.matrix.is_identity());
  REQUIRE(img.order.has_value());
  CHECK(*img.order == 1);
  CHECK(img.matrix == rep_word(e8, garside_element(e8.group())));

  // A2: Delta^2 acts as -1 in SL2(Z), so Delta has order 4.
  const auto a2 = delta_image(build_config(DynkinDiagram::standard(Family::A, 2)));
  REQUIRE(a2.order.has_value());
  CHECK(*a2.order == 4);
  // A1: the form vanishes and T_1 is trivial.
  CHECK(delta_image(build_config(DynkinDiagram::standard(Family::A, 1))).matrix.is_identity());
}

TEST_CASE("kernel search finds the known kernel of B3 -> SL2(Z)") {
  // The kernel is generated by Delta^4, of word length 12; nothing shorter.
  const auto cfg = build_config(DynkinDiagram::standard(Family::A, 2));
  const auto short_run = kernel_search(cfg, 11);
  CHECK(short_run.words.empty());
  CHECK(short_run.complete);
  CHECK(short_run.explored_depth == 11);
  const auto r = kernel_search(cfg, 12);
  REQUIRE(r.words.size() == 2);
  const auto delta = garside_element(cfg.group());
  bool plus = false, minus = false;
  for (const auto& w : r.words) {
    CHECK(w.size() == 12);
    plus |= are_equal(w, delta.power(4));
    minus |= are_equal(w, delta.power(-4));
    CHECK(verify_kernel_certificate(cfg, w).valid());
  }
  CHECK(plus);
  CHECK(minus);
}

TEST_CASE("kernel search basics") {
  const auto a1 = build_config(DynkinDiagram::standard(Family::A, 1));
  const auto r = kernel_search(a1, 2);
  REQUIRE(r.words.size() == 4);
  CHECK(r.words[0].letters() == std::vector<int>{-1});
  CHECK(r.words[1].letters() == std::vector<int>{1});

  const auto e8 = build_config(DynkinDiagram::standard(Family::E, 8));
  const auto first = kernel_search(e8, 6);
  const auto second = kernel_search(e8, 6);
  REQUIRE(first.words.size() == second.words.size());
  for (std::size_t k = 0; k < first.words.size(); ++k) CHECK(first.words[k].letters() == second.words[k].letters());
  for (const auto& w : first.words) CHECK(verify_kernel_certificate(e8, w).valid());

  CHECK_THROWS_AS(kernel_search(e8, 15), ValidationError);
  CHECK_THROWS_AS(kernel_search(e8, -1), ValidationError);
}

TEST_CASE("kernel search respects the time budget") {
  const auto e8 = build_config(DynkinDiagram::standard(Family::E, 8));
  KernelSearchOptions options;
  options.budget_seconds = 1e-6;
  const auto r = kernel_search(e8, 12, options);
  CHECK_FALSE(r.complete);
  CHECK(r.explored_depth < 12);
}

TEST_CASE("certificates") {
  const auto e8 = build_config(DynkinDiagram::standard(Family::E, 8));
  const auto trivial = verify_kernel_certificate(e8, ArtinWord(e8.group(), {1, -1}));
  CHECK(trivial.group_trivial);
  CHECK(trivial.homology_trivial);
  CHECK_FALSE(trivial.valid());
  const auto gen = verify_kernel_certificate(e8, ArtinWord(e8.group(), {1}));
  CHECK_FALSE(gen.group_trivial);
  CHECK_FALSE(gen.homology_trivial);
  const auto delta = verify_kernel_certificate(e8, garside_element(e8.group()));
  CHECK(delta.valid());
}

TEST_CASE("configuration validation") {
  const auto d = DynkinDiagram::standard(Family::A, 3);
  Orientation bad{{Edge(1, 2), 2}, {Edge(2, 3), 1}};
  CHECK_THROWS_AS(build_config(d, bad), ValidationError);
  Orientation missing{{Edge(1, 2), 1}};
  CHECK_THROWS_AS(build_config(d, missing), ValidationError);
  Orientation extra{{Edge(1, 2), 1}, {Edge(2, 3), 1}, {Edge(1, 3), 1}};
  CHECK_THROWS_AS(build_config(d, extra), ValidationError);
}
