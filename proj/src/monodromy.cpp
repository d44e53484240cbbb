#include "e8lab/monodromy.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "e8lab/errors.hpp"

namespace e8lab {

namespace {

// M <- M * T_i^sign where T_i = I + sign * e_i g^T, g_j = <c_j, c_i>.
void multiply_by_transvection(IntMatrix& m, const IntMatrix& gram, int i, int sign) {
  const int n = m.size();
  for (int r = 0; r < n; ++r) {
    const std::int64_t mri = m(r, i);
    if (mri == 0) continue;
    for (int j = 0; j < n; ++j) {
      const std::int64_t g = gram(j, i);
      if (g == 0) continue;
      std::int64_t delta;
      if (__builtin_mul_overflow(mri, g * sign, &delta) || __builtin_add_overflow(m(r, j), delta, &m(r, j))) {
        throw std::overflow_error("representation matrix entry overflow");
      }
    }
  }
}

void check_diagram(const SymplecticConfig& cfg, const ArtinWord& w) {
  if (!(w.group()->diagram() == cfg.diagram())) {
    throw ValidationError("word over " + w.group()->diagram().name() + " used with a configuration over " +
                          cfg.diagram().name());
  }
}

bool lexicographic_word_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Orientation default_orientation(const DynkinDiagram& d) {
  Orientation o;
  for (const auto& e : d.edges()) o.emplace(e, 1);
  return o;
}

SymplecticConfig::SymplecticConfig(const DynkinDiagram& d, Orientation orientation)
    : group_(ArtinGroup::create(d)), orientation_(std::move(orientation)), gram_(d.rank()) {
  for (const auto& [edge, sign] : orientation_) {
    if (!d.adjacent(edge.first, edge.second)) {
      throw ValidationError("orientation names (" + std::to_string(edge.first) + "," + std::to_string(edge.second) +
                            "), which is not an edge of " + d.name());
    }
    if (sign != 1 && sign != -1) throw ValidationError("orientation signs must be +1 or -1");
  }
  for (const auto& e : d.edges()) {
    auto it = orientation_.find(e);
    if (it == orientation_.end()) {
      throw ValidationError("orientation is missing edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ")");
    }
    gram_(e.first - 1, e.second - 1) = it->second;
    gram_(e.second - 1, e.first - 1) = -it->second;
  }
  determinant_ = e8lab::determinant(gram_);
}

SymplecticConfig build_config(const DynkinDiagram& d, std::optional<Orientation> orientation) {
  return SymplecticConfig(d, orientation ? std::move(*orientation) : default_orientation(d));
}

IntMatrix transvection(const SymplecticConfig& cfg, int i) {
  if (!cfg.diagram().has_vertex(i)) throw ValidationError("no vertex " + std::to_string(i));
  IntMatrix m = IntMatrix::identity(cfg.diagram().rank());
  multiply_by_transvection(m, cfg.gram(), i - 1, 1);
  return m;
}

IntMatrix inverse_transvection(const SymplecticConfig& cfg, int i) {
  if (!cfg.diagram().has_vertex(i)) throw ValidationError("no vertex " + std::to_string(i));
  IntMatrix m = IntMatrix::identity(cfg.diagram().rank());
  multiply_by_transvection(m, cfg.gram(), i - 1, -1);
  return m;
}

bool preserves_form(const SymplecticConfig& cfg, const IntMatrix& m) {
  return m.transpose() * cfg.gram() * m == cfg.gram();
}

IntMatrix rep_word(const SymplecticConfig& cfg, const ArtinWord& w) {
  check_diagram(cfg, w);
  IntMatrix m = IntMatrix::identity(cfg.diagram().rank());
  for (int l : w.letters()) multiply_by_transvection(m, cfg.gram(), (l < 0 ? -l : l) - 1, l < 0 ? -1 : 1);
  return m;
}

bool RelationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.passed; });
}

int RelationReport::count(RelationCheck::Kind kind) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [kind](const RelationCheck& c) { return c.kind == kind; }));
}

RelationReport check_geometric_relations(const SymplecticConfig& cfg) {
  const int n = cfg.diagram().rank();
  std::vector<IntMatrix> t;
  for (int i = 1; i <= n; ++i) t.push_back(transvection(cfg, i));
  RelationReport report;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const IntMatrix& a = t[i - 1];
      const IntMatrix& b = t[j - 1];
      if (cfg.diagram().adjacent(i, j)) {
        report.checks.push_back({i, j, RelationCheck::Kind::Braid, a * b * a == b * a * b});
      } else {
        report.checks.push_back({i, j, RelationCheck::Kind::Commutation, a * b == b * a});
      }
    }
  }
  return report;
}

DeltaImage delta_image(const SymplecticConfig& cfg, int order_bound) {
  DeltaImage out{rep_word(cfg, garside_element(cfg.group())), std::nullopt};
  IntMatrix power = out.matrix;
  try {
    for (int k = 1; k <= order_bound; ++k) {
      if (power.is_identity()) {
        out.order = k;
        break;
      }
      power = power * out.matrix;
    }
  } catch (const std::overflow_error&) {
    // A matrix of finite order has bounded powers.
  }
  return out;
}

KernelSearchOptions default_kernel_search_options() {
  KernelSearchOptions options;
  if (const char* env = std::getenv("E8LAB_BUDGET_SECONDS")) {
    char* end = nullptr;
    double value = std::strtod(env, &end);
    if (end != env && *end == '\0' && value > 0) options.budget_seconds = value;
  }
  return options;
}

KernelSearchResult kernel_search(const SymplecticConfig& cfg, int max_length, const KernelSearchOptions& options) {
  if (max_length < 0) throw ValidationError("max_length must be nonnegative");
  if (max_length > options.safety_bound) {
    throw ValidationError("max_length " + std::to_string(max_length) + " exceeds the safety bound " +
                          std::to_string(options.safety_bound));
  }
  KernelSearchResult result;
  if (max_length == 0) return result;

  using clock = std::chrono::steady_clock;
  const auto deadline = clock::now() + std::chrono::duration_cast<clock::duration>(
                                           std::chrono::duration<double>(options.budget_seconds));
  const ArtinGroup& group = *cfg.group();
  const int n = group.rank();
  const int radius = (max_length + 1) / 2;

  struct Element {
    std::vector<int> word;
    IntMatrix image;
  };
  std::vector<Element> ball{{{}, IntMatrix::identity(n)}};
  std::unordered_set<GarsideNormalForm, GarsideNormalFormHash> seen{NormalFormBuilder(group).result()};
  std::vector<std::pair<std::size_t, NormalFormBuilder>> frontier{{0, NormalFormBuilder(group)}};

  int complete_radius = 0;
  bool out_of_time = false;
  for (int depth = 1; depth <= radius && !out_of_time; ++depth) {
    const std::size_t layer_start = ball.size();
    std::vector<std::pair<std::size_t, NormalFormBuilder>> next;
    for (const auto& [index, builder] : frontier) {
      if (clock::now() > deadline) {
        out_of_time = true;
        break;
      }
      const int last = ball[index].word.empty() ? 0 : ball[index].word.back();
      for (int v = 1; v <= n; ++v) {
        for (int letter : {v, -v}) {
          if (letter == -last) continue;
          NormalFormBuilder extended = builder;
          extended.push(letter);
          if (!seen.insert(extended.result()).second) continue;
          Element e{ball[index].word, ball[index].image};
          e.word.push_back(letter);
          multiply_by_transvection(e.image, cfg.gram(), v - 1, letter < 0 ? -1 : 1);
          ball.push_back(std::move(e));
          next.emplace_back(ball.size() - 1, std::move(extended));
        }
      }
    }
    if (out_of_time) {
      // Drop the unfinished layer so the output depends only on the depth.
      ball.resize(layer_start);
      break;
    }
    complete_radius = depth;
    frontier = std::move(next);
  }

  const int depth_limit = std::min(max_length, 2 * complete_radius);
  result.complete = depth_limit == max_length;
  result.explored_depth = depth_limit;

  std::unordered_map<IntMatrix, std::vector<std::size_t>, IntMatrixHash> buckets;
  for (std::size_t k = 0; k < ball.size(); ++k) buckets[ball[k].image].push_back(k);

  std::unordered_map<GarsideNormalForm, std::vector<int>, GarsideNormalFormHash> found;
  for (const auto& [image, members] : buckets) {
    if (members.size() < 2) continue;
    for (std::size_t u : members) {
      for (std::size_t v : members) {
        if (u == v) continue;
        const auto& wu = ball[u].word;
        const auto& wv = ball[v].word;
        if (static_cast<int>(wu.size() + wv.size()) > depth_limit) continue;
        std::vector<int> word = wu;
        for (auto it = wv.rbegin(); it != wv.rend(); ++it) word.push_back(-*it);
        NormalFormBuilder builder(group);
        builder.push(word);
        auto nf = builder.result();
        auto [it, inserted] = found.try_emplace(std::move(nf), word);
        if (!inserted && lexicographic_word_less(word, it->second)) it->second = word;
      }
    }
  }

  std::vector<std::vector<int>> words;
  words.reserve(found.size());
  for (auto& [nf, word] : found) words.push_back(std::move(word));
  std::sort(words.begin(), words.end(), lexicographic_word_less);
  for (auto& w : words) {
    ArtinWord word(cfg.group(), std::move(w));
    if (!rep_word(cfg, word).is_identity()) throw InternalError("kernel candidate acts nontrivially on homology");
    result.words.push_back(std::move(word));
  }
  return result;
}

KernelCertificate verify_kernel_certificate(const SymplecticConfig& cfg, const ArtinWord& w) {
  check_diagram(cfg, w);
  const auto nf = normal_form(w);
  return KernelCertificate{nf.delta_power == 0 && nf.simples.empty(), rep_word(cfg, w).is_identity()};
}

}  // namespace e8lab
