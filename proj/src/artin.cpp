#include "e8lab/artin.hpp"

#include <bit>
#include <charconv>
#include <cctype>

#include "e8lab/errors.hpp"

namespace e8lab {

ArtinGroup::ArtinGroup(const DynkinDiagram& d) : roots_(d) {
  w0_ = longest_element(roots_);
  const int n = roots_.rank();
  tau_.resize(n);
  for (int i = 0; i < n; ++i) {
    // w0 alpha_i = -alpha_tau(i)
    int image = -1;
    for (int r = 0; r < n; ++r) {
      if (w0_.at(r, i) == -1) {
        if (image != -1) throw InternalError("w0 does not send simple roots to negative simple roots");
        image = r;
      } else if (w0_.at(r, i) != 0) {
        throw InternalError("w0 does not send simple roots to negative simple roots");
      }
    }
    tau_[i] = image + 1;
    if (tau_[i] != i + 1) tau_trivial_ = false;
  }
  for (int i = 1; i <= n; ++i) left_complements_.push_back(w0_ * roots_.simple_reflection(i));
}

std::shared_ptr<const ArtinGroup> ArtinGroup::create(const DynkinDiagram& d) {
  return std::shared_ptr<const ArtinGroup>(new ArtinGroup(d));
}

WeylElement ArtinGroup::apply_tau(const WeylElement& w) const {
  if (tau_trivial_) return w;
  return w0_ * w * w0_;
}

ArtinWord::ArtinWord(ArtinGroupPtr group, std::vector<int> letters)
    : group_(std::move(group)), letters_(std::move(letters)) {
  if (!group_) throw ValidationError("word needs a group");
  for (int l : letters_) {
    if (l == 0 || !group_->diagram().has_vertex(l < 0 ? -l : l)) {
      throw ValidationError("letter " + std::to_string(l) + " names no vertex of " +
                            group_->diagram().name());
    }
  }
}

ArtinWord ArtinWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  return ArtinWord(group_, std::move(out));
}

ArtinWord ArtinWord::power(int k) const {
  const ArtinWord base = k < 0 ? inverse() : *this;
  std::vector<int> out;
  for (int j = 0; j < (k < 0 ? -k : k); ++j) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return ArtinWord(group_, std::move(out));
}

ArtinWord operator*(const ArtinWord& a, const ArtinWord& b) {
  if (!(a.group_->diagram() == b.group_->diagram())) {
    throw ValidationError("words live over different diagrams");
  }
  std::vector<int> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return ArtinWord(a.group_, std::move(out));
}

std::vector<int> parse_letters(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',') {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    if (text[pos] == '+') ++pos;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError("expected a signed integer", start);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ',') {
      throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos);
    }
    if (value == 0) throw ParseError("letter 0 names no generator", start);
    out.push_back(value);
  }
  return out;
}

std::size_t GarsideNormalForm::hash() const noexcept {
  std::size_t h = std::hash<std::int64_t>{}(delta_power);
  for (const auto& s : simples) h = h * 1000003u ^ s.hash();
  return h;
}

namespace {

// Moves letters from the front of b to the back of a until every left
// descent of b is a right descent of a. Returns whether anything moved.
bool make_left_weighted(const RootSystem& roots, WeylElement& a, WeylElement& b) {
  bool changed = false;
  for (;;) {
    VertexMask movable = b.left_descents() & ~a.right_descents();
    if (!movable) return changed;
    const int s = std::countr_zero(movable) + 1;
    roots.multiply_simple(a, s, Side::Right);
    roots.multiply_simple(b, s, Side::Left);
    changed = true;
  }
}

}  // namespace

void NormalFormBuilder::append_simple(WeylElement x) {
  const auto& roots = group_->roots();
  factors_.push_back(std::move(x));
  for (std::size_t j = factors_.size() - 1; j > 0; --j) {
    if (!make_left_weighted(roots, factors_[j - 1], factors_[j])) break;
  }
  std::size_t leading = 0;
  while (leading < factors_.size() && factors_[leading] == group_->w0()) ++leading;
  if (leading > 0) {
    factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(leading));
    delta_power_ += static_cast<std::int64_t>(leading);
  }
  while (!factors_.empty() && factors_.back().is_identity()) factors_.pop_back();
}

void NormalFormBuilder::push(int letter) {
  const int i = letter < 0 ? -letter : letter;
  if (letter == 0 || !group_->diagram().has_vertex(i)) {
    throw ValidationError("letter " + std::to_string(letter) + " names no vertex");
  }
  if (letter > 0) {
    append_simple(group_->roots().simple_reflection(flipped_ ? group_->tau(i) : i));
    return;
  }
  // X a^-1 = X Delta^-1 (Delta a^-1) = Delta^-1 tau(X) (Delta a^-1)
  --delta_power_;
  if (!group_->tau_is_trivial()) flipped_ = !flipped_;
  append_simple(group_->left_complement(flipped_ ? group_->tau(i) : i));
}

GarsideNormalForm NormalFormBuilder::result() const {
  GarsideNormalForm nf;
  nf.delta_power = delta_power_;
  nf.simples.reserve(factors_.size());
  for (const auto& f : factors_) nf.simples.push_back(flipped_ ? group_->apply_tau(f) : f);
  return nf;
}

ArtinWord garside_element(const ArtinGroupPtr& group) {
  return ArtinWord(group, group->roots().reduced_word(group->w0()));
}

ArtinWord garside_element(const DynkinDiagram& d) { return garside_element(ArtinGroup::create(d)); }

GarsideNormalForm normal_form(const ArtinWord& w) {
  NormalFormBuilder builder(*w.group());
  builder.push(w.letters());
  return builder.result();
}

std::vector<std::vector<int>> simples_as_words(const ArtinGroup& group, const GarsideNormalForm& nf) {
  std::vector<std::vector<int>> out;
  out.reserve(nf.simples.size());
  for (const auto& s : nf.simples) out.push_back(group.roots().reduced_word(s));
  return out;
}

ArtinWord normal_form_word(const ArtinGroupPtr& group, const GarsideNormalForm& nf) {
  ArtinWord delta = garside_element(group).power(static_cast<int>(nf.delta_power));
  std::vector<int> letters = delta.letters();
  for (const auto& w : simples_as_words(*group, nf)) letters.insert(letters.end(), w.begin(), w.end());
  return ArtinWord(group, std::move(letters));
}

bool are_equal(const ArtinWord& a, const ArtinWord& b) {
  if (!(a.group()->diagram() == b.group()->diagram())) {
    throw ValidationError("cannot compare words over " + a.group()->diagram().name() + " and " +
                          b.group()->diagram().name());
  }
  return normal_form(a) == normal_form(b);
}

std::int64_t degree(const ArtinWord& w) {
  std::int64_t d = 0;
  for (int l : w.letters()) d += l > 0 ? 1 : -1;
  return d;
}

bool is_central(const ArtinWord& w) {
  const ArtinGroup& g = *w.group();
  for (int i = 1; i <= g.rank(); ++i) {
    NormalFormBuilder right(g);
    right.push(w.letters());
    right.push(i);
    NormalFormBuilder left(g);
    left.push(i);
    left.push(w.letters());
    if (!(right.result() == left.result())) return false;
  }
  return true;
}

int conjugation_by_delta(const ArtinGroup& group, int i) {
  if (!group.diagram().has_vertex(i)) throw ValidationError("no vertex " + std::to_string(i));
  return group.tau(i);
}

InnEquality inn_equal(const ArtinWord& a, const ArtinWord& b) {
  const auto nf = normal_form(a * b.inverse());
  InnEquality out;
  out.modulo = a.group()->delta_is_central() ? CenterGenerator::Delta : CenterGenerator::DeltaSquared;
  if (!nf.is_delta_power()) return out;
  if (out.modulo == CenterGenerator::DeltaSquared && nf.delta_power % 2 != 0) return out;
  out.equal = true;
  out.witness = nf.delta_power;
  return out;
}

}  // namespace e8lab
