#include "e8lab/polynomial.hpp"

#include <cctype>

#include "e8lab/errors.hpp"

namespace e8lab {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw ParseError("empty rational", start);
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digits = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = true;
    } else if (s[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      throw ParseError("invalid rational '" + s + "'", start + i);
    }
  }
  if (!digits) throw ParseError("invalid rational '" + s + "'", start + s.size());
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("invalid rational '" + s + "'", start);
  if (q.get_den() == 0) throw ParseError("zero denominator", start);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Monomial& m) {
  if (m.x_exp == 0 && m.y_exp == 0) return "1";
  std::string out;
  if (m.x_exp > 0) out += m.x_exp == 1 ? "x" : "x^" + std::to_string(m.x_exp);
  if (m.y_exp > 0) {
    if (!out.empty()) out += "*";
    out += m.y_exp == 1 ? "y" : "y^" + std::to_string(m.y_exp);
  }
  return out;
}

BivariatePoly::BivariatePoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{0, 0}, constant);
}

BivariatePoly BivariatePoly::monomial(Monomial m, const Rational& coefficient) {
  BivariatePoly p;
  if (m.x_exp < 0 || m.y_exp < 0) throw ValidationError("negative exponent");
  if (coefficient != 0) p.terms_.emplace(m, coefficient);
  return p;
}

bool BivariatePoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational BivariatePoly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int BivariatePoly::degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
int BivariatePoly::order() const noexcept { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

const Monomial& BivariatePoly::leading_monomial() const {
  if (terms_.empty()) throw ValidationError("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Rational& BivariatePoly::leading_coefficient() const {
  if (terms_.empty()) throw ValidationError("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

void BivariatePoly::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term({ma.x_exp + mb.x_exp, ma.y_exp + mb.y_exp}, ca * cb);
  return out;
}

BivariatePoly BivariatePoly::dx() const {
  BivariatePoly out;
  for (const auto& [m, c] : terms_)
    if (m.x_exp > 0) out.add_term({m.x_exp - 1, m.y_exp}, c * m.x_exp);
  return out;
}

BivariatePoly BivariatePoly::dy() const {
  BivariatePoly out;
  for (const auto& [m, c] : terms_)
    if (m.y_exp > 0) out.add_term({m.x_exp, m.y_exp - 1}, c * m.y_exp);
  return out;
}

BivariatePoly BivariatePoly::pow(int exponent) const {
  if (exponent < 0) throw ValidationError("negative power of a polynomial");
  BivariatePoly result(Rational(1));
  BivariatePoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

BivariatePoly BivariatePoly::truncate(int n) const {
  BivariatePoly out;
  for (const auto& [m, c] : terms_)
    if (m.degree() < n) out.terms_.emplace(m, c);
  return out;
}

Rational BivariatePoly::evaluate(const Rational& xv, const Rational& yv) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int k = 0; k < m.x_exp; ++k) term *= xv;
    for (int k = 0; k < m.y_exp; ++k) term *= yv;
    sum += term;
  }
  return sum;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (negative) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (m.degree() == 0) {
      out += e8lab::to_string(magnitude);
    } else if (magnitude == 1) {
      out += e8lab::to_string(m);
    } else {
      out += e8lab::to_string(magnitude) + "*" + e8lab::to_string(m);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  BivariatePoly parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    BivariatePoly p = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BivariatePoly expr() {
    BivariatePoly p = term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  BivariatePoly term() {
    BivariatePoly p = unary();
    for (;;) {
      if (accept('*')) {
        p = p * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        BivariatePoly d = unary();
        if (!d.is_constant() || d.is_zero()) throw ParseError("division only by a nonzero constant", at);
        p *= 1 / d.constant_term();
      } else {
        return p;
      }
    }
  }

  BivariatePoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BivariatePoly power() {
    BivariatePoly base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
      if (digits.empty()) throw ParseError("expected a nonnegative integer exponent", at);
      if (digits.size() > 4) throw ParseError("exponent too large", at);
      return base.pow(std::stoi(digits));
    }
    return base;
  }

  BivariatePoly primary() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BivariatePoly p = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
      return BivariatePoly(Rational(mpz_class(digits, 10)));
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("unknown variable '" + identifier_at(pos_ - 1) + "'", pos_ - 1);
      }
      return c == 'x' ? BivariatePoly::x() : BivariatePoly::y();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError("unknown variable '" + identifier_at(pos_) + "'", pos_);
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string identifier_at(std::size_t start) const {
    std::size_t end = start;
    while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    return std::string(text_.substr(start, end - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BivariatePoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace e8lab
