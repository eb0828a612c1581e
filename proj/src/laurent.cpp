#include "platknot/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "platknot/error.hpp"

namespace platknot {

// ---------------------------------------------------------------- Poly2 ---

Poly2 Poly2::constant(const BigInt& c) { return monomial(c, 0, 0); }

Poly2 Poly2::monomial(const BigInt& c, int a_exp, int m_exp) {
  Poly2 p;
  p.accumulate({a_exp, m_exp}, c);
  return p;
}

BigInt Poly2::coefficient(const Monomial2& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Poly2::accumulate(const Monomial2& mono, const BigInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly2& Poly2::operator+=(const Poly2& rhs) {
  for (const auto& [mono, c] : rhs.terms_) accumulate(mono, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs) {
  for (const auto& [mono, c] : rhs.terms_) accumulate(mono, -c);
  return *this;
}

Poly2 operator*(const Poly2& lhs, const Poly2& rhs) {
  Poly2 out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      out.accumulate({ml.a_exp + mr.a_exp, ml.m_exp + mr.m_exp}, cl * cr);
    }
  }
  return out;
}

Poly2& Poly2::operator*=(const Poly2& rhs) { return *this = *this * rhs; }

Poly2 operator-(const Poly2& p) {
  Poly2 out = p;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

Poly2 invert_a(const Poly2& p) {
  Poly2 out;
  for (const auto& [mono, c] : p.terms()) out += Poly2::monomial(c, -mono.a_exp, mono.m_exp);
  return out;
}

Poly2 pow(const Poly2& base, unsigned exponent) {
  Poly2 out = Poly2::one();
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

// ------------------------------------------------------------- GaussInt ---

bool GaussInt::is_unit() const {
  return (abs(re) == 1 && im.is_zero()) || (re.is_zero() && abs(im) == 1);
}

GaussInt GaussInt::unit_inverse() const {
  if (!is_unit()) throw InvalidArgumentError("Gaussian integer is not a unit");
  // 1/(±1) = ±1, 1/(±i) = ∓i: the conjugate.
  return {re, -im};
}

GaussInt& GaussInt::operator+=(const GaussInt& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

GaussInt& GaussInt::operator-=(const GaussInt& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

GaussInt operator*(const GaussInt& lhs, const GaussInt& rhs) {
  return {lhs.re * rhs.re - lhs.im * rhs.im, lhs.re * rhs.im + lhs.im * rhs.re};
}

// ---------------------------------------------------------- BracketPoly ---

BracketPoly BracketPoly::constant(const GaussInt& c) { return monomial(c, 0); }

BracketPoly BracketPoly::monomial(const GaussInt& c, int exp) {
  BracketPoly p;
  p.accumulate(exp, c);
  return p;
}

GaussInt BracketPoly::coefficient(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? GaussInt{} : it->second;
}

int BracketPoly::min_exp() const {
  if (terms_.empty()) throw InvalidArgumentError("zero polynomial has no degree");
  return terms_.begin()->first;
}

int BracketPoly::max_exp() const {
  if (terms_.empty()) throw InvalidArgumentError("zero polynomial has no degree");
  return terms_.rbegin()->first;
}

bool BracketPoly::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.im.is_zero(); });
}

void BracketPoly::accumulate(int exp, const GaussInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BracketPoly& BracketPoly::operator+=(const BracketPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) accumulate(e, c);
  return *this;
}

BracketPoly& BracketPoly::operator-=(const BracketPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) accumulate(e, -c);
  return *this;
}

BracketPoly operator*(const BracketPoly& lhs, const BracketPoly& rhs) {
  BracketPoly out;
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) out.accumulate(el + er, cl * cr);
  }
  return out;
}

BracketPoly& BracketPoly::operator*=(const BracketPoly& rhs) { return *this = *this * rhs; }

BracketPoly operator-(const BracketPoly& p) {
  BracketPoly out = p;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BracketPoly BracketPoly::invert() const {
  BracketPoly out;
  for (const auto& [e, c] : terms_) out.accumulate(-e, c);
  return out;
}

BracketPoly pow(const BracketPoly& base, unsigned exponent) {
  BracketPoly out = BracketPoly::one();
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

BracketPoly exact_divide(const BracketPoly& dividend, const BracketPoly& divisor) {
  if (divisor.is_zero()) throw InvalidArgumentError("division by zero polynomial");
  if (dividend.is_zero()) return {};
  const int top = divisor.max_exp();
  const GaussInt lead_inv = divisor.coefficient(top).unit_inverse();
  const int lowest_quotient_exp = dividend.min_exp() - divisor.min_exp();

  BracketPoly quotient;
  BracketPoly rest = dividend;
  while (!rest.is_zero()) {
    const int shift = rest.max_exp() - top;
    if (shift < lowest_quotient_exp) throw InvalidArgumentError("division is not exact");
    auto term = BracketPoly::monomial(rest.coefficient(rest.max_exp()) * lead_inv, shift);
    rest -= term * divisor;
    quotient += term;
  }
  return quotient;
}

namespace {

// i^k for any integer k.
GaussInt i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

BracketPoly specialize_to_A(const Poly2& p, Specialization convention) {
  if (p.is_zero()) return {};
  const int s = convention == Specialization::kInverseA4 ? -1 : 1;
  const BracketPoly m_image = BracketPoly::monomial(GaussInt{0, 1}, 2 * s) -
                              BracketPoly::monomial(GaussInt{0, 1}, -2 * s);

  int m_shift = 0;
  for (const auto& [mono, c] : p.terms()) m_shift = std::min(m_shift, mono.m_exp);

  std::vector<BracketPoly> m_powers{BracketPoly::one()};
  BracketPoly out;
  for (const auto& [mono, c] : p.terms()) {
    const auto m_exp = static_cast<std::size_t>(mono.m_exp - m_shift);
    while (m_powers.size() <= m_exp) m_powers.push_back(m_powers.back() * m_image);
    out += BracketPoly::monomial(GaussInt{c} * i_power(mono.a_exp), 4 * s * mono.a_exp) *
           m_powers[m_exp];
  }
  if (m_shift < 0) {
    out = exact_divide(out, pow(m_image, static_cast<unsigned>(-m_shift)));
  }
  return out;
}

// ----------------------------------------------------------- formatting ---

namespace {

struct Factor {
  std::string_view name;
  int exp;
};

void append_factors(std::ostringstream& os, const std::vector<Factor>& factors, bool latex,
                    bool need_sep) {
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    if (need_sep && !latex) os << '*';
    os << f.name;
    if (f.exp != 1) {
      if (latex) os << "^{" << f.exp << '}';
      else os << '^' << f.exp;
    }
    need_sep = true;
  }
}

// One signed term. `first` suppresses the leading " + ".
void append_term(std::ostringstream& os, const BigInt& c, const std::vector<Factor>& factors,
                 bool latex, bool first) {
  const bool negative = c < 0;
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  const BigInt mag = negative ? BigInt(-c) : c;
  const bool has_vars = std::any_of(factors.begin(), factors.end(),
                                    [](const Factor& f) { return f.exp != 0; });
  const bool show_coeff = mag != 1 || !has_vars;
  if (show_coeff) os << mag;
  append_factors(os, factors, latex, show_coeff);
}

nlohmann::json coefficient_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

BigInt coefficient_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos) {
      throw ParseError(0, "coefficient string is not an integer: " + s);
    }
    return BigInt(s);
  }
  throw ParseError(0, "coefficient must be an integer or a decimal string");
}

int exponent_from_json(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer()) {
    throw ParseError(0, std::string("missing integer field \"") + key + "\"");
  }
  return obj.at(key).get<int>();
}

nlohmann::json parse_json_array(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "invalid JSON");
  }
  if (!doc.is_array()) throw ParseError(0, "polynomial JSON must be an array");
  return doc;
}

}  // namespace

std::string format(const Poly2& p, Format style) {
  if (style == Format::kJson) {
    auto arr = nlohmann::json::array();
    for (const auto& [mono, c] : p.terms()) {
      arr.push_back({{"a", mono.a_exp}, {"m", mono.m_exp}, {"c", coefficient_json(c)}});
    }
    return arr.dump();
  }
  if (p.is_zero()) return "0";
  const bool latex = style == Format::kLatex;
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : p.terms()) {
    append_term(os, c, {{"a", mono.a_exp}, {"m", mono.m_exp}}, latex, first);
    first = false;
  }
  return os.str();
}

std::string format(const BracketPoly& p, Format style) {
  if (style == Format::kJson) {
    auto arr = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
      arr.push_back({{"A", e}, {"re", coefficient_json(c.re)}, {"im", coefficient_json(c.im)}});
    }
    return arr.dump();
  }
  if (p.is_zero()) return "0";
  const bool latex = style == Format::kLatex;
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!c.re.is_zero()) {
      append_term(os, c.re, {{"A", e}}, latex, first);
      first = false;
    }
    if (!c.im.is_zero()) {
      append_term(os, c.im, {{"i", 1}, {"A", e}}, latex, first);
      first = false;
    }
  }
  return os.str();
}

// -------------------------------------------------------------- parsing ---

namespace {

struct ParsedTerm {
  GaussInt coeff{1};
  int a_exp = 0;
  int m_exp = 0;
  int A_exp = 0;
};

// poly := [sign] term (sign term)*
// term := coeff? ('*'? var ('^' int)?)*
class TermParser {
 public:
  TermParser(std::string_view text, std::string_view vars) : text_(text), vars_(vars) {}

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> out;
    skip_ws();
    if (at_end()) return out;
    while (true) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        // A '-' directly before a digit belongs to the coefficient.
        if (!(peek() == '-' && next_is_digit())) {
          sign = peek() == '-' ? -1 : 1;
          ++pos_;
          skip_ws();
        }
      }
      ParsedTerm term = parse_term();
      if (sign < 0) term.coeff = -term.coeff;
      out.push_back(term);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool next_is_digit() const {
    return pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
  }
  bool is_var(char c) const { return c != '\0' && vars_.find(c) != std::string_view::npos; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  BigInt parse_int() {
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    const std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected integer");
    }
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  int parse_exponent() {
    const std::size_t start = pos_;
    const BigInt e = parse_int();
    if (e > 1'000'000 || e < -1'000'000) throw ParseError(start, "exponent out of range");
    return static_cast<int>(e);
  }

  ParsedTerm parse_term() {
    const std::size_t start = pos_;
    ParsedTerm term;
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) || (peek() == '-' && next_is_digit())) {
      term.coeff = GaussInt{parse_int()};
      any = true;
    }
    while (true) {
      skip_ws();
      const std::size_t save = pos_;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (!is_var(peek())) fail("expected variable");
      }
      if (!is_var(peek())) {
        pos_ = save;
        break;
      }
      const char var = peek();
      ++pos_;
      int exp = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        exp = parse_exponent();
      }
      switch (var) {
        case 'a': term.a_exp += exp; break;
        case 'm': term.m_exp += exp; break;
        case 'A': term.A_exp += exp; break;
        case 'i':
          for (int k = 0; k < ((exp % 4) + 4) % 4; ++k) term.coeff = term.coeff * GaussInt{0, 1};
          break;
        default: break;
      }
      any = true;
    }
    if (!any) throw ParseError(start, "expected term");
    return term;
  }

  std::string_view text_;
  std::string_view vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly2 parse_poly2(std::string_view text) {
  Poly2 out;
  for (const auto& t : TermParser(text, "am").parse()) {
    out += Poly2::monomial(t.coeff.re, t.a_exp, t.m_exp);
  }
  return out;
}

BracketPoly parse_bracket(std::string_view text) {
  BracketPoly out;
  for (const auto& t : TermParser(text, "Ai").parse()) {
    out += BracketPoly::monomial(t.coeff, t.A_exp);
  }
  return out;
}

Poly2 poly2_from_json(std::string_view json) {
  Poly2 out;
  for (const auto& item : parse_json_array(json)) {
    if (!item.is_object() || !item.contains("c")) throw ParseError(0, "expected {a, m, c} object");
    out += Poly2::monomial(coefficient_from_json(item.at("c")), exponent_from_json(item, "a"),
                           exponent_from_json(item, "m"));
  }
  return out;
}

BracketPoly bracket_from_json(std::string_view json) {
  BracketPoly out;
  for (const auto& item : parse_json_array(json)) {
    if (!item.is_object() || !item.contains("re")) {
      throw ParseError(0, "expected {A, re, im} object");
    }
    const BigInt im = item.contains("im") ? coefficient_from_json(item.at("im")) : BigInt(0);
    out += BracketPoly::monomial(GaussInt{coefficient_from_json(item.at("re")), im},
                                 exponent_from_json(item, "A"));
  }
  return out;
}

}  // namespace platknot
