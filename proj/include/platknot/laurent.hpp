#pragma once

// Exact Laurent polynomials.
//
//   Poly2        sparse polynomial in a^{±1}, m^{±1} over Z   (HOMFLY values)
//   BracketPoly  sparse polynomial in A^{±1} over Z[i]        (bracket / Jones values)
//
// Both keep a canonical form: no stored coefficient is zero, and terms are
// kept in a sorted map so iteration (and therefore formatting) is
// deterministic. All values are immutable once built; every operation is a
// pure function.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace platknot {

using BigInt = boost::multiprecision::cpp_int;

enum class Format { kPlain, kLatex, kJson };

struct Monomial2 {
  int a_exp = 0;
  int m_exp = 0;

  auto operator<=>(const Monomial2&) const = default;
};

class Poly2 {
 public:
  using TermMap = std::map<Monomial2, BigInt>;

  Poly2() = default;

  static Poly2 constant(const BigInt& c);
  static Poly2 monomial(const BigInt& c, int a_exp, int m_exp);
  static Poly2 one() { return constant(1); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  BigInt coefficient(const Monomial2& mono) const;

  Poly2& operator+=(const Poly2& rhs);
  Poly2& operator-=(const Poly2& rhs);
  Poly2& operator*=(const Poly2& rhs);

  friend Poly2 operator+(Poly2 lhs, const Poly2& rhs) { return lhs += rhs; }
  friend Poly2 operator-(Poly2 lhs, const Poly2& rhs) { return lhs -= rhs; }
  friend Poly2 operator*(const Poly2& lhs, const Poly2& rhs);
  friend Poly2 operator-(const Poly2& p);
  friend bool operator==(const Poly2&, const Poly2&) = default;

 private:
  void accumulate(const Monomial2& mono, const BigInt& c);

  TermMap terms_;
};

// a^k -> a^{-k} on every monomial. Involutive ring homomorphism; realizes
// the mirror-image identity P_K(a, m) = P_mirror(K)(a^{-1}, m).
Poly2 invert_a(const Poly2& p);

Poly2 pow(const Poly2& base, unsigned exponent);

// Gaussian integer re + im*i.
struct GaussInt {
  BigInt re;
  BigInt im;

  GaussInt() = default;
  GaussInt(BigInt r, BigInt i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_unit() const;
  // Only defined for units (±1, ±i).
  GaussInt unit_inverse() const;

  GaussInt& operator+=(const GaussInt& rhs);
  GaussInt& operator-=(const GaussInt& rhs);
  friend GaussInt operator+(GaussInt lhs, const GaussInt& rhs) { return lhs += rhs; }
  friend GaussInt operator-(GaussInt lhs, const GaussInt& rhs) { return lhs -= rhs; }
  friend GaussInt operator*(const GaussInt& lhs, const GaussInt& rhs);
  friend GaussInt operator-(const GaussInt& z) { return {-z.re, -z.im}; }
  friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

class BracketPoly {
 public:
  using TermMap = std::map<int, GaussInt>;

  BracketPoly() = default;

  static BracketPoly constant(const GaussInt& c);
  static BracketPoly monomial(const GaussInt& c, int exp);
  static BracketPoly one() { return constant(GaussInt{1}); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  GaussInt coefficient(int exp) const;
  int min_exp() const;
  int max_exp() const;

  // True when every coefficient has zero imaginary part.
  bool is_real() const;

  BracketPoly& operator+=(const BracketPoly& rhs);
  BracketPoly& operator-=(const BracketPoly& rhs);
  BracketPoly& operator*=(const BracketPoly& rhs);

  friend BracketPoly operator+(BracketPoly lhs, const BracketPoly& rhs) { return lhs += rhs; }
  friend BracketPoly operator-(BracketPoly lhs, const BracketPoly& rhs) { return lhs -= rhs; }
  friend BracketPoly operator*(const BracketPoly& lhs, const BracketPoly& rhs);
  friend BracketPoly operator-(const BracketPoly& p);
  friend bool operator==(const BracketPoly&, const BracketPoly&) = default;

  // A -> A^{-1}.
  BracketPoly invert() const;

 private:
  void accumulate(int exp, const GaussInt& c);

  TermMap terms_;
};

BracketPoly pow(const BracketPoly& base, unsigned exponent);

// Exact quotient in Z[i][A, A^{-1}]. The divisor's highest coefficient must be
// a unit. Throws InvalidArgumentError if the division leaves a remainder.
BracketPoly exact_divide(const BracketPoly& dividend, const BracketPoly& divisor);

// Which of the two mirror-related HOMFLY -> Jones substitutions to use.
//   kInverseA4: a -> i*A^{-4}, m -> i*(A^{-2} - A^2)
//   kDirectA4:  a -> i*A^{4},  m -> i*(A^{2} - A^{-2})
// kInverseA4 is the one that agrees with the bracket state sum under the
// library's crossing conventions (fixed on the trefoil).
enum class Specialization { kInverseA4, kDirectA4 };
inline constexpr Specialization kCalibratedSpecialization = Specialization::kInverseA4;

// HOMFLY -> bracket variable. Negative powers of m are divided out exactly;
// throws InvalidArgumentError when the image is not a Laurent polynomial.
BracketPoly specialize_to_A(const Poly2& p,
                            Specialization convention = kCalibratedSpecialization);

// Text forms. Plain / LaTeX list terms by ascending (a_exp, m_exp); JSON is
// an array of {"a", "m", "c"} (or {"A", "re", "im"}) objects.
std::string format(const Poly2& p, Format style = Format::kPlain);
std::string format(const BracketPoly& p, Format style = Format::kPlain);

Poly2 parse_poly2(std::string_view text);
BracketPoly parse_bracket(std::string_view text);
Poly2 poly2_from_json(std::string_view json);
BracketPoly bracket_from_json(std::string_view json);

}  // namespace platknot
