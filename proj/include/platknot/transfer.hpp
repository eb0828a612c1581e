#pragma once

// HOMFLY polynomial of a 4-plat by 3x3 transfer matrices.
//
// A rational tangle expands over the basis <T_0>, <T_inf>, <T_x> with
// coefficients (f, g, h). Each crossing acts on that triple by one of eight
// fixed matrices, selected by generator index, generator sign and the
// orientation class k of its syllable. The triple for the whole word is the
// second column of the ordered product M, and closing the plat gives
//
//   P(K) = f + g * delta + h,   delta = -(a + a^{-1}) m^{-1}
//
// where delta is the value of the two-component unlink.

#include <array>
#include <cstddef>

#include "platknot/braid.hpp"
#include "platknot/laurent.hpp"
#include "platknot/orient.hpp"

namespace platknot {

class Matrix3 {
 public:
  Matrix3() = default;
  explicit Matrix3(std::array<Poly2, 9> row_major) : entries_(std::move(row_major)) {}

  static Matrix3 identity();

  // 0-based row and column.
  const Poly2& operator()(std::size_t row, std::size_t col) const { return entries_[row * 3 + col]; }

  friend Matrix3 operator*(const Matrix3& lhs, const Matrix3& rhs);
  friend bool operator==(const Matrix3&, const Matrix3&) = default;

 private:
  std::array<Poly2, 9> entries_;
};

struct TangleVector {
  Poly2 f;  // <T_0>
  Poly2 g;  // <T_inf>
  Poly2 h;  // <T_x>

  friend bool operator==(const TangleVector&, const TangleVector&) = default;
};

// index 1, sign +1 -> A^1_k    index 1, sign -1 -> A^{-1}_k
// index 2, sign +1 -> B^1_k    index 2, sign -1 -> B^{-1}_k
Matrix3 generator_matrix(int index, int sign, int k);

// Ordered product over syllables, each generator matrix raised to |exponent|.
Matrix3 transfer_matrix(const Word& w, const KSequence& ks);

// Second column of M.
TangleVector fgh(const Matrix3& m);

// -(a + a^{-1}) m^{-1}, shared by close_plat and split_union.
const Poly2& unlink_factor();

Poly2 close_plat(const TangleVector& v);

struct HomflyResult {
  Poly2 polynomial;
  TangleVector tangle;
  KSequence ks;
  // False when the word is outside the alternating standard class the matrix
  // method is stated for; the value is still computed with traced k's.
  bool certified = false;
};

// Throws NotAKnotError for multi-component closures.
HomflyResult homfly(const Word& w);

Poly2 mirror(const Poly2& p);
Poly2 connected_sum(const Poly2& p, const Poly2& q);
Poly2 split_union(const Poly2& p, const Poly2& q);

}  // namespace platknot
