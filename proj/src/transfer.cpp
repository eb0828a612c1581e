#include "platknot/transfer.hpp"

#include <cstdlib>

#include "platknot/error.hpp"

namespace platknot {

namespace {

Poly2 c(long v) { return Poly2::constant(v); }
// coefficient * a^ae * m^me
Poly2 t(long coeff, int ae, int me) { return Poly2::monomial(coeff, ae, me); }

Matrix3 rows(Poly2 a00, Poly2 a01, Poly2 a02,
             Poly2 a10, Poly2 a11, Poly2 a12,
             Poly2 a20, Poly2 a21, Poly2 a22) {
  return Matrix3({std::move(a00), std::move(a01), std::move(a02),
                  std::move(a10), std::move(a11), std::move(a12),
                  std::move(a20), std::move(a21), std::move(a22)});
}

struct GeneratorTable {
  Matrix3 a_pos[2];  // A^1_1, A^1_2
  Matrix3 a_neg[2];  // A^{-1}_1, A^{-1}_2
  Matrix3 b_pos[2];  // B^1_1, B^1_2
  Matrix3 b_neg[2];  // B^{-1}_1, B^{-1}_2
};

const GeneratorTable& generators() {
  static const GeneratorTable table = [] {
    const Poly2 z;
    GeneratorTable g;
    g.a_pos[0] = rows(c(1), z, z,
                      z, z, t(-1, -2, 0),
                      z, c(1), t(-1, -1, 1));
    g.a_pos[1] = rows(c(1), z, t(-1, 1, 1),
                      z, z, t(-1, 2, 0),
                      z, c(1), z);
    g.b_neg[0] = rows(z, z, t(-1, 2, 0),
                      z, c(1), z,
                      c(1), z, t(-1, 1, 1));
    g.b_neg[1] = rows(z, z, t(-1, -2, 0),
                      z, c(1), t(-1, -1, 1),
                      c(1), z, z);
    g.a_neg[0] = rows(c(1), z, z,
                      z, t(-1, 1, 1), c(1),
                      z, t(-1, 2, 0), z);
    g.a_neg[1] = rows(c(1), t(-1, -1, 1), z,
                      z, z, c(1),
                      z, t(-1, -2, 0), z);
    g.b_pos[0] = rows(t(-1, -1, 1), z, c(1),
                      z, c(1), z,
                      t(-1, -2, 0), z, z);
    g.b_pos[1] = rows(z, z, c(1),
                      t(-1, 1, 1), c(1), z,
                      t(-1, 2, 0), z, z);
    return g;
  }();
  return table;
}

}  // namespace

Matrix3 Matrix3::identity() {
  const Poly2 z;
  return rows(c(1), z, z, z, c(1), z, z, z, c(1));
}

Matrix3 operator*(const Matrix3& lhs, const Matrix3& rhs) {
  std::array<Poly2, 9> out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Poly2 sum;
      for (std::size_t k = 0; k < 3; ++k) {
        if (lhs(i, k).is_zero() || rhs(k, j).is_zero()) continue;
        sum += lhs(i, k) * rhs(k, j);
      }
      out[i * 3 + j] = std::move(sum);
    }
  }
  return Matrix3(std::move(out));
}

Matrix3 generator_matrix(int index, int sign, int k) {
  if (index != 1 && index != 2) throw InvalidArgumentError("generator index must be 1 or 2");
  if (sign != 1 && sign != -1) throw InvalidArgumentError("generator sign must be +1 or -1");
  if (k != 1 && k != 2) throw InvalidArgumentError("orientation class k must be 1 or 2");
  const auto& g = generators();
  const auto slot = static_cast<std::size_t>(k - 1);
  if (index == 1) return sign > 0 ? g.a_pos[slot] : g.a_neg[slot];
  return sign > 0 ? g.b_pos[slot] : g.b_neg[slot];
}

Matrix3 transfer_matrix(const Word& w, const KSequence& ks) {
  if (ks.values.size() != w.size()) {
    throw InvalidArgumentError("k-sequence length " + std::to_string(ks.values.size()) +
                               " does not match syllable count " + std::to_string(w.size()));
  }
  Matrix3 m = Matrix3::identity();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& s = w[i];
    const Matrix3 gen = generator_matrix(s.index, s.exponent > 0 ? 1 : -1, ks.values[i]);
    for (int r = 0; r < std::abs(s.exponent); ++r) m = m * gen;
  }
  return m;
}

TangleVector fgh(const Matrix3& m) { return {m(0, 1), m(1, 1), m(2, 1)}; }

const Poly2& unlink_factor() {
  static const Poly2 delta = t(-1, 1, -1) + t(-1, -1, -1);
  return delta;
}

Poly2 close_plat(const TangleVector& v) { return v.f + v.g * unlink_factor() + v.h; }

HomflyResult homfly(const Word& w) {
  HomflyResult out;
  out.ks = k_sequence(w);  // rejects links
  out.tangle = fgh(transfer_matrix(w, out.ks));
  out.polynomial = close_plat(out.tangle);
  out.certified = is_alternating_standard(w);
  return out;
}

Poly2 mirror(const Poly2& p) { return invert_a(p); }

Poly2 connected_sum(const Poly2& p, const Poly2& q) { return p * q; }

Poly2 split_union(const Poly2& p, const Poly2& q) { return unlink_factor() * p * q; }

}  // namespace platknot
