#include "platknot/laurent.hpp"

#include <gtest/gtest.h>

#include "json.hpp"
#include "platknot/error.hpp"
#include "platknot/kauffman.hpp"
#include "platknot/transfer.hpp"
#include "test_util.hpp"

namespace platknot {
namespace {

using testing::random_bracket;
using testing::random_poly2;

Poly2 a(int e = 1) { return Poly2::monomial(1, e, 0); }
Poly2 m(int e = 1) { return Poly2::monomial(1, 0, e); }

TEST(Poly2, CancellationLeavesNoZeroTerms) {
  const Poly2 p = a(2) * m(2) - a(2) * m(2);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.size(), 0U);
  EXPECT_EQ(p, Poly2());
}

TEST(Poly2, CoefficientLookup) {
  const Poly2 p = parse_poly2("3*a^2*m - a^-1");
  EXPECT_EQ(p.coefficient({2, 1}), 3);
  EXPECT_EQ(p.coefficient({-1, 0}), -1);
  EXPECT_EQ(p.coefficient({0, 0}), 0);
}

TEST(Poly2, RingLaws) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Poly2 p = random_poly2(rng), q = random_poly2(rng), r = random_poly2(rng);
    ASSERT_EQ(p + q, q + p);
    ASSERT_EQ(p * q, q * p);
    ASSERT_EQ((p + q) + r, p + (q + r));
    ASSERT_EQ((p * q) * r, p * (q * r));
    ASSERT_EQ(p * (q + r), p * q + p * r);
    ASSERT_EQ(p * Poly2::one(), p);
    ASSERT_EQ(p + Poly2(), p);
    ASSERT_TRUE((p - p).is_zero());
    ASSERT_EQ(-(-p), p);
  }
}

TEST(Poly2, Pow) {
  EXPECT_EQ(pow(a() + m(), 0), Poly2::one());
  EXPECT_EQ(pow(a() + m(), 2), a(2) + Poly2::monomial(2, 1, 1) + m(2));
  // Coefficients beyond 64 bits stay exact.
  const Poly2 big = pow(Poly2::one() + a(), 100);
  EXPECT_EQ(big.coefficient({50, 0}),
            BigInt("100891344545564193334812497256"));
}

TEST(Poly2, InvertAIsAnInvolutiveHomomorphism) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const Poly2 p = random_poly2(rng), q = random_poly2(rng);
    ASSERT_EQ(invert_a(invert_a(p)), p);
    ASSERT_EQ(invert_a(p * q), invert_a(p) * invert_a(q));
    ASSERT_EQ(invert_a(p + q), invert_a(p) + invert_a(q));
  }
  EXPECT_EQ(invert_a(a(3) * m()), a(-3) * m());
}

TEST(Poly2, FormatPlain) {
  EXPECT_EQ(format(Poly2()), "0");
  EXPECT_EQ(format(a(-2)), "a^-2");
  EXPECT_EQ(format(parse_poly2("-a^4 + a^2*m^2 - 2*a^2")), "-2*a^2 + a^2*m^2 - a^4");
  EXPECT_EQ(format(Poly2::constant(-1)), "-1");
}

TEST(Poly2, FormatLatex) {
  EXPECT_EQ(format(a(2) * m(2), Format::kLatex), "a^{2}m^{2}");
  EXPECT_EQ(format(Poly2::monomial(-3, -1, 0), Format::kLatex), "-3a^{-1}");
}

TEST(Poly2, RoundTripThroughTextAndJson) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const Poly2 p = random_poly2(rng);
    ASSERT_EQ(parse_poly2(format(p)), p) << format(p);
    ASSERT_EQ(poly2_from_json(format(p, Format::kJson)), p) << format(p);
  }
}

TEST(Poly2, JsonCarriesBigCoefficientsAsStrings) {
  const Poly2 p = Poly2::monomial(BigInt("123456789012345678901234567890"), 1, 0);
  const auto j = nlohmann::json::parse(format(p, Format::kJson));
  EXPECT_TRUE(j[0]["c"].is_string());
  EXPECT_EQ(poly2_from_json(j.dump()), p);
}

TEST(Poly2, ParseAcceptsSpacingAndSigns) {
  EXPECT_EQ(parse_poly2(""), Poly2());
  EXPECT_EQ(parse_poly2("m^2 - a^2 - 1 - a^-2"), m(2) - a(2) - Poly2::one() - a(-2));
  EXPECT_EQ(parse_poly2("-a*m"), -(a() * m()));
  EXPECT_EQ(parse_poly2("2*a^2*m^-1"), Poly2::monomial(2, 2, -1));
}

TEST(Poly2, ParseErrorsReportOffsets) {
  try {
    parse_poly2("a^^2");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2U);
  }
  EXPECT_THROW(parse_poly2("x"), ParseError);
  EXPECT_THROW(parse_poly2("a^"), ParseError);
  EXPECT_THROW(parse_poly2("a +"), ParseError);
  EXPECT_THROW(poly2_from_json("{"), ParseError);
}

TEST(GaussInt, Units) {
  EXPECT_TRUE(GaussInt(0, 1).is_unit());
  EXPECT_TRUE(GaussInt(-1).is_unit());
  EXPECT_FALSE(GaussInt(1, 1).is_unit());
  EXPECT_EQ(GaussInt(0, 1) * GaussInt(0, 1).unit_inverse(), GaussInt(1));
  EXPECT_EQ(GaussInt(0, 1) * GaussInt(0, 1), GaussInt(-1));
}

TEST(BracketPoly, RingLawsAndInvert) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    const BracketPoly p = random_bracket(rng), q = random_bracket(rng), r = random_bracket(rng);
    ASSERT_EQ(p * (q + r), p * q + p * r);
    ASSERT_EQ((p * q) * r, p * (q * r));
    ASSERT_EQ(p * q, q * p);
    ASSERT_EQ(p.invert().invert(), p);
    ASSERT_EQ((p * q).invert(), p.invert() * q.invert());
  }
}

TEST(BracketPoly, RoundTripThroughTextAndJson) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 200; ++i) {
    const BracketPoly p = random_bracket(rng);
    ASSERT_EQ(parse_bracket(format(p)), p) << format(p);
    ASSERT_EQ(bracket_from_json(format(p, Format::kJson)), p) << format(p);
  }
  EXPECT_EQ(format(parse_bracket("A^-4 + A^-12 - A^-16")), "-A^-16 + A^-12 + A^-4");
}

TEST(BracketPoly, ExactDivision) {
  std::mt19937_64 rng(16);
  const BracketPoly divisor = loop_value();
  for (int i = 0; i < 100; ++i) {
    const BracketPoly q = random_bracket(rng);
    ASSERT_EQ(exact_divide(q * divisor, divisor), q);
  }
  EXPECT_THROW(exact_divide(BracketPoly::one(), divisor), InvalidArgumentError);
}

TEST(BracketPoly, Extents) {
  const BracketPoly p = parse_bracket("A^-3 + 2*A^5");
  EXPECT_EQ(p.min_exp(), -3);
  EXPECT_EQ(p.max_exp(), 5);
  EXPECT_TRUE(p.is_real());
  EXPECT_FALSE(BracketPoly::monomial(GaussInt(0, 1), 0).is_real());
}

TEST(Specialize, IsARingHomomorphism) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const Poly2 p = random_poly2(rng, 0), q = random_poly2(rng, 0);
    ASSERT_EQ(specialize_to_A(p * q), specialize_to_A(p) * specialize_to_A(q));
    ASSERT_EQ(specialize_to_A(p + q), specialize_to_A(p) + specialize_to_A(q));
  }
}

TEST(Specialize, UnlinkFactorGoesToLoopValue) {
  EXPECT_EQ(specialize_to_A(unlink_factor()), loop_value());
}

TEST(Specialize, NonPolynomialImageIsRejected) {
  EXPECT_THROW(specialize_to_A(m(-1)), InvalidArgumentError);
}

TEST(Specialize, TrefoilFixesTheConvention) {
  const Poly2 p = parse_poly2("-2*a^2 + a^2*m^2 - a^4");
  const BracketPoly calibrated = specialize_to_A(p, Specialization::kInverseA4);
  const BracketPoly direct = specialize_to_A(p, Specialization::kDirectA4);
  EXPECT_EQ(calibrated, parse_bracket("-A^-16 + A^-12 + A^-4"));
  EXPECT_EQ(direct, parse_bracket("-A^16 + A^12 + A^4"));
  EXPECT_EQ(calibrated, kauffman_x(parse_word("s1 s2^-1 s1")));
  EXPECT_NE(direct, kauffman_x(parse_word("s1 s2^-1 s1")));
  EXPECT_EQ(kCalibratedSpecialization, Specialization::kInverseA4);
}

}  // namespace
}  // namespace platknot
