#include "platknot/kauffman.hpp"

#include <gtest/gtest.h>

#include <random>

#include "platknot/error.hpp"
#include "platknot/rational.hpp"
#include "platknot/transfer.hpp"
#include "platknot/verify.hpp"

namespace platknot {
namespace {

BracketPoly bp(const char* text) { return parse_bracket(text); }

TEST(Bracket, SmallDiagrams) {
  EXPECT_EQ(loop_value(), bp("-A^2 - A^-2"));
  EXPECT_EQ(bracket(Word()), bp("-A^2 - A^-2"));
  EXPECT_EQ(bracket(parse_word("s1")), bp("-A^-3"));
  EXPECT_EQ(bracket(parse_word("s1^-1")), bp("-A^3"));
  EXPECT_EQ(bracket(parse_word("s2")), bp("A^5 + A"));
  EXPECT_EQ(bracket(parse_word("s1 s2^-1 s1")), bp("-A^5 - A^-3 + A^-7"));
}

TEST(Bracket, Budget) {
  const Word w = parse_word("s1^25");
  EXPECT_THROW(bracket(w), BudgetExceededError);
}

TEST(KauffmanX, Fixtures) {
  EXPECT_EQ(kauffman_x(parse_word("s1")), BracketPoly::one());
  EXPECT_EQ(kauffman_x(parse_word("s1 s2^-1 s1")), bp("A^-4 + A^-12 - A^-16"));
  EXPECT_EQ(kauffman_x(parse_word("s1 s2^-3 s1")), bp("A^-8 + A^-16 - A^-20 + A^-24 - A^-28"));
  EXPECT_EQ(kauffman_x(parse_word("s1^-1 s2^2 s1^-2")),
            bp("A^-4 - A^-8 + 2*A^-12 - A^-16 + A^-20 - A^-24"));
  EXPECT_EQ(kauffman_x(parse_word("s1^-1 s2 s1^-2")), bp("A^8 - A^4 + 1 - A^-4 + A^-8"));
  EXPECT_EQ(kauffman_x(parse_word("s1^-4 s2^3 s1^-1")),
            bp("A^16 - A^12 + 2*A^8 - 3*A^4 + 3 - 3*A^-4 + 2*A^-8 - A^-12 + A^-16"));
}

TEST(KauffmanX, EightNineEqualsFigureEightSquared) {
  const BracketPoly x41 = kauffman_x(parse_word("s1^-1 s2 s1^-2"));
  const BracketPoly x89 = kauffman_x(parse_word("s1^-3 s2 s1^-1 s2^2 s1^-1"));
  EXPECT_EQ(x89, x_of_connected_sum(x41, x41));
  const BracketPoly numerator = pow(bp("A^16 - A^12 + A^8 - A^4 + 1"), 2);
  EXPECT_EQ(x89 * BracketPoly::monomial(GaussInt(1), 16), numerator);
  EXPECT_TRUE(jones_equal(parse_word("s1^-3 s2 s1^-1 s2^2 s1^-1"),
                          parse_word("s1^-3 s2 s1^-1 s2^2 s1^-1")));
}

// The stated K_3 word: its bracket is not palindromic, so it cannot equal the
// product X(4_1) X(8_3).
TEST(KauffmanX, StatedKThreeWord) {
  const BracketPoly x = kauffman_x(parse_word("s1^-2 s2^4 s1^-2 s2^3 s1^-1"));
  EXPECT_EQ(x, bp("A^16 - 2*A^12 + 5*A^8 - 8*A^4 + 11 - 13*A^-4 + 13*A^-8 - 12*A^-12 + "
                  "10*A^-16 - 7*A^-20 + 4*A^-24 - 2*A^-28 + A^-32"));
  EXPECT_NE(x, x.invert());
}

TEST(KauffmanX, RejectsLinks) { EXPECT_THROW(kauffman_x(parse_word("s1^2")), NotAKnotError); }

TEST(KauffmanX, MirrorInvertsA) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 100; ++i) {
    const Word w = random_knot_word(rng, 12);
    std::vector<Syllable> flipped;
    for (const auto& s : w.syllables()) flipped.push_back({s.index, -s.exponent});
    ASSERT_EQ(kauffman_x(Word(flipped)), kauffman_x(w).invert()) << format_word(w);
  }
}

TEST(KauffmanX, InvariantUnderCancelingPairs) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 60; ++i) {
    const Word w = random_knot_word(rng, 12);
    const auto pos = std::uniform_int_distribution<std::size_t>(0, w.letter_count())(rng);
    const Word v = insert_canceling_pair(w, pos, 1 + i % 2, i % 2 == 0 ? 1 : -1);
    ASSERT_EQ(kauffman_x(v), kauffman_x(w)) << format_word(w);
  }
}

TEST(CrossOracle, EveryFixture) {
  for (const auto& e : table()) {
    const auto rep =
        compare_specialization(specialize_to_A(entry_homfly(e)), entry_kauffman_x(e));
    EXPECT_TRUE(rep.equal()) << e.name;
  }
}

TEST(CrossOracle, RandomAlternatingKnots) {
  std::mt19937_64 rng(53);
  int tested = 0;
  while (tested < 100) {
    const Word w = random_alternating_word(rng, 12);
    if (!is_knot(w)) continue;
    ASSERT_TRUE(verify_specialization(w).equal()) << format_word(w);
    ++tested;
  }
}

TEST(CrossOracle, DiffListsMismatchedCoefficients) {
  const auto rep = compare_specialization(bp("A^4 + 2"), bp("A^4 + 3*A^-4"));
  ASSERT_EQ(rep.diff.size(), 2U);
  EXPECT_EQ(rep.diff[0].exp, -4);
  EXPECT_EQ(rep.diff[0].bracket, GaussInt(3));
  EXPECT_EQ(rep.diff[1].exp, 0);
  EXPECT_EQ(rep.diff[1].specialized, GaussInt(2));
  EXPECT_FALSE(rep.equal());
}

}  // namespace
}  // namespace platknot
