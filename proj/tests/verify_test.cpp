#include "platknot/verify.hpp"

#include <gtest/gtest.h>

#include <set>

#include "platknot/error.hpp"

namespace platknot {
namespace {

std::set<std::string> ids_with(const std::vector<CheckResult>& rs, CheckStatus s) {
  std::set<std::string> out;
  for (const auto& r : rs) {
    if (r.status == s) out.insert(r.id);
  }
  return out;
}

TEST(VerifyAll, FailuresAreExactlyTheUnreproducibleValues) {
  const auto rs = verify_all();
  EXPECT_EQ(ids_with(rs, CheckStatus::kFail),
            (std::set<std::string>{"C1 5_2 fgh", "C1 4_1 fgh", "C3 X(K_3) = X(4_1)X(8_3)",
                                   "C3 X(K_3) printed"}));
  EXPECT_EQ(count_failures(rs), 4U);
}

TEST(VerifyAll, DiscrepanciesAreRecorded) {
  const auto documented = ids_with(verify_all(), CheckStatus::kDocumentedDiscrepancy);
  EXPECT_TRUE(documented.count("C2 8_9 P"));
  EXPECT_TRUE(documented.count("audit 5_2"));
  EXPECT_TRUE(documented.count("C8 3_1 r-sequence"));
  EXPECT_FALSE(documented.count("C2 K_3 P"));
}

TEST(VerifyAll, Deterministic) {
  const auto a = verify_all({50, 7});
  const auto b = verify_all({50, 7});
  EXPECT_EQ(render_report(a), render_report(b));
}

TEST(VerifyKnot, SingleFixture) {
  const auto rs = verify_knot("5_2");
  EXPECT_EQ(ids_with(rs, CheckStatus::kFail), (std::set<std::string>{"5_2 fgh"}));
  EXPECT_EQ(count_failures(verify_knot("3_1")), 0U);
  EXPECT_EQ(count_failures(verify_knot("4_1#8_3")), 0U);
  EXPECT_THROW(verify_knot("nope"), UnknownKnotError);
}

TEST(VerifyProperty, Names) {
  for (const auto& name : property_names()) {
    const auto rs = verify_property(name, {20, 3});
    ASSERT_EQ(rs.size(), 1U);
    EXPECT_EQ(rs[0].status, CheckStatus::kPass) << name;
  }
  EXPECT_THROW(verify_property("nope", {}), InvalidArgumentError);
}

TEST(Report, Rendering) {
  const std::vector<CheckResult> rs{{"x", CheckStatus::kPass, ""},
                                    {"y", CheckStatus::kFail, "why"},
                                    {"z", CheckStatus::kDocumentedDiscrepancy, "note"}};
  EXPECT_EQ(render_report(rs),
            "PASS  x\nFAIL  y  why\nDOCUMENTED-DISCREPANCY  z  note\n3 checks, 1 failed\n");
}

TEST(Generators, Shapes) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_alternating_word(rng, 12);
    ASSERT_TRUE(is_alternating_standard(w));
    ASSERT_LE(w.letter_count(), 12U);
    ASSERT_LE(random_word(rng, 20).letter_count(), 20U);
    ASSERT_TRUE(is_knot(random_knot_word(rng, 10)));
  }
}

}  // namespace
}  // namespace platknot
