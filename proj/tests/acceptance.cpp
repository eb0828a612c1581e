// Acceptance suite: one PASS/FAIL line per criterion. A criterion fails when
// any of its checks fails; documented discrepancies do not fail it.

#include <cstdio>
#include <string>
#include <vector>

#include "platknot/verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* title;
  const char* prefix;
};

const std::vector<Criterion> kCriteria{
    {1, "exact-value reproduction", "C1 "},
    {2, "documented-discrepancy handling", "C2 "},
    {3, "Jones coincidences", "C3 "},
    {4, "HOMFLY separations", "C4 "},
    {5, "cross-oracle equivalence", "C5 "},
    {6, "matrix identities", "C6 "},
    {7, "property suite", "property "},
    {8, "orientation fixtures", "C8 "},
    {9, "unknot and unlink anchors", "C9 "},
};

}  // namespace

int main() {
  using platknot::CheckStatus;
  const auto results = platknot::verify_all();
  int failed_criteria = 0;
  for (const auto& c : kCriteria) {
    std::size_t total = 0, failed = 0, documented = 0;
    std::vector<const platknot::CheckResult*> failures;
    for (const auto& r : results) {
      if (r.id.rfind(c.prefix, 0) != 0) continue;
      ++total;
      if (r.status == CheckStatus::kFail) {
        ++failed;
        failures.push_back(&r);
      }
      if (r.status == CheckStatus::kDocumentedDiscrepancy) ++documented;
    }
    const bool pass = total > 0 && failed == 0;
    failed_criteria += pass ? 0 : 1;
    std::printf("criterion %d: %s  %s (%zu checks, %zu failed, %zu documented)\n", c.number,
                pass ? "PASS" : "FAIL", c.title, total, failed, documented);
    for (const auto* r : failures) {
      std::fprintf(stderr, "  criterion %d: %s: %s\n", c.number, r->id.c_str(), r->detail.c_str());
    }
  }
  return failed_criteria == 0 ? 0 : 1;
}
