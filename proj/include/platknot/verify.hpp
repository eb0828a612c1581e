#pragma once

// Self-check suite exposed through `platknot verify`: fixture reproduction,
// cross-oracle equality, matrix identities and randomized properties.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "platknot/braid.hpp"

namespace platknot {

enum class CheckStatus { kPass, kFail, kDocumentedDiscrepancy };

std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  CheckStatus status;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eedf00dULL;

struct PropertyOptions {
  unsigned iterations = 100;
  std::uint64_t seed = kDefaultSeed;
};

// Property names: "cancel-pair", "perm-trace", "bracket-cancel", "parity".
const std::vector<std::string>& property_names();

std::vector<CheckResult> verify_all(const PropertyOptions& options = {});
std::vector<CheckResult> verify_knot(std::string_view name);
// Throws InvalidArgumentError for an unknown property name.
std::vector<CheckResult> verify_property(std::string_view name, const PropertyOptions& options);

// "PASS  <id>  <detail>" lines.
std::string render_report(const std::vector<CheckResult>& results);
std::size_t count_failures(const std::vector<CheckResult>& results);

// Generators shared with the property checks.
Word random_alternating_word(std::mt19937_64& rng, std::size_t max_crossings);
Word random_word(std::mt19937_64& rng, std::size_t max_letters);
Word random_knot_word(std::mt19937_64& rng, std::size_t max_letters);

// The permutation induced by w, found by following each of the three
// strands from its top end to its bottom end through the diagram.
Perm3 traced_permutation(const Word& w);

}  // namespace platknot
