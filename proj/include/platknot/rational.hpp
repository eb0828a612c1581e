#pragma once

// Continued-fraction input for 2-bridge knots and the built-in fixture table.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "platknot/braid.hpp"
#include "platknot/laurent.hpp"
#include "platknot/orient.hpp"
#include "platknot/transfer.hpp"

namespace platknot {

class ContinuedFraction {
 public:
  // Odd length, no zero entry, all entries of one sign.
  explicit ContinuedFraction(std::vector<int> entries);

  std::span<const int> entries() const noexcept { return entries_; }

 private:
  std::vector<int> entries_;
};

// "1,3,1" -> ContinuedFraction. Throws ParseError on malformed text and
// InvalidArgumentError when the entries break the invariants.
ContinuedFraction parse_continued_fraction(std::string_view text);

// [e1, e2, ..., e_{2n-1}] -> s1^{e1} s2^{-e2} s1^{e3} ... s1^{e_{2n-1}}.
Word cf_to_word(const ContinuedFraction& cf);

enum class Provenance {
  kPipelineConfirmed,   // printed values agree with the pipeline
  kRecordedAsPrinted,   // printed values kept verbatim, at least one disagrees
};

struct KnotTableEntry {
  std::string name;
  std::vector<std::string> aliases;
  // Prime entries carry a plat word; composites list their summands.
  std::optional<Word> word;
  std::vector<std::string> summands;
  std::optional<std::vector<int>> continued_fraction;

  std::optional<TangleVector> expected_fgh;
  std::optional<Poly2> expected_homfly;
  std::optional<KSequence> expected_kseq;
  std::optional<BracketPoly> expected_kauffman_x;
  Provenance provenance = Provenance::kPipelineConfirmed;
  std::string notes;

  bool is_composite() const { return !summands.empty(); }
  std::size_t crossing_count() const;
};

// 3_1, 5_1, 5_2, 4_1, 8_9, 8_3, K_3, 4_1#4_1, 4_1#8_3 in that order.
const std::vector<KnotTableEntry>& table();

// Case-insensitive name or alias match. Throws UnknownKnotError listing the
// available names.
const KnotTableEntry& lookup(std::string_view name);

// HOMFLY of an entry: the pipeline for prime entries, the product of the
// summands' values for composites.
Poly2 entry_homfly(const KnotTableEntry& entry);
BracketPoly entry_kauffman_x(const KnotTableEntry& entry);

// close_plat(expected_fgh) == expected_homfly, evaluated on the printed
// values alone. Empty when the entry lacks either value.
std::optional<bool> printed_values_consistent(const KnotTableEntry& entry);

// {"3_1": {"word": ..., "crossings": ..., "homfly": [...], ...}, ...}
std::string table_json();
std::string entry_json(const KnotTableEntry& entry);

}  // namespace platknot
