#pragma once

// Words in the two generators s1, s2 of B_3, read as standard 4-plats.
//
// Strand positions of the 4-plat are numbered 1..4 from the left. Position 1
// is passive: it never crosses anything. Generator s_i twists positions
// (i+1, i+2). Caps join positions (1,2) and (3,4) at the top and at the
// bottom of the braid. Words are read top to bottom, left to right.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace platknot {

struct Syllable {
  int index = 1;     // 1 or 2
  int exponent = 1;  // nonzero

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class Word {
 public:
  Word() = default;
  // Validates each syllable; does not canonicalize.
  explicit Word(std::vector<Syllable> syllables);

  std::span<const Syllable> syllables() const noexcept { return syllables_; }
  std::size_t size() const noexcept { return syllables_.size(); }
  bool empty() const noexcept { return syllables_.empty(); }
  const Syllable& operator[](std::size_t i) const { return syllables_[i]; }

  // Total number of crossings, sum of |exponent|.
  std::size_t letter_count() const;

  // Adjacent same-index syllables merged; syllables cancelling to 0 dropped.
  Word canonical() const;
  bool is_canonical() const;

  // Concatenation without canonicalization.
  friend Word operator*(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

// word := syl (ws syl)* ; syl := 's' ('1'|'2') ('^' nonzero-int)?
// The result is canonical. Empty or all-whitespace text is the empty word.
Word parse_word(std::string_view text);
// "s1^2 s2^-3 s1"; the empty word formats as "".
std::string format_word(const Word& w);

struct Perm3 {
  std::array<int, 3> image{1, 2, 3};

  static Perm3 identity() { return {}; }
  Perm3 inverse() const;
  friend bool operator==(const Perm3&, const Perm3&) = default;
};

// [1,2,3] acted on by one adjacent transposition per letter, left to right.
Perm3 permutation_of(const Word& w);

// Number of link components of the plat closure.
int component_count(const Word& w);
bool is_knot(const Word& w);

// Syllable indices alternate 1,2,...,1 and the signs form one of the two
// families (s1^+, s2^-) or (s1^-, s2^+).
bool is_alternating_standard(const Word& w);

// Splices s_index^sign s_index^{-sign} in front of letter `position`
// (0 <= position <= letter_count). The result is not canonicalized.
Word insert_canceling_pair(const Word& w, std::size_t position, int index, int sign);

// One crossing of the plat diagram, in top-to-bottom order.
struct PlatLevel {
  std::size_t syllable;  // index into Word::syllables()
  int left;              // left strand position of the crossing, 2 or 3
  int sign;              // generator sign, ±1
};

std::vector<PlatLevel> plat_levels(const Word& w);

// Position reached at the bottom of `level` by the strand at top position `p`.
inline int position_below(const PlatLevel& level, int p) {
  if (p == level.left) return p + 1;
  if (p == level.left + 1) return p - 1;
  return p;
}

// Cap partner of a plat end position (same pairing top and bottom).
inline int cap_partner(int p) { return p % 2 == 1 ? p + 1 : p - 1; }

}  // namespace platknot
