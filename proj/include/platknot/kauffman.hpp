#pragma once

// Independent Jones oracle: Kauffman bracket state sum over the plat diagram.
//
// Conventions (shared with orient.hpp): in s_i^{+1} the upper-left strand
// passes over. The A-smoothing joins the two regions swept counterclockwise
// by the over-strand, which for s_i^{+1} is the cup/cap smoothing and for
// s_i^{-1} the straight-through one.

#include <cstddef>
#include <vector>

#include "platknot/braid.hpp"
#include "platknot/laurent.hpp"

namespace platknot {

inline constexpr std::size_t kBracketCrossingBudget = 24;

struct DiagramCrossing {
  std::size_t level;
  int left;  // positions (left, left+1)
  int sign;  // generator sign
};

struct Diagram {
  std::vector<DiagramCrossing> crossings;

  static Diagram from_word(const Word& w);
};

// -A^2 - A^{-2}
const BracketPoly& loop_value();

// Sum over 2^c smoothings of A^{#A - #B} * loop^{loops - 1}; the crossingless
// unknot has bracket 1. Throws BudgetExceededError above the crossing budget.
BracketPoly bracket(const Word& w);

// (-A^3)^{-writhe} * bracket. Requires a knot.
BracketPoly kauffman_x(const Word& w);

bool jones_equal(const Word& w1, const Word& w2);
BracketPoly x_of_connected_sum(const BracketPoly& x1, const BracketPoly& x2);

struct CoefficientDiff {
  int exp;
  GaussInt specialized;
  GaussInt bracket;
};

struct SpecializationReport {
  BracketPoly specialized;  // specialize_to_A(homfly(w))
  BracketPoly bracket_x;    // kauffman_x(w)
  std::vector<CoefficientDiff> diff;

  bool equal() const { return diff.empty(); }
};

SpecializationReport compare_specialization(const BracketPoly& specialized,
                                            const BracketPoly& bracket_x);
SpecializationReport verify_specialization(const Word& w);

}  // namespace platknot
