#pragma once

// Orientation of a knotted 4-plat: which syllables twist two strands running
// the same vertical way (parallel, k = 1) and which twist strands running
// opposite ways (antiparallel, k = 2).
//
// trace_orientation walks the closed curve and is the authoritative source.
// r_sequence_method is the label-propagation procedure applied literally; it
// is kept as a cross-check and reports where it disagrees with the trace.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "platknot/braid.hpp"

namespace platknot {

enum class CrossingClass { kParallel, kAntiparallel };
enum class Direction { kUp, kDown };

struct OrientedCrossing {
  std::size_t syllable;
  int left;            // strand positions (left, left+1)
  int generator_sign;  // ±1 as written in the word
  CrossingClass cls;
  int sign;  // oriented crossing sign, right-hand rule
};

struct OrientedDiagram {
  std::vector<OrientedCrossing> crossings;
  // segments[h][p-1]: direction of the strand piece leaving level boundary h
  // at position p and entering boundary h+1.
  std::vector<std::array<Direction, 4>> segments;
};

enum class TraceStart { kForward, kReverse };

// Over/under convention: in s_i^{+1} the strand entering from the upper left
// passes over. Throws NotAKnotError unless the closure has one component.
OrientedDiagram trace_orientation(const Word& w, TraceStart start = TraceStart::kForward);

struct KSequence {
  std::vector<int> values;  // one entry per syllable, each 1 or 2

  friend bool operator==(const KSequence&, const KSequence&) = default;
};

KSequence k_sequence(const Word& w, TraceStart start = TraceStart::kForward);
std::string format_ksequence(const KSequence& ks);

struct RSequenceReport {
  Perm3 p_w;
  std::array<int, 3> r0{};
  std::vector<std::array<int, 3>> r;  // r[i] = labels after syllables 0..i-1; r[0] == r0
  bool link_rule_triggered = false;    // p_w^{-1}(3) == 1
  KSequence rseq;
  KSequence traced;
  // "syllable i: trace=k, rseq=k'" for every mismatch (1-based i).
  std::vector<std::string> disagreements;

  bool agrees() const { return disagreements.empty(); }
};

// Requires a knot whose word is alternating standard.
RSequenceReport r_sequence_method(const Word& w);

int writhe(const Word& w);

}  // namespace platknot
