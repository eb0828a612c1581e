#include "platknot/orient.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "platknot/error.hpp"

namespace platknot {

namespace {

// Planar direction of the piece leaving top position `top` at a crossing,
// x to the right and y up.
std::array<int, 2> piece_vector(const PlatLevel& level, int top, Direction d) {
  const int dx = top == level.left ? 1 : -1;
  return d == Direction::kDown ? std::array<int, 2>{dx, -1} : std::array<int, 2>{-dx, 1};
}

}  // namespace

OrientedDiagram trace_orientation(const Word& w, TraceStart start) {
  if (!is_knot(w)) {
    throw NotAKnotError("plat closure of '" + format_word(w) + "' has " +
                        std::to_string(component_count(w)) + " components");
  }
  const auto levels = plat_levels(w);
  const std::size_t bottom = levels.size();
  std::vector<std::array<std::optional<Direction>, 4>> seen(levels.size());

  // Going down from (0,1) and going down from (0,2) traverse the curve in
  // opposite senses, since the top cap joins those two ends.
  const int start_pos = start == TraceStart::kForward ? 1 : 2;
  std::size_t h = 0;
  int p = start_pos;
  Direction dir = Direction::kDown;
  do {
    if (dir == Direction::kDown) {
      if (h == bottom) {
        p = cap_partner(p);
        dir = Direction::kUp;
      } else {
        seen[h][p - 1] = Direction::kDown;
        p = position_below(levels[h], p);
        ++h;
      }
    } else {
      if (h == 0) {
        p = cap_partner(p);
        dir = Direction::kDown;
      } else {
        --h;
        p = position_below(levels[h], p);
        seen[h][p - 1] = Direction::kUp;
      }
    }
  } while (!(h == 0 && p == start_pos && dir == Direction::kDown));

  OrientedDiagram out;
  out.segments.reserve(levels.size());
  for (const auto& row : seen) {
    std::array<Direction, 4> dirs{};
    for (int i = 0; i < 4; ++i) {
      if (!row[i]) throw std::logic_error("trace left a strand segment unvisited");
      dirs[i] = *row[i];
    }
    out.segments.push_back(dirs);
  }

  for (std::size_t lv = 0; lv < levels.size(); ++lv) {
    const auto& level = levels[lv];
    const int q = level.left;
    const Direction d_left = out.segments[lv][q - 1];
    const Direction d_right = out.segments[lv][q];
    const int over = level.sign > 0 ? q : q + 1;
    const int under = level.sign > 0 ? q + 1 : q;
    const auto ov = piece_vector(level, over, out.segments[lv][over - 1]);
    const auto uv = piece_vector(level, under, out.segments[lv][under - 1]);
    const int cross = ov[0] * uv[1] - ov[1] * uv[0];

    OrientedCrossing c{level.syllable, q, level.sign,
                       d_left == d_right ? CrossingClass::kParallel : CrossingClass::kAntiparallel,
                       cross > 0 ? 1 : -1};
    if (!out.crossings.empty() && out.crossings.back().syllable == c.syllable &&
        out.crossings.back().cls != c.cls) {
      throw std::logic_error("crossing classes differ within one syllable");
    }
    out.crossings.push_back(c);
  }
  return out;
}

KSequence k_sequence(const Word& w, TraceStart start) {
  const auto diagram = trace_orientation(w, start);
  KSequence ks;
  ks.values.assign(w.size(), 0);
  for (const auto& c : diagram.crossings) {
    ks.values[c.syllable] = c.cls == CrossingClass::kParallel ? 1 : 2;
  }
  return ks;
}

std::string format_ksequence(const KSequence& ks) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ks.values.size(); ++i) os << (i ? " " : "") << ks.values[i];
  return os.str();
}

RSequenceReport r_sequence_method(const Word& w) {
  if (!is_alternating_standard(w)) {
    throw InvalidArgumentError("r-sequence method needs an alternating standard word");
  }
  RSequenceReport rep;
  rep.traced = k_sequence(w);
  rep.p_w = permutation_of(w);
  const int inv3 = rep.p_w.inverse().image[2];
  rep.link_rule_triggered = inv3 == 1;
  rep.r0 = {1, inv3 == 2 ? 1 : 2, inv3 == 3 ? 1 : 3};

  auto labels = rep.r0;
  for (const auto& s : w.syllables()) {
    rep.r.push_back(labels);
    rep.rseq.values.push_back(labels[1] == labels[2] ? 1 : 2);
    for (int k = 0; k < std::abs(s.exponent); ++k) std::swap(labels[s.index - 1], labels[s.index]);
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (rep.rseq.values[i] != rep.traced.values[i]) {
      rep.disagreements.push_back("syllable " + std::to_string(i + 1) +
                                  ": trace=" + std::to_string(rep.traced.values[i]) +
                                  ", rseq=" + std::to_string(rep.rseq.values[i]));
    }
  }
  return rep;
}

int writhe(const Word& w) {
  int total = 0;
  for (const auto& c : trace_orientation(w).crossings) total += c.sign;
  return total;
}

}  // namespace platknot
