#include "platknot/braid.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "platknot/error.hpp"

namespace platknot {

namespace {

void validate(const Syllable& s) {
  if (s.index != 1 && s.index != 2) {
    throw InvalidArgumentError("generator index out of range: " + std::to_string(s.index));
  }
  if (s.exponent == 0) throw InvalidArgumentError("syllable exponent must be nonzero");
}

}  // namespace

Word::Word(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {
  for (const auto& s : syllables_) validate(s);
}

std::size_t Word::letter_count() const {
  std::size_t n = 0;
  for (const auto& s : syllables_) n += static_cast<std::size_t>(std::abs(s.exponent));
  return n;
}

Word Word::canonical() const {
  std::vector<Syllable> out;
  for (const auto& s : syllables_) {
    if (!out.empty() && out.back().index == s.index) {
      out.back().exponent += s.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return Word(std::move(out));
}

bool Word::is_canonical() const { return canonical() == *this; }

Word operator*(const Word& lhs, const Word& rhs) {
  std::vector<Syllable> out(lhs.syllables_);
  out.insert(out.end(), rhs.syllables_.begin(), rhs.syllables_.end());
  return Word(std::move(out));
}

Word parse_word(std::string_view text) {
  std::vector<Syllable> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (!out.empty() && !std::isspace(static_cast<unsigned char>(text[pos - 1]))) {
      throw ParseError(pos, "expected whitespace between syllables");
    }
    if (text[pos] != 's') throw ParseError(pos, "expected 's'");
    ++pos;
    const std::size_t index_pos = pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError(pos, "expected generator index");
    }
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string index_text(text.substr(index_pos, pos - index_pos));
    if (index_text != "1" && index_text != "2") {
      throw ParseError(index_pos, "generator index out of range: " + index_text);
    }
    Syllable syl{index_text == "1" ? 1 : 2, 1};
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t exp_pos = pos;
      if (pos < text.size() && text[pos] == '-') ++pos;
      const std::size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == digits || pos - digits > 9) throw ParseError(exp_pos, "expected integer exponent");
      syl.exponent = std::stoi(std::string(text.substr(exp_pos, pos - exp_pos)));
      if (syl.exponent == 0) throw ParseError(exp_pos, "exponent must be nonzero");
    }
    out.push_back(syl);
    skip_ws();
  }
  return Word(std::move(out)).canonical();
}

std::string format_word(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) os << ' ';
    os << 's' << s.index;
    if (s.exponent != 1) os << '^' << s.exponent;
    first = false;
  }
  return os.str();
}

Perm3 Perm3::inverse() const {
  Perm3 out;
  for (int i = 0; i < 3; ++i) out.image[image[i] - 1] = i + 1;
  return out;
}

Perm3 permutation_of(const Word& w) {
  Perm3 p;
  for (const auto& s : w.syllables()) {
    for (int k = 0; k < std::abs(s.exponent); ++k) std::swap(p.image[s.index - 1], p.image[s.index]);
  }
  return p;
}

std::vector<PlatLevel> plat_levels(const Word& w) {
  std::vector<PlatLevel> out;
  out.reserve(w.letter_count());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& s = w[i];
    for (int k = 0; k < std::abs(s.exponent); ++k) {
      out.push_back({i, s.index + 1, s.exponent > 0 ? 1 : -1});
    }
  }
  return out;
}

int component_count(const Word& w) {
  // Union-find over the plat end points (level boundary h, position p).
  const auto levels = plat_levels(w);
  const std::size_t heights = levels.size() + 1;
  std::vector<std::size_t> parent(heights * 4);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto node = [](std::size_t h, int p) { return h * 4 + static_cast<std::size_t>(p - 1); };
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t x, std::size_t y) { parent[find(x)] = find(y); };

  for (std::size_t h = 0; h < levels.size(); ++h) {
    for (int p = 1; p <= 4; ++p) unite(node(h, p), node(h + 1, position_below(levels[h], p)));
  }
  for (std::size_t h : {std::size_t{0}, levels.size()}) {
    unite(node(h, 1), node(h, 2));
    unite(node(h, 3), node(h, 4));
  }
  int roots = 0;
  for (std::size_t x = 0; x < parent.size(); ++x) roots += find(x) == x ? 1 : 0;
  return roots;
}

bool is_knot(const Word& w) { return component_count(w) == 1; }

bool is_alternating_standard(const Word& w) {
  if (w.size() % 2 == 0) return false;
  const int family = w[0].exponent > 0 ? 1 : -1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int expected_index = i % 2 == 0 ? 1 : 2;
    const int expected_sign = i % 2 == 0 ? family : -family;
    if (w[i].index != expected_index) return false;
    if ((w[i].exponent > 0 ? 1 : -1) != expected_sign) return false;
  }
  return true;
}

Word insert_canceling_pair(const Word& w, std::size_t position, int index, int sign) {
  if (position > w.letter_count()) {
    throw InvalidArgumentError("insertion position " + std::to_string(position) +
                               " beyond letter count " + std::to_string(w.letter_count()));
  }
  if (index != 1 && index != 2) throw InvalidArgumentError("generator index out of range");
  if (sign != 1 && sign != -1) throw InvalidArgumentError("sign must be +1 or -1");

  std::vector<Syllable> out;
  std::size_t seen = 0;
  bool inserted = false;
  auto splice = [&] {
    out.push_back({index, sign});
    out.push_back({index, -sign});
    inserted = true;
  };
  for (const auto& s : w.syllables()) {
    const auto len = static_cast<std::size_t>(std::abs(s.exponent));
    const int unit = s.exponent > 0 ? 1 : -1;
    if (!inserted && position >= seen && position < seen + len) {
      const auto before = static_cast<int>(position - seen);
      if (before > 0) out.push_back({s.index, unit * before});
      splice();
      const int after = static_cast<int>(len) - before;
      out.push_back({s.index, unit * after});
    } else {
      out.push_back(s);
    }
    seen += len;
  }
  if (!inserted) splice();
  return Word(std::move(out));
}

}  // namespace platknot
