#include "platknot/kauffman.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

#include "platknot/error.hpp"
#include "platknot/orient.hpp"
#include "platknot/transfer.hpp"

namespace platknot {

Diagram Diagram::from_word(const Word& w) {
  Diagram d;
  const auto levels = plat_levels(w);
  for (std::size_t h = 0; h < levels.size(); ++h) {
    d.crossings.push_back({h, levels[h].left, levels[h].sign});
  }
  return d;
}

const BracketPoly& loop_value() {
  static const BracketPoly delta =
      BracketPoly::monomial(GaussInt{-1}, 2) + BracketPoly::monomial(GaussInt{-1}, -2);
  return delta;
}

BracketPoly bracket(const Word& w) {
  const Diagram diagram = Diagram::from_word(w);
  const std::size_t c = diagram.crossings.size();
  if (c > kBracketCrossingBudget) {
    throw BudgetExceededError("bracket state sum limited to " +
                              std::to_string(kBracketCrossingBudget) + " crossings, word has " +
                              std::to_string(c));
  }

  const std::size_t nodes = (c + 1) * 4;
  auto node = [](std::size_t h, int p) { return h * 4 + static_cast<std::size_t>(p - 1); };

  // Edges common to every state: passive strands and the caps.
  std::vector<std::pair<std::size_t, std::size_t>> fixed;
  for (const auto& x : diagram.crossings) {
    for (int p = 1; p <= 4; ++p) {
      if (p != x.left && p != x.left + 1) fixed.emplace_back(node(x.level, p), node(x.level + 1, p));
    }
  }
  for (std::size_t h : {std::size_t{0}, c}) {
    fixed.emplace_back(node(h, 1), node(h, 2));
    fixed.emplace_back(node(h, 3), node(h, 4));
  }

  // counts[a_minus_b + c][loops]
  std::vector<std::vector<std::uint64_t>> counts(2 * c + 1, std::vector<std::uint64_t>(nodes + 1));
  std::vector<std::size_t> parent(nodes);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t x, std::size_t y) { parent[find(x)] = find(y); };

  const std::uint64_t states = std::uint64_t{1} << c;
  for (std::uint64_t state = 0; state < states; ++state) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (const auto& [x, y] : fixed) unite(x, y);
    for (std::size_t i = 0; i < c; ++i) {
      const auto& x = diagram.crossings[i];
      const bool a_smoothing = (state >> i) & 1U;
      const bool cup_cap = a_smoothing == (x.sign > 0);
      if (cup_cap) {
        unite(node(x.level, x.left), node(x.level, x.left + 1));
        unite(node(x.level + 1, x.left), node(x.level + 1, x.left + 1));
      } else {
        unite(node(x.level, x.left), node(x.level + 1, x.left));
        unite(node(x.level, x.left + 1), node(x.level + 1, x.left + 1));
      }
    }
    std::size_t loops = 0;
    for (std::size_t v = 0; v < nodes; ++v) loops += find(v) == v ? 1 : 0;
    const auto n_a = static_cast<std::size_t>(std::popcount(state));
    ++counts[2 * n_a][loops];  // (n_a - n_b) + c == 2 n_a
  }

  std::vector<BracketPoly> loop_powers{BracketPoly::one()};
  BracketPoly out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::size_t loops = 1; loops < counts[i].size(); ++loops) {
      if (counts[i][loops] == 0) continue;
      while (loop_powers.size() < loops) loop_powers.push_back(loop_powers.back() * loop_value());
      const int exp = static_cast<int>(i) - static_cast<int>(c);
      out += BracketPoly::monomial(GaussInt{BigInt(counts[i][loops])}, exp) * loop_powers[loops - 1];
    }
  }
  return out;
}

BracketPoly kauffman_x(const Word& w) {
  const int wr = writhe(w);  // rejects links
  const BracketPoly factor = BracketPoly::monomial(GaussInt{wr % 2 == 0 ? 1 : -1}, -3 * wr);
  BracketPoly x = factor * bracket(w);
  if (!x.is_real()) throw std::logic_error("normalized bracket has a non-real coefficient");
  return x;
}

bool jones_equal(const Word& w1, const Word& w2) { return kauffman_x(w1) == kauffman_x(w2); }

BracketPoly x_of_connected_sum(const BracketPoly& x1, const BracketPoly& x2) { return x1 * x2; }

SpecializationReport compare_specialization(const BracketPoly& specialized,
                                            const BracketPoly& bracket_x) {
  SpecializationReport rep{specialized, bracket_x, {}};
  std::set<int> exps;
  for (const auto& [e, c] : specialized.terms()) exps.insert(e);
  for (const auto& [e, c] : bracket_x.terms()) exps.insert(e);
  for (int e : exps) {
    auto lhs = specialized.coefficient(e);
    auto rhs = bracket_x.coefficient(e);
    if (lhs != rhs) rep.diff.push_back({e, std::move(lhs), std::move(rhs)});
  }
  return rep;
}

SpecializationReport verify_specialization(const Word& w) {
  return compare_specialization(specialize_to_A(homfly(w).polynomial), kauffman_x(w));
}

}  // namespace platknot
