#include <array>
#include <string_view>

#include "arcorpus/injector.hpp"

namespace arcorpus {

namespace {

// Base layer of the Arabic 101 layout, letter keys only. The lam-alef key on
// the bottom row produces two codepoints and is left as a hole (0).
constexpr std::array<Codepoint, 12> kTopRow = {0x0636, 0x0635, 0x062B, 0x0642, 0x0641, 0x063A,
                                               0x0639, 0x0647, 0x062E, 0x062D, 0x062C, 0x062F};
constexpr std::array<Codepoint, 11> kHomeRow = {0x0634, 0x0633, 0x064A, 0x0628, 0x0644, 0x0627,
                                                0x062A, 0x0646, 0x0645, 0x0643, 0x0637};
constexpr std::array<Codepoint, 10> kBottomRow = {0x0626, 0x0621, 0x0624, 0x0631, 0,
                                                  0x0649, 0x0629, 0x0648, 0x0632, 0x0638};

constexpr Codepoint kThal = 0x0630;  // sits left of the top row, above Tab

Codepoint at(std::span<const Codepoint> row, long col) {
  if (col < 0 || col >= static_cast<long>(row.size())) return 0;
  return row[static_cast<std::size_t>(col)];
}

void add(CodepointString& s, Codepoint cp) {
  if (cp != 0 && s.find(cp) == CodepointString::npos) s.push_back(cp);
}

}  // namespace

// Rows are staggered right by about a quarter key going down, so key c on a
// row touches keys c-1 and c on the row below and c and c+1 on the row above.
std::map<Codepoint, CodepointString> arabic_keyboard_neighbors() {
  const std::array<std::span<const Codepoint>, 3> rows = {kTopRow, kHomeRow, kBottomRow};
  std::map<Codepoint, CodepointString> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (long c = 0; c < static_cast<long>(rows[r].size()); ++c) {
      const Codepoint key = rows[r][static_cast<std::size_t>(c)];
      if (key == 0) continue;
      CodepointString& n = out[key];
      add(n, at(rows[r], c - 1));
      add(n, at(rows[r], c + 1));
      if (r > 0) {
        add(n, at(rows[r - 1], c));
        add(n, at(rows[r - 1], c + 1));
      }
      if (r + 1 < rows.size()) {
        add(n, at(rows[r + 1], c - 1));
        add(n, at(rows[r + 1], c));
      }
    }
  }
  add(out[kThal], kTopRow[0]);
  add(out[kTopRow[0]], kThal);

  // Shifted hamza-seat letters share a key with a base letter: alef with hamza
  // above on alef's key, hamza below on ghain's, madda on alef maqsura's.
  const std::array<std::pair<Codepoint, Codepoint>, 3> shifted = {
      std::pair{0x0623u, 0x0627u}, std::pair{0x0625u, 0x063Au}, std::pair{0x0622u, 0x0649u}};
  for (auto [letter, base] : shifted) {
    CodepointString n = out[base];
    add(n, base);
    out[letter] = n;
  }
  return out;
}

std::vector<MappingRule> default_mapping_rules() {
  auto s = [](std::initializer_list<Codepoint> cps) { return CodepointString(cps.begin(), cps.end()); };
  return {
      {s({0x0623}), {s({0x0627}), s({0x0625}), s({0x0622})}},
      {s({0x0625}), {s({0x0627}), s({0x0623})}},
      {s({0x0622}), {s({0x0627}), s({0x0623})}},
      {s({0x0627}), {s({0x0623}), s({0x0625}), s({0x0622})}},
      {s({0x0629}), {s({0x0647})}},
      {s({0x0647}), {s({0x0629})}},
      {s({0x0649}), {s({0x064A})}},
      {s({0x064A}), {s({0x0649})}},
  };
}

}  // namespace arcorpus
