#include "heptad/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "heptad/errors.hpp"

namespace heptad {
namespace {

// Arc patterns of the ten orientation classes. Row d-1 lists the arcs of
// class Dd as position pairs (tail, head); entry j is the orientation of the
// edge between positions j and j+1 (mod 7).
struct PatternArc {
  int tail;
  int head;
};

constexpr std::array<std::array<PatternArc, 7>, kNumClasses> kPatterns = {{
    {{{1, 0}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}}},  // D1
    {{{1, 0}, {2, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}}},  // D2
    {{{1, 0}, {1, 2}, {3, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 0}}},  // D3
    {{{1, 0}, {1, 2}, {2, 3}, {4, 3}, {4, 5}, {5, 6}, {6, 0}}},  // D4
    {{{1, 0}, {2, 1}, {3, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 0}}},  // D5
    {{{1, 0}, {2, 1}, {2, 3}, {3, 4}, {5, 4}, {5, 6}, {6, 0}}},  // D6
    {{{1, 0}, {1, 2}, {3, 2}, {3, 4}, {4, 5}, {6, 5}, {6, 0}}},  // D7
    {{{1, 0}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {5, 6}, {6, 0}}},  // D8
    {{{1, 0}, {2, 1}, {2, 3}, {3, 4}, {4, 5}, {6, 5}, {6, 0}}},  // D9
    {{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}}},  // D10
}};

constexpr Word pattern_word(int cls) {
  Word w = 0;
  for (int j = 0; j < 7; ++j) {
    const PatternArc& a = kPatterns[cls - 1][j];
    if (a.tail == j && a.head == (j + 1) % 7) w |= Word(1) << j;
  }
  return w;
}

constexpr Word rotate_word(Word w, int r) {
  Word out = 0;
  for (int j = 0; j < 7; ++j)
    if (word_bit(w, (j + r) % 7)) out |= Word(1) << j;
  return out;
}

// Reflection of the cycle: position p maps to -p, so the arc on edge j lands
// reversed on edge 6-j.
constexpr Word reflect_word(Word w) {
  Word out = 0;
  for (int j = 0; j < 7; ++j)
    if (!word_bit(w, 6 - j)) out |= Word(1) << j;
  return out;
}

// Orders words by their bit string b0 b1 ... b6.
constexpr int word_value(Word w) {
  int v = 0;
  for (int j = 0; j < 7; ++j) v = (v << 1) | word_bit(w, j);
  return v;
}

struct Tables {
  std::array<Word, kNumClasses> canon{};    // canonical word per class
  std::array<int, 128> cls_of{};            // word -> class
  Tables() {
    cls_of.fill(0);
    for (int cls = 1; cls <= kNumClasses; ++cls)
      canon[cls - 1] = canonical_word(pattern_word(cls));
    for (int w = 0; w < 128; ++w) {
      Word c = canonical_word(Word(w));
      for (int cls = 1; cls <= kNumClasses; ++cls)
        if (canon[cls - 1] == c) cls_of[w] = cls;
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

std::string class_name(int cls) {
  if (!class_valid(cls)) throw ParseError("no such class: " + std::to_string(cls));
  return "D" + std::to_string(cls);
}

int class_from_name(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'D' || name[0] == 'd')) {
    int v = 0;
    for (size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') { v = 0; break; }
      v = v * 10 + (name[i] - '0');
    }
    if (class_valid(v)) return v;
  }
  throw ParseError("not an orientation class name: '" + name + "'");
}

Word canonical_word(Word w) {
  Word best = w;
  for (int r = 0; r < 7; ++r) {
    Word a = rotate_word(w, r);
    Word b = rotate_word(reflect_word(w), r);
    if (word_value(a) < word_value(best)) best = a;
    if (word_value(b) < word_value(best)) best = b;
  }
  return best;
}

int class_of_word(Word w) { return tables().cls_of[w & 0x7f]; }

Word word_of_class(int cls) {
  if (!class_valid(cls)) throw ParseError("no such class: " + std::to_string(cls));
  return tables().canon[cls - 1];
}

std::string word_string(Word w) {
  std::string s(7, '0');
  for (int j = 0; j < 7; ++j) s[j] = word_bit(w, j) ? '1' : '0';
  return s;
}

int reverse_class(int cls) {
  Word w = word_of_class(cls);
  Word rev = Word(~w) & 0x7f;  // reversing every arc complements the word
  return class_of_word(rev);
}

std::array<Arc, 7> arcs_of_block(const Block& b) {
  if (!class_valid(b.cls))
    throw InvalidBlock("block class out of range: " + std::to_string(b.cls));
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      if (b.labels[i] == b.labels[j])
        throw InvalidBlock("block labels not distinct");
  std::array<Arc, 7> out{};
  for (int j = 0; j < 7; ++j) {
    const PatternArc& a = kPatterns[b.cls - 1][j];
    out[j] = Arc{b.labels[a.tail], b.labels[a.head]};
  }
  return out;
}

std::optional<Block> classify_arcs(std::span<const Arc> arcs) {
  if (arcs.size() != 7) return std::nullopt;

  std::set<std::pair<Vertex, Vertex>> arc_set;
  std::map<Vertex, std::vector<Vertex>> nbr;
  for (const Arc& a : arcs) {
    if (a.tail == a.head) return std::nullopt;
    if (!arc_set.insert({a.tail, a.head}).second) return std::nullopt;
    nbr[a.tail].push_back(a.head);
    nbr[a.head].push_back(a.tail);
  }
  if (nbr.size() != 7) return std::nullopt;
  for (auto& [v, ns] : nbr) {
    if (ns.size() != 2) return std::nullopt;
    if (ns[0] == ns[1]) return std::nullopt;  // a digon is not a 7-cycle
  }

  // Walk the cycle from the least vertex toward its lesser neighbour.
  std::array<Vertex, 7> pos{};
  pos[0] = nbr.begin()->first;
  pos[1] = std::min(nbr[pos[0]][0], nbr[pos[0]][1]);
  for (int j = 2; j < 7; ++j) {
    auto& ns = nbr[pos[j - 1]];
    pos[j] = (ns[0] == pos[j - 2]) ? ns[1] : ns[0];
  }
  if (nbr[pos[6]][0] != pos[0] && nbr[pos[6]][1] != pos[0]) return std::nullopt;

  auto has_arc = [&](Vertex t, Vertex h) { return arc_set.count({t, h}) != 0; };

  // Scan the 14 readings of the cycle for the one matching the class's arc
  // pattern; that reading is the witness labeling.
  int cls = 0;
  for (int start = 0; start < 7; ++start) {
    for (int dir : {1, -1}) {
      std::array<Vertex, 7> lab{};
      for (int j = 0; j < 7; ++j) lab[j] = pos[((start + dir * j) % 7 + 7) % 7];
      Word w = 0;
      for (int j = 0; j < 7; ++j)
        if (has_arc(lab[j], lab[(j + 1) % 7])) w |= Word(1) << j;
      if (cls == 0) cls = class_of_word(w);
      if (w == pattern_word(cls)) return Block{cls, lab};
    }
  }
  return std::nullopt;  // unreachable for a genuine 7-cycle
}

}  // namespace heptad
