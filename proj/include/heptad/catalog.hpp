#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace heptad {

using Vertex = int;

// Sentinel label for the fixed point of a starter set. Never appears in a
// developed decomposition; develop() maps it to the host's top label.
inline constexpr Vertex kInf = -1;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend constexpr bool operator==(const Arc&, const Arc&) = default;
  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

// Orientation classes of the 7-cycle. Classes 1..7 and 10 are self-reverse;
// 8 and 9 swap under arc reversal.
inline constexpr int kNumClasses = 10;

inline constexpr bool class_valid(int cls) { return cls >= 1 && cls <= kNumClasses; }

std::string class_name(int cls);              // "D1".."D10"
int class_from_name(const std::string& name); // throws ParseError

// An orientation word over the positions of a 7-cycle: bit j is set when the
// edge between positions j and j+1 (mod 7) is directed j -> j+1.
using Word = std::uint8_t;

inline constexpr int word_bit(Word w, int j) { return (w >> j) & 1; }

Word canonical_word(Word w);          // least image under rotation/reflection
int class_of_word(Word w);            // 1..10, total on all 128 words
Word word_of_class(int cls);          // canonical word of the class
std::string word_string(Word w);      // "b0b1...b6"

// Class of the reversed heptagon: identity except D8 <-> D9.
int reverse_class(int cls);

// One oriented heptagon placed on seven distinct labels. labels[j] is the
// vertex at position j; the arc pattern of `cls` decides arc directions.
struct Block {
  int cls = 0;
  std::array<Vertex, 7> labels{};
  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;
};

// The seven arcs of a block, in edge order j = 0..6. Throws InvalidBlock on
// repeated labels or an out-of-range class.
std::array<Arc, 7> arcs_of_block(const Block& b);

// Recognize seven arcs as an oriented heptagon. Returns the class and a
// witness block whose arcs_of_block() reproduces the input set, or nullopt
// when the arcs do not form a single 7-cycle. Deterministic in the input
// order-insensitive sense: the witness depends only on the arc set.
std::optional<Block> classify_arcs(std::span<const Arc> arcs);

}  // namespace heptad
