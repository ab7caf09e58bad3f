#pragma once

// Independent referee routines: letter-by-letter collection in the free
// class-3 group, and generator-image isomorphism search against the
// presented class-two groups.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cap2/class2.hpp"
#include "cap2/group_table.hpp"
#include "cap2/hall.hpp"

namespace cap2 {

/// a, a^-1, b, b^-1; written "a", "A", "b", "B".
enum class Letter : std::uint8_t { a, A, b, B };
using LetterWord = std::vector<Letter>;

/// Parses a word over {a, A, b, B}; A and B denote inverses. Whitespace and
/// '*' are ignored. Throws std::invalid_argument on anything else.
LetterWord parse_word(std::string_view text);
std::string to_string(const LetterWord& w);

/// A word in a, b whose value is the given element.
LetterWord word_of(const FreeElt& x);

/// Collects a word to normal form by repeatedly applying the commutator
/// rewriting rules y x -> x y [y,x] to adjacent out-of-order letters.
FreeElt collect_word(std::span<const Letter> w);
FreeElt collect_word(std::string_view text);

/// Images of the target's generators a, b in the table.
struct Isomorphism {
  Id image_a;
  Id image_b;
};

/// Searches for generator images in `table` that satisfy every defining
/// relation of `target` and generate the table. Exhaustive over pairs with the
/// right element and commutator orders.
std::optional<Isomorphism> iso_2gen(const GroupTable& table, const Class2Group& target);

/// The unique presented class-two group isomorphic to `table`, if any.
std::optional<TypeParams> recognize(const GroupTable& table);

}  // namespace cap2
