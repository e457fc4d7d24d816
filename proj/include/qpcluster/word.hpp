#pragma once

#include <string>
#include <vector>

namespace qpc {

using Label = std::string;

/// A word in arrow labels, written in product order: the leftmost arrow is
/// applied last. For a path a_1 a_2 ... a_k, s(a_i) = t(a_{i+1}).
using Word = std::vector<Label>;

/// Lexicographically least rotation. Used as the map key for cyclic words.
Word canonical_rotation(const Word& w);

/// Rotation that moves position `start` to the front.
Word rotate(const Word& w, std::size_t start);

/// Space separated labels; the empty word renders as "e".
std::string format_word(const Word& w);

/// Composite arrow label for the path `a b` (b traversed first).
Label composite_label(const Label& a, const Label& b);

/// Label of the reversed copy of an arrow created by mutation.
Label reversed_label(const Label& a);

}  // namespace qpc
