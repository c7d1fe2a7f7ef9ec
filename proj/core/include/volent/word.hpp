#ifndef VOLENT_WORD_HPP
#define VOLENT_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace volent {

/// A letter is a signed generator index: +(g+1) for generator g,
/// -(g+1) for its inverse.  Words are sequences of letters.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

inline int letter_gen(Letter x) { return (x > 0 ? x : -x) - 1; }
inline Letter make_letter(int gen, bool inverse) {
  return inverse ? -(gen + 1) : (gen + 1);
}

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

/// Removes adjacent cancelling pairs until none remain.
Word free_reduce(const Word& w);

/// Freely reduces, then strips cancelling first/last letters.
Word cyclic_reduce(const Word& w);

bool is_freely_reduced(const Word& w);

/// Lexicographic order on (length, letters); the "shortlex" order used to
/// pick canonical representatives.
bool shortlex_less(const Word& a, const Word& b);

/// Parses "abAB" style words: 'a'..'z' are generators 0..25, uppercase their
/// inverses.  Throws on other characters or generator index >= n_generators.
Word parse_word(const std::string& text, int n_generators);
std::string format_word(const Word& w);

/// Compact byte encoding used as hash-map keys.  Each letter must satisfy
/// |letter| <= 127.
std::string word_key(const Word& w);
Word word_from_key(const std::string& key);

}  // namespace volent

#endif
