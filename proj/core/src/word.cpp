#include "volent/word.hpp"

#include <algorithm>

#include "volent/errors.hpp"

namespace volent {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (x == 0) throw invalid_input("zero letter in word");
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word out = free_reduce(w);
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(out.begin() + lo, out.begin() + hi);
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == -w[i - 1]) return false;
  return true;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Word parse_word(const std::string& text, int n_generators) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    int gen;
    bool inv;
    if (c >= 'a' && c <= 'z') {
      gen = c - 'a';
      inv = false;
    } else if (c >= 'A' && c <= 'Z') {
      gen = c - 'A';
      inv = true;
    } else if (c == ' ') {
      continue;
    } else {
      throw invalid_input(std::string("bad character in word: ") + c);
    }
    if (gen >= n_generators)
      throw invalid_input(std::string("unknown generator: ") + c);
    w.push_back(make_letter(gen, inv));
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) {
    int g = letter_gen(x);
    if (g >= 26) throw invalid_input("cannot format generator index >= 26");
    s.push_back(static_cast<char>((x > 0 ? 'a' : 'A') + g));
  }
  return s;
}

std::string word_key(const Word& w) {
  std::string key;
  key.reserve(w.size());
  for (Letter x : w) {
    if (x > 127 || x < -127)
      throw invalid_input("word_key: generator index out of byte range");
    key.push_back(static_cast<char>(static_cast<signed char>(x)));
  }
  return key;
}

Word word_from_key(const std::string& key) {
  Word w;
  w.reserve(key.size());
  for (char c : key) w.push_back(static_cast<signed char>(c));
  return w;
}

}  // namespace volent
