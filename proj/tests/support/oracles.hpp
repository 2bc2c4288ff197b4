// Independent reference implementations used by the tests. None of these
// touch the library's machines.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "lsync/alphabet.hpp"

namespace testoracle {

using lsync::Symbol;
using lsync::Word;

// Dyck_N over symbols 0..N-1 (open) and N..2N-1 (close): a word is a factor
// of a point iff no opening bracket is closed by a different closing one.
inline bool dyck_bracket_ok(const Word& w, int n) {
  std::vector<int> stack;
  for (Symbol s : w) {
    if (s < n) {
      stack.push_back(s);
    } else {
      if (stack.empty()) continue;
      if (stack.back() != s - n) return false;
      stack.pop_back();
    }
  }
  return true;
}

inline bool has_factor(const Word& w, const Word& f) {
  return f.size() <= w.size() && std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

// All words of length n over k symbols, lexicographic.
inline std::vector<Word> all_words(std::size_t k, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (std::size_t a = 0; a < k; ++a) {
        Word v = w;
        v.push_back(static_cast<Symbol>(a));
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

// Replace every occurrence of `a` by (z, a) with symbols shifted by one:
// z is 0, inner symbol s becomes s + 1.
inline Word expand_word(const Word& w, Symbol a) {
  Word out;
  for (Symbol s : w) {
    if (s == a) out.push_back(0);
    out.push_back(static_cast<Symbol>(s + 1));
  }
  return out;
}

// Factors of expansions of the given inner words, of length exactly n.
inline std::set<Word> factors_of_expansions(const std::vector<Word>& inner, Symbol a, std::size_t n) {
  std::set<Word> out;
  for (const auto& w : inner) {
    Word e = expand_word(w, a);
    for (std::size_t i = 0; i + n <= e.size(); ++i) out.insert(Word(e.begin() + i, e.begin() + i + n));
  }
  return out;
}

}  // namespace testoracle
