#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cstar {

// Multi-index over the generator alphabet {1..n}; the empty word denotes the
// unit. Letters are validated against n wherever words enter an element.
using Word = std::vector<int>;

inline std::string word_str(const Word &w) {
  if (w.empty())
    return "e";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k)
      s += ".";
    s += std::to_string(w[k]);
  }
  return s;
}

inline Word word_concat(const Word &a, const Word &b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline bool word_is_prefix(const Word &p, const Word &w) {
  if (p.size() > w.size())
    return false;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != w[k])
      return false;
  return true;
}

// Enumerates all words of the given length over {1..n} in lexicographic
// order and calls fn on each.
template <typename Fn> void for_each_word(int n, int length, Fn &&fn) {
  Word w(static_cast<std::size_t>(length), 1);
  if (length == 0) {
    fn(w);
    return;
  }
  while (true) {
    fn(w);
    int pos = length - 1;
    while (pos >= 0 && w[static_cast<std::size_t>(pos)] == n) {
      w[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0)
      break;
    ++w[static_cast<std::size_t>(pos)];
  }
}

// Index of a length-k word in the lexicographic enumeration, i.e. its
// position in the standard basis of the level-k matrix picture.
inline long word_index(const Word &w, int n) {
  long idx = 0;
  for (int letter : w)
    idx = idx * n + (letter - 1);
  return idx;
}

inline Word word_from_index(long idx, int n, int length) {
  Word w(static_cast<std::size_t>(length), 1);
  for (int pos = length - 1; pos >= 0; --pos) {
    w[static_cast<std::size_t>(pos)] = static_cast<int>(idx % n) + 1;
    idx /= n;
  }
  return w;
}

} // namespace cstar
