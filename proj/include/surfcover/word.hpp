#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfcover {

// Letters of a surface group word. Generator k (1-based) is stored as +k,
// its inverse as -k. Odd indices are the a-generators, even the b-generators:
// a_i = 2i-1, b_i = 2i. Text form is "a1 B1 b2" with uppercase = inverse.
using Letter = int;
using Word = std::vector<Letter>;

inline int generator_count(int genus) { return 2 * genus; }

inline Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& x : r) x = -x;
  return r;
}

inline Word concat(const Word& u, const Word& v) {
  Word r = u;
  r.insert(r.end(), v.begin(), v.end());
  return r;
}

inline Word power(const Word& w, int k) {
  if (k < 0) return power(inverse(w), -k);
  Word r;
  r.reserve(w.size() * static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) r.insert(r.end(), w.begin(), w.end());
  return r;
}

inline bool is_freely_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == -w[i + 1]) return false;
  return true;
}

inline Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (x == 0) throw std::invalid_argument("zero letter in word");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

// w = conj . core . conj^-1 with core cyclically reduced.
struct CyclicReduction {
  Word core;
  Word conj;
};

inline CyclicReduction cyclic_reduce(const Word& w) {
  Word u = free_reduce(w);
  Word conj;
  while (u.size() >= 2 && u.front() == -u.back()) {
    conj.push_back(u.front());
    u.erase(u.begin());
    u.pop_back();
  }
  return {u, conj};
}

inline bool is_cyclically_reduced(const Word& w) {
  return is_freely_reduced(w) && (w.size() < 2 || w.front() != -w.back());
}

inline Word rotated(const Word& w, size_t k) {
  Word r;
  r.reserve(w.size());
  r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

// Smallest period p (p divides |w|) such that the cyclic word repeats with
// period p. The word is then root^(|w|/p) as a cyclic word.
inline size_t cyclic_period(const Word& w) {
  size_t n = w.size();
  for (size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = (w[i] == w[(i + p) % n]);
    if (ok) return p;
  }
  return n;
}

struct PrimitiveRoot {
  Word root;
  int exponent;
};

// Free-group primitive root of a cyclically reduced word.
inline PrimitiveRoot primitive_root_cyclic(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitive root of empty word");
  if (!is_cyclically_reduced(w))
    throw std::invalid_argument("primitive root needs a cyclically reduced word");
  size_t p = cyclic_period(w);
  return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p)),
          static_cast<int>(w.size() / p)};
}

inline std::vector<std::int64_t> abelianize(const Word& w, int genus) {
  std::vector<std::int64_t> v(static_cast<size_t>(generator_count(genus)), 0);
  for (Letter x : w) {
    int k = x > 0 ? x : -x;
    if (k < 1 || k > generator_count(genus))
      throw std::invalid_argument("letter outside generator range");
    v[static_cast<size_t>(k - 1)] += (x > 0 ? 1 : -1);
  }
  return v;
}

inline std::string letter_name(Letter x) {
  if (x == 0) throw std::invalid_argument("zero letter");
  int k = x > 0 ? x : -x;
  char base = (k % 2 == 1) ? 'a' : 'b';
  if (x < 0) base = static_cast<char>(base - 'a' + 'A');
  int index = (k + 1) / 2;
  return std::string(1, base) + std::to_string(index);
}

inline std::string format_word(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += letter_name(w[i]);
  }
  return s;
}

// Parses "a1 B1 b2". genus = 0 skips the range check.
inline Word parse_word(const std::string& text, int genus = 0) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    char c = tok[0];
    bool inv = (c == 'A' || c == 'B');
    bool is_a = (c == 'a' || c == 'A');
    if (!is_a && c != 'b' && c != 'B')
      throw std::invalid_argument("bad letter '" + tok + "'");
    if (tok.size() < 2)
      throw std::invalid_argument("letter '" + tok + "' is missing its index");
    size_t pos = 0;
    int index;
    try {
      index = std::stoi(tok.substr(1), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad letter index in '" + tok + "'");
    }
    if (pos + 1 != tok.size() || index < 1)
      throw std::invalid_argument("bad letter index in '" + tok + "'");
    int k = is_a ? 2 * index - 1 : 2 * index;
    if (genus > 0 && k > generator_count(genus))
      throw std::invalid_argument("letter '" + tok + "' exceeds genus " +
                                  std::to_string(genus));
    w.push_back(inv ? -k : k);
  }
  return w;
}

}  // namespace surfcover
