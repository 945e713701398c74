#pragma once

#include <set>
#include <vector>

#include "surfcover/word.hpp"

namespace surfcover {

// Fundamental group of the closed orientable genus-g surface,
//   < a1 b1 ... ag bg | [a1,b1][a2,b2]...[ag,bg] >.
// The word problem is solved by Dehn's algorithm: the relator has length 4g
// and pieces of length 1, so any freely reduced nontrivial word representing
// the identity contains more than half of a cyclic rotation of the relator
// or its inverse, and replacing that subword by the inverse of the
// complement strictly shortens the word.
class SurfaceGroup {
 public:
  explicit SurfaceGroup(int genus) : genus_(genus) {
    if (genus < 2) throw std::invalid_argument("genus must be at least 2");
    Word r;
    for (int i = 1; i <= genus; ++i) {
      int a = 2 * i - 1, b = 2 * i;
      r.push_back(a);
      r.push_back(b);
      r.push_back(-a);
      r.push_back(-b);
    }
    relator_ = r;
    Word ri = inverse(r);
    for (size_t k = 0; k < r.size(); ++k) {
      symmetrized_.push_back(rotated(r, k));
      symmetrized_.push_back(rotated(ri, k));
    }
  }

  int genus() const { return genus_; }
  int rank() const { return 2 * genus_; }
  const Word& relator() const { return relator_; }
  const std::vector<Word>& symmetrized_relators() const { return symmetrized_; }

  // Dehn reduction; the result is freely reduced and no shorter
  // representative of the same element can be found by half-relator moves.
  Word dehn_reduce(const Word& input) const {
    Word w = free_reduce(input);
    const size_t half = relator_.size() / 2;  // 2g
    bool changed = true;
    while (changed && !w.empty()) {
      changed = false;
      for (size_t pos = 0; pos < w.size() && !changed; ++pos) {
        for (const Word& r : symmetrized_) {
          size_t m = 0;
          while (m < relator_.size() && pos + m < w.size() && w[pos + m] == r[m]) ++m;
          if (m > half) {
            Word tail(r.begin() + static_cast<std::ptrdiff_t>(m), r.end());
            Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
            Word inv_tail = inverse(tail);
            next.insert(next.end(), inv_tail.begin(), inv_tail.end());
            next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + m), w.end());
            w = free_reduce(next);
            changed = true;
            break;
          }
        }
      }
    }
    return w;
  }

  bool is_identity(const Word& w) const { return dehn_reduce(w).empty(); }

  bool equal(const Word& u, const Word& v) const {
    return is_identity(concat(u, inverse(v)));
  }

  bool commute(const Word& u, const Word& v) const {
    Word c = concat(concat(u, v), concat(inverse(u), inverse(v)));
    return is_identity(c);
  }

  // Cyclic Dehn reduction: reduce until no cyclic subword is longer than
  // half of a relator. Output is a shortest representative of the
  // conjugacy class (cyclically reduced).
  Word cyclic_dehn_reduce(const Word& input) const {
    Word w = cyclic_reduce(dehn_reduce(input)).core;
    const size_t half = relator_.size() / 2;
    bool changed = true;
    while (changed && !w.empty()) {
      changed = false;
      size_t n = w.size();
      for (size_t pos = 0; pos < n && !changed; ++pos) {
        for (const Word& r : symmetrized_) {
          size_t limit = std::min(n, relator_.size());
          size_t m = 0;
          while (m < limit && w[(pos + m) % n] == r[m]) ++m;
          if (m > half) {
            Word rot = rotated(w, pos);
            Word tail(r.begin() + static_cast<std::ptrdiff_t>(m), r.end());
            Word inv_tail = inverse(tail);
            Word next = inv_tail;
            next.insert(next.end(), rot.begin() + static_cast<std::ptrdiff_t>(m), rot.end());
            w = cyclic_reduce(free_reduce(next)).core;
            changed = true;
            break;
          }
        }
      }
    }
    return w;
  }

  // Canonical representative of the conjugacy class: the lexicographically
  // least word over the closure of a cyclically Dehn-reduced form under
  // rotation and half-relator substitution (Dehn's conjugacy algorithm for
  // sixth groups; all substitutions at minimal length preserve length).
  Word conjugacy_representative(const Word& input) const {
    Word start = cyclic_dehn_reduce(input);
    while (true) {
      std::set<Word> seen;
      std::vector<Word> queue;
      Word shorter;
      bool found_shorter = false;
      auto push = [&](const Word& w) {
        Word m = min_rotation(w);
        if (seen.insert(m).second) queue.push_back(m);
      };
      push(start);
      const size_t half = relator_.size() / 2;
      for (size_t qi = 0; qi < queue.size() && !found_shorter; ++qi) {
        Word w = queue[qi];
        size_t n = w.size();
        if (n == 0) break;
        for (size_t pos = 0; pos < n && !found_shorter; ++pos) {
          for (const Word& r : symmetrized_) {
            size_t limit = std::min(n, relator_.size());
            size_t m = 0;
            while (m < limit && w[(pos + m) % n] == r[m]) ++m;
            if (m < half || m == 0) continue;
            Word rot = rotated(w, pos);
            Word tail(r.begin() + static_cast<std::ptrdiff_t>(m), r.end());
            Word inv_tail = inverse(tail);
            Word next = inv_tail;
            next.insert(next.end(), rot.begin() + static_cast<std::ptrdiff_t>(m), rot.end());
            next = cyclic_reduce(free_reduce(next)).core;
            if (next.size() < n) {
              shorter = cyclic_dehn_reduce(next);
              found_shorter = true;
              break;
            }
            push(next);
          }
        }
      }
      if (!found_shorter) return seen.empty() ? Word{} : *seen.begin();
      start = shorter;
    }
  }

  bool is_conjugate(const Word& u, const Word& v) const {
    return conjugacy_representative(u) == conjugacy_representative(v);
  }

  // Same free homotopy class as unoriented curves.
  bool same_unoriented_class(const Word& u, const Word& v) const {
    return is_conjugate(u, v) || is_conjugate(u, inverse(v));
  }

 private:
  static Word min_rotation(const Word& w) {
    if (w.empty()) return w;
    Word best = w;
    for (size_t k = 1; k < w.size(); ++k) {
      Word r = rotated(w, k);
      if (r < best) best = r;
    }
    return best;
  }

  int genus_;
  Word relator_;
  std::vector<Word> symmetrized_;
};

}  // namespace surfcover
