#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "surfcover/errors.hpp"

namespace surfcover {

// A finite group as a multiplication table. Elements are 0..n-1.
struct FiniteGroup {
  std::vector<std::vector<int>> table;  // table[g][h] = g*h
  std::vector<std::string> labels;      // optional display names

  int order() const { return static_cast<int>(table.size()); }

  int mul(int g, int h) const { return table[static_cast<size_t>(g)][static_cast<size_t>(h)]; }

  int identity() const {
    int n = order();
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int g = 0; g < n && ok; ++g) ok = (mul(e, g) == g && mul(g, e) == g);
      if (ok) return e;
    }
    throw GroupError("no identity element");
  }

  int inv(int g) const {
    int e = identity();
    for (int h = 0; h < order(); ++h)
      if (mul(g, h) == e) return h;
    throw GroupError("no inverse for element " + std::to_string(g));
  }

  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1

  int element_order(int g) const {
    int e = identity(), x = g, n = 1;
    while (x != e) {
      x = mul(x, g);
      ++n;
      if (n > order()) throw GroupError("order computation ran away");
    }
    return n;
  }
};

inline void validate(const FiniteGroup& G) {
  int n = G.order();
  if (n == 0) throw GroupError("empty group table");
  for (const auto& row : G.table) {
    if (static_cast<int>(row.size()) != n) throw GroupError("table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw GroupError("table entry out of range");
  }
  if (!G.labels.empty() && static_cast<int>(G.labels.size()) != n)
    throw GroupError("label count does not match order");
  // each row and column a permutation
  for (int g = 0; g < n; ++g) {
    std::vector<bool> seen_r(static_cast<size_t>(n), false), seen_c(static_cast<size_t>(n), false);
    for (int h = 0; h < n; ++h) {
      if (seen_r[static_cast<size_t>(G.mul(g, h))]) throw GroupError("row is not a permutation");
      seen_r[static_cast<size_t>(G.mul(g, h))] = true;
      if (seen_c[static_cast<size_t>(G.mul(h, g))]) throw GroupError("column is not a permutation");
      seen_c[static_cast<size_t>(G.mul(h, g))] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
          throw GroupError("multiplication is not associative");
  G.identity();  // throws when missing
  for (int g = 0; g < n; ++g) G.inv(g);
}

inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G) {
  int n = G.order();
  std::vector<bool> done(static_cast<size_t>(n), false);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (done[static_cast<size_t>(x)]) continue;
    std::set<int> cls;
    for (int g = 0; g < n; ++g) cls.insert(G.conj(g, x));
    classes.emplace_back(cls.begin(), cls.end());
    for (int y : classes.back()) done[static_cast<size_t>(y)] = true;
  }
  return classes;  // ordered by least element since x scans upward
}

inline bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elements) {
  if (elements.empty()) return false;
  std::set<int> s(elements.begin(), elements.end());
  if (!s.count(G.identity())) return false;
  for (int a : s)
    for (int b : s)
      if (!s.count(G.mul(a, b))) return false;
  return true;
}

inline std::vector<int> subgroup_closure(const FiniteGroup& G, std::vector<int> gens) {
  std::set<int> s;
  s.insert(G.identity());
  std::vector<int> queue{G.identity()};
  for (int g : gens)
    if (s.insert(g).second) queue.push_back(g);
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (int g : gens) {
      int x = G.mul(queue[qi], g);
      if (s.insert(x).second) queue.push_back(x);
      x = G.mul(queue[qi], G.inv(g));
      if (s.insert(x).second) queue.push_back(x);
    }
  return {s.begin(), s.end()};
}

// All subgroups, each as a sorted element list, deterministically ordered.
inline std::vector<std::vector<int>> all_subgroups(const FiniteGroup& G) {
  std::set<std::vector<int>> found;
  found.insert({G.identity()});
  std::vector<std::vector<int>> queue(found.begin(), found.end());
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<int> base = queue[qi];
    for (int g = 0; g < G.order(); ++g) {
      std::vector<int> gens = base;
      gens.push_back(g);
      std::vector<int> closure = subgroup_closure(G, gens);
      if (found.insert(closure).second) queue.push_back(closure);
    }
  }
  return {found.begin(), found.end()};
}

// Abstract group generated by permutations of {0..d-1} (right composition).
// Elements are the distinct permutations reached; element 0 is the identity.
inline FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& gens) {
  if (gens.empty()) throw GroupError("no generators");
  size_t d = gens[0].size();
  for (const auto& p : gens)
    if (p.size() != d) throw GroupError("generator degrees differ");
  auto compose = [d](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(d);
    for (size_t i = 0; i < d; ++i) r[i] = q[static_cast<size_t>(p[i])];
    return r;
  };
  std::vector<int> id(d);
  for (size_t i = 0; i < d; ++i) id[i] = static_cast<int>(i);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems{id};
  index[id] = 0;
  for (size_t qi = 0; qi < elems.size(); ++qi)
    for (const auto& g : gens) {
      auto x = compose(elems[qi], g);
      if (!index.count(x)) {
        index[x] = static_cast<int>(elems.size());
        elems.push_back(x);
      }
    }
  int n = static_cast<int>(elems.size());
  FiniteGroup G;
  G.table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      G.table[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          index.at(compose(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]));
  return G;
}

// Helpers for building test groups.
inline FiniteGroup cyclic_group(int n) {
  FiniteGroup G;
  G.table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.table[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  return G;
}

inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  int n = A.order() * B.order();
  auto enc = [&](int a, int b) { return a * B.order() + b; };
  FiniteGroup G;
  G.table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a1 = 0; a1 < A.order(); ++a1)
    for (int b1 = 0; b1 < B.order(); ++b1)
      for (int a2 = 0; a2 < A.order(); ++a2)
        for (int b2 = 0; b2 < B.order(); ++b2)
          G.table[static_cast<size_t>(enc(a1, b1))][static_cast<size_t>(enc(a2, b2))] =
              enc(A.mul(a1, a2), B.mul(b1, b2));
  return G;
}

}  // namespace surfcover
