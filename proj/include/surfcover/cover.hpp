#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "surfcover/errors.hpp"
#include "surfcover/finite_group.hpp"
#include "surfcover/surface_group.hpp"
#include "surfcover/word.hpp"

namespace surfcover {

// Permutations of {0..d-1} as image vectors; p then q composes to
// r[i] = q[p[i]], matching the right action of path lifting: reading a word
// left to right moves a fiber point through each letter's permutation.
using Perm = std::vector<int>;

inline Perm identity_perm(int d) {
  Perm p(static_cast<size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<size_t>(x) >= p.size() || seen[static_cast<size_t>(x)]) return false;
    seen[static_cast<size_t>(x)] = true;
  }
  return true;
}

inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<size_t>(p[i])];
  return r;
}

inline Perm inverse_perm(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return r;
}

// Cycles in canonical order: each starts at its least element, cycles sorted
// by that element. Fixed points included.
inline std::vector<std::vector<int>> cycles_of(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = static_cast<int>(i);
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      cyc.push_back(j);
      j = p[static_cast<size_t>(j)];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

// A finite cover of the genus-g surface given by its monodromy:
// one permutation per generator, acting on fiber indices 0..degree-1.
struct PermCover {
  int genus = 2;
  int degree = 1;
  std::vector<Perm> monodromy;  // size 2*genus
  int basepoint = 0;
};

inline Perm letter_permutation(const PermCover& c, Letter x) {
  int k = x > 0 ? x : -x;
  const Perm& p = c.monodromy[static_cast<size_t>(k - 1)];
  return x > 0 ? p : inverse_perm(p);
}

inline Perm word_permutation(const PermCover& c, const Word& w) {
  Perm r = identity_perm(c.degree);
  for (Letter x : w) r = compose(r, letter_permutation(c, x));
  return r;
}

inline int act(const PermCover& c, int fiber, const Word& w) {
  int j = fiber;
  for (Letter x : w) {
    int k = x > 0 ? x : -x;
    const Perm& p = c.monodromy[static_cast<size_t>(k - 1)];
    j = x > 0 ? p[static_cast<size_t>(j)] : static_cast<int>(
            std::find(p.begin(), p.end(), j) - p.begin());
  }
  return j;
}

inline void validate(const PermCover& c) {
  if (c.genus < 2) throw CoverError("base genus must be at least 2");
  if (c.degree < 1) throw CoverError("degree must be positive");
  if (static_cast<int>(c.monodromy.size()) != generator_count(c.genus))
    throw CoverError("monodromy must give one permutation per generator");
  for (const Perm& p : c.monodromy) {
    if (static_cast<int>(p.size()) != c.degree) throw CoverError("permutation degree mismatch");
    if (!is_permutation(p)) throw CoverError("monodromy entry is not a permutation");
  }
  if (c.basepoint < 0 || c.basepoint >= c.degree) throw CoverError("basepoint out of range");
  SurfaceGroup G(c.genus);
  if (word_permutation(c, G.relator()) != identity_perm(c.degree))
    throw CoverError("surface relator does not act trivially");
  // transitivity
  std::vector<bool> seen(static_cast<size_t>(c.degree), false);
  std::vector<int> queue{0};
  seen[0] = true;
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (const Perm& p : c.monodromy) {
      for (int j : {p[static_cast<size_t>(queue[qi])],
                    static_cast<int>(std::find(p.begin(), p.end(), queue[qi]) - p.begin())})
        if (!seen[static_cast<size_t>(j)]) {
          seen[static_cast<size_t>(j)] = true;
          queue.push_back(j);
        }
    }
  if (static_cast<int>(queue.size()) != c.degree)
    throw CoverError("monodromy is not transitive; the total space is disconnected");
}

inline bool is_valid(const PermCover& c, std::string* why = nullptr) {
  try {
    validate(c);
    return true;
  } catch (const std::exception& e) {
    if (why) *why = e.what();
    return false;
  }
}

// Euler characteristic: genus of the total space of a degree-d cover.
inline int total_genus(const PermCover& c) { return c.degree * (c.genus - 1) + 1; }

// One elevation of a closed curve per cycle of its monodromy permutation.
// Canonical identity: cyclically reduced base word plus the least fiber
// index in the cycle (cycles are produced starting at that index).
struct Elevation {
  Word base_word;
  std::vector<int> fiber_cycle;
  int degree() const { return static_cast<int>(fiber_cycle.size()); }
};

inline std::vector<Elevation> elevations(const PermCover& c, const Word& gamma) {
  Word core = cyclic_reduce(gamma).core;
  if (core.empty()) throw EmptyWordError();
  Perm sigma = word_permutation(c, core);
  std::vector<Elevation> out;
  for (auto& cyc : cycles_of(sigma)) out.push_back({core, std::move(cyc)});
  return out;
}

inline int min_elevation_degree(const PermCover& c, const Word& gamma) {
  int best = c.degree + 1;
  for (const auto& e : elevations(c, gamma)) best = std::min(best, e.degree());
  return best;
}

// Regular cover attached to a surjection onto a finite group: the fiber is
// the group itself, generators act by right multiplication by their image.
// images[k-1] is the image of generator k.
inline PermCover regular_from_hom(int genus, const FiniteGroup& G, const std::vector<int>& images) {
  if (static_cast<int>(images.size()) != generator_count(genus))
    throw CoverError("need one image per generator");
  SurfaceGroup S(genus);
  // relator must die
  int e = G.identity();
  int r = e;
  for (Letter x : S.relator()) {
    int k = x > 0 ? x : -x;
    int img = images[static_cast<size_t>(k - 1)];
    r = G.mul(r, x > 0 ? img : G.inv(img));
  }
  if (r != e) throw CoverError("relator image is not the identity");
  if (static_cast<int>(subgroup_closure(G, images).size()) != G.order())
    throw CoverError("images do not generate the group");
  PermCover c;
  c.genus = genus;
  c.degree = G.order();
  c.basepoint = e;
  for (int img : images) {
    Perm p(static_cast<size_t>(G.order()));
    for (int g = 0; g < G.order(); ++g) p[static_cast<size_t>(g)] = G.mul(g, img);
    c.monodromy.push_back(std::move(p));
  }
  validate(c);
  return c;
}

// Cover of degree [G:H] attached to the same surjection: fiber = right
// cosets Hg, generators act by right multiplication. Cosets are numbered by
// their least element, so the coset H of the identity is fiber 0.
inline PermCover coset_cover(int genus, const FiniteGroup& G, const std::vector<int>& images,
                             const std::vector<int>& subgroup) {
  if (!is_subgroup(G, subgroup)) throw GroupError("not a subgroup");
  int n = G.order();
  std::vector<int> coset_of(static_cast<size_t>(n), -1);
  std::vector<int> reps;
  for (int g = 0; g < n; ++g) {
    if (coset_of[static_cast<size_t>(g)] != -1) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int h : subgroup) coset_of[static_cast<size_t>(G.mul(h, g))] = id;
  }
  int d = static_cast<int>(reps.size());
  if (static_cast<int>(subgroup.size()) * d != n) throw GroupError("subgroup size does not divide order");
  PermCover c;
  c.genus = genus;
  c.degree = d;
  c.basepoint = coset_of[static_cast<size_t>(G.identity())];
  if (static_cast<int>(images.size()) != generator_count(genus))
    throw CoverError("need one image per generator");
  for (int img : images) {
    Perm p(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i)
      p[static_cast<size_t>(i)] = coset_of[static_cast<size_t>(G.mul(reps[static_cast<size_t>(i)], img))];
    c.monodromy.push_back(std::move(p));
  }
  validate(c);
  return c;
}

// Fiber product component through the two basepoints: the cover whose
// subgroup is the intersection of the two given ones. Projections send a
// fiber point of w to its coordinates.
struct CommonCover {
  PermCover cover;
  std::vector<int> to_p;
  std::vector<int> to_q;
};

inline CommonCover common_cover(const PermCover& p, const PermCover& q) {
  if (p.genus != q.genus) throw DifferentBaseError("common cover needs equal base genus");
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> states{{p.basepoint, q.basepoint}};
  index[states[0]] = 0;
  int gens = generator_count(p.genus);
  for (size_t qi = 0; qi < states.size(); ++qi) {
    for (int k = 1; k <= gens; ++k) {
      for (int sgn : {+1, -1}) {
        auto [i, j] = states[qi];
        Word letter{sgn * k};
        std::pair<int, int> next{act(p, i, letter), act(q, j, letter)};
        if (!index.count(next)) {
          index[next] = static_cast<int>(states.size());
          states.push_back(next);
        }
      }
    }
  }
  CommonCover w;
  w.cover.genus = p.genus;
  w.cover.degree = static_cast<int>(states.size());
  w.cover.basepoint = 0;
  for (int k = 1; k <= gens; ++k) {
    Perm perm(states.size());
    for (size_t s = 0; s < states.size(); ++s) {
      Word letter{k};
      std::pair<int, int> next{act(p, states[s].first, letter), act(q, states[s].second, letter)};
      perm[s] = index.at(next);
    }
    w.cover.monodromy.push_back(std::move(perm));
  }
  for (auto& st : states) {
    w.to_p.push_back(st.first);
    w.to_q.push_back(st.second);
  }
  validate(w.cover);
  return w;
}

// A closed curve on the total space of a cover: a base word together with a
// fiber point fixed by its monodromy permutation; the curve is the lift of
// the word's loop through that point.
struct CoverCurve {
  Word word;
  int fiber_index = 0;
};

inline bool closes_up(const PermCover& c, const CoverCurve& a) {
  return act(c, a.fiber_index, a.word) == a.fiber_index;
}

// The underlying reduced curve: conjugation is slid away, the word is cut
// down to its free root, and the lift is traversed once. Identified by the
// root word plus the least fiber index on its cycle; the loop word is the
// root raised to the cycle length.
inline CoverCurve underlying_curve(const PermCover& c, const CoverCurve& a) {
  if (!closes_up(c, a)) throw CoverError("word does not fix the fiber point");
  CyclicReduction cr = cyclic_reduce(a.word);
  if (cr.core.empty()) throw EmptyWordError();
  Word root = primitive_root_cyclic(cr.core).root;
  int j = act(c, a.fiber_index, cr.conj);
  Perm sigma = word_permutation(c, root);
  int best = j, len = 0, t = j;
  do {
    best = std::min(best, t);
    t = sigma[static_cast<size_t>(t)];
    ++len;
  } while (t != j);
  return {power(root, len), best};
}

inline bool same_curve(const PermCover& c, const CoverCurve& a, const CoverCurve& b) {
  CoverCurve ua = underlying_curve(c, a), ub = underlying_curve(c, b);
  return ua.word == ub.word && ua.fiber_index == ub.fiber_index;
}

// The image multicurve of one curve upstairs across the diamond: elevate the
// curve on p to the common cover, push each component down to q, and keep
// the set of distinct image curves.
inline std::vector<CoverCurve> psi_image(const PermCover& p, const PermCover& q,
                                         const CoverCurve& alpha) {
  CoverCurve base = underlying_curve(p, alpha);
  Word root = primitive_root_cyclic(base.word).root;
  // fiber points of p on alpha's cycle
  Perm sp = word_permutation(p, root);
  std::vector<bool> on_cycle(static_cast<size_t>(p.degree), false);
  for (int t = base.fiber_index; !on_cycle[static_cast<size_t>(t)]; t = sp[static_cast<size_t>(t)])
    on_cycle[static_cast<size_t>(t)] = true;
  CommonCover cc = common_cover(p, q);
  Perm sq = word_permutation(q, root);
  std::map<int, int> cycle_len;  // min index of a q-cycle -> its length
  for (int s = 0; s < cc.cover.degree; ++s) {
    if (!on_cycle[static_cast<size_t>(cc.to_p[static_cast<size_t>(s)])]) continue;
    int y = cc.to_q[static_cast<size_t>(s)];
    int best = y, len = 0, t = y;
    do {
      best = std::min(best, t);
      t = sq[static_cast<size_t>(t)];
      ++len;
    } while (t != y);
    cycle_len[best] = len;
  }
  std::vector<CoverCurve> out;
  for (auto& [fiber, len] : cycle_len) out.push_back({power(root, len), fiber});
  return out;
}

// Breadth-first relabeling from the given start point, exploring letters in
// the fixed order +1,-1,+2,-2,...; the flattened relabeled monodromy is a
// complete isomorphism invariant of the pointed cover.
inline std::vector<int> standardized_table(const PermCover& c, int start) {
  std::vector<int> label(static_cast<size_t>(c.degree), -1);
  std::vector<int> order;
  label[static_cast<size_t>(start)] = 0;
  order.push_back(start);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    for (int k = 1; k <= generator_count(c.genus); ++k) {
      for (int sgn : {+1, -1}) {
        int j = act(c, order[qi], Word{sgn * k});
        if (label[static_cast<size_t>(j)] == -1) {
          label[static_cast<size_t>(j)] = static_cast<int>(order.size());
          order.push_back(j);
        }
      }
    }
  }
  std::vector<int> table;
  for (int k = 1; k <= generator_count(c.genus); ++k)
    for (int i = 0; i < c.degree; ++i)
      table.push_back(label[static_cast<size_t>(
          c.monodromy[static_cast<size_t>(k - 1)][static_cast<size_t>(order[static_cast<size_t>(i)])])]);
  return table;
}

// Equivalence of covers (conjugate subgroups): some choice of basepoint in q
// reproduces p's standardized table. Basepoints themselves are irrelevant.
inline bool covers_equivalent(const PermCover& p, const PermCover& q) {
  if (p.genus != q.genus)
    throw DifferentBaseError("covers of different base surfaces are incomparable");
  if (p.degree != q.degree) return false;
  std::vector<int> tp = standardized_table(p, p.basepoint);
  for (int j = 0; j < q.degree; ++j)
    if (standardized_table(q, j) == tp) return true;
  return false;
}

inline bool is_regular(const PermCover& c) {
  std::vector<int> t0 = standardized_table(c, 0);
  for (int j = 1; j < c.degree; ++j)
    if (standardized_table(c, j) != t0) return false;
  return true;
}

}  // namespace surfcover
