#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "surfcover/finite_group.hpp"

namespace surfcover {

// A pair of subgroups of a common finite group, the raw material for the
// covering-space constructions that produce isospectral surfaces.
struct GassmannDatum {
  FiniteGroup group;
  std::vector<int> h;
  std::vector<int> k;
};

// H and K are almost conjugate (Gassmann equivalent) when they meet every
// conjugacy class of G in the same number of elements.
inline bool almost_conjugate(const FiniteGroup& G, const std::vector<int>& H,
                             const std::vector<int>& K) {
  if (H.size() != K.size()) return false;
  std::vector<int> class_of(static_cast<size_t>(G.order()), -1);
  auto classes = conjugacy_classes(G);
  for (size_t ci = 0; ci < classes.size(); ++ci)
    for (int g : classes[ci]) class_of[static_cast<size_t>(g)] = static_cast<int>(ci);
  std::vector<int> ch(classes.size(), 0), ck(classes.size(), 0);
  for (int h : H) ++ch[static_cast<size_t>(class_of[static_cast<size_t>(h)])];
  for (int k : K) ++ck[static_cast<size_t>(class_of[static_cast<size_t>(k)])];
  return ch == ck;
}

inline bool subgroups_conjugate(const FiniteGroup& G, const std::vector<int>& H,
                                const std::vector<int>& K) {
  if (H.size() != K.size()) return false;
  std::vector<int> ks = K;
  std::sort(ks.begin(), ks.end());
  for (int g = 0; g < G.order(); ++g) {
    std::vector<int> img;
    for (int h : H) img.push_back(G.conj(g, h));
    std::sort(img.begin(), img.end());
    if (img == ks) return true;
  }
  return false;
}

struct GassmannReport {
  bool almost_conjugate = false;
  bool conjugate = false;
  // per conjugacy class (ordered by least element): |H ∩ class|, |K ∩ class|
  std::vector<std::pair<int, int>> class_counts;
};

inline GassmannReport gassmann_check(const GassmannDatum& d) {
  const FiniteGroup& G = d.group;
  if (!is_subgroup(G, d.h) || !is_subgroup(G, d.k)) throw GroupError("datum needs two subgroups");
  GassmannReport rep;
  std::vector<int> class_of(static_cast<size_t>(G.order()), -1);
  auto classes = conjugacy_classes(G);
  for (size_t ci = 0; ci < classes.size(); ++ci)
    for (int g : classes[ci]) class_of[static_cast<size_t>(g)] = static_cast<int>(ci);
  std::vector<int> ch(classes.size(), 0), ck(classes.size(), 0);
  for (int h : d.h) ++ch[static_cast<size_t>(class_of[static_cast<size_t>(h)])];
  for (int k : d.k) ++ck[static_cast<size_t>(class_of[static_cast<size_t>(k)])];
  for (size_t ci = 0; ci < classes.size(); ++ci) rep.class_counts.emplace_back(ch[ci], ck[ci]);
  rep.almost_conjugate = (d.h.size() == d.k.size()) && ch == ck;
  rep.conjugate = subgroups_conjugate(G, d.h, d.k);
  return rep;
}

// Exhaustive search for nonconjugate almost-conjugate pairs among subgroups
// of index at most max_index, one representative per simultaneous-conjugacy
// orbit, in the deterministic order the subgroup enumeration produces.
inline std::vector<GassmannDatum> search_gassmann(const std::vector<FiniteGroup>& groups,
                                                  int max_index) {
  std::vector<GassmannDatum> out;
  for (const FiniteGroup& G : groups) {
    std::vector<std::vector<int>> candidates;
    for (auto& s : all_subgroups(G))
      if (G.order() <= max_index * static_cast<int>(s.size())) candidates.push_back(s);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> found;
    auto seen_before = [&](const std::vector<int>& h, const std::vector<int>& k) {
      for (int g = 0; g < G.order(); ++g) {
        std::vector<int> hh, kk;
        for (int x : h) hh.push_back(G.conj(g, x));
        for (int x : k) kk.push_back(G.conj(g, x));
        std::sort(hh.begin(), hh.end());
        std::sort(kk.begin(), kk.end());
        for (auto& [ph, pk] : found)
          if ((ph == hh && pk == kk) || (ph == kk && pk == hh)) return true;
      }
      return false;
    };
    for (size_t i = 0; i < candidates.size(); ++i)
      for (size_t j = i + 1; j < candidates.size(); ++j) {
        if (candidates[i].size() != candidates[j].size()) continue;
        if (!almost_conjugate(G, candidates[i], candidates[j])) continue;
        if (subgroups_conjugate(G, candidates[i], candidates[j])) continue;
        if (seen_before(candidates[i], candidates[j])) continue;
        found.emplace_back(candidates[i], candidates[j]);
        out.push_back(GassmannDatum{G, candidates[i], candidates[j]});
      }
  }
  return out;
}

}  // namespace surfcover
