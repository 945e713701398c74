#pragma once

#include <cstdlib>
#include <initializer_list>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "surfcover/errors.hpp"
#include "surfcover/surface_group.hpp"
#include "surfcover/word.hpp"

namespace surfcover {

// A curated supply of genus-2 words whose conjugacy classes are simple closed
// curves. The construction is a breadth-first orbit of the standard curves
// under a handful of Dehn twist maps, so every output is the image of a
// simple curve under a homeomorphism of the surface and is simple itself.
//
// Each twist is given by its action on the generators and is checked at
// construction time: the relator must map to the identity (so the map
// descends to the surface group) and composing with the paired inverse map
// must fix every generator. Any automorphism of a closed surface group is
// induced by a homeomorphism, so these checks are the whole certificate.

// Endomorphism of the genus-2 surface group given by generator images.
struct GeneratorMap {
  std::vector<Word> images;  // images of a1, b1, a2, b2

  Word apply(const Word& w) const {
    Word out;
    for (int letter : w) {
      Word piece = images[static_cast<size_t>(std::abs(letter) - 1)];
      if (letter < 0) piece = inverse(piece);
      out = concat(out, piece);
    }
    return free_reduce(out);
  }
};

namespace detail {

inline GeneratorMap generator_map(std::initializer_list<std::initializer_list<int>> images) {
  GeneratorMap f;
  for (const auto& img : images) f.images.emplace_back(img);
  return f;
}

inline void verify_twist_pair(const SurfaceGroup& G, const GeneratorMap& f,
                              const GeneratorMap& g) {
  if (!G.is_identity(f.apply(G.relator())) || !G.is_identity(g.apply(G.relator())))
    throw CoverError("twist map does not preserve the surface relation");
  for (int x = 1; x <= 4; ++x) {
    Word gen{x};
    if (!G.equal(g.apply(f.apply(gen)), gen))
      throw CoverError("twist maps are not mutually inverse");
  }
}

}  // namespace detail

// The five Humphries twists for genus 2 (along b1, a1, the middle chain
// curve, a2, b2) plus the twist along the a1 a2 crossing curve, each with its
// inverse. Together these generate the mapping class group action used to
// grow the inventory.
inline std::vector<std::pair<GeneratorMap, GeneratorMap>> twist_pairs() {
  using detail::generator_map;
  std::vector<std::pair<GeneratorMap, GeneratorMap>> pairs;
  // twist along a1: b1 picks up a1
  pairs.emplace_back(generator_map({{1}, {2, 1}, {3}, {4}}),
                     generator_map({{1}, {2, -1}, {3}, {4}}));
  // twist along b1: a1 picks up b1
  pairs.emplace_back(generator_map({{1, 2}, {2}, {3}, {4}}),
                     generator_map({{1, -2}, {2}, {3}, {4}}));
  // twist along a2
  pairs.emplace_back(generator_map({{1}, {2}, {3}, {4, 3}}),
                     generator_map({{1}, {2}, {3}, {4, -3}}));
  // twist along b2
  pairs.emplace_back(generator_map({{1}, {2}, {3, 4}, {4}}),
                     generator_map({{1}, {2}, {3, -4}, {4}}));
  // twist along the a1 a2 curve: both b's pick up the crossing curve
  pairs.emplace_back(generator_map({{1}, {3, 1, 2}, {3}, {1, 3, 4}}),
                     generator_map({{1}, {-1, -3, 2}, {3}, {-3, -1, 4}}));
  // twist along the middle chain curve: both a's pick up b1 b2
  pairs.emplace_back(generator_map({{4, 2, 1}, {2}, {2, 4, 3}, {4}}),
                     generator_map({{-2, -4, 1}, {2}, {-4, -2, 3}, {4}}));
  SurfaceGroup G(2);
  for (const auto& [f, g] : pairs) detail::verify_twist_pair(G, f, g);
  return pairs;
}

// Simple words of cyclically reduced length at most max_core: the twist orbit
// of the four generators and the separating curve a1 b1 A1 B1. Both kinds of
// seed matter; nonseparating orbits alone can miss part of the homology of
// some covers. Deduplicated up to conjugacy and inversion, in discovery
// order, so the basic curves come first.
inline std::vector<Word> simple_word_inventory(size_t max_core = 6) {
  SurfaceGroup G(2);
  auto pairs = twist_pairs();
  std::vector<GeneratorMap> maps;
  for (auto& [f, g] : pairs) {
    maps.push_back(std::move(f));
    maps.push_back(std::move(g));
  }

  auto key_of = [&G](const Word& w) {
    Word key = G.conjugacy_representative(w);
    Word ki = G.conjugacy_representative(inverse(w));
    return ki < key ? ki : key;
  };

  std::set<Word> seen;
  std::vector<Word> orbit;
  std::queue<Word> work;
  auto push = [&](const Word& w) {
    Word key = key_of(w);
    if (seen.count(key)) return;
    seen.insert(key);
    orbit.push_back(w);
    work.push(w);
  };
  for (int x = 1; x <= 4; ++x) push(Word{x});
  push(Word{1, 2, -1, -2});

  while (!work.empty()) {
    Word w = work.front();
    work.pop();
    for (const GeneratorMap& f : maps) {
      Word u = cyclic_reduce(G.dehn_reduce(f.apply(w))).core;
      if (u.empty() || u.size() > max_core) continue;
      push(u);
    }
  }
  return orbit;
}

}  // namespace surfcover
