#include <catch2/catch_amalgamated.hpp>

#include "surfcover/intersect.hpp"
#include "surfcover/inventory.hpp"

using namespace surfcover;

namespace {

FuchsianModel& model() {
  static FuchsianModel m = build_model(2);
  return m;
}

Word conjugated(const Word& w, const Word& c) {
  return free_reduce(concat(concat(c, w), inverse(c)));
}

}  // namespace

TEST_CASE("self intersection of the standard curves") {
  auto& m = model();
  CHECK(self_intersection(m, Word{1}) == 0);
  CHECK(self_intersection(m, Word{4}) == 0);
  CHECK(self_intersection(m, Word{1, 2}) == 0);
  CHECK(self_intersection(m, Word{1, 3}) == 0);
  // the separating waist curve
  CHECK(self_intersection(m, Word{1, 2, -1, -2}) == 0);
}

TEST_CASE("self intersection of the figure eight") {
  auto& m = model();
  Word fig8{1, 2, -1, 2};
  CHECK(self_intersection(m, fig8) == 1);
  CHECK_FALSE(is_simple(m, fig8));
  CHECK(is_simple(m, Word{1}));

  // invariance under conjugation and inversion
  CHECK(self_intersection(m, conjugated(fig8, Word{3, -2})) == 1);
  CHECK(self_intersection(m, inverse(fig8)) == 1);
}

TEST_CASE("powers follow the k squared law") {
  auto& m = model();
  // i(w^k) = k^2 i(w) + k - 1
  CHECK(self_intersection(m, Word{1, 1}) == 1);
  CHECK(self_intersection(m, Word{1, 1, 1}) == 2);
  CHECK(self_intersection(m, Word{1, 1, 1, 1}) == 3);
  Word f2{1, 2, -1, 2, 1, 2, -1, 2};
  CHECK(self_intersection(m, f2) == 5);
}

TEST_CASE("pairwise numbers of the standard configuration") {
  auto& m = model();
  CHECK(geometric_intersection(m, Word{1}, Word{2}) == 1);
  CHECK(geometric_intersection(m, Word{1}, Word{3}) == 0);
  CHECK(geometric_intersection(m, Word{1}, Word{4}) == 0);
  CHECK(geometric_intersection(m, Word{3}, Word{4}) == 1);
  // the waist misses both handles' core curves
  CHECK(geometric_intersection(m, Word{1, 2, -1, -2}, Word{2}) == 0);
  CHECK(geometric_intersection(m, Word{1, 2, -1, -2}, Word{3}) == 0);
}

TEST_CASE("pairwise numbers are bilinear in powers") {
  auto& m = model();
  CHECK(geometric_intersection(m, Word{1}, Word{2, 2}) == 2);
  CHECK(geometric_intersection(m, Word{1, 1}, Word{2}) == 2);
  CHECK(geometric_intersection(m, Word{1, 1}, Word{2, 2}) == 4);
  CHECK(geometric_intersection(m, Word{1, 1, 1}, Word{2}) == 3);
}

TEST_CASE("twisting b1 along a1 adds one crossing per turn") {
  auto& m = model();
  CHECK(geometric_intersection(m, Word{2, 1}, Word{2}) == 1);
  CHECK(geometric_intersection(m, Word{2, 1, 1}, Word{2}) == 2);
  CHECK(geometric_intersection(m, Word{2, 1, 1, 1}, Word{2}) == 3);
}

TEST_CASE("pairwise numbers are conjugacy invariants") {
  auto& m = model();
  Word a = conjugated(Word{1}, Word{4, 3});
  Word b = conjugated(Word{2}, Word{-1, 2});
  CHECK(geometric_intersection(m, a, b) == 1);
  CHECK(geometric_intersection(m, inverse(a), b) == 1);
}

TEST_CASE("coinciding classes are reported, not counted") {
  auto& m = model();
  CHECK_THROWS_AS(geometric_intersection(m, Word{1}, Word{1}),
                  EqualClassesError);
  CHECK_THROWS_AS(geometric_intersection(m, Word{1}, Word{-1}),
                  EqualClassesError);
  CHECK_THROWS_AS(geometric_intersection(m, Word{1}, Word{1, 1}),
                  EqualClassesError);
  CHECK_THROWS_AS(
      geometric_intersection(m, Word{1}, conjugated(Word{1}, Word{2, 3})),
      EqualClassesError);
}

TEST_CASE("trivial words are rejected") {
  auto& m = model();
  CHECK_THROWS_AS(self_intersection(m, Word{}), EmptyWordError);
  CHECK_THROWS_AS(self_intersection(m, Word{1, -1}), EmptyWordError);
  CHECK_THROWS_AS(geometric_intersection(m, Word{}, Word{1}), EmptyWordError);
  CHECK_THROWS_AS(geometric_intersection(m, Word{1}, Word{2, -2}),
                  EmptyWordError);
}

TEST_CASE("the twist inventory consists of simple words") {
  auto& m = model();
  // spot checks across the orbit; the acceptance run sweeps a larger slice
  auto inv = simple_word_inventory(5);
  REQUIRE(inv.size() >= 100);
  for (size_t i = 0; i < inv.size(); i += 7)
    CHECK(self_intersection(m, inv[i]) == 0);
}

TEST_CASE("intersection numbers are preserved by the twist maps") {
  auto& m = model();
  Word fig8{1, 2, -1, 2};
  for (auto& [f, g] : twist_pairs()) {
    CHECK(geometric_intersection(m, f.apply(Word{1}), f.apply(Word{2})) == 1);
    CHECK(geometric_intersection(m, g.apply(Word{1}), g.apply(Word{2})) == 1);
    CHECK(self_intersection(m, f.apply(fig8)) == 1);
  }
}

TEST_CASE("results are stable under doubled precision") {
  FuchsianModel hi = build_model(2, 256);
  CHECK(self_intersection(hi, Word{1, 2, -1, 2}) == 1);
  CHECK(geometric_intersection(hi, Word{1, 1}, Word{2}) == 2);
}

TEST_CASE("elevations to the trivial cover reproduce the base numbers") {
  auto& m = model();
  PermCover triv{2, 1, {{0}, {0}, {0}, {0}}, 0};
  for (const Word& w : {Word{1}, Word{1, 1}, Word{1, 2, -1, 2}}) {
    auto es = elevations(triv, w);
    REQUIRE(es.size() == 1);
    CHECK(elevation_self_intersection(m, triv, es[0]) ==
          self_intersection(m, w));
  }
}

TEST_CASE("elevations to the double cover along a1") {
  auto& m = model();
  PermCover c{2, 2, {{1, 0}, {0, 1}, {0, 1}, {0, 1}}, 0};
  validate(c);

  auto eb = elevations(c, Word{2});
  REQUIRE(eb.size() == 2);
  CHECK(eb[0].degree() == 1);
  CHECK(elevation_self_intersection(m, c, eb[0]) == 0);
  CHECK(elevation_self_intersection(m, c, eb[1]) == 0);
  CHECK(elevation_intersection(m, c, eb[0], eb[1]) == 0);

  auto ea = elevations(c, Word{1});
  REQUIRE(ea.size() == 1);
  CHECK(ea[0].degree() == 2);
  CHECK(elevation_self_intersection(m, c, ea[0]) == 0);
  // one of the two lifted crossing points lands on each side
  CHECK(elevation_intersection(m, c, eb[0], ea[0]) == 1);
  CHECK(elevation_intersection(m, c, ea[0], eb[1]) == 1);

  // the figure eight lifts to a copy in each sheet, crossings and all:
  // 1 + 1 + 0 matches degree times the base self intersection
  auto ef = elevations(c, Word{1, 2, -1, 2});
  REQUIRE(ef.size() == 2);
  CHECK(elevation_self_intersection(m, c, ef[0]) == 1);
  CHECK(elevation_self_intersection(m, c, ef[1]) == 1);
  CHECK(elevation_intersection(m, c, ef[0], ef[1]) == 0);
}

TEST_CASE("elevations to the cyclic triple cover along a1") {
  auto& m = model();
  PermCover c{2, 3, {{1, 2, 0}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}}, 0};
  validate(c);
  auto eb = elevations(c, Word{2});
  REQUIRE(eb.size() == 3);
  for (auto& e : eb) CHECK(elevation_self_intersection(m, c, e) == 0);
  for (size_t i = 0; i < eb.size(); ++i)
    for (size_t j = i + 1; j < eb.size(); ++j)
      CHECK(elevation_intersection(m, c, eb[i], eb[j]) == 0);
  auto ea = elevations(c, Word{1});
  REQUIRE(ea.size() == 1);
  CHECK(ea[0].degree() == 3);
  CHECK(elevation_self_intersection(m, c, ea[0]) == 0);
}

TEST_CASE("simple curves elevate to multicurves on a regular cover") {
  auto& m = model();
  FiniteGroup V = direct_product(cyclic_group(2), cyclic_group(2));
  PermCover c = regular_from_hom(2, V, {1, 2, 0, 0});
  REQUIRE(c.degree == 4);
  for (const Word& w :
       {Word{1}, Word{2}, Word{3}, Word{1, 3}, Word{1, 2, -1, -2}}) {
    auto es = elevations(c, w);
    for (auto& e : es) CHECK(elevation_self_intersection(m, c, e) == 0);
    for (size_t i = 0; i < es.size(); ++i)
      for (size_t j = i + 1; j < es.size(); ++j)
        CHECK(elevation_intersection(m, c, es[i], es[j]) == 0);
  }

  // crossings upstairs total degree times the base number
  auto ea = elevations(c, Word{1});
  auto eb = elevations(c, Word{2});
  int sum = 0;
  for (auto& u : ea)
    for (auto& v : eb) sum += elevation_intersection(m, c, u, v);
  CHECK(sum == 4);
}

TEST_CASE("elevation routines validate their inputs") {
  auto& m = model();
  PermCover c{2, 2, {{1, 0}, {0, 1}, {0, 1}, {0, 1}}, 0};
  auto ea = elevations(c, Word{1});

  Elevation bad = ea[0];
  bad.fiber_cycle = {0, 0};
  CHECK_THROWS_AS(elevation_self_intersection(m, c, bad), CoverError);
  Elevation empty = ea[0];
  empty.base_word = {};
  empty.fiber_cycle = {0};
  CHECK_THROWS_AS(elevation_self_intersection(m, c, empty), EmptyWordError);

  CHECK_THROWS_AS(elevation_intersection(m, c, ea[0], ea[0]),
                  EqualClassesError);
}

TEST_CASE("two syllable words match the wedge vertex chord count") {
  // Independent combinatorial oracle: a two syllable word crosses itself
  // exactly when its two strand chords link in the cyclic direction order
  // around the wedge vertex. For the octagon side pairing that order is
  // out a1, in b1, in a1, out b1, out a2, in b2, in a2, out b2.
  auto& m = model();
  CHECK(self_intersection(m, Word{1, 3}) == 0);    // a1 a2
  CHECK(self_intersection(m, Word{1, -3}) == 1);   // a1 A2
  CHECK(self_intersection(m, Word{1, 4}) == 1);    // a1 b2
  CHECK(self_intersection(m, Word{1, -4}) == 0);   // a1 B2
  CHECK(self_intersection(m, Word{2, 3}) == 1);    // b1 a2
  CHECK(self_intersection(m, Word{2, -3}) == 0);   // b1 A2
  CHECK(self_intersection(m, Word{2, 4}) == 0);    // b1 b2
  CHECK(self_intersection(m, Word{2, -4}) == 1);   // b1 B2
}

TEST_CASE("crossings vanish upstairs when the connecting class moves sheets") {
  auto& m = model();
  PermCover along_a1{2, 2, {{1, 0}, {0, 1}, {0, 1}, {0, 1}}, 0};
  PermCover along_b1{2, 2, {{0, 1}, {1, 0}, {0, 1}, {0, 1}}, 0};

  // the figure eight's double point joins strands differing by a1 b1 A1,
  // which fixes the sheets of the first cover and swaps those of the second
  Word fig8{1, 2, -1, 2};
  for (const Elevation& e : elevations(along_a1, fig8))
    CHECK(elevation_self_intersection(m, along_a1, e) == 1);
  for (const Elevation& e : elevations(along_b1, fig8))
    CHECK(elevation_self_intersection(m, along_b1, e) == 0);

  // a1 squared: its double point joins strands differing by a1 itself, so
  // the crossing vanishes along a1 (the lift runs the doubled circle once)
  Word sq{1, 1};
  for (const Elevation& e : elevations(along_a1, sq))
    CHECK(elevation_self_intersection(m, along_a1, e) == 0);
  for (const Elevation& e : elevations(along_b1, sq))
    CHECK(elevation_self_intersection(m, along_b1, e) == 1);
}
