#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "surfcover/fuchsian.hpp"

using namespace surfcover;

namespace {

bool near(const Iv& a, double v) {
  return std::abs(approx(a) - v) <= 1e-12 * (1 + std::abs(v));
}

// |trace| of every generator in the regular 4g-gon model, from the polygon
// geometry alone: 2 + 2 cos(2 pi / 4g).
double expected_trace(int genus) {
  return 2 + 2 * std::cos(2 * 3.14159265358979323846 / (4 * genus));
}

}  // namespace

TEST_CASE("model construction is certified for genus 2 and 3") {
  for (int g : {2, 3}) {
    FuchsianModel m = build_model(g);
    REQUIRE(m.genus == g);
    REQUIRE(m.gen.size() == static_cast<size_t>(2 * g));

    double want = expected_trace(g);
    for (const Mat2& mat : m.gen) CHECK(near(abs(trace(mat)), want));

    // the relator holonomy is a signed identity
    SurfaceGroup group(g);
    Mat2 h = m.holonomy(group.relator());
    double sign = approx(h.a) > 0 ? 1.0 : -1.0;
    CHECK(near(h.a, sign));
    CHECK(near(h.d, sign));
    CHECK(near(h.b, 0.0));
    CHECK(near(h.c, 0.0));
    CHECK(width_leq_2exp(h.b, -64));
  }
}

TEST_CASE("model rejects genus below 2") {
  CHECK_THROWS_AS(build_model(1), std::invalid_argument);
  CHECK_THROWS_AS(build_model(0), std::invalid_argument);
  CHECK_THROWS_AS(build_model(-3), std::invalid_argument);
}

TEST_CASE("generator length matches the octagon closed form") {
  FuchsianModel m = build_model(2);
  GeodesicClass gc = geodesic_class(m, Word{1});
  // trace 2 + sqrt 2, so length = 2 acosh(1 + sqrt(2)/2)
  CHECK(near(gc.length, 2 * std::acosh(1 + std::sqrt(2.0) / 2)));
  CHECK(gc.word == Word{1});
}

TEST_CASE("geodesic class rejects trivial words") {
  FuchsianModel m = build_model(2);
  CHECK_THROWS_AS(geodesic_class(m, Word{}), EmptyWordError);
  CHECK_THROWS_AS(geodesic_class(m, Word{1, -1}), EmptyWordError);
  // conjugates of the identity reduce to nothing as well
  CHECK_THROWS_AS(geodesic_class(m, Word{2, 1, -1, -2}), EmptyWordError);
}

TEST_CASE("length is a conjugacy and inversion invariant") {
  FuchsianModel m = build_model(2);
  Word w{1, 2, -1, 2};
  double len = approx(geodesic_class(m, w).length);
  Word conj = free_reduce(concat(concat(Word{3, -2}, w), Word{2, -3}));
  CHECK(std::abs(approx(geodesic_class(m, conj).length) - len) < 1e-20);
  CHECK(std::abs(approx(geodesic_class(m, inverse(w)).length) - len) < 1e-20);
  // squaring doubles the translation length
  Word sq = concat(w, w);
  CHECK(std::abs(approx(geodesic_class(m, sq).length) - 2 * len) < 1e-20);
}

TEST_CASE("geodesic endpoints are distinct points of the circle") {
  FuchsianModel m = build_model(2);
  for (const Word& w :
       {Word{1}, Word{2, 2}, Word{1, 2}, Word{1, 2, -1, -2}}) {
    GeodesicClass gc = geodesic_class(m, w);
    for (const DiskPoint* e : {&gc.end1, &gc.end2})
      CHECK(near(e->re * e->re + e->im * e->im, 1.0));
    double dre = approx(gc.end1.re) - approx(gc.end2.re);
    double dim = approx(gc.end1.im) - approx(gc.end2.im);
    CHECK(dre * dre + dim * dim > 1e-6);
  }
}

TEST_CASE("doubling the precision tightens every certificate") {
  FuchsianModel lo = build_model(2, 128);
  FuchsianModel hi = build_model(2, 256);
  Iv tlo = abs(trace(lo.gen[0]));
  Iv thi = abs(trace(hi.gen[0]));
  CHECK(std::abs(approx(tlo) - approx(thi)) < 1e-30);
  CHECK(width_leq_2exp(thi, -200));
  CHECK(!width_leq_2exp(tlo, -200));

  double len = approx(geodesic_class(lo, Word{1, 2}).length);
  CHECK(std::abs(approx(geodesic_class(hi, Word{1, 2}).length) - len) <
        1e-30);
}
