#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "surfcover/ball.hpp"
#include "surfcover/mat2.hpp"

using namespace surfcover;

namespace {

// The interval is much tighter than a double, so the right cross-check
// against <cmath> is proximity within a few double ulps, not containment.
bool near(const Iv& a, double v) {
  return std::abs(approx(a) - v) <= 1e-12 * (1 + std::abs(v));
}

bool contains(const Iv& a, double v) {
  return mpfr_cmp_d(a.lo(), v) <= 0 && mpfr_cmp_d(a.hi(), v) >= 0;
}

Iv from_double(double v, mpfr_prec_t prec) {
  Iv r(prec);
  mpfr_set_d(r.lo(), v, MPFR_RNDD);
  mpfr_set_d(r.hi(), v, MPFR_RNDU);
  return r;
}

}  // namespace

TEST_CASE("interval arithmetic encloses exact values") {
  const mpfr_prec_t p = 128;
  Iv two = Iv::num(2, p);
  Iv r = sqrt(two);
  CHECK(near(r * r, 2.0));
  CHECK(width_leq_2exp(r, -100));

  Iv five = Iv::num(5, p);
  CHECK(near(exp(log(five)), 5.0));
  CHECK(near(Iv::pi(p), 3.14159265358979323846));

  Iv quarter_pi = Iv::pi(p) / Iv::num(4, p);
  CHECK(near(cos_0pi(quarter_pi), std::cos(3.14159265358979323846 / 4)));
  CHECK(near(sin_0pi(quarter_pi), std::sin(3.14159265358979323846 / 4)));

  Iv x = Iv::num(1, p) + sqrt(two);
  CHECK(near(acosh(x), std::acosh(1 + std::sqrt(2.0))));
}

TEST_CASE("interval multiplication tracks signed endpoints") {
  const mpfr_prec_t p = 64;
  Iv a(p), b(p);
  mpfr_set_si(a.lo(), -2, MPFR_RNDD);
  mpfr_set_si(a.hi(), 3, MPFR_RNDU);
  mpfr_set_si(b.lo(), 4, MPFR_RNDD);
  mpfr_set_si(b.hi(), 5, MPFR_RNDU);
  Iv prod = a * b;
  CHECK(contains_int(prod, -10));
  CHECK(contains_int(prod, 15));
  CHECK(!contains_int(prod, -11));
  CHECK(!contains_int(prod, 16));
}

TEST_CASE("certified signs and ranges") {
  const mpfr_prec_t p = 64;
  CHECK(certified_sign(Iv::num(7, p)) == 1);
  CHECK(certified_sign(Iv::num(-7, p)) == -1);
  Iv straddle = Iv::num(1, p) - Iv::num(1, p);
  CHECK(maybe_zero(straddle));
  CHECK_THROWS_AS(certified_sign(straddle), Inconclusive);

  auto [flo, fhi] = floor_range(from_double(2.5, p));
  CHECK(flo == 2);
  CHECK(fhi == 2);
  auto [glo, ghi] = floor_range(from_double(2.0, p));
  CHECK(glo <= 2);
  CHECK(ghi >= 1);
}

TEST_CASE("sine hump is handled") {
  const mpfr_prec_t p = 64;
  Iv a(p);
  mpfr_set_d(a.lo(), 1.5, MPFR_RNDD);
  mpfr_set_d(a.hi(), 1.7, MPFR_RNDU);
  Iv s = sin_0pi(a);
  // sin(1.7) ~ 0.9917 is the smaller endpoint value; the hump pushes the
  // upper bound to one.
  CHECK(contains(s, 0.995));
  CHECK(contains(s, 1.0));
  CHECK(!contains(s, 0.99));
  CHECK(!contains(s, 1.001));
}

TEST_CASE("matrix action on points and geodesics") {
  const mpfr_prec_t p = 128;
  Mat2 shift = Mat2::identity(p);
  shift.b = Iv::num(1, p);
  Pt i(Iv::num(0, p), Iv::num(1, p));
  Pt moved = apply(shift, i);
  CHECK(near(moved.x, 1.0));
  CHECK(near(moved.y, 1.0));

  // diag(2, 1/2) fixes 0 and infinity, so its axis quadratic has A = 0.
  Mat2 d(p);
  d.a = Iv::num(2, p);
  d.b = Iv::num(0, p);
  d.c = Iv::num(0, p);
  d.d = Iv::num(1, p) / Iv::num(2, p);
  Quad ax = axis_quad(d);
  CHECK(maybe_zero(ax.A));
  CHECK(certified_sign(ax.B) == -1);
  CHECK(maybe_zero(ax.C));

  // The unit half-circle crosses the vertical line through 0 and misses the
  // one through 3.
  Quad circle(Iv::num(1, p), Iv::num(0, p), Iv::num(-1, p));
  Quad line0(Iv::num(0, p), Iv::num(1, p), Iv::num(0, p));
  Quad line3(Iv::num(0, p), Iv::num(1, p), Iv::num(-3, p));
  CHECK(certified_sign(linking(circle, line0)) == -1);
  CHECK(certified_sign(linking(circle, line3)) == 1);

  // Shifting the circle by one moves its feet to 0 and 2.
  Quad shifted = transform(circle, shift);
  Pt foot0(Iv::num(0, p), Iv::num(0, p));
  Pt foot2(Iv::num(2, p), Iv::num(0, p));
  CHECK(maybe_zero(side_value(shifted, foot0)));
  CHECK(maybe_zero(side_value(shifted, foot2)));
  Pt inside(Iv::num(1, p), Iv::num(0, p));
  CHECK(certified_sign(side_value(shifted, inside)) == -1);
}
