#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "surfcover/ball.hpp"
#include "surfcover/mat2.hpp"
#include "surfcover/surface_group.hpp"

namespace surfcover {

// Discrete faithful representation of the genus-g surface group built on the
// regular 4g-gon centered at i whose interior angles are 2pi/4g. Vertices sit
// at distance R with cosh R = cot^2(pi/4g); side midpoints at distance rho
// with cosh rho = cot(pi/4g). Side j runs between vertices j and j+1 and is
// glued to side j+2 within each block of four, which closes all 4g corners
// into a single vertex of total angle 2pi.
struct FuchsianModel {
  int genus = 0;
  mpfr_prec_t precision = kDefaultPrecision;
  std::vector<Mat2> gen;      // gen[k-1] represents letter +k
  std::vector<Mat2> gen_inv;  // adjugates, for letters -k

  const Mat2& letter(Letter l) const {
    return l > 0 ? gen[static_cast<size_t>(l) - 1]
                 : gen_inv[static_cast<size_t>(-l) - 1];
  }

  Mat2 holonomy(const Word& w) const {
    Mat2 m = Mat2::identity(precision);
    for (Letter l : w) m = mul(m, letter(l));
    return m;
  }
};

namespace detail {

// Rotation by theta about the point i.
inline Mat2 rotation(const Iv& theta) {
  mpfr_prec_t p = theta.prec();
  Iv half = theta * Iv::num(1, p) / Iv::num(2, p);
  Mat2 r(p);
  r.a = cos_0pi(half);
  r.b = sin_0pi(half);
  r.c = -r.b;
  r.d = r.a;
  return r;
}

// Translation by distance d along the upward vertical through i, given
// e^{d/2} directly to avoid a lossy exp(acosh(..)) round trip.
inline Mat2 translation_from_half_exp(const Iv& e_half) {
  Mat2 t(e_half.prec());
  t.a = e_half;
  t.b = Iv::num(0, e_half.prec());
  t.c = t.b;
  t.d = Iv::num(1, e_half.prec()) / e_half;
  return t;
}

inline int paired_side(int j) {
  // 4h <-> 4h+2 and 4h+1 <-> 4h+3.
  int block = j / 4, r = j % 4;
  return block * 4 + (r + 2) % 4;
}

// Letter whose holonomy carries the base tile across side j: a_{h+1} on side
// 4h, b_{h+1} on side 4h+3, and their inverses on the partner sides. This is
// the assignment under which the corner cycle of the polygon spells out the
// product of commutators.
inline Letter side_letter(int j) {
  int block = j / 4, r = j % 4;
  switch (r) {
    case 0:
      return static_cast<Letter>(2 * block + 1);
    case 2:
      return static_cast<Letter>(-(2 * block + 1));
    case 3:
      return static_cast<Letter>(2 * block + 2);
    default:
      return static_cast<Letter>(-(2 * block + 2));
  }
}

struct PolygonData {
  Iv e_half_rho;   // e^{rho/2}, rho the apothem
  Iv e_half_circ;  // e^{R/2}, R the circumradius
  std::vector<Mat2> frame;  // frame[j] moves i to the midpoint of side j

  explicit PolygonData(mpfr_prec_t p) : e_half_rho(p), e_half_circ(p) {}
};

inline Iv half_exp_from_cosh(const Iv& ch) {
  Iv one = Iv::num(1, ch.prec());
  return sqrt(ch + sqrt(ch * ch - one));
}

inline PolygonData polygon_data(int genus, mpfr_prec_t p) {
  int n = 4 * genus;
  PolygonData poly(p);
  Iv pi = Iv::pi(p);
  Iv angle = pi / Iv::num(n, p);
  Iv cot = cos_0pi(angle) / sin_0pi(angle);
  poly.e_half_rho = half_exp_from_cosh(cot);
  poly.e_half_circ = half_exp_from_cosh(cot * cot);
  Mat2 t_rho = translation_from_half_exp(poly.e_half_rho);
  for (int j = 0; j < n; ++j) {
    Iv phi = pi * Iv::num(2 * j + 1, p) / Iv::num(n, p);
    poly.frame.push_back(mul(rotation(phi), t_rho));
  }
  return poly;
}

// Side pairing: maps side paired_side(j) onto side j, carrying the polygon
// to the far side of side j. The half turn about the side midpoint reverses
// the side geodesic in place.
inline Mat2 side_pairing(const PolygonData& poly, int j) {
  mpfr_prec_t p = poly.e_half_rho.prec();
  Mat2 half_turn(p);
  half_turn.a = Iv::num(0, p);
  half_turn.b = Iv::num(1, p);
  half_turn.c = Iv::num(-1, p);
  half_turn.d = Iv::num(0, p);
  return mul(mul(poly.frame[static_cast<size_t>(j)], half_turn),
             adjugate(poly.frame[static_cast<size_t>(paired_side(j))]));
}

// Certificate: the interval matrix contains s * identity for one sign s and
// every entry has width at most 2^-64.
inline bool contains_signed_identity(const Mat2& m) {
  for (const Iv* e : {&m.a, &m.b, &m.c, &m.d})
    if (!width_leq_2exp(*e, -64)) return false;
  bool plus = contains_int(m.a, 1) && contains_int(m.d, 1) &&
              contains_int(m.b, 0) && contains_int(m.c, 0);
  bool minus = contains_int(m.a, -1) && contains_int(m.d, -1) &&
               contains_int(m.b, 0) && contains_int(m.c, 0);
  return plus || minus;
}

inline FuchsianModel assemble_model(int genus, mpfr_prec_t precision) {
  PolygonData poly = polygon_data(genus, precision);
  FuchsianModel m;
  m.genus = genus;
  m.precision = precision;
  m.gen.reserve(static_cast<size_t>(2 * genus));
  for (int h = 0; h < genus; ++h) {
    m.gen.push_back(side_pairing(poly, 4 * h));      // a_{h+1}
    m.gen.push_back(side_pairing(poly, 4 * h + 3));  // b_{h+1}
  }
  for (const Mat2& g : m.gen) m.gen_inv.push_back(adjugate(g));
  return m;
}

inline bool model_certified(const FuchsianModel& m) {
  SurfaceGroup group(m.genus);
  if (!contains_signed_identity(m.holonomy(group.relator()))) return false;
  Iv two = Iv::num(2, m.precision);
  for (const Mat2& g : m.gen) {
    Iv t = abs(trace(g));
    if (!surely_less(two, t)) return false;
  }
  return true;
}

}  // namespace detail

// Builds the certified model: the relator holonomy must contain plus or
// minus the identity with every entry tighter than 2^-64, all generators
// must be certifiably hyperbolic, and both facts must reproduce at doubled
// precision.
inline FuchsianModel build_model(int genus,
                                 mpfr_prec_t precision = kDefaultPrecision) {
  if (genus < 2)
    throw std::invalid_argument("hyperbolic model needs genus at least 2");
  FuchsianModel m = detail::assemble_model(genus, precision);
  if (!detail::model_certified(m) ||
      !detail::model_certified(detail::assemble_model(genus, 2 * precision)))
    throw PrecisionExhausted("side-pairing certificates failed at " +
                             std::to_string(precision) + " bits");
  return m;
}

// A free homotopy class realized on its geodesic: cyclically reduced word,
// interval-certified ideal endpoints (as points of the boundary circle in
// the disk picture), and translation length.
struct DiskPoint {
  Iv re, im;
  DiskPoint(Iv r, Iv i) : re(std::move(r)), im(std::move(i)) {}
};

struct GeodesicClass {
  Word word;
  Quad axis;
  DiskPoint end1, end2;
  Iv length;
};

namespace detail {

// Projective root [x : y] of A x^2 + B xy + C y^2 for the given sign of the
// sqrt branch, choosing whichever of the two equivalent charts has a
// certified nonzero coordinate.
inline std::pair<Iv, Iv> quad_root(const Quad& q, const Iv& sd, int branch) {
  mpfr_prec_t p = q.A.prec();
  Iv two = Iv::num(2, p);
  Iv s = branch > 0 ? sd : -sd;
  Iv x = -q.B + s;
  Iv y = two * q.A;
  if (!maybe_zero(x) || !maybe_zero(y)) return {x, y};
  // [2C : -B - s] names the same root: (-B + s)(-B - s) = B^2 - disc = 4AC.
  Iv x2 = two * q.C;
  Iv y2 = -q.B - s;
  if (!maybe_zero(x2) || !maybe_zero(y2)) return {x2, y2};
  throw Inconclusive{};
}

// Cayley image (x - iy) / (x + iy) of the boundary point [x : y], landing on
// the unit circle of the disk model. Projective, so the point at infinity
// needs no special case.
inline DiskPoint boundary_to_disk(const Iv& x, const Iv& y) {
  Iv den = x * x + y * y;
  Iv re = (x * x - y * y) / den;
  Iv im = -(Iv::num(2, x.prec()) * x * y) / den;
  return DiskPoint(std::move(re), std::move(im));
}

}  // namespace detail

// Retries f on models of doubled precision whenever an interval decision
// comes out inconclusive.
template <typename F>
auto with_model_ladder(const FuchsianModel& m, F&& f) {
  const FuchsianModel* cur = &m;
  std::optional<FuchsianModel> rebuilt;
  mpfr_prec_t p = m.precision;
  for (;;) {
    try {
      return f(*cur);
    } catch (const Inconclusive&) {
      p *= 2;
      if (p > kMaxPrecision)
        throw PrecisionExhausted("interval decisions still ambiguous at " +
                                 std::to_string(kMaxPrecision) + " bits");
      rebuilt = build_model(m.genus, p);
      cur = &*rebuilt;
    }
  }
}

inline GeodesicClass geodesic_class(const FuchsianModel& m, const Word& w) {
  SurfaceGroup group(m.genus);
  Word core = group.cyclic_dehn_reduce(w);
  if (core.empty()) throw EmptyWordError();
  return with_model_ladder(m, [&](const FuchsianModel& mm) {
    Mat2 h = mm.holonomy(core);
    Iv t = abs(trace(h));
    Iv two = Iv::num(2, mm.precision);
    if (!surely_less(two, t)) throw Inconclusive{};
    Quad ax = axis_quad(h);
    Iv disc = ax.B * ax.B - Iv::num(4, mm.precision) * ax.A * ax.C;
    Iv sd = sqrt(disc);
    auto [x1, y1] = detail::quad_root(ax, sd, +1);
    auto [x2, y2] = detail::quad_root(ax, sd, -1);
    Iv len = Iv::num(2, mm.precision) * acosh(t / two);
    return GeodesicClass{core, ax, detail::boundary_to_disk(x1, y1),
                         detail::boundary_to_disk(x2, y2), len};
  });
}

}  // namespace surfcover
