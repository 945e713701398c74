#pragma once

#include "surfcover/ball.hpp"

namespace surfcover {

// 2x2 interval matrix [[a, b], [c, d]], acting on the upper half plane by
// Mobius transformations. Group elements always have determinant one, so the
// inverse is the adjugate.
struct Mat2 {
  Iv a, b, c, d;

  explicit Mat2(mpfr_prec_t prec) : a(prec), b(prec), c(prec), d(prec) {}

  static Mat2 identity(mpfr_prec_t prec) {
    Mat2 m(prec);
    m.a = Iv::num(1, prec);
    m.b = Iv::num(0, prec);
    m.c = Iv::num(0, prec);
    m.d = Iv::num(1, prec);
    return m;
  }
};

inline Mat2 mul(const Mat2& x, const Mat2& y) {
  Mat2 r(std::max(x.a.prec(), y.a.prec()));
  r.a = x.a * y.a + x.b * y.c;
  r.b = x.a * y.b + x.b * y.d;
  r.c = x.c * y.a + x.d * y.c;
  r.d = x.c * y.b + x.d * y.d;
  return r;
}

inline Mat2 adjugate(const Mat2& m) {
  Mat2 r(m.a.prec());
  r.a = m.d;
  r.b = -m.b;
  r.c = -m.c;
  r.d = m.a;
  return r;
}

inline Iv trace(const Mat2& m) { return m.a + m.d; }
inline Iv det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

// Point x + iy of the upper half plane.
struct Pt {
  Iv x, y;
  Pt(Iv px, Iv py) : x(std::move(px)), y(std::move(py)) {}
};

// Mobius image of an upper-half-plane point under a determinant-one matrix:
// z' = (az + b) / (cz + d), with Im z' = y / |cz + d|^2.
inline Pt apply(const Mat2& m, const Pt& p) {
  Iv cx_d = m.c * p.x + m.d;
  Iv cy = m.c * p.y;
  Iv den = cx_d * cx_d + cy * cy;
  Iv ax_b = m.a * p.x + m.b;
  Iv ay = m.a * p.y;
  Iv re = (ax_b * cx_d + ay * cy) / den;
  Iv im = p.y / den;
  return Pt(re, im);
}

// Unoriented geodesic of the upper half plane, encoded as the homogeneous
// quadratic A x^2 + B xy + C y^2 whose projective roots [x : y] are the two
// ideal endpoints. A half-circle with feet p, q has (A, B, C) = (1, -(p+q),
// pq) up to scale; a vertical line through p has (0, 1, -p). Everything
// downstream uses only scale-invariant data: signs, ratios, root pairs.
struct Quad {
  Iv A, B, C;
  Quad(Iv a, Iv b, Iv c) : A(std::move(a)), B(std::move(b)), C(std::move(c)) {}
};

// Geodesic axis of a hyperbolic matrix: fixed points of the Mobius action
// solve c z^2 + (d - a) z - b = 0.
inline Quad axis_quad(const Mat2& m) { return Quad(m.c, m.d - m.a, -m.b); }

// Image of a geodesic under the Mobius action of m, computed by pulling the
// quadratic back along the adjugate. For determinant-one m this is exactly
// the image quadratic; in general it differs by the positive factor det^2,
// which no caller can observe.
inline Quad transform(const Quad& q, const Mat2& m) {
  Iv ma = m.d, mb = -m.b, mc = -m.c, md = m.a;  // adjugate entries
  Iv A = q.A * ma * ma + q.B * ma * mc + q.C * mc * mc;
  Iv B = q.A * ma * mb * Iv::num(2, ma.prec()) + q.B * (ma * md + mb * mc) +
         q.C * mc * md * Iv::num(2, ma.prec());
  Iv C = q.A * mb * mb + q.B * mb * md + q.C * md * md;
  return Quad(std::move(A), std::move(B), std::move(C));
}

// Side function: vanishes on the geodesic, with one sign on each side of it.
// For half-circles this is A((x-p)(x-q) + y^2) up to expanding; the same
// formula covers vertical lines.
inline Iv side_value(const Quad& q, const Pt& p) {
  return q.A * (p.x * p.x + p.y * p.y) + q.B * p.x + q.C;
}

// Linking form of two geodesics: negative exactly when the endpoint pairs
// interleave on the boundary circle, i.e. when the geodesics cross
// transversally; positive when they are disjoint (separated or nested). It
// equals A2^2 q1(r) q1(s) for the roots r, s of q2, cleared of denominators.
inline Iv linking(const Quad& p, const Quad& q) {
  Iv ac = p.A * q.C - q.A * p.C;
  Iv ab = p.A * q.B - q.A * p.B;
  Iv bc = p.B * q.C - q.B * p.C;
  return ac * ac - ab * bc;
}

}  // namespace surfcover
