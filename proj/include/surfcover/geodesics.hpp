#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "surfcover/fuchsian.hpp"
#include "surfcover/mat2.hpp"

namespace surfcover {
namespace detail {

// The base tile of the model together with everything needed to walk its
// orbit: side geodesics, the letter attached to each side (crossing side j
// of tile g lands in tile g * letter[j]), corner points, and the sign that
// side_value takes toward the tile center. Side j runs from corner j to
// corner j + 1; the tiles around corner v are visited by repeatedly crossing
// the side with the corner's index and relabeling via the side pairing.
struct Tiling {
  const FuchsianModel* model;
  int n;
  std::vector<Quad> side;
  std::vector<Letter> letter;
  std::vector<Pt> vertex;
  std::vector<int> inner_sign;
};

inline Tiling make_tiling(const FuchsianModel& m) {
  mpfr_prec_t p = m.precision;
  PolygonData poly = polygon_data(m.genus, p);
  int n = 4 * m.genus;
  Tiling t;
  t.model = &m;
  t.n = n;
  Quad circle(Iv::num(1, p), Iv::num(0, p), Iv::num(-1, p));
  Pt center(Iv::num(0, p), Iv::num(1, p));
  Iv e_circ = poly.e_half_circ * poly.e_half_circ;
  Iv pi_iv = Iv::pi(p);
  for (int j = 0; j < n; ++j) {
    t.side.push_back(transform(circle, poly.frame[static_cast<size_t>(j)]));
    t.letter.push_back(side_letter(j));
    Iv theta = pi_iv * Iv::num(2 * j, p) / Iv::num(n, p);
    t.vertex.push_back(apply(rotation(theta), Pt(Iv::num(0, p), e_circ)));
    t.inner_sign.push_back(certified_sign(side_value(t.side.back(), center)));
  }
  return t;
}

struct Tile {
  Word w;
  Mat2 mat;
};

// Tiles are produced by walks that can reach the same group element through
// different words, so deduplication buckets on quantized matrix entries
// (stable across routes: the relator holonomy is plus identity) and confirms
// collisions with exact word algebra.
class TileSet {
 public:
  explicit TileSet(const SurfaceGroup& g) : group_(&g) {}

  bool insert(const Tile& t) {
    uint64_t key = quantize(t.mat);
    auto range = buckets_.equal_range(key);
    for (auto it = range.first; it != range.second; ++it)
      if (group_->equal(tiles_[it->second].w, t.w)) return false;
    buckets_.emplace(key, tiles_.size());
    tiles_.push_back(t);
    return true;
  }

  const std::vector<Tile>& tiles() const { return tiles_; }
  std::vector<Tile>& tiles() { return tiles_; }

 private:
  static uint64_t quantize_one(const Iv& v) {
    double x = approx(v);
    if (x > 1.0e14) x = 1.0e14;
    if (x < -1.0e14) x = -1.0e14;
    return static_cast<uint64_t>(std::llround(x * 4096.0));
  }

  static uint64_t quantize(const Mat2& m) {
    uint64_t h = quantize_one(m.a);
    h = h * 0x9E3779B97F4A7C15ull + quantize_one(m.b);
    h = h * 0x9E3779B97F4A7C15ull + quantize_one(m.c);
    return h;
  }

  const SurfaceGroup* group_;
  std::vector<Tile> tiles_;
  std::unordered_multimap<uint64_t, size_t> buckets_;
};

// Greedy walk to a tile whose closure contains z: while some side of the
// current tile certifiedly separates z from it, cross that side. Crossing a
// separating wall strictly decreases the gallery distance, so the walk
// terminates; the cap only guards against interval blowup.
inline Tile locate(const Tiling& t, const Pt& z) {
  Tile cur{Word{}, Mat2::identity(t.model->precision)};
  for (int step = 0; step < 10000; ++step) {
    Pt local = apply(adjugate(cur.mat), z);
    int out = -1;
    for (int j = 0; j < t.n && out < 0; ++j) {
      Iv v = side_value(t.side[static_cast<size_t>(j)], local);
      if (maybe_zero(v)) continue;
      if (certified_sign(v) != t.inner_sign[static_cast<size_t>(j)]) out = j;
    }
    // No side certifiedly separates z from this tile, so its closure
    // contains z up to interval error; any such tile serves as a start.
    if (out < 0) return cur;
    cur.w.push_back(t.letter[static_cast<size_t>(out)]);
    cur.mat = mul(cur.mat, t.model->letter(t.letter[static_cast<size_t>(out)]));
  }
  throw Inconclusive{};
}

// Orientation data of a hyperbolic element: endpoints p < q of its axis,
// with phase log-parametrized so that translating by the element shifts the
// phase of every axis point by the translation length.
struct AxisFrame {
  Word word;
  Mat2 mat;
  Quad axis;  // sign-normalized, A certifiedly positive
  Iv p, q;
  Iv length;
};

// Log-chart coordinate along the axis. For a point off the axis this is the
// phase of its orthogonal projection: the level sets of the chart modulus
// are the geodesics perpendicular to the axis.
inline Iv point_phase(const AxisFrame& f, const Pt& z) {
  Iv dx1 = z.x - f.p;
  Iv dx2 = f.q - z.x;
  Iv num = dx1 * dx1 + z.y * z.y;
  Iv den = dx2 * dx2 + z.y * z.y;
  Iv half = Iv::num(1, num.prec()) / Iv::num(2, num.prec());
  return (log(num) - log(den)) * half;
}

// Phase at which a geodesic certifiedly crossing the axis meets it. The
// chart z -> (z - p) / (q - z) sends the axis to the vertical through 0 and
// infinity and the crossing geodesic to a half circle with feet of opposite
// signs; the meeting point has height sqrt(-C'/A'), whose log is the phase.
inline Iv quad_phase(const AxisFrame& f, const Quad& crossing) {
  mpfr_prec_t prec = f.p.prec();
  Mat2 norm(prec);
  norm.a = Iv::num(1, prec);
  norm.b = -f.p;
  norm.c = Iv::num(-1, prec);
  norm.d = f.q;
  Quad moved = transform(crossing, norm);
  int sa = certified_sign(moved.A);
  Iv num = sa > 0 ? -moved.C : moved.C;
  Iv den = sa > 0 ? moved.A : -moved.A;
  Iv half = Iv::num(1, prec) / Iv::num(2, prec);
  return (log(num) - log(den)) * half;
}

inline AxisFrame make_frame(const FuchsianModel& m, const Word& word) {
  mpfr_prec_t prec = m.precision;
  Mat2 h = m.holonomy(word);
  Iv tr = abs(trace(h));
  Iv two = Iv::num(2, prec);
  if (!surely_less(two, tr)) throw Inconclusive{};
  Quad ax = axis_quad(h);
  if (certified_sign(ax.A) < 0) {
    ax.A = -ax.A;
    ax.B = -ax.B;
    ax.C = -ax.C;
  }
  Iv disc = ax.B * ax.B - Iv::num(4, prec) * ax.A * ax.C;
  Iv sd = sqrt(disc);
  Iv inv2a = Iv::num(1, prec) / (two * ax.A);
  Iv p = (-ax.B - sd) * inv2a;
  Iv q = (-ax.B + sd) * inv2a;
  Iv len = two * acosh(tr / two);
  return AxisFrame{word, std::move(h), std::move(ax), std::move(p),
                   std::move(q), std::move(len)};
}

constexpr int kCoverCap = 20000;

// Disjointness certificates for a tile against the axis segment of phases
// [0, length]. A tile is excluded only when its corners certifiedly all lie
// strictly on one side of the axis line, or all certifiedly project before
// phase 0, or all certifiedly project past the period. Anything that cannot
// be certified disjoint is kept, which is sound: candidates built from kept
// tiles are confirmed exactly downstream.
inline bool maybe_touches_segment(const Tiling& t, const AxisFrame& f,
                                  const Tile& tile) {
  bool pos = false, neg = false, on = false;
  std::vector<Pt> corners;
  corners.reserve(static_cast<size_t>(t.n));
  for (int k = 0; k < t.n; ++k) {
    corners.push_back(apply(tile.mat, t.vertex[static_cast<size_t>(k)]));
    Iv v = side_value(f.axis, corners.back());
    if (maybe_zero(v))
      on = true;
    else if (certified_sign(v) > 0)
      pos = true;
    else
      neg = true;
  }
  if (!on && !(pos && neg)) return false;
  bool all_before = true, all_after = true;
  Iv zero = Iv::num(0, f.p.prec());
  for (const Pt& c : corners) {
    try {
      Iv ph = point_phase(f, c);
      if (!surely_less(ph, zero)) all_before = false;
      if (!surely_less(f.length, ph)) all_after = false;
    } catch (const Inconclusive&) {
      all_before = false;
      all_after = false;
    }
    if (!all_before && !all_after) break;
  }
  return !(all_before || all_after);
}

// Every tile whose closure meets the axis segment from phase 0 to one full
// translation length, found by breadth-first search over side neighbors from
// the tile under the phase-zero point. The tiles touching the segment are
// edge-connected through one another (consecutive crossed tiles share a
// wall; tiles meeting the segment only at a tiling vertex connect through
// the fan around that vertex, all of whose members touch the same point), so
// the search reaches them all. Over-inclusion by failed certificates is
// harmless and bounded.
inline std::vector<Tile> segment_cover(const Tiling& t,
                                       const SurfaceGroup& group,
                                       const AxisFrame& f) {
  mpfr_prec_t prec = f.p.prec();
  Iv half = Iv::num(1, prec) / Iv::num(2, prec);
  Pt z0((f.p + f.q) * half, (f.q - f.p) * half);
  TileSet visited(group);
  visited.insert(locate(t, z0));
  std::vector<size_t> included = {0};
  for (size_t head = 0; head < included.size(); ++head) {
    if (included.size() > static_cast<size_t>(kCoverCap)) throw Inconclusive{};
    Tile cur = visited.tiles()[included[head]];
    for (int j = 0; j < t.n; ++j) {
      Letter l = t.letter[static_cast<size_t>(j)];
      Tile nb{cur.w, mul(cur.mat, t.model->letter(l))};
      nb.w.push_back(l);
      size_t idx = visited.tiles().size();
      if (!visited.insert(nb)) continue;
      if (maybe_touches_segment(t, f, visited.tiles()[idx]))
        included.push_back(idx);
    }
  }
  std::vector<Tile> out;
  out.reserve(included.size());
  for (size_t idx : included) out.push_back(visited.tiles()[idx]);
  return out;
}

// One period of the axis of a conjugate of the requested class, as a
// closure-complete tile cover. The conjugator is recorded so callers that
// care about the actual group element of a candidate (not just its class)
// can translate back: frame.word equals conj * core * conj^-1. The start
// tile is the one under the phase-zero axis point.
struct AxisData {
  Word conj;
  AxisFrame frame;
  std::vector<Tile> period;
  Tile start;
};

inline AxisData axis_data(const Tiling& t, const SurfaceGroup& group,
                          const Word& core) {
  static const std::vector<Word> conjugators = {
      {}, {1}, {2}, {1, 2}, {2, 1}, {1, 1}, {2, 2}};
  for (const Word& c : conjugators) {
    Word w = free_reduce(concat(concat(c, core), inverse(c)));
    try {
      AxisFrame f = make_frame(*t.model, w);
      std::vector<Tile> period = segment_cover(t, group, f);
      Tile start = period.front();
      return AxisData{c, std::move(f), std::move(period), std::move(start)};
    } catch (const Inconclusive&) {
      continue;
    }
  }
  throw Inconclusive{};
}

// Largest k with core = r^k in the group, found geometrically: a root
// carries the start tile to another tile touching the axis at a phase
// within one period, so it appears in the period cover (as the inverse when
// the root translates against the phase direction). Same-axis candidates
// are prefiltered by interval proportionality of the transported axis and
// then confirmed exactly.
inline std::pair<Word, int> root_decompose(const SurfaceGroup& group,
                                           const AxisData& ad) {
  const Word& core = ad.frame.word;
  Word root = core;
  int power_count = 1;
  double core_len = approx(ad.frame.length);
  for (const Tile& tau : ad.period) {
    Word g = free_reduce(concat(tau.w, inverse(ad.start.w)));
    if (g.empty() || group.is_identity(g)) continue;
    Mat2 gm = mul(tau.mat, adjugate(ad.start.mat));
    Quad moved = transform(ad.frame.axis, gm);
    Iv c1 = ad.frame.axis.A * moved.B - ad.frame.axis.B * moved.A;
    Iv c2 = ad.frame.axis.A * moved.C - ad.frame.axis.C * moved.A;
    Iv c3 = ad.frame.axis.B * moved.C - ad.frame.axis.C * moved.B;
    if (!maybe_zero(c1) || !maybe_zero(c2) || !maybe_zero(c3)) continue;
    Iv tr = abs(trace(gm));
    Iv two = Iv::num(2, tr.prec());
    if (!surely_less(two, tr)) continue;
    double glen = approx(two * acosh(tr / two));
    if (glen < 1e-9) continue;
    int m0 = static_cast<int>(std::lround(core_len / glen));
    for (int m : {m0 - 1, m0, m0 + 1}) {
      if (m <= power_count) continue;
      if (group.equal(power(g, m), core)) {
        root = g;
        power_count = m;
      } else if (group.equal(power(inverse(g), m), core)) {
        root = inverse(g);
        power_count = m;
      }
    }
  }
  return {group.dehn_reduce(root), power_count};
}

}  // namespace detail
}  // namespace surfcover
