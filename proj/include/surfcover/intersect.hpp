#pragma once

#include <cassert>
#include <functional>
#include <utility>
#include <vector>

#include "surfcover/cover.hpp"
#include "surfcover/geodesics.hpp"

namespace surfcover {
namespace detail {

// Sign of the direction a frame's element translates along its own axis:
// +1 when conjugating by it moves axis points toward growing phase.
inline int frame_direction(const AxisFrame& f) {
  mpfr_prec_t prec = f.p.prec();
  Iv half = Iv::num(1, prec) / Iv::num(2, prec);
  Pt z0((f.p + f.q) * half, (f.q - f.p) * half);
  return certified_sign(point_phase(f, apply(f.mat, z0)));
}

// Geometry of one free homotopy class, reduced to its primitive root: the
// root's axis frame and a one-period segment cover, both in coordinates
// conjugated by `conj` (frame.word equals conj * root_original * conj^-1 up
// to reduction). The input class is root^mult.
struct CurveGeometry {
  Word conj;
  AxisFrame frame;
  std::vector<Tile> cover;
  Word root;
  int mult;
  int dir;
};

inline CurveGeometry curve_geometry(const Tiling& t, const SurfaceGroup& G,
                                    const Word& core) {
  AxisData ad = axis_data(t, G, core);
  auto [root, mult] = root_decompose(G, ad);
  AxisFrame f = make_frame(*t.model, root);
  std::vector<Tile> cover = segment_cover(t, G, f);
  int dir = frame_direction(f);
  return CurveGeometry{ad.conj, std::move(f), std::move(cover),
                       std::move(root), mult, dir};
}

// Tiles covering `periods` consecutive root-periods of the axis, phases
// 0 through periods * root length: forward translates of the single-period
// cover by the root (or its inverse, when the root translates backward).
inline std::vector<Tile> window_tiles(const FuchsianModel& m,
                                      const CurveGeometry& cg, int periods) {
  Word step = cg.dir > 0 ? cg.root : inverse(cg.root);
  Mat2 smat = cg.dir > 0 ? cg.frame.mat : adjugate(cg.frame.mat);
  std::vector<Tile> out;
  out.reserve(cg.cover.size() * static_cast<size_t>(periods));
  Word acc_w;
  Mat2 acc_m = Mat2::identity(m.precision);
  for (int j = 0; j < periods; ++j) {
    for (const Tile& tau : cg.cover)
      out.push_back(
          Tile{free_reduce(concat(acc_w, tau.w)), mul(acc_m, tau.mat)});
    acc_w = free_reduce(concat(acc_w, step));
    acc_m = mul(acc_m, smat);
  }
  return out;
}

// One side of a double-coset enumeration: the window of candidate tiles,
// the word whose powers act on that side of the coset, and the phase shift
// one such power produces.
struct Side {
  const AxisFrame* frame;
  std::vector<Tile> window;
  Word coset_word;
  Mat2 coset_mat;
  Iv shift;
  int dir;
  Word root;
};

inline Side make_side(const FuchsianModel& m, const CurveGeometry& cg,
                      int periods) {
  Mat2 cm = Mat2::identity(m.precision);
  for (int j = 0; j < periods; ++j) cm = mul(cm, cg.frame.mat);
  return Side{&cg.frame,
              window_tiles(m, cg, periods),
              power(cg.root, periods),
              std::move(cm),
              Iv::num(periods, m.precision) * cg.frame.length,
              cg.dir,
              cg.root};
}

struct Crossing {
  Word g;
  Mat2 mat;
  Iv up, vp;
};

inline bool entries_overlap(const Mat2& a, const Mat2& b) {
  return overlaps(a.a, b.a) && overlaps(a.b, b.b) && overlaps(a.c, b.c) &&
         overlaps(a.d, b.d);
}

// Whether two crossings represent the same double coset: c2.g equal to
// u^k * c1.g * v^l for some integers k, l. The phase deltas pin k and l to
// a couple of candidates each; a matrix overlap prefilter culls those before
// the exact word test. Word matrices are path-independent because the
// relator holonomy is certified plus identity, so equal elements must have
// overlapping entry intervals and the prefilter never discards a match. A
// floor_range failure means the phases are too degraded to bound the power
// range, so it escalates rather than risking a split coset.
inline bool same_double_coset(const SurfaceGroup& G, const Side& u,
                              const Side& v, const Crossing& c1,
                              const Crossing& c2) {
  std::pair<long, long> kr = floor_range((c2.up - c1.up) / u.shift);
  std::pair<long, long> lr = floor_range((c1.vp - c2.vp) / v.shift);
  for (long kd = kr.first - 1; kd <= kr.second + 1; ++kd) {
    for (long ld = lr.first - 1; ld <= lr.second + 1; ++ld) {
      long k = u.dir > 0 ? kd : -kd;
      long l = v.dir > 0 ? ld : -ld;
      Mat2 probe = c1.mat;
      for (long i = 0; i < (k > 0 ? k : -k); ++i)
        probe = k > 0 ? mul(u.coset_mat, probe)
                      : mul(adjugate(u.coset_mat), probe);
      for (long i = 0; i < (l > 0 ? l : -l); ++i)
        probe = l > 0 ? mul(probe, v.coset_mat)
                      : mul(probe, adjugate(v.coset_mat));
      if (!entries_overlap(probe, c2.mat)) continue;
      Word test = concat(
          concat(inverse(c2.g), power(u.coset_word, static_cast<int>(k))),
          concat(c1.g, power(v.coset_word, static_cast<int>(l))));
      if (G.is_identity(test)) return true;
    }
  }
  return false;
}

// Enumerates double cosets <u> g <v> whose element carries the v-axis across
// the u-axis, one representative crossing per coset. Candidates come from
// transporting a v-window tile onto a u-window tile; every crossing coset has
// a representative among them. The member filter restricts to a subgroup
// (exact, via monodromy outside); same_axis_hook sees candidates whose two
// axes certifiedly coincide.
inline std::vector<Crossing> crossing_classes(
    const SurfaceGroup& G, const Side& u, const Side& v, bool self_mode,
    const std::function<bool(const Word&)>& member,
    const std::function<void(const Word&)>& same_axis_hook) {
  std::vector<Crossing> reps;
  for (const Tile& tau : u.window) {
    for (const Tile& sig : v.window) {
      Word gw = free_reduce(concat(tau.w, inverse(sig.w)));
      if (self_mode && G.commute(gw, u.root)) continue;
      Mat2 gm = mul(tau.mat, adjugate(sig.mat));
      Quad world = transform(v.frame->axis, gm);
      Iv link = linking(u.frame->axis, world);
      if (maybe_zero(link)) {
        Word conj_root = concat(concat(gw, v.root), inverse(gw));
        if (G.equal(conj_root, u.root) ||
            G.equal(conj_root, inverse(u.root))) {
          if (same_axis_hook) same_axis_hook(gw);
          continue;
        }
        throw Inconclusive{};
      }
      if (certified_sign(link) > 0) continue;
      if (member && !member(gw)) continue;
      Crossing c{std::move(gw), gm, quad_phase(*u.frame, world),
                 quad_phase(*v.frame, transform(u.frame->axis, adjugate(gm)))};
      bool dup = false;
      for (const Crossing& r : reps)
        if (same_double_coset(G, u, v, r, c)) {
          dup = true;
          break;
        }
      if (!dup) reps.push_back(std::move(c));
    }
  }
  return reps;
}

struct CrossCounts {
  int classes;
  int symmetric;
};

inline CrossCounts count_crossings(
    const SurfaceGroup& G, const Side& u, const Side& v, bool self_mode,
    const std::function<bool(const Word&)>& member,
    const std::function<void(const Word&)>& same_axis_hook) {
  std::vector<Crossing> reps =
      crossing_classes(G, u, v, self_mode, member, same_axis_hook);
  int sym = 0;
  if (self_mode) {
    for (const Crossing& r : reps) {
      Crossing inv{free_reduce(inverse(r.g)), adjugate(r.mat), r.vp, r.up};
      if (same_double_coset(G, u, v, r, inv)) ++sym;
    }
  }
  return CrossCounts{static_cast<int>(reps.size()), sym};
}

inline Word connect_fiber(const PermCover& c, int from, int to) {
  if (from == to) return Word{};
  std::vector<Word> path(static_cast<size_t>(c.degree));
  std::vector<bool> seen(static_cast<size_t>(c.degree), false);
  std::vector<int> queue{from};
  seen[static_cast<size_t>(from)] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    for (int k = 1; k <= generator_count(c.genus); ++k) {
      for (Letter l : {static_cast<Letter>(k), static_cast<Letter>(-k)}) {
        int j = act(c, queue[head], Word{l});
        if (seen[static_cast<size_t>(j)]) continue;
        seen[static_cast<size_t>(j)] = true;
        path[static_cast<size_t>(j)] =
            concat(path[static_cast<size_t>(queue[head])], Word{l});
        if (j == to) return path[static_cast<size_t>(j)];
        queue.push_back(j);
      }
    }
  }
  throw CoverError("cover fiber is not connected");
}

inline void check_elevation(const PermCover& c, const Elevation& e) {
  if (e.fiber_cycle.empty()) throw CoverError("elevation has an empty fiber cycle");
  int len = e.degree();
  for (int j = 0; j < len; ++j) {
    int from = e.fiber_cycle[static_cast<size_t>(j)];
    if (from < 0 || from >= c.degree)
      throw CoverError("elevation fiber index out of range");
    int to = e.fiber_cycle[static_cast<size_t>((j + 1) % len)];
    if (act(c, from, e.base_word) != to)
      throw CoverError("elevation cycle does not match the cover monodromy");
  }
}

inline std::vector<int> rotated_to_min(const std::vector<int>& cyc) {
  size_t best = 0;
  for (size_t i = 1; i < cyc.size(); ++i)
    if (cyc[i] < cyc[best]) best = i;
  std::vector<int> out;
  out.reserve(cyc.size());
  for (size_t i = 0; i < cyc.size(); ++i)
    out.push_back(cyc[(best + i) % cyc.size()]);
  return out;
}

}  // namespace detail

// Number of transverse double points of the geodesic representative of w.
// For w = u^k with u primitive this counts k^2 i(u) + (k - 1), the minimal
// count of a transverse perturbation of the k-fold traversal.
inline int self_intersection(const FuchsianModel& m, const Word& w) {
  SurfaceGroup G(m.genus);
  Word core = G.cyclic_dehn_reduce(w);
  if (core.empty()) throw EmptyWordError();
  return with_model_ladder(m, [&](const FuchsianModel& mm) {
    detail::Tiling t = detail::make_tiling(mm);
    detail::CurveGeometry cg = detail::curve_geometry(t, G, core);
    detail::Side su = detail::make_side(mm, cg, 1);
    detail::CrossCounts counts =
        detail::count_crossings(G, su, su, true, {}, {});
    int n = counts.classes + counts.symmetric;
    assert(n % 2 == 0);
    int k = cg.mult;
    return k * k * (n / 2) + (k - 1);
  });
}

inline bool is_simple(const FuchsianModel& m, const Word& w) {
  return self_intersection(m, w) == 0;
}

// Minimal transverse intersection number of two distinct free homotopy
// classes. Classes sharing a primitive root (equal, inverse, or powers of a
// common root) have no transverse minimum in this sense; that is the
// self-intersection regime and is reported as EqualClassesError.
inline int geometric_intersection(const FuchsianModel& m, const Word& w1,
                                  const Word& w2) {
  SurfaceGroup G(m.genus);
  Word c1 = G.cyclic_dehn_reduce(w1);
  Word c2 = G.cyclic_dehn_reduce(w2);
  if (c1.empty() || c2.empty()) throw EmptyWordError();
  return with_model_ladder(m, [&](const FuchsianModel& mm) {
    detail::Tiling t = detail::make_tiling(mm);
    detail::CurveGeometry g1 = detail::curve_geometry(t, G, c1);
    detail::CurveGeometry g2 = detail::curve_geometry(t, G, c2);
    if (G.same_unoriented_class(g1.root, g2.root)) throw EqualClassesError();
    detail::Side su = detail::make_side(mm, g1, 1);
    detail::Side sv = detail::make_side(mm, g2, 1);
    detail::CrossCounts counts =
        detail::count_crossings(G, su, sv, false, {}, {});
    return g1.mult * g2.mult * counts.classes;
  });
}

// Self-intersection of one elevation on the cover surface: the same double
// coset count restricted to the stabilizer subgroup H of the elevation's
// fiber basepoint, with membership decided exactly by monodromy. The H-root
// of the elevation is root^mH for the smallest mH whose monodromy returns
// the basepoint; the elevation is the K-th power of that root in H.
inline int elevation_self_intersection(const FuchsianModel& m,
                                       const PermCover& c,
                                       const Elevation& e) {
  validate(c);
  detail::check_elevation(c, e);
  SurfaceGroup G(m.genus);
  if (free_reduce(e.base_word).empty()) throw EmptyWordError();
  int elen = e.degree();
  int x0 = e.fiber_cycle.front();
  return with_model_ladder(m, [&](const FuchsianModel& mm) {
    detail::Tiling t = detail::make_tiling(mm);
    detail::CurveGeometry cg = detail::curve_geometry(t, G, e.base_word);
    Word root_orig = concat(concat(inverse(cg.conj), cg.root), cg.conj);
    int mh = 1;
    for (int y = act(c, x0, root_orig); y != x0; y = act(c, y, root_orig)) {
      ++mh;
      if (mh > c.degree)
        throw CoverError("monodromy orbit exceeds the cover degree");
    }
    int total = cg.mult * elen;
    assert(total % mh == 0);
    int big_k = total / mh;
    detail::Side su = detail::make_side(mm, cg, mh);
    auto member = [&](const Word& gw) {
      Word back = concat(concat(inverse(cg.conj), gw), cg.conj);
      return act(c, x0, back) == x0;
    };
    detail::CrossCounts counts =
        detail::count_crossings(G, su, su, true, member, {});
    int n = counts.classes + counts.symmetric;
    assert(n % 2 == 0);
    return big_k * big_k * (n / 2) + (big_k - 1);
  });
}

// Geometric intersection number of two distinct elevations on the same
// cover: double cosets restricted to the basepoint stabilizer, the second
// elevation transported to the first's fiber basepoint along a connecting
// word. Equal elevations (including equal classes reached through different
// presentations) are rejected as EqualClassesError.
inline int elevation_intersection(const FuchsianModel& m, const PermCover& c,
                                  const Elevation& e1, const Elevation& e2) {
  validate(c);
  detail::check_elevation(c, e1);
  detail::check_elevation(c, e2);
  SurfaceGroup G(m.genus);
  if (free_reduce(e1.base_word).empty() || free_reduce(e2.base_word).empty())
    throw EmptyWordError();
  if (e1.base_word == e2.base_word &&
      detail::rotated_to_min(e1.fiber_cycle) ==
          detail::rotated_to_min(e2.fiber_cycle))
    throw EqualClassesError();
  int x = e1.fiber_cycle.front();
  int y = e2.fiber_cycle.front();
  Word s = detail::connect_fiber(c, x, y);
  return with_model_ladder(m, [&](const FuchsianModel& mm) {
    detail::Tiling t = detail::make_tiling(mm);
    detail::CurveGeometry g1 = detail::curve_geometry(t, G, e1.base_word);
    detail::CurveGeometry g2 = detail::curve_geometry(t, G, e2.base_word);
    detail::Side su = detail::make_side(mm, g1, g1.mult * e1.degree());
    detail::Side sv = detail::make_side(mm, g2, g2.mult * e2.degree());
    auto back_word = [&](const Word& gw) {
      return concat(concat(inverse(g1.conj), gw), concat(g2.conj, inverse(s)));
    };
    auto member = [&](const Word& gw) { return act(c, x, back_word(gw)) == x; };
    auto hook = [&](const Word& gw) {
      if (act(c, x, back_word(gw)) == x) throw EqualClassesError();
    };
    detail::CrossCounts counts =
        detail::count_crossings(G, su, sv, false, member, hook);
    return counts.classes;
  });
}

}  // namespace surfcover
