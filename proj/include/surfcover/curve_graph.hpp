#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfcover/intersect.hpp"

namespace surfcover {
namespace detail {

inline bool certified_less(const Iv& a, const Iv& b) {
  if (surely_less(a, b)) return true;
  if (surely_less(b, a)) return false;
  throw Inconclusive{};
}

// Representative of x modulo len inside [0, len), as a value and the count
// of periods added. The floor may legitimately straddle one integer (a time
// sitting exactly on a period boundary); either branch names a consistent
// representative, so the lower one is taken and the window placement below
// re-certifies the final lift.
inline std::pair<Iv, long> reduce_mod(const Iv& x, const Iv& len) {
  std::pair<long, long> fr = floor_range(x / len);
  if (fr.second - fr.first > 1) throw Inconclusive{};
  long n = -fr.first;
  return {x + Iv::num(n, x.prec()) * len, n};
}

// The unique integer n with start < x + n * len < start + len, certified.
// Strictness is harmless: callers arrange that x never hits the window ends.
inline std::pair<Iv, long> window_lift(const Iv& x, const Iv& len,
                                       const Iv& start) {
  std::pair<long, long> fr = floor_range((start - x) / len);
  for (long n = fr.first; n <= fr.second + 1; ++n) {
    Iv t = x + Iv::num(n, x.prec()) * len;
    if (surely_less(start, t) && surely_less(t, start + len)) return {t, n};
  }
  throw Inconclusive{};
}

// One transverse double point of the primitive geodesic: the crossing class
// representative g (the two strands are the axis and its g-image) and the
// two raw axis times at which the curve passes through the point. Raw means
// not reduced modulo the period, so integer lift counts stay meaningful.
struct DoublePoint {
  Word g;
  Iv time_z;   // time of Z = axis meet g axis
  Iv time_gz;  // time of g^-1 Z, the same surface point on the other strand
};

// Collapses the crossing-class list of a self enumeration to one entry per
// geometric double point: the class of g^-1 names the same point with the
// strands swapped, so non-symmetric classes are matched to their inverse
// partner and counted once. A missing partner means the enumeration window
// lost a class to interval slack, so it escalates.
inline std::vector<DoublePoint> double_points(const SurfaceGroup& G,
                                              const Side& s,
                                              const std::vector<Crossing>& reps,
                                              int dir) {
  Iv sign = Iv::num(dir, s.frame->length.prec());
  std::vector<DoublePoint> pts;
  std::vector<char> used(reps.size(), 0);
  for (size_t i = 0; i < reps.size(); ++i) {
    if (used[i]) continue;
    used[i] = 1;
    Crossing inv{free_reduce(inverse(reps[i].g)), adjugate(reps[i].mat),
                 reps[i].vp, reps[i].up};
    if (!same_double_coset(G, s, s, inv, reps[i])) {
      bool found = false;
      for (size_t j = i + 1; j < reps.size(); ++j) {
        if (used[j]) continue;
        if (same_double_coset(G, s, s, inv, reps[j])) {
          used[j] = 1;
          found = true;
          break;
        }
      }
      if (!found) throw Inconclusive{};
    }
    pts.push_back(
        DoublePoint{reps[i].g, sign * reps[i].up, sign * reps[i].vp});
  }
  return pts;
}

}  // namespace detail

// First simple subloop of the geodesic representative of w: traverse the
// curve forward from a fixed generic starting point until a point repeats;
// the arc between the two visits of that point closes into an embedded
// essential loop, returned as a word. Simple classes come back unchanged,
// and a proper power retracts onto the subloop of its primitive root.
//
// The traversal happens in the time coordinate of the root's axis (phase
// times the translation direction, so the root advances time by one period).
// Each double point is visited at two times per period; the starting point
// is the midpoint of the first gap between the sorted visit times, and the
// winning subloop is the one whose second visit comes earliest. Lifting the
// subloop at times alpha < beta gives the deck element r^b h r^-a carrying
// the alpha lift to the beta lift, where h is g or its inverse according to
// which strand comes first.
inline Word tau(const FuchsianModel& m, const Word& w) {
  SurfaceGroup G(m.genus);
  Word core = G.cyclic_dehn_reduce(w);
  if (core.empty()) throw EmptyWordError();
  return with_model_ladder(m, [&](const FuchsianModel& mm) -> Word {
    detail::Tiling t = detail::make_tiling(mm);
    detail::CurveGeometry cg = detail::curve_geometry(t, G, core);
    detail::Side s = detail::make_side(mm, cg, 1);
    std::vector<detail::Crossing> reps =
        detail::crossing_classes(G, s, s, true, {}, {});
    auto to_original = [&](const Word& word) {
      Word back = concat(concat(inverse(cg.conj), word), cg.conj);
      Word out = G.cyclic_dehn_reduce(back);
      if (out.empty()) throw CoverError("subloop reduced to the identity");
      return out;
    };
    // no double point: the first revisited point is the start itself after
    // one period, so the subloop is the whole primitive curve
    if (reps.empty()) return to_original(cg.root);

    std::vector<detail::DoublePoint> pts =
        detail::double_points(G, s, reps, cg.dir);
    Iv len = cg.frame.length;
    std::vector<Iv> sorted;
    for (const detail::DoublePoint& p : pts) {
      sorted.push_back(detail::reduce_mod(p.time_z, len).first);
      sorted.push_back(detail::reduce_mod(p.time_gz, len).first);
    }
    std::sort(sorted.begin(), sorted.end(), detail::certified_less);
    Iv half = Iv::num(1, mm.precision) / Iv::num(2, mm.precision);
    Iv start = (sorted[0] + sorted[1]) * half;

    std::optional<Iv> best_key;
    Word best;
    for (const detail::DoublePoint& p : pts) {
      auto [tz, a] = detail::window_lift(p.time_z, len, start);
      auto [tg, b] = detail::window_lift(p.time_gz, len, start);
      Iv key(mm.precision);
      Word h;
      if (detail::certified_less(tz, tg)) {
        key = tg;
        h = free_reduce(concat(inverse(p.g),
                               power(cg.root, static_cast<int>(b - a))));
      } else {
        key = tz;
        h = free_reduce(
            concat(p.g, power(cg.root, static_cast<int>(a - b))));
      }
      if (!best_key || detail::certified_less(key, *best_key)) {
        best_key = key;
        best = std::move(h);
      }
    }
    return to_original(best);
  });
}

// Words with cached intersection data, one entry per primitive unoriented
// free homotopy class. The pair matrix is symmetric with self counts on the
// diagonal.
struct CurveInventory {
  int genus = 0;
  std::vector<Word> words;
  std::vector<int> self_counts;
  std::vector<std::vector<int>> pair_counts;
};

// Builds the caches, dropping duplicates: two entries collide when their
// primitive roots agree up to conjugacy and inversion. Word-level roots
// catch literal powers cheaply; any power relation they miss surfaces as an
// equal-classes report from the pairwise computation and drops the later
// entry the same way.
inline CurveInventory make_inventory(const FuchsianModel& m,
                                     const std::vector<Word>& raw) {
  SurfaceGroup G(m.genus);
  CurveInventory inv;
  inv.genus = m.genus;
  std::vector<Word> roots;
  for (const Word& w : raw) {
    Word core = G.cyclic_dehn_reduce(w);
    if (core.empty()) throw EmptyWordError();
    Word root = primitive_root_cyclic(core).root;
    bool dup = false;
    for (const Word& r : roots)
      if (G.same_unoriented_class(root, r)) {
        dup = true;
        break;
      }
    if (dup) continue;
    roots.push_back(root);
    inv.words.push_back(core);
  }
  size_t n = inv.words.size();
  inv.pair_counts.assign(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    inv.self_counts.push_back(self_intersection(m, inv.words[i]));
    inv.pair_counts[i][i] = inv.self_counts[i];
  }
  for (size_t i = 0; i < n;) {
    bool dropped = false;
    for (size_t j = 0; j < i; ++j) {
      try {
        inv.pair_counts[i][j] = inv.pair_counts[j][i] =
            geometric_intersection(m, inv.words[i], inv.words[j]);
      } catch (const EqualClassesError&) {
        // same class after all; drop row i and retry the slot
        for (auto& row : inv.pair_counts) row.erase(row.begin() + static_cast<long>(i));
        inv.pair_counts.erase(inv.pair_counts.begin() + static_cast<long>(i));
        inv.words.erase(inv.words.begin() + static_cast<long>(i));
        inv.self_counts.erase(inv.self_counts.begin() + static_cast<long>(i));
        --n;
        dropped = true;
        break;
      }
    }
    if (!dropped) ++i;
  }
  return inv;
}

// Finite fragment graph: vertices are the inventory entries with self count
// at most k, edges join pairs meeting at most j times. The inventory must
// outlive the graph.
struct GammaGraph {
  const CurveInventory* inventory = nullptr;
  int k = 0;
  int j = 0;
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;  // inventory indices, first < second
};

inline GammaGraph build_gamma(const CurveInventory& inv, int k, int j) {
  size_t n = inv.words.size();
  if (inv.self_counts.size() != n || inv.pair_counts.size() != n)
    throw IncompleteCacheError("inventory caches do not cover every word");
  for (const auto& row : inv.pair_counts)
    if (row.size() != n)
      throw IncompleteCacheError("pair cache row has the wrong length");
  GammaGraph g;
  g.inventory = &inv;
  g.k = k;
  g.j = j;
  std::vector<char> in(n, 0);
  for (size_t i = 0; i < n; ++i)
    if (inv.self_counts[i] <= k) {
      g.vertices.push_back(static_cast<int>(i));
      in[i] = 1;
    }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      if (in[a] && in[b] && inv.pair_counts[a][b] <= j)
        g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return g;
}

// Shortest path length between two vertices (inventory indices), or nullopt
// when they lie in different components. Fragment distances only ever
// over-approximate distances in the ambient graph.
inline std::optional<int> graph_distance(const GammaGraph& g, int u, int v) {
  auto is_vertex = [&](int x) {
    return std::find(g.vertices.begin(), g.vertices.end(), x) !=
           g.vertices.end();
  };
  if (!is_vertex(u)) throw UnknownVertexError(u);
  if (!is_vertex(v)) throw UnknownVertexError(v);
  if (u == v) return 0;
  size_t n = g.inventory->words.size();
  std::vector<std::vector<int>> adj(n);
  for (auto& [a, b] : g.edges) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  std::vector<int> dist(n, -1);
  std::vector<int> queue{u};
  dist[static_cast<size_t>(u)] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int y : adj[static_cast<size_t>(x)]) {
      if (dist[static_cast<size_t>(y)] >= 0) continue;
      dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
      if (y == v) return dist[static_cast<size_t>(y)];
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

// Path-length budget 2 log2(max(j, 1)) + 2, rounded down to the integer a
// path length can actually attain. Exact: floor(2 log2 j) = bit count of
// j^2 minus one.
inline int distance_budget(int j) {
  unsigned long long jj = j < 1 ? 1ull : static_cast<unsigned long long>(j);
  return static_cast<int>(std::bit_width(jj * jj)) - 1 + 2;
}

struct DistanceBoundReport {
  int u = 0;
  int v = 0;
  int bound = 0;
  std::optional<int> distance;
  bool verified = false;
};

// Witness-based check of the distance bound on a simple-curve fragment: a
// found path of length within budget verifies the bound for that pair, while
// absence of one in the fragment is inconclusive, never a counterexample.
inline std::vector<DistanceBoundReport> check_distance_bound(
    const GammaGraph& g, const std::vector<std::pair<int, int>>& pairs) {
  if (g.k != 0)
    throw std::invalid_argument("distance bound checks need the simple-curve graph (k = 0)");
  std::vector<DistanceBoundReport> out;
  for (auto& [u, v] : pairs) {
    if (g.inventory->pair_counts[static_cast<size_t>(u)][static_cast<size_t>(v)] > g.j)
      throw std::invalid_argument("pair meets more than j times; not an instance of the bound");
    DistanceBoundReport r;
    r.u = u;
    r.v = v;
    r.bound = distance_budget(g.j);
    r.distance = graph_distance(g, u, v);
    r.verified = r.distance.has_value() && *r.distance <= r.bound;
    out.push_back(r);
  }
  return out;
}

// Edge threshold sufficient for the fragment parameters: r times the product
// of the two cover degrees, monotone in each.
inline long long recommend_j(long long r, const PermCover& x,
                             const PermCover& y) {
  if (r < 1) throw std::invalid_argument("the multiplier r must be positive");
  return r * x.degree * y.degree;
}

// Plain-text edge list, one "u v" line per edge, for external graph tools.
inline std::string edge_list(const GammaGraph& g) {
  std::string out;
  for (auto& [a, b] : g.edges)
    out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

}  // namespace surfcover
