#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "surfcover/cover.hpp"
#include "surfcover/errors.hpp"
#include "surfcover/lattice.hpp"
#include "surfcover/schreier.hpp"
#include "surfcover/word.hpp"

namespace surfcover {

struct HomologyClass {
  std::vector<lin::i64> v;
  bool primitive = false;
};

inline HomologyClass make_homology_class(std::vector<lin::i64> v) {
  lin::i64 g = 0;
  for (lin::i64 x : v) g = std::gcd(g, x < 0 ? -x : x);
  return {std::move(v), g == 1};
}

// A finite abelian cover presented as an epimorphism from base homology onto
// the deck group: matrix rows map Z^{2g} onto Z/d_1 + ... + Z/d_m with
// d_1 | d_2 | ... The kernel lattice in Hermite normal form is cached and is
// a complete equivalence invariant.
struct AbelianCover {
  int genus = 2;
  std::vector<lin::i64> invariant_factors;
  lin::Mat matrix;  // m rows of length 2g, row i reduced mod d_i
  lin::Mat kernel;  // 2g x 2g lower-triangular column basis
};

inline lin::i64 deck_order(const AbelianCover& c) {
  lin::i64 n = 1;
  for (lin::i64 d : c.invariant_factors) n = lin::mul(n, d);
  return n;
}

inline lin::Mat kernel_hnf(int genus, const std::vector<lin::i64>& factors, const lin::Mat& m) {
  size_t rows = factors.size();
  size_t cols = static_cast<size_t>(2 * genus);
  if (m.size() != rows) throw CoverError("matrix needs one row per invariant factor");
  for (const auto& row : m)
    if (row.size() != cols) throw CoverError("matrix row length must be 2*genus");
  // h is in the kernel iff M h = D y for some integer y, so project the
  // integer kernel of the block [M | -D] to its first 2g coordinates
  lin::Mat block = lin::zeros(rows, cols + rows);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) block[i][j] = m[i][j];
    block[i][cols + i] = -factors[i];
  }
  lin::Mat full = rows == 0 ? lin::identity(cols) : lin::integer_kernel(block);
  lin::Mat proj = lin::zeros(cols, lin::col_count(full));
  for (size_t i = 0; i < cols; ++i)
    for (size_t j = 0; j < lin::col_count(full); ++j) proj[i][j] = full[i][j];
  lin::Hnf h = lin::hnf(proj);
  if (!lin::full_rank_square(h)) throw CoverError("kernel lattice is not full rank");
  return h.basis;
}

inline void validate(const AbelianCover& c) {
  if (c.genus < 2) throw CoverError("base genus must be at least 2");
  size_t m = c.invariant_factors.size();
  size_t cols = static_cast<size_t>(2 * c.genus);
  if (c.matrix.size() != m) throw CoverError("matrix needs one row per invariant factor");
  for (size_t i = 0; i < m; ++i) {
    lin::i64 d = c.invariant_factors[i];
    if (d < 1) throw CoverError("invariant factors must be positive");
    if (i + 1 < m && c.invariant_factors[i + 1] % d != 0)
      throw CoverError("invariant factors must form a divisibility chain");
    if (c.matrix[i].size() != cols) throw CoverError("matrix row length must be 2*genus");
    for (lin::i64 x : c.matrix[i])
      if (x < 0 || x >= d) throw CoverError("matrix entries must be reduced mod their factor");
  }
  // surjectivity: [M | D] must have trivial cokernel
  if (m > 0) {
    lin::Mat block = lin::zeros(m, cols + m);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < cols; ++j) block[i][j] = c.matrix[i][j];
      block[i][cols + i] = c.invariant_factors[i];
    }
    for (lin::i64 f : lin::invariant_factors(lin::snf(block)))
      if (f != 1) throw CoverError("matrix does not map onto the deck group");
  }
  lin::Hnf k{c.kernel, {}};
  for (size_t i = 0; i < lin::col_count(c.kernel); ++i) k.pivot_rows.push_back(i);
  if (c.kernel != kernel_hnf(c.genus, c.invariant_factors, c.matrix))
    throw CoverError("cached kernel basis is stale");
  if (lin::lattice_index(k) != deck_order(c))
    throw CoverError("kernel index does not match the deck order");
}

inline AbelianCover make_abelian_cover(int genus, std::vector<lin::i64> factors, lin::Mat matrix) {
  AbelianCover c;
  c.genus = genus;
  c.invariant_factors = std::move(factors);
  c.matrix = std::move(matrix);
  for (size_t i = 0; i < c.invariant_factors.size(); ++i) {
    lin::i64 d = c.invariant_factors[i];
    if (d < 1) throw CoverError("invariant factors must be positive");
    if (i < c.matrix.size())
      for (lin::i64& x : c.matrix[i]) x = ((x % d) + d) % d;
  }
  c.kernel = kernel_hnf(genus, c.invariant_factors, c.matrix);
  validate(c);
  return c;
}

// Image of a homology class in the deck group, one residue per factor.
inline std::vector<lin::i64> deck_image(const AbelianCover& c, const std::vector<lin::i64>& h) {
  if (h.size() != static_cast<size_t>(2 * c.genus)) throw CoverError("class length must be 2*genus");
  std::vector<lin::i64> img(c.invariant_factors.size(), 0);
  for (size_t i = 0; i < img.size(); ++i) {
    lin::i64 acc = 0;
    for (size_t j = 0; j < h.size(); ++j) acc = lin::add(acc, lin::mul(c.matrix[i][j], h[j]));
    lin::i64 d = c.invariant_factors[i];
    img[i] = ((acc % d) + d) % d;
  }
  return img;
}

// Order of the image of h in the deck group: the least n with gamma^n
// lifting to a loop, hence the common degree of all elevations of gamma.
inline lin::i64 n_value(const AbelianCover& c, const HomologyClass& h) {
  std::vector<lin::i64> img = deck_image(c, h.v);
  lin::i64 n = 1;
  for (size_t i = 0; i < img.size(); ++i) {
    lin::i64 ord = c.invariant_factors[i] / std::gcd(c.invariant_factors[i], img[i]);
    n = n / std::gcd(n, ord) * ord;
  }
  return n;
}

inline bool equivalent(const AbelianCover& a, const AbelianCover& b) {
  if (a.genus != b.genus) throw DifferentBaseError("abelian covers of different base genus");
  return a.kernel == b.kernel;
}

// First primitive vector in the box [-B, B]^{2g} whose n-values differ, or
// none when the covers are equivalent. Candidates are scanned smallest
// first: increasing L1 norm, early coordinates carrying the weight,
// positive entries before negative ones, so plain basis vectors win ties.
inline std::optional<HomologyClass> distinguishing_simple_class(const AbelianCover& a,
                                                                const AbelianCover& b,
                                                                lin::i64 bound) {
  if (a.genus != b.genus) throw DifferentBaseError("abelian covers of different base genus");
  if (equivalent(a, b)) return std::nullopt;
  size_t n = static_cast<size_t>(2 * a.genus);
  std::vector<lin::i64> v(n, 0);
  std::optional<HomologyClass> hit;
  std::function<bool(size_t, lin::i64)> fill = [&](size_t pos, lin::i64 left) {
    if (pos == n) {
      if (left != 0) return false;
      lin::i64 g = 0;
      for (lin::i64 x : v) g = std::gcd(g, x < 0 ? -x : x);
      if (g != 1) return false;
      HomologyClass h{v, true};
      if (n_value(a, h) == n_value(b, h)) return false;
      hit = h;
      return true;
    }
    lin::i64 top = std::min(bound, left);
    for (lin::i64 x = top; x >= -top; --x) {
      v[pos] = x;
      if (fill(pos + 1, left - (x < 0 ? -x : x))) return true;
    }
    v[pos] = 0;
    return false;
  };
  for (lin::i64 l1 = 1; l1 <= bound * static_cast<lin::i64>(n); ++l1)
    if (fill(0, l1)) return hit;
  return std::nullopt;
}

// The regular cover realizing the deck action: fiber points are deck
// elements in mixed-radix encoding, each generator translates by its column
// of the matrix.
inline PermCover to_perm_cover(const AbelianCover& c) {
  lin::i64 order = deck_order(c);
  if (order > 1 << 20) throw CoverError("deck group too large to expand");
  int d = static_cast<int>(order);
  size_t m = c.invariant_factors.size();
  std::vector<lin::i64> stride(m, 1);
  for (size_t i = 1; i < m; ++i) stride[i] = stride[i - 1] * c.invariant_factors[i - 1];
  auto encode = [&](const std::vector<lin::i64>& t) {
    lin::i64 idx = 0;
    for (size_t i = 0; i < m; ++i) idx += t[i] * stride[i];
    return static_cast<int>(idx);
  };
  PermCover p;
  p.genus = c.genus;
  p.degree = d;
  p.basepoint = 0;
  for (int k = 1; k <= generator_count(c.genus); ++k) {
    std::vector<lin::i64> e(static_cast<size_t>(2 * c.genus), 0);
    e[static_cast<size_t>(k - 1)] = 1;
    std::vector<lin::i64> shift = deck_image(c, e);
    Perm perm(static_cast<size_t>(d));
    for (int idx = 0; idx < d; ++idx) {
      std::vector<lin::i64> t(m);
      lin::i64 rest = idx;
      for (size_t i = 0; i < m; ++i) {
        t[i] = (rest % c.invariant_factors[i] + shift[i]) % c.invariant_factors[i];
        rest /= c.invariant_factors[i];
      }
      perm[static_cast<size_t>(idx)] = encode(t);
    }
    p.monodromy.push_back(std::move(perm));
  }
  validate(p);
  return p;
}

using SimplicityCertifier = std::function<bool(const Word&)>;

inline void certify_words(const std::vector<Word>& words, const SimplicityCertifier& certify) {
  if (!certify) return;
  for (const Word& w : words)
    if (!certify(w)) throw NotSimpleWordError(format_word(w));
}

// Lattice generated by the classes of all lifting powers of the given
// simple curves; it equals the kernel lattice once the word list realizes
// enough primitive classes.
inline lin::Hnf pushforward_generators(const AbelianCover& c, const std::vector<Word>& words,
                                       const SimplicityCertifier& certify = {}) {
  certify_words(words, certify);
  if (words.empty()) throw CoverError("need at least one word");
  lin::Mat gens;
  for (const Word& w : words) {
    std::vector<lin::i64> h = abelianize(w, c.genus);
    lin::i64 n = n_value(c, make_homology_class(h));
    std::vector<lin::i64> scaled;
    for (lin::i64 x : h) scaled.push_back(lin::mul(n, x));
    gens.push_back(std::move(scaled));
  }
  return lin::hnf(lin::transpose(gens));
}

// Index in the cover's homology of the lattice spanned by the classes of
// all elevations of all powers of the given simple curves; 1 means the
// elevations generate everything, 0 means they do not even span a finite
// index sublattice.
inline lin::i64 looijenga_index(const AbelianCover& c, const std::vector<Word>& words,
                                const SimplicityCertifier& certify = {}) {
  certify_words(words, certify);
  if (words.empty()) throw CoverError("need at least one word");
  PermCover p = to_perm_cover(c);
  CoverHomology hom(p);
  lin::Mat rows;
  for (const Word& w : words) {
    Word core = cyclic_reduce(w).core;
    if (core.empty()) throw EmptyWordError();
    for (int k = 1; k <= p.degree; ++k) {
      Word power = surfcover::power(core, k);
      for (const Elevation& e : elevations(p, power)) {
        int i = e.fiber_cycle.front();
        Word loop = concat(hom.transversal(i), surfcover::power(power, e.degree()));
        loop = concat(loop, inverse(hom.transversal(i)));
        rows.push_back(hom.homology_class(loop));
      }
    }
  }
  return lin::lattice_index(lin::hnf(lin::transpose(rows)));
}

}  // namespace surfcover
