#include <catch2/catch_amalgamated.hpp>
#include <numeric>
#include <random>
#include <set>

#include "surfcover/cover.hpp"
#include "surfcover/maungchang.hpp"
#include "test_util.hpp"

using namespace surfcover;
using testutil::random_perm;
using testutil::random_perm_cover;
using testutil::random_word;
using testutil::relabel_cover;

namespace {

PermCover trivial_cover() { return {2, 1, {{0}, {0}, {0}, {0}}, 0}; }

// genus-2 double cover where the named generator swaps the two sheets
PermCover double_cover(int gen) {
  PermCover c{2, 2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}, 0};
  c.monodromy[static_cast<size_t>(gen - 1)] = {1, 0};
  return c;
}

PermCover cyclic_cover(int gen, int d) {
  PermCover c{2, d, {}, 0};
  for (int k = 0; k < 4; ++k) c.monodromy.push_back(identity_perm(d));
  Perm& p = c.monodromy[static_cast<size_t>(gen - 1)];
  for (int i = 0; i < d; ++i) p[static_cast<size_t>(i)] = (i + 1) % d;
  return c;
}

// Independent model of the order-32 fixture: raw (unit, translation) pairs,
// with the cover built by hand from explicit right cosets.
struct UM {
  int u, m;
  bool operator<(const UM& o) const { return u != o.u ? u < o.u : m < o.m; }
  bool operator==(const UM& o) const { return u == o.u && m == o.m; }
};
UM um_mul(UM p, UM q) { return {p.u * q.u % 8, (p.m + p.u * q.m) % 8}; }

PermCover oracle_coset_cover(const std::vector<UM>& sub, const std::vector<UM>& images) {
  std::vector<UM> elems;
  for (int u : {1, 3, 5, 7})
    for (int m = 0; m < 8; ++m) elems.push_back({u, m});
  auto coset = [&](UM g) {
    std::set<UM> s;
    for (UM h : sub) s.insert(um_mul(h, g));
    return std::vector<UM>(s.begin(), s.end());
  };
  std::vector<std::vector<UM>> cosets;
  for (UM g : elems) {
    auto c = coset(g);
    if (std::find(cosets.begin(), cosets.end(), c) == cosets.end()) cosets.push_back(c);
  }
  auto coset_id = [&](UM g) {
    auto c = coset(g);
    return static_cast<int>(std::find(cosets.begin(), cosets.end(), c) - cosets.begin());
  };
  PermCover pc{2, static_cast<int>(cosets.size()), {}, coset_id({1, 0})};
  for (UM x : images) {
    Perm p;
    for (auto& c : cosets) p.push_back(coset_id(um_mul(c.front(), x)));
    pc.monodromy.push_back(std::move(p));
  }
  return pc;
}

const std::vector<UM> kOracleH{{1, 0}, {3, 0}, {5, 0}, {7, 0}};
const std::vector<UM> kOracleK{{1, 0}, {3, 4}, {5, 4}, {7, 0}};
const std::vector<UM> kOracleImages{{3, 0}, {5, 0}, {1, 0}, {1, 1}};

}  // namespace

TEST_CASE("permutation plumbing") {
  Perm p{2, 0, 1};
  CHECK(compose(p, inverse_perm(p)) == identity_perm(3));
  CHECK(cycles_of(p) == std::vector<std::vector<int>>{{0, 2, 1}});
  CHECK(cycles_of(identity_perm(2)) == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(is_permutation(p));
  CHECK_FALSE(is_permutation(Perm{0, 0, 1}));
}

TEST_CASE("cover validation") {
  CHECK(is_valid(trivial_cover()));
  CHECK(is_valid(double_cover(1)));
  PermCover disconnected{2, 2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}, 0};
  std::string why;
  CHECK_FALSE(is_valid(disconnected, &why));
  CHECK(why.find("transitive") != std::string::npos);
  PermCover bad = double_cover(1);
  bad.monodromy[0] = {0, 0};
  CHECK_FALSE(is_valid(bad));
  bad = double_cover(1);
  bad.basepoint = 7;
  CHECK_FALSE(is_valid(bad));
  // a non-commutator relator image
  PermCover nontrivial{2, 3, {}, 0};
  nontrivial.monodromy = {{1, 2, 0}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
  CHECK(is_valid(nontrivial));  // abelian image always kills the relator
}

TEST_CASE("elevations and their degrees") {
  PermCover c3 = cyclic_cover(1, 3);
  auto es = elevations(c3, parse_word("a1", 2));
  REQUIRE(es.size() == 1);
  CHECK(es[0].degree() == 3);
  CHECK(min_elevation_degree(c3, parse_word("a1", 2)) == 3);

  es = elevations(c3, power(parse_word("a1", 2), 3));
  REQUIRE(es.size() == 3);
  for (auto& e : es) CHECK(e.degree() == 1);
  CHECK(min_elevation_degree(c3, power(parse_word("a1", 2), 3)) == 1);

  es = elevations(double_cover(1), parse_word("b1", 2));
  REQUIRE(es.size() == 2);
  for (auto& e : es) CHECK(e.degree() == 1);

  CHECK_THROWS_AS(elevations(c3, parse_word("a1 A1", 2)), EmptyWordError);
  CHECK_THROWS_AS(min_elevation_degree(c3, Word{}), EmptyWordError);

  // conjugation does not change the cycle structure
  Word w = parse_word("B2 a1 b1 b2", 2);
  auto base = elevations(c3, parse_word("a1 b1", 2));
  auto conj = elevations(c3, w);
  REQUIRE(base.size() == conj.size());
  for (size_t i = 0; i < base.size(); ++i) CHECK(base[i].degree() == conj[i].degree());
}

TEST_CASE("elevation cycles follow the monodromy") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    PermCover c = random_perm_cover(rng, 2, 5);
    Word w = free_reduce(random_word(rng, 2, 6));
    if (cyclic_reduce(w).core.empty()) continue;
    int total = 0;
    for (auto& e : elevations(c, w)) {
      total += e.degree();
      for (size_t t = 0; t < e.fiber_cycle.size(); ++t)
        CHECK(act(c, e.fiber_cycle[t], e.base_word) ==
              e.fiber_cycle[(t + 1) % e.fiber_cycle.size()]);
    }
    CHECK(total == c.degree);
  }
}

TEST_CASE("regular covers from homomorphisms") {
  FiniteGroup z2 = cyclic_group(2);
  PermCover c = regular_from_hom(2, z2, {1, 0, 0, 0});
  CHECK(c.degree == 2);
  CHECK(is_regular(c));
  CHECK(covers_equivalent(c, double_cover(1)));

  CHECK_THROWS_AS(regular_from_hom(2, z2, {0, 0, 0, 0}), CoverError);  // not surjective

  FiniteGroup z3 = cyclic_group(3);
  // relator image is automatic in an abelian group, surjectivity is not
  CHECK(regular_from_hom(2, z3, {1, 2, 0, 0}).degree == 3);
}

TEST_CASE("coset covers") {
  MaungchangFixture f = maungchang_fixture();
  std::vector<int> whole(32);
  std::iota(whole.begin(), whole.end(), 0);
  CHECK(coset_cover(2, f.group, f.images, whole).degree == 1);

  PermCover from_trivial = coset_cover(2, f.group, f.images, {f.group.identity()});
  PermCover reg = regular_from_hom(2, f.group, f.images);
  CHECK(from_trivial.degree == 32);
  CHECK(reg.degree == 32);
  CHECK(is_regular(reg));
  CHECK(covers_equivalent(from_trivial, reg));
  CHECK(total_genus(reg) == 33);

  // images[3] has order 8, so pairing it with the identity is not closed
  CHECK_THROWS_AS(coset_cover(2, f.group, f.images, {f.group.identity(), f.images[3]}),
                  GroupError);
}

TEST_CASE("maungchang covers against an independent coset model") {
  auto [sh, sk] = maungchang_covers();
  CHECK(sh.degree == 8);
  CHECK(sk.degree == 8);
  CHECK(total_genus(sh) == 9);
  CHECK(total_genus(sk) == 9);
  CHECK_FALSE(is_regular(sh));

  PermCover oh = oracle_coset_cover(kOracleH, kOracleImages);
  PermCover ok = oracle_coset_cover(kOracleK, kOracleImages);
  REQUIRE(is_valid(oh));
  REQUIRE(is_valid(ok));
  CHECK(covers_equivalent(sh, oh));
  CHECK(covers_equivalent(sk, ok));
  CHECK_FALSE(covers_equivalent(sh, sk));
  CHECK_FALSE(covers_equivalent(oh, ok));

  // the last generator translates by one, a single 8-cycle on either side
  CHECK(min_elevation_degree(sh, parse_word("b2", 2)) == 8);
  CHECK(elevations(sh, parse_word("b2", 2)).size() == 1);
  CHECK(min_elevation_degree(oh, parse_word("b2", 2)) == 8);
  CHECK(min_elevation_degree(sk, parse_word("b2", 2)) == 8);
}

TEST_CASE("common covers") {
  PermCover a = double_cover(1), b = double_cover(2);
  CommonCover w = common_cover(a, b);
  CHECK(w.cover.degree == 4);
  CHECK(is_valid(w.cover));
  for (int s = 0; s < 4; ++s) {
    // projections commute with every generator action
    for (int k = 1; k <= 4; ++k) {
      int t = act(w.cover, s, Word{k});
      CHECK(act(a, w.to_p[static_cast<size_t>(s)], Word{k}) == w.to_p[static_cast<size_t>(t)]);
      CHECK(act(b, w.to_q[static_cast<size_t>(s)], Word{k}) == w.to_q[static_cast<size_t>(t)]);
    }
  }

  CommonCover diag = common_cover(a, a);
  CHECK(diag.cover.degree == 2);
  CHECK(covers_equivalent(diag.cover, a));

  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 8; ++trial) {
    PermCover p = random_perm_cover(rng, 2, 4);
    PermCover q = random_perm_cover(rng, 2, 3);
    CommonCover cc = common_cover(p, q);
    CHECK(cc.cover.degree % 1 == 0);
    CHECK((p.degree * q.degree) % cc.cover.degree == 0);
  }

  PermCover genus3{3, 1, {{0}, {0}, {0}, {0}, {0}, {0}}, 0};
  CHECK_THROWS_AS(common_cover(a, genus3), DifferentBaseError);
}

TEST_CASE("cover equivalence") {
  std::mt19937_64 rng(99);
  std::vector<PermCover> zoo{double_cover(1), double_cover(2), cyclic_cover(1, 3),
                             random_perm_cover(rng, 2, 4), maungchang_covers().first};
  for (const PermCover& c : zoo) {
    CHECK(covers_equivalent(c, c));
    PermCover r = relabel_cover(c, random_perm(rng, c.degree));
    REQUIRE(is_valid(r));
    CHECK(covers_equivalent(c, r));
    CHECK(covers_equivalent(r, c));
    // moving only the basepoint never breaks equivalence
    PermCover moved = c;
    moved.basepoint = (c.basepoint + 1) % c.degree;
    CHECK(covers_equivalent(c, moved));
  }
  CHECK_FALSE(covers_equivalent(double_cover(1), double_cover(2)));
  CHECK_FALSE(covers_equivalent(double_cover(1), cyclic_cover(1, 3)));  // degree mismatch

  // transitivity across two relabelings
  for (const PermCover& c : zoo) {
    PermCover r1 = relabel_cover(c, random_perm(rng, c.degree));
    PermCover r2 = relabel_cover(r1, random_perm(rng, c.degree));
    CHECK(covers_equivalent(c, r2));
  }

  PermCover genus3{3, 1, {{0}, {0}, {0}, {0}, {0}, {0}}, 0};
  CHECK_THROWS_AS(covers_equivalent(double_cover(1), genus3), DifferentBaseError);
}

TEST_CASE("elevation degrees on regular covers") {
  std::mt19937_64 rng(7321);
  MaungchangFixture f = maungchang_fixture();
  std::vector<PermCover> regulars{regular_from_hom(2, cyclic_group(4), {1, 0, 2, 0}),
                                  regular_from_hom(2, f.group, f.images),
                                  cyclic_cover(2, 5)};
  for (const PermCover& c : regulars) {
    REQUIRE(is_regular(c));
    for (int trial = 0; trial < 12; ++trial) {
      Word w = free_reduce(random_word(rng, 2, 5));
      if (cyclic_reduce(w).core.empty()) continue;
      auto es = elevations(c, w);
      int n = es[0].degree();
      for (auto& e : es) CHECK(e.degree() == n);  // uniform on a regular cover
      CHECK(c.degree % n == 0);
      for (int k = 1; k <= 6; ++k) {
        int nk = min_elevation_degree(c, power(cyclic_reduce(w).core, k));
        CHECK(nk == n / std::gcd(k, n));
        CHECK(n % nk == 0);
      }
    }
  }
}

TEST_CASE("curves on covers and the diamond maps") {
  PermCover x = double_cover(1), y = double_cover(2);

  CoverCurve alpha{parse_word("b1", 2), 0};
  CHECK(closes_up(x, alpha));
  CHECK_FALSE(closes_up(x, CoverCurve{parse_word("a1", 2), 0}));

  // conjugated words name the same curve through the moved fiber point
  CoverCurve conj{parse_word("A1 b1 a1", 2), 1};
  CHECK(closes_up(x, conj));
  CHECK(same_curve(x, conj, CoverCurve{parse_word("b1", 2), act(x, 1, parse_word("A1", 2))}));

  // a proper power traverses the same underlying curve
  CHECK(same_curve(x, alpha, CoverCurve{power(parse_word("b1", 2), 2), 0}));

  auto into_self = psi_image(x, x, alpha);
  REQUIRE(into_self.size() == 1);
  CHECK(same_curve(x, into_self[0], alpha));

  auto image = psi_image(x, y, alpha);
  REQUIRE(image.size() == 1);
  CHECK(image[0].word == power(parse_word("b1", 2), 2));
  CHECK(same_curve(y, image[0], CoverCurve{power(parse_word("b1", 2), 2), 0}));

  // round trip contains the original class
  bool found = false;
  for (const CoverCurve& beta : image)
    for (const CoverCurve& back : psi_image(y, x, beta))
      if (same_curve(x, back, alpha)) found = true;
  CHECK(found);
}

TEST_CASE("diamond round trip on random covers") {
  std::mt19937_64 rng(31010);
  for (int trial = 0; trial < 10; ++trial) {
    PermCover p = random_perm_cover(rng, 2, 4);
    PermCover q = random_perm_cover(rng, 2, 3);
    Word w = free_reduce(random_word(rng, 2, 4));
    Word core = cyclic_reduce(w).core;
    if (core.empty()) continue;
    for (const Elevation& e : elevations(p, core)) {
      CoverCurve alpha{power(core, e.degree()), e.fiber_cycle.front()};
      REQUIRE(closes_up(p, alpha));
      bool found = false;
      for (const CoverCurve& beta : psi_image(p, q, alpha))
        for (const CoverCurve& back : psi_image(q, p, beta))
          if (same_curve(p, back, alpha)) found = true;
      CHECK(found);
    }
  }
}
