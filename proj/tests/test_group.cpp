#include <catch2/catch_amalgamated.hpp>
#include <algorithm>
#include <set>

#include "surfcover/finite_group.hpp"
#include "surfcover/gassmann.hpp"
#include "surfcover/maungchang.hpp"

using namespace surfcover;

namespace {

FiniteGroup symmetric3() { return group_from_permutations({{1, 0, 2}, {0, 2, 1}}); }

FiniteGroup dihedral4() { return group_from_permutations({{1, 2, 3, 0}, {0, 3, 2, 1}}); }

// quaternion group built from signed basis elements 1, i, j, k
FiniteGroup quaternion8() {
  // element 2b + s encodes (-1)^s * basis[b] with basis order 1, i, j, k
  auto mul_basis = [](int a, int b, int& sign) {
    static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{+1, +1, +1, +1},
                                  {+1, -1, +1, -1},
                                  {+1, -1, -1, +1},
                                  {+1, +1, -1, -1}};
    sign = sgn[a][b];
    return prod[a][b];
  };
  FiniteGroup g;
  g.table.assign(8, std::vector<int>(8, 0));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int sign;
      int basis = mul_basis(x / 2, y / 2, sign);
      int s = (x % 2) ^ (y % 2) ^ (sign < 0 ? 1 : 0);
      g.table[static_cast<size_t>(x)][static_cast<size_t>(y)] = 2 * basis + s;
    }
  g.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return g;
}

}  // namespace

TEST_CASE("group table validation") {
  FiniteGroup s3 = symmetric3();
  CHECK_NOTHROW(validate(s3));
  CHECK(s3.order() == 6);
  CHECK(s3.mul(s3.identity(), 3) == 3);
  for (int g = 0; g < 6; ++g) CHECK(s3.mul(g, s3.inv(g)) == s3.identity());

  FiniteGroup broken = s3;
  broken.table[2][3] = broken.table[2][4];  // row no longer a permutation
  CHECK_THROWS_AS(validate(broken), GroupError);

  broken = s3;
  broken.table[5][5] = 99;
  CHECK_THROWS_AS(validate(broken), GroupError);

  CHECK_NOTHROW(validate(quaternion8()));
  CHECK_NOTHROW(validate(dihedral4()));
  CHECK_NOTHROW(validate(maungchang_fixture().group));
}

TEST_CASE("element orders and conjugacy classes") {
  FiniteGroup z8 = cyclic_group(8);
  auto classes = conjugacy_classes(z8);
  CHECK(classes.size() == 8);
  for (auto& c : classes) CHECK(c.size() == 1);

  FiniteGroup s3 = symmetric3();
  classes = conjugacy_classes(s3);
  REQUIRE(classes.size() == 3);
  std::multiset<size_t> sizes;
  for (auto& c : classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<size_t>{1, 2, 3});
  CHECK(classes[0] == std::vector<int>{s3.identity()});

  FiniteGroup q8 = quaternion8();
  CHECK(q8.element_order(1) == 2);   // -1
  CHECK(q8.element_order(2) == 4);   // i
  CHECK(conjugacy_classes(q8).size() == 5);

  // class sizes always divide the group order
  for (const FiniteGroup& g : {s3, q8, dihedral4(), maungchang_fixture().group})
    for (auto& c : conjugacy_classes(g)) CHECK(g.order() % c.size() == 0);
}

TEST_CASE("maungchang conjugacy classes match a raw recomputation") {
  FiniteGroup G = maungchang_fixture().group;
  // independent orbit computation straight from the (u, m) arithmetic
  auto mul = [](std::pair<int, int> p, std::pair<int, int> q) {
    return std::pair<int, int>{p.first * q.first % 8, (p.second + p.first * q.second) % 8};
  };
  std::vector<std::pair<int, int>> elems;
  for (int u : {1, 3, 5, 7})
    for (int m = 0; m < 8; ++m) elems.push_back({u, m});
  auto inv = [&](std::pair<int, int> p) {
    for (auto e : elems)
      if (mul(p, e) == std::pair<int, int>{1, 0}) return e;
    return std::pair<int, int>{0, 0};
  };
  std::set<std::set<std::pair<int, int>>> raw_classes;
  for (auto x : elems) {
    std::set<std::pair<int, int>> orbit;
    for (auto g : elems) orbit.insert(mul(mul(g, x), inv(g)));
    raw_classes.insert(orbit);
  }
  auto classes = conjugacy_classes(G);
  CHECK(classes.size() == raw_classes.size());
  std::set<std::set<std::string>> got, want;
  for (auto& c : classes) {
    std::set<std::string> labels;
    for (int e : c) labels.insert(G.labels[static_cast<size_t>(e)]);
    got.insert(labels);
  }
  for (auto& c : raw_classes) {
    std::set<std::string> labels;
    for (auto [u, m] : c)
      labels.insert("(" + std::to_string(u) + "," + std::to_string(m) + ")");
    want.insert(labels);
  }
  CHECK(got == want);
}

TEST_CASE("subgroup machinery") {
  FiniteGroup s3 = symmetric3();
  auto subs = all_subgroups(s3);
  CHECK(subs.size() == 6);  // 1, three reflections, one rotation subgroup, S3
  for (auto& s : subs) CHECK(is_subgroup(s3, s));
  // identity plus two distinct transpositions is never closed
  CHECK_FALSE(is_subgroup(s3, {s3.identity(), 1, 2}));

  FiniteGroup q8 = quaternion8();
  CHECK(all_subgroups(q8).size() == 6);  // 1, <-1>, <i>, <j>, <k>, Q8

  CHECK(subgroup_closure(s3, {1}).size() % 2 == 0);
}

TEST_CASE("gassmann checks") {
  FiniteGroup s3 = symmetric3();
  // two distinct reflection subgroups are conjugate, hence almost conjugate
  std::vector<std::vector<int>> reflections;
  for (auto& s : all_subgroups(s3))
    if (s.size() == 2) reflections.push_back(s);
  REQUIRE(reflections.size() == 3);
  GassmannReport rep = gassmann_check({s3, reflections[0], reflections[1]});
  CHECK(rep.almost_conjugate);
  CHECK(rep.conjugate);

  rep = gassmann_check({s3, reflections[0], reflections[0]});
  CHECK(rep.almost_conjugate);
  CHECK(rep.conjugate);

  MaungchangFixture f = maungchang_fixture();
  GassmannReport fixture = gassmann_check({f.group, f.h, f.k});
  CHECK(fixture.almost_conjugate);
  CHECK_FALSE(fixture.conjugate);
  int h_total = 0, k_total = 0;
  for (auto [ch, ck] : fixture.class_counts) {
    CHECK(ch == ck);
    h_total += ch;
    k_total += ck;
  }
  CHECK(h_total == 4);
  CHECK(k_total == 4);

  // independent brute check of the classwise counts
  FiniteGroup G = f.group;
  std::vector<int> class_of(32, -1);
  auto classes = conjugacy_classes(G);
  for (size_t ci = 0; ci < classes.size(); ++ci)
    for (int e : classes[ci]) class_of[static_cast<size_t>(e)] = static_cast<int>(ci);
  for (size_t ci = 0; ci < classes.size(); ++ci) {
    int ch = 0, ck = 0;
    for (int e : f.h)
      if (class_of[static_cast<size_t>(e)] == static_cast<int>(ci)) ++ch;
    for (int e : f.k)
      if (class_of[static_cast<size_t>(e)] == static_cast<int>(ci)) ++ck;
    CHECK(ch == ck);
  }

  // identity plus a single 3-cycle is not closed, so not a valid datum
  CHECK_THROWS_AS(gassmann_check({s3, {0, 3}, {0}}), GroupError);
}

TEST_CASE("gassmann search over small groups comes up empty") {
  std::vector<FiniteGroup> small{cyclic_group(1),
                                 cyclic_group(2),
                                 cyclic_group(3),
                                 cyclic_group(4),
                                 direct_product(cyclic_group(2), cyclic_group(2)),
                                 cyclic_group(5),
                                 cyclic_group(6),
                                 symmetric3(),
                                 cyclic_group(7),
                                 cyclic_group(8),
                                 direct_product(cyclic_group(2), cyclic_group(4)),
                                 direct_product(cyclic_group(2),
                                                direct_product(cyclic_group(2), cyclic_group(2))),
                                 dihedral4(),
                                 quaternion8()};
  CHECK(search_gassmann(small, 8).empty());
}

TEST_CASE("gassmann search finds the fixture pair") {
  MaungchangFixture f = maungchang_fixture();
  auto data = search_gassmann({f.group}, 8);
  REQUIRE_FALSE(data.empty());
  for (const GassmannDatum& d : data) {
    CHECK(d.h.size() == d.k.size());
    CHECK(almost_conjugate(d.group, d.h, d.k));
    CHECK_FALSE(subgroups_conjugate(d.group, d.h, d.k));
    // normal subgroups cannot appear: almost conjugate to normal means equal
    for (auto s : {d.h, d.k}) {
      bool normal = true;
      for (int g = 0; g < d.group.order() && normal; ++g)
        for (int x : s)
          if (!std::binary_search(s.begin(), s.end(), d.group.conj(g, x))) {
            normal = false;
            break;
          }
      CHECK_FALSE(normal);
    }
  }
  // the fixture pair shows up, up to simultaneous conjugacy
  std::vector<int> h = f.h, k = f.k;
  std::sort(h.begin(), h.end());
  std::sort(k.begin(), k.end());
  bool fixture_found = false;
  for (const GassmannDatum& d : data)
    for (int g = 0; g < f.group.order(); ++g) {
      std::vector<int> hh, kk;
      for (int x : d.h) hh.push_back(f.group.conj(g, x));
      for (int x : d.k) kk.push_back(f.group.conj(g, x));
      std::sort(hh.begin(), hh.end());
      std::sort(kk.begin(), kk.end());
      if ((hh == h && kk == k) || (hh == k && kk == h)) fixture_found = true;
    }
  CHECK(fixture_found);
}

TEST_CASE("fixture homomorphism data") {
  MaungchangFixture f = maungchang_fixture();
  CHECK(f.group.order() == 32);
  CHECK(f.h.size() == 4);
  CHECK(f.k.size() == 4);
  CHECK(is_subgroup(f.group, f.h));
  CHECK(is_subgroup(f.group, f.k));
  // images generate and the relator dies; regular_from_hom would throw otherwise
  CHECK(subgroup_closure(f.group, f.images).size() == 32);
  SurfaceGroup G(2);
  int r = f.group.identity();
  for (Letter x : G.relator()) {
    int img = f.images[static_cast<size_t>((x > 0 ? x : -x) - 1)];
    r = f.group.mul(r, x > 0 ? img : f.group.inv(img));
  }
  CHECK(r == f.group.identity());
}
