#pragma once

#include <string>
#include <vector>

#include "surfcover/cover.hpp"
#include "surfcover/finite_group.hpp"
#include "surfcover/gassmann.hpp"

namespace surfcover {

// Built-in example of an almost conjugate, nonconjugate pair of subgroups,
// together with a surjection from the genus-2 surface group, giving two
// equal-degree covers that the stronger invariants must tell apart.
//
// The group is the semidirect product of the units mod 8 acting on Z/8:
// pairs (u, m) with u in {1,3,5,7}, m in Z/8, and
// (u, m) * (v, n) = (u*v, m + u*n). Order 32.
struct MaungchangFixture {
  FiniteGroup group;
  std::vector<int> h;       // {(1,0),(3,0),(5,0),(7,0)}
  std::vector<int> k;       // {(1,0),(3,4),(5,4),(7,0)}
  std::vector<int> images;  // a1,b1,a2,b2 -> (3,0),(5,0),(1,0),(1,1)
};

namespace detail {
inline int maungchang_index(int u, int m) {
  // units 1,3,5,7 in slots 0..3
  return ((u - 1) / 2) * 8 + ((m % 8) + 8) % 8;
}
}  // namespace detail

inline MaungchangFixture maungchang_fixture() {
  MaungchangFixture f;
  const int units[4] = {1, 3, 5, 7};
  f.group.table.assign(32, std::vector<int>(32, 0));
  f.group.labels.resize(32);
  for (int ui = 0; ui < 4; ++ui)
    for (int m = 0; m < 8; ++m) {
      int i = ui * 8 + m;
      f.group.labels[static_cast<size_t>(i)] =
          "(" + std::to_string(units[ui]) + "," + std::to_string(m) + ")";
      for (int vi = 0; vi < 4; ++vi)
        for (int n = 0; n < 8; ++n) {
          int j = vi * 8 + n;
          f.group.table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              detail::maungchang_index((units[ui] * units[vi]) % 8, m + units[ui] * n);
        }
    }
  using detail::maungchang_index;
  f.h = {maungchang_index(1, 0), maungchang_index(3, 0), maungchang_index(5, 0),
         maungchang_index(7, 0)};
  f.k = {maungchang_index(1, 0), maungchang_index(3, 4), maungchang_index(5, 4),
         maungchang_index(7, 0)};
  f.images = {maungchang_index(3, 0), maungchang_index(5, 0), maungchang_index(1, 0),
              maungchang_index(1, 1)};
  return f;
}

inline GassmannDatum maungchang_datum() {
  MaungchangFixture f = maungchang_fixture();
  return {f.group, f.h, f.k};
}

// The two degree-8 covers of the genus-2 surface attached to the fixture.
inline std::pair<PermCover, PermCover> maungchang_covers() {
  MaungchangFixture f = maungchang_fixture();
  return {coset_cover(2, f.group, f.images, f.h), coset_cover(2, f.group, f.images, f.k)};
}

}  // namespace surfcover
