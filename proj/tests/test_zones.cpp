#include "doctest.h"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "tercyc/zones.hpp"

using namespace tercyc;

namespace {

Octuple norm(Octuple o) {
  int lo = o[0];
  for (int v : o) lo = std::min(lo, v);
  for (int& v : o) v -= lo;
  return o;
}

}  // namespace

TEST_CASE("zone profile of (3,5,7)") {
  const Triple t = validate_triple(3, 5, 7, true);
  const ZoneProfile zp = zone_profile(t);
  CHECK(zp.axis[0].alpha == 1);
  CHECK(zp.axis[1].alpha == 2);
  CHECK(zp.axis[2].alpha == 2);
  CHECK(zp.axis[0].beta == 2);
  CHECK(zp.axis[1].beta == 3);
  CHECK(zp.axis[2].beta == 4);
  CHECK(zp.axis[0].size == std::array<std::int64_t, 5>{0, 1, 1, 1, 0});
  CHECK(zp.axis[1].size == std::array<std::int64_t, 5>{0, 2, 1, 2, 0});
  CHECK(zp.axis[2].size == std::array<std::int64_t, 5>{1, 2, 2, 2, 0});
  // delta[x][y] = 1 iff x^{-1}(z) < y^{-1}(z)
  CHECK(zp.delta[2][1] == 1);
  CHECK(zp.delta[0][2] == 1);
  CHECK(zp.delta[1][0] == 1);
  CHECK(zp.delta[1][2] == 0);
  CHECK(zp.delta[2][0] == 0);
  CHECK(zp.delta[0][1] == 0);
  CHECK(zp.delta_agg == std::array<int, 3>{0, 0, 0});
}

TEST_CASE("zone profile of (3,11,23)") {
  const Triple t = validate_triple(3, 11, 23, true);
  const ZoneProfile zp = zone_profile(t);
  CHECK(zp.axis[0].alpha == 1);
  CHECK(zp.axis[1].alpha == 1);
  CHECK(zp.axis[2].alpha == 2);
  CHECK(zp.axis[0].beta == 1);
  CHECK(zp.axis[1].beta == 4);
  CHECK(zp.axis[2].beta == 15);
  CHECK(zp.axis[0].size[4] == 0);
  CHECK(zp.axis[1].size[0] == 0);
  CHECK(zp.axis[2].size[4] == 0);
  CHECK(zp.delta[2][0] == 1);
  CHECK(zp.delta[0][1] == 1);
}

TEST_CASE("partition and cardinality identities over many triples") {
  for (auto [p, q, r] : {std::array<std::int64_t, 3>{3, 5, 7}, {3, 5, 13}, {5, 7, 11},
                         {7, 11, 13}, {5, 9, 13}, {4, 23, 47}, {11, 29, 31}}) {
    const Triple t = validate_triple(p, q, r, false);
    const ZoneProfile zp = zone_profile(t);  // internal checks throw on failure
    for (int x = 0; x < 3; ++x) {
      const ZoneAxis& ax = zp.axis[x];
      std::int64_t total = 0;
      for (std::int64_t s : ax.size) total += s;
      CHECK(total == ax.modulus);
      CHECK(ax.size[1] == ax.alpha);
      CHECK(ax.size[3] == ax.alpha);
      CHECK(ax.size[2] == ax.beta - ax.alpha);
      CHECK(ax.size[0] + ax.size[4] == ax.modulus - ax.alpha - ax.beta);
      CHECK((ax.size[0] == 0 || ax.size[4] == 0));
      // zone_of agrees with the interval boundaries
      for (std::int64_t v = 0; v < ax.modulus; ++v) {
        const int z = zp.zone_of(x, v);
        CHECK(v >= ax.cut[static_cast<std::size_t>(z)]);
        CHECK(v < ax.cut[static_cast<std::size_t>(z) + 1]);
      }
    }
    // delta antisymmetry
    for (int x = 0; x < 3; ++x)
      for (int y = x + 1; y < 3; ++y) {
        const int z = 3 - x - y;
        if (zp.inverse_of_mod(x, z) == zp.inverse_of_mod(y, z)) {
          CHECK(zp.delta[x][y] == 0);
          CHECK(zp.delta[y][x] == 0);
        } else {
          CHECK(zp.delta[x][y] + zp.delta[y][x] == 1);
        }
      }
  }
}

TEST_CASE("classify examples for (3,5,7)") {
  const Triple t = validate_triple(3, 5, 7, true);
  const ZoneProfile zp = zone_profile(t);

  JumpClass c0 = classify(zp, decompose(t, 0));
  CHECK(c0.cell == std::array<int, 3>{1, 1, 0});
  CHECK(c0.row == "011");

  JumpClass c7 = classify(zp, decompose(t, 7));
  CHECK(c7.cell == std::array<int, 3>{3, 2, 0});
  CHECK(c7.row == "023");
  CHECK(table_V(zp, c7) == -1);

  JumpClass c8 = classify(zp, decompose(t, 8));
  CHECK(c8.cell == std::array<int, 3>{2, 3, 1});
  CHECK(c8.row == "123");
  CHECK(table_V(zp, c8) == 1);
}

TEST_CASE("table V and octuple fixed rows") {
  const Triple t = validate_triple(3, 5, 7, true);
  const ZoneProfile zp = zone_profile(t);
  const Perm id{0, 1, 2};
  CHECK(table_V(zp, "001", id) == 1);
  CHECK(table_V(zp, "003", id) == -1);
  CHECK(table_V(zp, "333", id) == 0);
  CHECK(table_octuple(zp, "044", id) == Octuple{1, 0, 1, 1, 1, 0, 0, 0});
  CHECK(norm(table_octuple(zp, "003", id)) == Octuple{0, 0, 0, 1, 1, 1, 1, 2});
}

TEST_CASE("tie invariance: every sorting permutation gives the same prediction") {
  for (auto [p, q, r] : {std::array<std::int64_t, 3>{3, 5, 7}, {5, 7, 11}, {3, 11, 23}}) {
    const Triple t = validate_triple(p, q, r, true);
    const ZoneProfile zp = zone_profile(t);
    for (std::int64_t k = 0; k < t.n; ++k) {
      const JumpClass cls = classify(zp, decompose(t, k));
      const std::vector<Perm> perms = sorting_perms(cls.cell);
      CHECK(!perms.empty());
      CHECK(perms.front() == cls.perm);
      for (const Perm& perm : perms) {
        CHECK(table_V(zp, cls.row, perm) == table_V(zp, cls.row, cls.perm));
        CHECK(shift_equivalent(table_octuple(zp, cls.row, perm),
                               table_octuple(zp, cls.row, cls.perm)));
      }
    }
  }
}

TEST_CASE("helper shift lemma: neighbor cells differ at two fixed positions") {
  int pairs_34 = 0, pairs_01 = 0;
  for (auto [p, q, r] : {std::array<std::int64_t, 3>{5, 7, 11}, {3, 11, 23}, {7, 11, 13}}) {
    const Triple t = validate_triple(p, q, r, true);
    const ZoneProfile zp = zone_profile(t);
    std::map<std::array<int, 3>, std::int64_t> first_k;
    for (std::int64_t k = 0; k < t.n; ++k)
      first_k.emplace(classify(zp, decompose(t, k)).cell, k);
    auto bump = [](Octuple o, int i, int j) {
      ++o[static_cast<std::size_t>(i)];
      ++o[static_cast<std::size_t>(j)];
      return o;
    };
    for (const auto& [cell, kk] : first_k) {
      if (cell[2] == 4) {
        auto c3 = cell;
        c3[2] = 3;
        if (auto it = first_k.find(c3); it != first_k.end()) {
          ++pairs_34;
          // moving c from zone 4 to 3 raises positions 6 and 7 by one
          CHECK(shift_equivalent(octuple(t, it->second),
                                 bump(octuple(t, kk), 6, 7)));
        }
      }
      if (cell[0] == 0) {
        auto c1 = cell;
        c1[0] = 1;
        if (auto it = first_k.find(c1); it != first_k.end()) {
          ++pairs_01;
          // moving a from zone 1 to 0 raises positions 4 and 7 by one
          CHECK(shift_equivalent(octuple(t, kk),
                                 bump(octuple(t, it->second), 4, 7)));
        }
      }
    }
  }
  CHECK(pairs_34 > 0);
  CHECK(pairs_01 > 0);
}

TEST_CASE("table dump matches the committed fixture") {
  std::ifstream in(std::string(TERCYC_FIXTURE_DIR) + "/table1.csv", std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(table_csv() == buf.str());
}

TEST_CASE("lemma_r_status") {
  LemmaRStatus s357 = lemma_r_status(validate_triple(3, 5, 7, true));
  CHECK(s357.count == 1);
  CHECK(s357.holds == std::array<bool, 3>{false, false, true});
  CHECK(s357.distinguished_axis == 2);

  CHECK(lemma_r_status(validate_triple(3, 11, 23, true)).count == 2);
  CHECK(lemma_r_status(validate_triple(5, 7, 11, true)).count == 1);
  CHECK(lemma_r_status(validate_triple(7, 11, 13, true)).count == 2);
  CHECK(lemma_r_status(validate_triple(3, 17, 35, false)).count == 2);
}

TEST_CASE("weighted sum of all six inverses") {
  for (auto [p, q, r] : {std::array<std::int64_t, 3>{3, 5, 7}, {5, 7, 11}, {3, 11, 23},
                         {3, 17, 35}, {4, 23, 47}}) {
    const std::int64_t qr = q * r, rp = r * p, pq = p * q;
    const std::int64_t lhs = mod_inverse(q % p, p) * qr + mod_inverse(r % p, p) * qr +
                             mod_inverse(r % q, q) * rp + mod_inverse(p % q, q) * rp +
                             mod_inverse(p % r, r) * pq + mod_inverse(q % r, r) * pq;
    CHECK(lhs == 3 * p * q * r + p + q + r);
  }
}
