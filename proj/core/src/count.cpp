#include "tercyc/count.hpp"

#include <limits>

namespace tercyc {

namespace {

constexpr int kCyc[3][3] = {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
constexpr int kAll[6][3] = {{0, 1, 2}, {2, 0, 1}, {1, 2, 0},
                           {2, 1, 0}, {0, 2, 1}, {1, 0, 2}};

std::int64_t cube_saturated(std::int64_t v) {
  __int128 c = static_cast<__int128>(v) * v * v;
  if (c > std::numeric_limits<std::int64_t>::max())
    return std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(c);
}

}  // namespace

std::int64_t JumpComponents::cell_route_total() const {
  std::int64_t total = 0;
  for (const auto& [row, count] : cell_counts) total += count;
  return total;
}

JumpComponents closed_J(const ZoneProfile& zp) {
  const auto& ax = zp.axis;
  auto A = [&](int x, int j) { return ax[x].size[j]; };
  auto al = [&](int x) { return ax[x].alpha; };
  auto be = [&](int x) { return ax[x].beta; };
  auto d = [&](int x, int y) { return static_cast<std::int64_t>(zp.delta[x][y]); };
  auto m = [&](int x) { return ax[x].modulus; };

  JumpComponents jc;
  for (auto [x, y, z] : kCyc) {
    jc.R += al(x) * (A(y, 0) * A(z, 0) + A(y, 4) * A(z, 4));
    jc.S += zp.delta_agg[x] * al(x) * (be(y) - al(y)) * (be(z) - al(z));
    jc.main += al(x) * al(y) * (m(z) - 2 * al(z));
    jc.as_printed_main += al(x) * al(y) * (m(z) - al(z) - be(z));
  }
  for (auto [x, y, z] : kAll)
    jc.T += d(y, z) * (be(x) - al(x)) * (al(y) * A(z, 0) + al(z) * A(y, 4));
  jc.J = jc.R + jc.S + jc.T + jc.main;

  // the nine jump-up cells of the criterion, counted from interval sizes
  auto& cc = jc.cell_counts;
  for (auto [x, y, z] : kCyc) {
    cc["001"] += A(x, 0) * A(y, 0) * A(z, 1);
    cc["011"] += A(x, 0) * A(y, 1) * A(z, 1);
    cc["334"] += A(x, 3) * A(y, 3) * A(z, 4);
    cc["344"] += A(x, 3) * A(y, 4) * A(z, 4);
    cc["122"] += d(x, y) * d(x, z) * A(x, 1) * A(y, 2) * A(z, 2);
    cc["223"] += d(x, z) * d(y, z) * A(x, 2) * A(y, 2) * A(z, 3);
  }
  for (auto [x, y, z] : kAll) {
    cc["123"] += d(x, z) * A(x, 1) * A(y, 2) * A(z, 3);
    cc["012"] += d(y, x) * A(x, 0) * A(y, 1) * A(z, 2);
    cc["234"] += d(z, y) * A(x, 2) * A(y, 3) * A(z, 4);
  }
  return jc;
}

JumpComponents closed_J(const Triple& t) { return closed_J(zone_profile(t)); }

BoundReport bound_report(const Triple& t, std::int64_t J, std::int64_t theta) {
  BoundReport br;
  br.n = t.n;
  br.J = J;
  br.theta = theta;
  std::int64_t c = 1;
  while (cube_saturated(c + 1) <= t.n) ++c;
  br.cbrt_n = c;
  br.J_cubed = cube_saturated(J);
  br.theta_cubed = cube_saturated(theta);
  br.J_bound_ok = static_cast<__int128>(J) * J * J > t.n;
  br.theta_bound_ok = static_cast<__int128>(theta) * theta * theta > t.n;
  return br;
}

}  // namespace tercyc
