#include "tercyc/repr.hpp"

#include <string>

namespace tercyc {

Representation decompose(const Triple& t, std::int64_t k) {
  const std::int64_t p = t.p, q = t.q, r = t.r;
  auto residue = [&](std::int64_t m, std::int64_t other_product) {
    std::int64_t km = k % m;
    if (km < 0) km += m;
    return mul_mod(km, mod_inverse(other_product % m, m), m);
  };
  Representation rep;
  rep.k = k;
  rep.a = residue(p, q * r);
  rep.b = residue(q, r * p);
  rep.c = residue(r, p * q);
  std::int64_t lhs = rep.a * q * r + rep.b * r * p + rep.c * p * q - k;
  rep.F = lhs / t.n;
  if (rep.F * t.n != lhs)
    throw internal_inconsistency_error("decompose: defining equation not exact");
  return rep;
}

Octuple octuple(const Triple& t, std::int64_t k) {
  if (k < 0 || k >= t.n)
    throw out_of_range_error("octuple: k = " + std::to_string(k) +
                             " outside [0, " + std::to_string(t.n) + ")");
  const std::int64_t shifts[8] = {0, t.p, t.q, t.r, t.q + t.r,
                                  t.r + t.p, t.p + t.q, t.p + t.q + t.r};
  Octuple o;
  for (int i = 0; i < 8; ++i) {
    std::int64_t F = decompose(t, k - shifts[i]).F;
    if (F < 0 || F > 2)
      throw internal_inconsistency_error("octuple: F outside {0,1,2}");
    o[i] = static_cast<int>(F);
  }
  return o;
}

bool shift_equivalent(const Octuple& a, const Octuple& b) {
  int u = a[0] - b[0];
  for (int i = 1; i < 8; ++i)
    if (a[i] - b[i] != u) return false;
  return true;
}

int jump_from_octuple(const Octuple& o) {
  for (int v : o)
    if (v < 0 || v > 2)
      throw out_of_range_error("jump_from_octuple: entry outside {0,1,2}");
  const int even[4] = {o[0], o[4], o[5], o[6]};
  const int odd[4] = {o[1], o[2], o[3], o[7]};
  int cnt[2][3] = {};
  for (int i = 0; i < 4; ++i) { ++cnt[0][even[i]]; ++cnt[1][odd[i]]; }
  int by_n0 = cnt[0][0] - cnt[1][0];
  int by_n2 = cnt[0][2] - cnt[1][2];
  int n1_diff = cnt[1][1] - cnt[0][1];
  if (by_n0 != by_n2 || n1_diff != 2 * by_n0)
    throw inconsistent_error("jump_from_octuple: N_0/N_2/N_1 expressions disagree");
  return by_n0;
}

namespace {

// F_k - F_{k-shift}, from the residue/threshold case split
int single_shift_rule(std::int64_t res1, std::int64_t thr1,
                      std::int64_t res2, std::int64_t thr2) {
  bool lt1 = res1 < thr1, lt2 = res2 < thr2;
  if (lt1 && lt2) return -1;
  if (!lt1 && !lt2) return 1;
  return 0;
}

// F_k - F_{k-y} - F_{k-z} + F_{k-y-z}, driven by res against the
// A_1 = [i1+i2-m, min) and A_3 = [max, i1+i2) windows of its modulus
int four_term_rule(std::int64_t res, std::int64_t m,
                   std::int64_t i1, std::int64_t i2) {
  std::int64_t lo1 = std::max<std::int64_t>(0, i1 + i2 - m);
  std::int64_t hi1 = std::min(i1, i2);
  std::int64_t lo3 = std::max(i1, i2);
  std::int64_t hi3 = std::min(i1 + i2, m);
  if (res >= lo1 && res < hi1) return -1;
  if (res >= lo3 && res < hi3) return 1;
  return 0;
}

}  // namespace

PropositionChecks proposition_residuals(const Triple& t, std::int64_t k) {
  const std::int64_t p = t.p, q = t.q, r = t.r;
  const std::int64_t qinv_p = mod_inverse(q % p, p), rinv_p = mod_inverse(r % p, p);
  const std::int64_t rinv_q = mod_inverse(r % q, q), pinv_q = mod_inverse(p % q, q);
  const std::int64_t pinv_r = mod_inverse(p % r, r), qinv_r = mod_inverse(q % r, r);

  auto F = [&](std::int64_t j) { return decompose(t, j).F; };
  Representation rep = decompose(t, k);

  PropositionChecks out;
  out.single_shift_ok =
      F(k) - F(k - q) == single_shift_rule(rep.a, rinv_p, rep.c, pinv_r) &&
      F(k) - F(k - p) == single_shift_rule(rep.b, rinv_q, rep.c, qinv_r) &&
      F(k) - F(k - r) == single_shift_rule(rep.a, qinv_p, rep.b, pinv_q);
  out.four_term_ok =
      F(k) - F(k - q) - F(k - r) + F(k - q - r) ==
          four_term_rule(rep.a, p, qinv_p, rinv_p) &&
      F(k) - F(k - r) - F(k - p) + F(k - r - p) ==
          four_term_rule(rep.b, q, rinv_q, pinv_q) &&
      F(k) - F(k - p) - F(k - q) + F(k - p - q) ==
          four_term_rule(rep.c, r, pinv_r, qinv_r);
  out.eight_term_ok =
      F(k) - F(k - p) - F(k - q) - F(k - r) + F(k - q - r) + F(k - r - p) +
          F(k - p - q) - F(k - p - q - r) == 0;
  return out;
}

}  // namespace tercyc
