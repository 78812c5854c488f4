#include "tercyc/families.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

namespace tercyc {

namespace {

// little-endian base-2^32 limbs
std::vector<std::uint32_t> big_pow(std::uint64_t base, std::int64_t exp) {
  std::vector<std::uint32_t> v{1};
  for (std::int64_t i = 0; i < exp; ++i) {
    unsigned __int128 carry = 0;
    for (std::uint32_t& limb : v) {
      unsigned __int128 cur = static_cast<unsigned __int128>(limb) * base + carry;
      limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    while (carry) {
      v.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
      carry >>= 32;
    }
  }
  return v;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

bool pow_greater(std::int64_t a, std::int64_t ea, std::int64_t b, std::int64_t eb) {
  if (a < 1 || b < 1 || ea < 0 || eb < 0)
    throw out_of_range_error("pow_greater: arguments must be positive");
  std::vector<std::uint32_t> pa = big_pow(static_cast<std::uint64_t>(a), ea);
  std::vector<std::uint32_t> pb = big_pow(static_cast<std::uint64_t>(b), eb);
  if (pa.size() != pb.size()) return pa.size() > pb.size();
  for (std::size_t i = pa.size(); i-- > 0;)
    if (pa[i] != pb[i]) return pa[i] > pb[i];
  return false;
}

std::vector<FamilyInstance> germain_triples(std::int64_t q_max, Rational eps) {
  if (eps.den <= 0 || eps.num <= 0 || eps.num >= eps.den)
    throw out_of_range_error("germain_triples: epsilon must lie in (0, 1)");
  std::vector<FamilyInstance> out;
  for (std::int64_t q = 3; q <= q_max; ++q) {
    if (!is_prime(q) || !is_prime(2 * q + 1)) continue;
    const std::int64_t r = 2 * q + 1;
    for (std::int64_t p = 3; p <= q + 1; ++p) {
      if ((q + 1) % p != 0 || !is_prime(p)) continue;
      // hypothesis p > q^{1-eps}, compared as p^den > q^{den-num}
      if (!pow_greater(p, eps.den, q, eps.den - eps.num)) continue;
      FamilyInstance inst;
      inst.kind = FamilyKind::germain;
      inst.t = validate_triple(p, q, r, true);
      inst.p = p;
      inst.q = q;
      inst.r = r;
      inst.tt = (q + 1) / p;
      inst.epsilon = eps;
      inst.small_t_warning = inst.tt < 3;
      inst.predicted_bound = 10 * q;
      out.push_back(inst);
    }
  }
  return out;
}

SmallJProfile verify_small_j_profile(const FamilyInstance& inst, bool run_oracle) {
  if (inst.kind != FamilyKind::germain)
    throw out_of_range_error("verify_small_j_profile: germain instance required");
  const std::int64_t p = inst.p, q = inst.q, r = inst.r, t = inst.tt;
  if (q != t * p - 1 || r != 2 * t * p - 1)
    throw invalid_triple_error("verify_small_j_profile: q = tp-1, r = 2tp-1 required");
  SmallJProfile prof;
  prof.inst = inst;

  const Triple trip = validate_triple(p, q, r, false);
  // p < q < r always holds here, so axes are (p, q, r) in order
  const ZoneProfile zp = zone_profile(trip);

  prof.inverses_ok = mod_inverse(q % p, p) == p - 1 &&
                     mod_inverse(r % p, p) == p - 1 &&
                     mod_inverse(r % q, q) == 1 &&
                     mod_inverse(p % q, q) == t &&
                     mod_inverse(p % r, r) == 2 * t &&
                     mod_inverse(q % r, r) == 2 * t * p - 3;
  prof.alpha_ok = zp.axis[0].alpha == 1 && zp.axis[1].alpha == 1 &&
                  zp.axis[2].alpha == 2;
  prof.beta_ok = zp.axis[0].beta == 1 && zp.axis[1].beta == t &&
                 zp.axis[2].beta == 2 * t * p - 2 * t - 1;
  prof.empty_zones_ok = zp.axis[0].size[4] == 0 && zp.axis[1].size[0] == 0 &&
                        zp.axis[2].size[4] == 0;
  prof.delta_ok = true;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      if (x == y) continue;
      const int expected = ((x == 2 && y == 0) || (x == 0 && y == 1)) ? 1 : 0;
      if (zp.delta[x][y] != expected) prof.delta_ok = false;
    }

  const JumpComponents jc = closed_J(zp);
  prof.R = jc.R;
  prof.S = jc.S;
  prof.T = jc.T;
  prof.J = jc.J;
  prof.R_formula_ok = jc.R == (p - 2) * (2 * t - 2);
  prof.S_zero_ok = jc.S == 0;
  prof.T_formula_ok = jc.T == (t - 1) * 2 * (p - 2);
  prof.bound_ok = jc.J < 10 * q;

  if (run_oracle) {
    try {
      const CoefficientTable ct = coefficients(trip);
      const CoefficientStats st = jump_scan(ct);
      prof.oracle_ran = true;
      prof.oracle_ok =
          static_cast<std::int64_t>(st.jump_ups.size()) == jc.J &&
          st.jump_ups.size() == st.jump_downs.size();
    } catch (const too_large_error&) {
      prof.oracle_ran = false;
    }
  }
  return prof;
}

std::vector<FamilyInstance> six_m_family(std::int64_t m_from, std::int64_t m_to) {
  if (m_from < 3 || m_from > m_to)
    throw out_of_range_error("six_m_family: need 3 <= m_from <= m_to");
  std::vector<FamilyInstance> out;
  for (std::int64_t m = m_from; m <= m_to; ++m) {
    FamilyInstance inst;
    inst.kind = FamilyKind::six_m;
    inst.t = validate_triple(m, 6 * m - 1, 12 * m - 1, false);
    inst.m = m;
    inst.predicted_bound = 10 * (6 * m - 1);
    out.push_back(inst);
  }
  return out;
}

std::vector<Triple> enumerate_triples(std::int64_t p_max, bool require_primes) {
  std::vector<Triple> out;
  for (std::int64_t p = 3; p <= p_max; ++p) {
    if (require_primes && !is_prime(p)) continue;
    for (std::int64_t q = p + 1; q <= p_max; ++q) {
      if (require_primes && !is_prime(q)) continue;
      if (gcd64(p, q) != 1) continue;
      for (std::int64_t r = q + 1; r <= p_max; ++r) {
        if (require_primes && !is_prime(r)) continue;
        if (gcd64(p, r) != 1 || gcd64(q, r) != 1) continue;
        out.push_back(validate_triple(p, q, r, require_primes));
      }
    }
  }
  return out;
}

namespace {

ScanRow scan_one(const Triple& t, const ScanOptions& opt) {
  ScanRow row;
  row.p = t.p;
  row.q = t.q;
  row.r = t.r;
  row.n = t.n;
  try {
    const ZoneProfile zp = zone_profile(t);
    const JumpComponents jc = closed_J(zp);
    row.J_formula = jc.J;
    row.R = jc.R;
    row.S = jc.S;
    row.T = jc.T;
    row.main = jc.main;
    row.lemma_r_count = lemma_r_status(t).count;

    const CoefficientTable ct = coefficients(t, opt.max_entries);
    const CoefficientStats st = jump_scan(ct);
    row.J_oracle = static_cast<std::int64_t>(st.jump_ups.size());
    row.theta = st.theta;
    row.height = st.height;

    const BoundReport br = bound_report(t, jc.J, st.theta);
    row.cbrtJ_pass = br.J_bound_ok;
    row.cbrtTheta_pass = br.theta_bound_ok;

    VerifyReport vr;
    if (opt.sample_k > 0) {
      std::uint64_t h = splitmix64(opt.seed ^ splitmix64(
          static_cast<std::uint64_t>(t.p) * 0x100000001b3ull ^
          splitmix64(static_cast<std::uint64_t>(t.q) * 31 +
                     static_cast<std::uint64_t>(t.r))));
      std::mt19937_64 rng(h);
      std::vector<std::int64_t> ks;
      ks.reserve(static_cast<std::size_t>(opt.sample_k));
      for (std::int64_t i = 0; i < opt.sample_k; ++i)
        ks.push_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(t.n)));
      vr = verify_against_table(t, ct, &ks);
    } else {
      vr = verify_against_table(t, ct, nullptr);
    }
    row.table_agree = vr.ok();

    std::string fail;
    auto note = [&](const char* what) {
      if (!fail.empty()) fail += "; ";
      fail += what;
    };
    if (row.J_formula != row.J_oracle) note("formula/oracle mismatch");
    if (st.jump_ups.size() != st.jump_downs.size()) note("up/down asymmetry");
    if (jc.cell_route_total() != jc.J) note("cell-route mismatch");
    if (!row.table_agree) note("per-index disagreement");
    if (!row.cbrtJ_pass) note("J^3 <= n");
    if (!row.cbrtTheta_pass) note("theta^3 <= n");
    if (row.lemma_r_count < 1 || row.lemma_r_count > 2) note("helper-count out of range");
    if (!fail.empty()) row.status = fail;
  } catch (const error& e) {
    row.status = e.what();
  }
  return row;
}

}  // namespace

std::vector<ScanRow> scan(const ScanOptions& opt) {
  const std::vector<Triple> triples = enumerate_triples(opt.p_max, opt.require_primes);
  std::vector<ScanRow> rows(triples.size());
  const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(triples.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < triples.size(); ++i)
      rows[i] = scan_one(triples[i], opt);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= triples.size()) return;
      rows[i] = scan_one(triples[i], opt);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "p,q,r,n,J_formula,J_oracle,R,S,T,main,theta,height,"
        "cbrtJ_pass,cbrtTheta_pass,table_agree,lemma_r_count,status\n";
  for (const ScanRow& w : rows) {
    os << w.p << ',' << w.q << ',' << w.r << ',' << w.n << ',' << w.J_formula
       << ',' << w.J_oracle << ',' << w.R << ',' << w.S << ',' << w.T << ','
       << w.main << ',' << w.theta << ',' << w.height << ','
       << (w.cbrtJ_pass ? 1 : 0) << ',' << (w.cbrtTheta_pass ? 1 : 0) << ','
       << (w.table_agree ? 1 : 0) << ',' << w.lemma_r_count << ','
       << w.status << '\n';
  }
  return os.str();
}

}  // namespace tercyc
