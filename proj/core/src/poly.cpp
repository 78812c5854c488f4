#include "tercyc/poly.hpp"

#include <cstdlib>
#include <string>

namespace tercyc {

std::int64_t memory_bound() {
  static const std::int64_t bound = [] {
    if (const char* env = std::getenv("TERCYC_MEMORY_BOUND")) {
      char* end = nullptr;
      long long v = std::strtoll(env, &end, 10);
      if (end != env && v > 0) return static_cast<std::int64_t>(v);
    }
    return INT64_C(100'000'000);
  }();
  return bound;
}

namespace {

// signed numerator terms of (1-x^{pqr})(1-x^p)(1-x^q)(1-x^r)
struct NumeratorTerm { std::int64_t exponent; int sign; };

std::vector<NumeratorTerm> numerator_terms(const Triple& t) {
  const std::int64_t e[4] = {t.n, t.p, t.q, t.r};
  std::vector<NumeratorTerm> out;
  out.reserve(16);
  for (int mask = 0; mask < 16; ++mask) {
    std::int64_t exp = 0;
    int sign = 1;
    for (int b = 0; b < 4; ++b)
      if (mask & (1 << b)) { exp += e[b]; sign = -sign; }
    out.push_back({exp, sign});
  }
  return out;
}

}  // namespace

CoefficientTable::CoefficientTable(Triple t, std::vector<std::int32_t> coeffs)
    : t_(t), c_(std::move(coeffs)) {
  if (static_cast<std::int64_t>(c_.size()) != t_.phi + 1)
    throw internal_inconsistency_error("CoefficientTable: wrong length");
}

CoefficientTable coefficients(const Triple& t, std::int64_t max_entries) {
  if (max_entries <= 0) max_entries = memory_bound();
  const std::int64_t len = t.n + t.p + t.q + t.r + 1;
  if (len > max_entries)
    throw too_large_error("coefficients: n = " + std::to_string(t.n) +
                          " exceeds the memory bound of " +
                          std::to_string(max_entries) + " entries");

  std::vector<std::int32_t> w(static_cast<std::size_t>(len), 0);
  for (const NumeratorTerm& nt : numerator_terms(t))
    w[static_cast<std::size_t>(nt.exponent)] += nt.sign;

  // dividing by (1-x) last keeps intermediate values small
  const std::int64_t divisors[4] = {t.q * t.r, t.r * t.p, t.p * t.q, 1};
  for (std::int64_t d : divisors)
    for (std::int64_t i = d; i < len; ++i)
      w[static_cast<std::size_t>(i)] += w[static_cast<std::size_t>(i - d)];

  for (std::int64_t i = t.phi + 1; i < len; ++i)
    if (w[static_cast<std::size_t>(i)] != 0)
      throw inexact_division_error("coefficients: nonzero tail at degree " +
                                   std::to_string(i));
  w.resize(static_cast<std::size_t>(t.phi + 1));
  CoefficientTable ct(t, std::move(w));

  // spot-check the product at a handful of positions
  auto product_at = [&](std::int64_t i) {
    // coefficient of x^i in Phi * (1-x^{qr})(1-x^{rp})(1-x^{pq})(1-x)
    const std::int64_t e[4] = {t.q * t.r, t.r * t.p, t.p * t.q, 1};
    std::int64_t acc = 0;
    for (int mask = 0; mask < 16; ++mask) {
      std::int64_t exp = 0;
      int sign = 1;
      for (int b = 0; b < 4; ++b)
        if (mask & (1 << b)) { exp += e[b]; sign = -sign; }
      acc += sign * ct.a(i - exp);
    }
    return acc;
  };
  auto numerator_at = [&](std::int64_t i) {
    std::int64_t acc = 0;
    for (const NumeratorTerm& nt : numerator_terms(t))
      if (nt.exponent == i) acc += nt.sign;
    return acc;
  };
  const std::int64_t samples[] = {0, 1, t.p, t.q, t.r, t.phi / 2, t.phi,
                                  t.n / 2, t.n, len - 1};
  for (std::int64_t i : samples)
    if (product_at(i) != numerator_at(i))
      throw inexact_division_error("coefficients: product check failed at " +
                                   std::to_string(i));
  return ct;
}

CoefficientStats jump_scan(const CoefficientTable& ct) {
  const Triple& t = ct.triple();
  CoefficientStats st;
  for (std::int64_t k = 0; k <= t.phi; ++k) {
    std::int64_t v = ct.a(k);
    if (v != 0) ++st.theta;
    if (v < 0) v = -v;
    if (v > st.height) st.height = v;
  }
  for (std::int64_t k = 0; k < t.n; ++k) {
    std::int64_t V = ct.a(k) - ct.a(k - 1);
    if (V > 1 || V < -1)
      throw flatness_violation_error(
          "jump_scan: |a(k) - a(k-1)| = " + std::to_string(V > 0 ? V : -V) +
          " at k = " + std::to_string(k) + " for n = " + std::to_string(t.n));
    if (V == 1) st.jump_ups.push_back(k);
    else if (V == -1) st.jump_downs.push_back(k);
  }
  return st;
}

bool reconstruct_check(const CoefficientTable& ct) {
  const Triple& t = ct.triple();
  const std::int64_t len = t.n + t.p + t.q + t.r + 1;
  const std::int64_t e[4] = {t.q * t.r, t.r * t.p, t.p * t.q, 1};
  std::vector<std::int64_t> expected(static_cast<std::size_t>(len), 0);
  for (const NumeratorTerm& nt : numerator_terms(t))
    expected[static_cast<std::size_t>(nt.exponent)] += nt.sign;
  for (std::int64_t i = 0; i < len; ++i) {
    std::int64_t acc = 0;
    for (int mask = 0; mask < 16; ++mask) {
      std::int64_t exp = 0;
      int sign = 1;
      for (int b = 0; b < 4; ++b)
        if (mask & (1 << b)) { exp += e[b]; sign = -sign; }
      acc += sign * ct.a(i - exp);
    }
    if (acc != expected[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

VerifyReport verify_against_table(const Triple& t, const CoefficientTable& ct,
                                  const std::vector<std::int64_t>* sample_ks) {
  const ZoneProfile zp = zone_profile(t);
  VerifyReport rep;
  auto check_one = [&](std::int64_t k) {
    ++rep.checked;
    Representation r = decompose(t, k);
    Octuple actual = octuple(t, k);
    JumpClass cls = classify(zp, r);
    Mismatch m;
    m.k = k;
    m.oracle_V = static_cast<int>(ct.a(k) - ct.a(k - 1));
    m.octuple_V = jump_from_octuple(actual);
    m.table_V = table_V(zp, cls);
    m.octuple_match = shift_equivalent(actual, table_octuple(zp, cls));
    if (m.oracle_V == m.octuple_V && m.oracle_V == m.table_V && m.octuple_match) {
      ++rep.agreements;
    } else if (rep.mismatches.size() < 16) {
      rep.mismatches.push_back(m);
    }
  };
  if (sample_ks) {
    for (std::int64_t k : *sample_ks) check_one(k);
  } else {
    for (std::int64_t k = 0; k < t.n; ++k) check_one(k);
  }
  return rep;
}

VerifyReport verify_against_table(const Triple& t) {
  return verify_against_table(t, coefficients(t), nullptr);
}

}  // namespace tercyc
