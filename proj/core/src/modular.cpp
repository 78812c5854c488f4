#include "tercyc/modular.hpp"

#include <algorithm>
#include <string>

namespace tercyc {

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  // invariant: old_r = a*old_s + b*old_t, r = a*s + b*t
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t qt = old_r / r;
    std::int64_t tmp;
    tmp = old_r - qt * r; old_r = r; r = tmp;
    tmp = old_s - qt * s; old_s = s; s = tmp;
    tmp = old_t - qt * t; old_t = t; t = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  return {old_r, old_s, old_t};
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b != 0) { std::int64_t t = a % b; a = b; b = t; }
  return a < 0 ? -a : a;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  ExtGcd e = ext_gcd(a, m);
  if (e.g != 1)
    throw not_coprime_error("mod_inverse: gcd(" + std::to_string(a) + ", " +
                            std::to_string(m) + ") = " + std::to_string(e.g));
  std::int64_t x = e.x % m;
  if (x < 0) x += m;
  return x;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

namespace {

std::uint64_t mul_mod_u(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod_u(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t x = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) x = mul_mod_u(x, a, m);
    a = mul_mod_u(a, a, m);
    e >>= 1;
  }
  return x;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // this witness set is exact for all n < 3.3e24
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = pow_mod_u(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mul_mod_u(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

Triple validate_triple(std::int64_t p, std::int64_t q, std::int64_t r,
                       bool require_primes) {
  std::int64_t v[3] = {p, q, r};
  std::sort(v, v + 3);
  auto bad = [&](const std::string& why) {
    return invalid_triple_error("invalid triple (" + std::to_string(p) + ", " +
                                std::to_string(q) + ", " + std::to_string(r) +
                                "): " + why);
  };
  for (std::int64_t x : v)
    if (x <= 2) throw bad("every entry must exceed 2");
  if (v[0] == v[1] || v[1] == v[2]) throw bad("entries must be distinct");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (gcd64(v[i], v[j]) != 1) throw bad("not pairwise coprime");
  if (v[2] > kMaxProduct / v[0] / v[1])
    throw too_large_error("invalid triple (" + std::to_string(p) + ", " +
                          std::to_string(q) + ", " + std::to_string(r) +
                          "): product exceeds 2^40");

  Triple t;
  t.p = v[0]; t.q = v[1]; t.r = v[2];
  t.n = v[0] * v[1] * v[2];
  t.phi = (v[0] - 1) * (v[1] - 1) * (v[2] - 1);
  t.strict_primes = is_prime(static_cast<std::uint64_t>(v[0])) &&
                    is_prime(static_cast<std::uint64_t>(v[1])) &&
                    is_prime(static_cast<std::uint64_t>(v[2]));
  if (require_primes && !t.strict_primes)
    throw primality_required_error("triple (" + std::to_string(p) + ", " +
                                   std::to_string(q) + ", " + std::to_string(r) +
                                   ") contains a composite entry");
  return t;
}

}  // namespace tercyc
