#pragma once

#include <cstdint>

#include "tercyc/errors.hpp"

namespace tercyc {

struct ExtGcd {
  std::int64_t g;  // gcd(a, b) > 0
  std::int64_t x;  // a*x + b*y = g
  std::int64_t y;
};

/// Extended Euclid. Requires not both arguments zero.
ExtGcd ext_gcd(std::int64_t a, std::int64_t b);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

/// Inverse of a modulo m, treated as an integer from {1, ..., m-1}.
/// Throws not_coprime_error when gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// (a * b) mod m without overflow; requires m > 0.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Largest admissible p*q*r; keeps 3n and coefficient indices in int64.
inline constexpr std::int64_t kMaxProduct = INT64_C(1) << 40;

/// The three moduli, stored ascending, with n = pqr and phi = (p-1)(q-1)(r-1).
struct Triple {
  std::int64_t p = 0, q = 0, r = 0;
  std::int64_t n = 0;
  std::int64_t phi = 0;
  bool strict_primes = false;

  std::int64_t modulus(int axis) const { return axis == 0 ? p : axis == 1 ? q : r; }
};

/// Validates pairwise coprimality, distinctness and entries > 2; canonicalizes
/// to ascending order. With require_primes, composites raise
/// primality_required_error; otherwise strict_primes just records the check.
Triple validate_triple(std::int64_t p, std::int64_t q, std::int64_t r,
                       bool require_primes = false);

}  // namespace tercyc
