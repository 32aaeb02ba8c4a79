#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Arithmetic in Z/pZ for primes below 2^32.
namespace gib::modp {

inline constexpr std::uint64_t kDefaultPrime = 2147483647; // 2^31 - 1

constexpr std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}
constexpr std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
constexpr std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
constexpr std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  base %= p;
  while (e) {
    if (e & 1)
      r = mul(r, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return r;
}
/// p must be prime and a nonzero mod p.
constexpr std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

using Matrix = std::vector<std::vector<std::uint64_t>>;

/// Rank by Gaussian elimination; the argument is consumed.
std::size_t rank(Matrix m, std::uint64_t p);

} // namespace gib::modp
