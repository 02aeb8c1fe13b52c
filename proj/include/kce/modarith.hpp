#pragma once

#include <cstdint>
#include <vector>

namespace kce {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
// Throws InvalidArgument when gcd(a, m) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
std::uint64_t ipow(std::uint64_t base, unsigned e);
// Reduce a signed value into [0, m).
std::uint64_t mod(std::int64_t v, std::uint64_t m);

// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);
// Distinct prime factors, ascending, by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Euler criterion; p an odd prime.
int legendre(std::int64_t a, std::uint64_t p);
// Least nonnegative x with x^2 = a mod p (Tonelli-Shanks); a must be a residue.
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p);

}  // namespace kce
