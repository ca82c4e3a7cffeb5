#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Small exact integer helpers shared by the group, field and feasibility code.
// Everything here uses trial division and is meant for the modest sizes the
// library works with (orders up to a few million).
namespace gsedf::arith {

using PrimePower = std::pair<std::int64_t, int>;  // (prime, exponent)

bool is_prime(std::int64_t n);

/// Prime factorization by trial division, primes ascending.
std::vector<PrimePower> factorize(std::int64_t n);

/// (p, e) with n = p^e, or nullopt when n is not a prime power (n < 2 included).
std::optional<PrimePower> prime_power(std::int64_t n);

inline bool is_prime_power(std::int64_t n) { return prime_power(n).has_value(); }

std::int64_t ipow(std::int64_t base, int exp);

std::int64_t mod(std::int64_t a, std::int64_t m);

std::int64_t powmod(std::int64_t base, std::uint64_t exp, std::int64_t m);

/// Inverse of a modulo m; a and m must be coprime.
std::int64_t invmod(std::int64_t a, std::int64_t m);

/// Partitions of n as non-increasing part lists, largest first part first:
/// 4 -> (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<std::vector<int>> partitions(int n);

}  // namespace gsedf::arith
