#include "gsedf/arith.hpp"

#include <numeric>

#include "gsedf/error.hpp"

namespace gsedf {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid: return "invalid";
    case ErrorKind::invalid_factors: return "invalid-factors";
    case ErrorKind::wrong_group: return "wrong-group";
    case ErrorKind::too_large: return "too-large";
    case ErrorKind::not_prime_power: return "not-prime-power";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::not_disjoint: return "not-disjoint";
    case ErrorKind::not_applicable: return "not-applicable";
    case ErrorKind::not_liftable: return "not-liftable";
    case ErrorKind::hypothesis_violation: return "hypothesis-violation";
    case ErrorKind::not_twin_prime_powers: return "not-twin-prime-powers";
    case ErrorKind::not_constructible: return "not-constructible";
    case ErrorKind::empty_range: return "empty-range";
    case ErrorKind::rejected_before_search: return "rejected-before-search";
    case ErrorKind::usage: return "usage";
  }
  return "unknown";
}

namespace arith {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::int64_t n) {
  std::vector<PrimePower> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<PrimePower> prime_power(std::int64_t n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t powmod(std::int64_t base, std::uint64_t exp, std::int64_t m) {
  __int128 result = 1 % m;
  __int128 b = mod(base, m);
  while (exp > 0) {
    if (exp & 1U) result = result * b % m;
    b = b * b % m;
    exp >>= 1U;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t invmod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1 && m != 1) throw Error(ErrorKind::invalid, "invmod: arguments not coprime");
  return mod(old_s, m);
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_into(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  partitions_into(n, n, current, out);
  return out;
}

}  // namespace arith
}  // namespace gsedf
