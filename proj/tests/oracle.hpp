#pragma once

// Brute-force reference implementations used to cross-check the library.
// They work on raw coordinate vectors and share no code with gsedf.

#include <cstdint>
#include <map>
#include <vector>

#include "gsedf/group.hpp"
#include "gsedf/verify.hpp"

namespace oracle {

using Coords = std::vector<int>;

inline Coords sub(const std::vector<int>& mods, const Coords& a, const Coords& b) {
  Coords out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ((a[i] - b[i]) % mods[i] + mods[i]) % mods[i];
  return out;
}

inline std::vector<Coords> all_elements(const std::vector<int>& mods) {
  std::vector<Coords> out{Coords(mods.size(), 0)};
  for (std::size_t i = 0; i < mods.size(); ++i) {
    std::vector<Coords> next;
    for (const auto& c : out) {
      for (int x = 0; x < mods[i]; ++x) {
        Coords d = c;
        d[i] = x;
        next.push_back(d);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Coords> raw(const gsedf::ElementSet& s) {
  std::vector<Coords> out;
  for (const auto& x : s) out.push_back(x.coords);
  return out;
}

/// Definition check by explicit enumeration of ordered pairs.
inline bool is_gsedf(const std::vector<int>& mods, const std::vector<std::vector<Coords>>& sets,
                     const std::vector<std::int64_t>& lambdas) {
  const auto elems = all_elements(mods);
  const Coords zero(mods.size(), 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::map<Coords, std::int64_t> counts;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (j == i) continue;
      for (const auto& a : sets[i]) {
        for (const auto& b : sets[j]) ++counts[sub(mods, a, b)];
      }
    }
    for (const auto& x : elems) {
      const std::int64_t want = x == zero ? 0 : lambdas[i];
      const auto it = counts.find(x);
      if ((it == counts.end() ? 0 : it->second) != want) return false;
    }
  }
  return true;
}

inline bool is_gsedf(const gsedf::DiffFamily& f) {
  std::vector<std::vector<Coords>> sets;
  for (const auto& s : f.sets()) sets.push_back(raw(s));
  return is_gsedf(f.group().invariant_factors(), sets, f.lambdas());
}

/// Multiplicities of a - b over all ordered pairs of one set.
inline std::map<Coords, std::int64_t> self_differences(const std::vector<int>& mods,
                                                       const std::vector<Coords>& d) {
  std::map<Coords, std::int64_t> counts;
  for (const auto& a : d) {
    for (const auto& b : d) ++counts[sub(mods, a, b)];
  }
  return counts;
}

inline std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline bool is_prime_power(std::int64_t n) {
  if (n < 2) return false;
  std::int64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace oracle
