#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsedf/verify.hpp"

namespace gsedf {

// Explicit GSEDF constructions. Every function returns a DiffFamily whose
// parameters match the corresponding existence result; hypotheses are checked
// up front and reported through gsedf::Error.

/// (ab+1, 2; a, b; 1, 1) in Z_{ab+1}: D_1 = {0..a-1}, D_2 = {a, 2a, ..., ba}.
DiffFamily c1(std::int64_t a, std::int64_t b);

/// Recursive lift of a (v, 2; 2l, (v-1)/2; l, l)-GSEDF to a
/// (vt, 2; 4l, (vt-1)/2; 2l, 2l)-GSEDF in G x Z_t (normalized):
///   D_1' = D_1 x {0, 1}
///   D_2' = D_2 x ({0} u {1, 3, ..., t-2})  u  (G \ D_2) x {2, 4, ..., t-1}
/// v and t must be odd and > 1 (hypothesis-violation); the input shape is
/// checked on the actual sets and the input must verify (not-liftable).
DiffFamily lift(const DiffFamily& f, std::int64_t t);

/// Squares / non-squares of GF(q), q = 1 mod 4: (q, 2; (q-1)/2, (q-1)/2; (q-1)/4, (q-1)/4).
DiffFamily paley_even(std::int64_t q);

/// Squares / complement of GF(q), q = 3 mod 4: (q, 2; (q-1)/2, (q+1)/2; (q+1)/4, (q+1)/4).
DiffFamily paley_odd(std::int64_t q);

/// c1(2, (p_1-1)/2) in Z_{p_1} lifted by p_2, ..., p_n (odd, > 1, repeats allowed).
DiffFamily two_n(std::span<const std::int64_t> p_list);

/// The fixed (16, 2; 5, 9; 3, 3)-GSEDF in Z_2 x Z_8.
DiffFamily g16();

/// Twin prime power difference set D in GF(q) x GF(q+2) and its complement:
/// (v, 2; (v-1)/2, (v+1)/2; (v+1)/4, (v+1)/4) with v = q(q+2).
DiffFamily twin_prime(std::int64_t q);

/// {0}, even powers, odd powers of a primitive element of GF(v), v = 3 mod 4:
/// (v, 3; 1, (v-1)/2, (v-1)/2; 1, (v+1)/4, (v+1)/4).
DiffFamily m3_prime_power(std::int64_t v);

/// paley_even(q) lifted by each entry of p_list in order.
DiffFamily q4_lift(std::int64_t q, std::span<const std::int64_t> p_list);

/// Base (4m-1, 2; 2m, 2m-1; m, m) from GF(4m-1) or a twin prime power product
/// q(q+2) = 4m-1, lifted by each entry of p_list. Throws not-constructible
/// when neither base applies.
DiffFamily family_4m1(std::int64_t m, std::span<const std::int64_t> p_list);

/// The twin-prime-power difference set itself (before taking the family).
ElementSet twin_prime_difference_set(std::int64_t q, AbelianGroup* group_out = nullptr);

enum class RecipeName {
  c1,
  lift,
  paley_even,
  paley_odd,
  two_n,
  g16,
  twin_prime,
  m3_prime_power,
  q4_lift,
  family_4m1,
};

std::string_view to_string(RecipeName name);
std::optional<RecipeName> recipe_from_string(std::string_view name);

/// A named construction with integer arguments. `lift` takes [t] and a base
/// recipe; the other recipes take no base.
struct ConstructionRecipe {
  RecipeName name = RecipeName::g16;
  std::vector<std::int64_t> args;
  std::shared_ptr<const ConstructionRecipe> base;

  /// Throws invalid when the arity does not match the recipe.
  void validate() const;
};

DiffFamily build(const ConstructionRecipe& recipe);

}  // namespace gsedf
