#include "gsedf/construct.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "gsedf/arith.hpp"
#include "gsedf/error.hpp"
#include "gsedf/ffield.hpp"

namespace gsedf {

namespace {

std::vector<std::int64_t> widen(const std::vector<int>& coords) {
  return {coords.begin(), coords.end()};
}

DiffFamily swapped(const DiffFamily& f) {
  return DiffFamily(f.group(), {f.sets()[1], f.sets()[0]}, {f.lambdas()[1], f.lambdas()[0]});
}

void require_prime_power(std::int64_t q, ErrorKind kind) {
  if (!arith::is_prime_power(q)) throw Error(kind, std::to_string(q) + " is not a prime power");
}

}  // namespace

DiffFamily c1(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::invalid, "c1 needs a, b >= 1");
  const std::int64_t v = a * b + 1;
  const auto g = AbelianGroup::make({v});
  ElementSet d1, d2;
  for (std::int64_t i = 0; i < a; ++i) d1.push_back({{static_cast<int>(i)}});
  for (std::int64_t i = 1; i <= b; ++i) d2.push_back({{static_cast<int>(i * a)}});
  return DiffFamily(g, {d1, d2}, {1, 1});
}

DiffFamily lift(const DiffFamily& f, std::int64_t t) {
  const std::int64_t v = f.v();
  if (v <= 1 || v % 2 == 0) throw Error(ErrorKind::hypothesis_violation, "lift needs odd v > 1");
  if (t <= 1 || t % 2 == 0) throw Error(ErrorKind::hypothesis_violation, "lift needs odd t > 1");
  if (f.m() != 2 || f.lambdas()[0] != f.lambdas()[1]) {
    throw Error(ErrorKind::not_liftable, "lift needs a two-set family with equal lambdas");
  }
  const std::int64_t lambda = f.lambdas()[0];
  const auto ks = f.ks();
  if (ks[0] != 2 * lambda || ks[1] != (v - 1) / 2) {
    throw Error(ErrorKind::not_liftable, "lift needs shape (v, 2; 2l, (v-1)/2; l, l)");
  }
  if (!verify_gsedf(f).is_gsedf) throw Error(ErrorKind::not_liftable, "input family does not verify");

  const auto& g = f.group();
  std::vector<std::int64_t> factors = widen(g.invariant_factors());
  factors.push_back(t);
  const ProductIsomorphism iso(factors);
  auto at = [&](const GroupElement& x, std::int64_t level) {
    auto c = widen(x.coords);
    c.push_back(level);
    return iso.map(c);
  };

  std::vector<GroupElement> d1, d2;
  for (const auto& x : f.sets()[0]) {
    d1.push_back(at(x, 0));
    d1.push_back(at(x, 1));
  }
  const auto& base2 = f.sets()[1];
  for (const auto& x : g.elements()) {
    const bool in_d2 = std::binary_search(base2.begin(), base2.end(), x);
    if (in_d2) d2.push_back(at(x, 0));
    for (std::int64_t i = 1; i <= (t - 1) / 2; ++i) {
      d2.push_back(in_d2 ? at(x, 2 * i - 1) : at(x, 2 * i));
    }
  }
  return DiffFamily(iso.group(), {make_set(std::move(d1)), make_set(std::move(d2))},
                    {2 * lambda, 2 * lambda});
}

DiffFamily paley_even(std::int64_t q) {
  require_prime_power(q, ErrorKind::not_prime_power);
  if (q % 4 != 1) throw Error(ErrorKind::hypothesis_violation, "paley_even needs q = 1 mod 4");
  const auto field = make_field(q);
  const AdditiveEmbedding emb(field);
  std::vector<GroupElement> d1, d2;
  for (std::uint64_t e = 0; e + 1 < field.order(); ++e) {
    (e % 2 == 0 ? d1 : d2).push_back(emb.to_group(field.primitive_power(e)));
  }
  const std::int64_t lambda = (q - 1) / 4;
  return DiffFamily(emb.group(), {make_set(std::move(d1)), make_set(std::move(d2))},
                    {lambda, lambda});
}

DiffFamily paley_odd(std::int64_t q) {
  require_prime_power(q, ErrorKind::not_prime_power);
  if (q % 4 != 3) throw Error(ErrorKind::hypothesis_violation, "paley_odd needs q = 3 mod 4");
  const auto field = make_field(q);
  const AdditiveEmbedding emb(field);
  std::vector<GroupElement> d1, d2;
  for (auto a : field.elements()) {
    (field.is_nonzero_square(a) ? d1 : d2).push_back(emb.to_group(a));
  }
  const std::int64_t lambda = (q + 1) / 4;
  return DiffFamily(emb.group(), {make_set(std::move(d1)), make_set(std::move(d2))},
                    {lambda, lambda});
}

DiffFamily two_n(std::span<const std::int64_t> p_list) {
  if (p_list.empty()) throw Error(ErrorKind::hypothesis_violation, "two_n needs at least one factor");
  for (auto p : p_list) {
    if (p <= 1 || p % 2 == 0) {
      throw Error(ErrorKind::hypothesis_violation, "two_n factors must be odd and > 1");
    }
  }
  DiffFamily f = c1(2, (p_list[0] - 1) / 2);
  for (std::size_t i = 1; i < p_list.size(); ++i) f = lift(f, p_list[i]);
  return f;
}

DiffFamily g16() {
  const auto g = AbelianGroup::make({2, 8});
  auto set = [](std::initializer_list<std::array<int, 2>> pts) {
    std::vector<GroupElement> out;
    for (auto [a, b] : pts) out.push_back({{a, b}});
    return make_set(std::move(out));
  };
  return DiffFamily(g,
                    {set({{0, 0}, {0, 1}, {0, 3}, {1, 0}, {1, 4}}),
                     set({{0, 4}, {0, 5}, {0, 7}, {1, 1}, {1, 2}, {1, 3}, {1, 5}, {1, 6}, {1, 7}})},
                    {3, 3});
}

ElementSet twin_prime_difference_set(std::int64_t q, AbelianGroup* group_out) {
  if (q < 3 || q % 2 == 0 || !arith::is_prime_power(q) || !arith::is_prime_power(q + 2)) {
    throw Error(ErrorKind::not_twin_prime_powers,
                std::to_string(q) + " and " + std::to_string(q + 2) + " are not odd prime powers");
  }
  const auto f1 = make_field(q);
  const auto f2 = make_field(q + 2);
  const AdditiveEmbedding e1(f1), e2(f2);
  auto factors = widen(e1.group().invariant_factors());
  const auto more = widen(e2.group().invariant_factors());
  factors.insert(factors.end(), more.begin(), more.end());
  const ProductIsomorphism iso(factors);

  auto at = [&](FieldElement x, FieldElement y) {
    auto c = widen(e1.to_group(x).coords);
    const auto c2 = widen(e2.to_group(y).coords);
    c.insert(c.end(), c2.begin(), c2.end());
    return iso.map(c);
  };
  std::vector<GroupElement> d;
  for (auto x : f1.elements()) {
    d.push_back(at(x, f2.zero()));
    if (x == f1.zero()) continue;
    const bool sx = f1.is_nonzero_square(x);
    for (auto y : f2.elements()) {
      if (y != f2.zero() && f2.is_nonzero_square(y) == sx) d.push_back(at(x, y));
    }
  }
  if (group_out != nullptr) *group_out = iso.group();
  return make_set(std::move(d));
}

DiffFamily twin_prime(std::int64_t q) {
  AbelianGroup g;
  const ElementSet d = twin_prime_difference_set(q, &g);
  const auto v = static_cast<std::int64_t>(g.order());
  if (!verify_ds(g, d, (v - 1) / 2, (v - 3) / 4)) {
    throw Error(ErrorKind::invalid, "twin prime power set failed the difference-set check");
  }
  ElementSet rest;
  for (const auto& x : g.elements()) {
    if (!std::binary_search(d.begin(), d.end(), x)) rest.push_back(x);
  }
  const std::int64_t lambda = (v + 1) / 4;
  return DiffFamily(g, {d, rest}, {lambda, lambda});
}

DiffFamily m3_prime_power(std::int64_t v) {
  require_prime_power(v, ErrorKind::hypothesis_violation);
  if (v % 4 != 3) throw Error(ErrorKind::hypothesis_violation, "m3_prime_power needs v = 3 mod 4");
  const auto field = make_field(v);
  const AdditiveEmbedding emb(field);
  std::vector<GroupElement> even, odd;
  // Exponents 0..(v-3)/2 give (v-1)/2 elements per class.
  for (std::int64_t i = 0; i <= (v - 3) / 2; ++i) {
    even.push_back(emb.to_group(field.primitive_power(static_cast<std::uint64_t>(2 * i))));
    odd.push_back(emb.to_group(field.primitive_power(static_cast<std::uint64_t>(2 * i + 1))));
  }
  const std::int64_t lambda = (v + 1) / 4;
  return DiffFamily(emb.group(),
                    {ElementSet{emb.group().zero()}, make_set(std::move(even)), make_set(std::move(odd))},
                    {1, lambda, lambda});
}

DiffFamily q4_lift(std::int64_t q, std::span<const std::int64_t> p_list) {
  DiffFamily f = paley_even(q);
  for (auto p : p_list) f = lift(f, p);
  return f;
}

DiffFamily family_4m1(std::int64_t m, std::span<const std::int64_t> p_list) {
  if (m < 1) throw Error(ErrorKind::not_constructible, "family_4m1 needs m >= 1");
  const std::int64_t n = 4 * m - 1;
  std::optional<DiffFamily> base;
  if (arith::is_prime_power(n)) {
    base = swapped(paley_odd(n));
  } else {
    // 4m - 1 = q(q + 2) forces m = s^2 and q = 2s - 1.
    const auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(m))));
    const std::int64_t q = 2 * s - 1;
    if (s * s == m && q >= 3 && arith::is_prime_power(q) && arith::is_prime_power(q + 2)) {
      base = swapped(twin_prime(q));
    }
  }
  if (!base) {
    throw Error(ErrorKind::not_constructible,
                std::to_string(n) + " is neither a prime power nor a twin prime power product");
  }
  DiffFamily f = *base;
  for (auto p : p_list) f = lift(f, p);
  return f;
}

// ------------------------------------------------------------------- recipes

namespace {

constexpr std::array<std::pair<RecipeName, std::string_view>, 10> kRecipeNames{{
    {RecipeName::c1, "c1"},
    {RecipeName::lift, "lift"},
    {RecipeName::paley_even, "paley_even"},
    {RecipeName::paley_odd, "paley_odd"},
    {RecipeName::two_n, "two_n"},
    {RecipeName::g16, "g16"},
    {RecipeName::twin_prime, "twin_prime"},
    {RecipeName::m3_prime_power, "m3_prime_power"},
    {RecipeName::q4_lift, "q4_lift"},
    {RecipeName::family_4m1, "family_4m1"},
}};

}  // namespace

std::string_view to_string(RecipeName name) {
  for (auto [n, s] : kRecipeNames) {
    if (n == name) return s;
  }
  return "unknown";
}

std::optional<RecipeName> recipe_from_string(std::string_view name) {
  for (auto [n, s] : kRecipeNames) {
    if (s == name) return n;
  }
  return std::nullopt;
}

void ConstructionRecipe::validate() const {
  const std::size_t n = args.size();
  bool ok = true;
  switch (name) {
    case RecipeName::c1: ok = n == 2; break;
    case RecipeName::lift: ok = n == 1 && base != nullptr; break;
    case RecipeName::g16: ok = n == 0; break;
    case RecipeName::paley_even:
    case RecipeName::paley_odd:
    case RecipeName::twin_prime:
    case RecipeName::m3_prime_power: ok = n == 1; break;
    case RecipeName::two_n:
    case RecipeName::q4_lift:
    case RecipeName::family_4m1: ok = n >= 1; break;
  }
  if (name != RecipeName::lift && base != nullptr) ok = false;
  if (!ok) {
    throw Error(ErrorKind::invalid,
                "wrong arguments for recipe " + std::string(to_string(name)));
  }
}

DiffFamily build(const ConstructionRecipe& recipe) {
  recipe.validate();
  const auto& a = recipe.args;
  const std::span<const std::int64_t> tail =
      a.empty() ? std::span<const std::int64_t>{} : std::span<const std::int64_t>(a).subspan(1);
  switch (recipe.name) {
    case RecipeName::c1: return c1(a[0], a[1]);
    case RecipeName::lift: return lift(build(*recipe.base), a[0]);
    case RecipeName::paley_even: return paley_even(a[0]);
    case RecipeName::paley_odd: return paley_odd(a[0]);
    case RecipeName::two_n: return two_n(a);
    case RecipeName::g16: return g16();
    case RecipeName::twin_prime: return twin_prime(a[0]);
    case RecipeName::m3_prime_power: return m3_prime_power(a[0]);
    case RecipeName::q4_lift: return q4_lift(a[0], tail);
    case RecipeName::family_4m1: return family_4m1(a[0], tail);
  }
  throw Error(ErrorKind::invalid, "unknown recipe");
}

}  // namespace gsedf
