#include "doctest.h"
#include "gsedf/construct.hpp"
#include "gsedf/error.hpp"
#include "gsedf/feasibility.hpp"
#include "gsedf/verify.hpp"
#include "oracle.hpp"

using namespace gsedf;

namespace {

GroupElement e(std::initializer_list<int> c) { return GroupElement{std::vector<int>(c)}; }

ElementSet cyc(std::initializer_list<int> xs) {
  ElementSet s;
  for (int x : xs) s.push_back(e({x}));
  return s;
}

ErrorKind kind_of(auto fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.kind();
  }
  return ErrorKind::usage;
}

struct Shape {
  std::int64_t v;
  std::vector<std::int64_t> ks;
  std::vector<std::int64_t> lambdas;
};

Shape shape(const DiffFamily& f) { return {f.v(), f.ks(), f.lambdas()}; }

void check_shape(const DiffFamily& f, std::int64_t v, std::vector<std::int64_t> ks,
                 std::vector<std::int64_t> lambdas) {
  const auto s = shape(f);
  CHECK(s.v == v);
  CHECK(s.ks == ks);
  CHECK(s.lambdas == lambdas);
}

void check_family(const DiffFamily& f) {
  CHECK(verify_gsedf(f).is_gsedf);
  CHECK(oracle::is_gsedf(f));
  if (f.m() == 2) CHECK(f.lambdas()[0] == f.lambdas()[1]);
  if (f.k_total() < f.v()) {
    for (std::size_t i = 0; i < f.m(); ++i) CHECK(f.lambdas()[i] < f.ks()[i]);
  }
  const auto t = make_params(f.v(), f.ks(), f.lambdas());
  CHECK(rule_out(t).status != FeasibilityStatus::ruled_out);
}

}  // namespace

TEST_CASE("c1") {
  const auto f = c1(2, 3);
  CHECK(f.v() == 7);
  CHECK(f.sets()[0] == cyc({0, 1}));
  CHECK(f.sets()[1] == cyc({2, 4, 6}));
  const auto tiny = c1(1, 1);
  CHECK(tiny.v() == 2);
  CHECK(tiny.sets()[0] == cyc({0}));
  CHECK(tiny.sets()[1] == cyc({1}));
  check_family(c1(3, 4));
  for (std::int64_t a = 1; a <= 8; ++a) {
    for (std::int64_t b = 1; b <= 8; ++b) {
      const auto g = c1(a, b);
      check_shape(g, a * b + 1, {a, b}, {1, 1});
      check_family(g);
    }
  }
  CHECK(kind_of([] { (void)c1(0, 3); }) == ErrorKind::invalid);
}

TEST_CASE("lift follows the displayed formulas") {
  const auto f = lift(c1(2, 2), 3);
  const ProductIsomorphism iso({5, 3});
  auto img = [&](std::int64_t x, std::int64_t j) {
    const std::vector<std::int64_t> c{x, j};
    return iso.map(c);
  };
  const ElementSet d1 = make_set({img(0, 0), img(0, 1), img(1, 0), img(1, 1)});
  const ElementSet d2 = make_set({img(2, 0), img(4, 0), img(2, 1), img(4, 1), img(0, 2), img(1, 2), img(3, 2)});
  CHECK(f.group() == iso.group());
  CHECK(f.sets()[0] == d1);
  CHECK(f.sets()[1] == d2);
  CHECK(f.lambdas() == std::vector<std::int64_t>{2, 2});
  check_family(f);

  const auto g = lift(c1(2, 3), 3);
  check_shape(g, 21, {4, 10}, {2, 2});
  check_family(g);

  CHECK(kind_of([] { (void)lift(paley_odd(7), 3); }) == ErrorKind::not_liftable);
  CHECK(kind_of([] { (void)lift(c1(2, 2), 4); }) == ErrorKind::hypothesis_violation);
  CHECK(kind_of([] { (void)lift(c1(2, 2), 1); }) == ErrorKind::hypothesis_violation);
  CHECK(kind_of([] { (void)lift(g16(), 3); }) == ErrorKind::hypothesis_violation);
  CHECK(kind_of([] { (void)lift(m3_prime_power(7), 3); }) == ErrorKind::not_liftable);
}

TEST_CASE("paley families") {
  const auto p5 = paley_even(5);
  CHECK(p5.sets()[0] == cyc({1, 4}));
  CHECK(p5.sets()[1] == cyc({2, 3}));
  check_shape(p5, 5, {2, 2}, {1, 1});
  check_shape(paley_even(13), 13, {6, 6}, {3, 3});
  const auto p9 = paley_even(9);
  CHECK(p9.group().invariant_factors() == std::vector<int>{3, 3});
  check_shape(p9, 9, {4, 4}, {2, 2});

  const auto p7 = paley_odd(7);
  CHECK(p7.sets()[0] == cyc({1, 2, 4}));
  check_shape(p7, 7, {3, 4}, {2, 2});
  check_shape(paley_odd(11), 11, {5, 6}, {3, 3});
  check_shape(paley_odd(19), 19, {9, 10}, {5, 5});

  for (std::int64_t q = 3; q <= 200; ++q) {
    if (!oracle::is_prime_power(q) || q % 2 == 0) continue;
    const auto f = q % 4 == 1 ? paley_even(q) : paley_odd(q);
    check_family(f);
  }
  CHECK(kind_of([] { (void)paley_even(7); }) == ErrorKind::hypothesis_violation);
  CHECK(kind_of([] { (void)paley_odd(13); }) == ErrorKind::hypothesis_violation);
  CHECK(kind_of([] { (void)paley_even(21); }) == ErrorKind::not_prime_power);
}

TEST_CASE("two_n") {
  const std::vector<std::int64_t> p53{5, 3};
  check_shape(two_n(p53), 15, {4, 7}, {2, 2});
  const std::vector<std::int64_t> p7{7};
  CHECK(two_n(p7) == c1(2, 3));
  const std::vector<std::int64_t> p33{3, 3};
  const auto f33 = two_n(p33);
  check_shape(f33, 9, {4, 4}, {2, 2});
  CHECK(verify_gsedf(f33).is_gsedf == oracle::is_gsedf(f33));
  const std::vector<std::int64_t> p335{3, 3, 5};
  check_shape(two_n(p335), 45, {8, 22}, {4, 4});
  const std::vector<std::int64_t> even{5, 4};
  CHECK(kind_of([&] { (void)two_n(even); }) == ErrorKind::hypothesis_violation);
  CHECK(kind_of([] { (void)two_n({}); }) == ErrorKind::hypothesis_violation);
}

TEST_CASE("g16") {
  const auto f = g16();
  CHECK(f.group().invariant_factors() == std::vector<int>{2, 8});
  CHECK(f.sets()[0] == ElementSet{e({0, 0}), e({0, 1}), e({0, 3}), e({1, 0}), e({1, 4})});
  CHECK(std::binary_search(f.sets()[1].begin(), f.sets()[1].end(), e({1, 6})));
  check_shape(f, 16, {5, 9}, {3, 3});
  check_family(f);
  CHECK(spectral_verify(f, 1e-6));
}

TEST_CASE("twin prime powers") {
  check_shape(twin_prime(3), 15, {7, 8}, {4, 4});
  check_shape(twin_prime(5), 35, {17, 18}, {9, 9});
  check_shape(twin_prime(7), 63, {31, 32}, {16, 16});
  for (std::int64_t q : {3, 5, 9}) check_family(twin_prime(q));
  AbelianGroup g;
  const auto d = twin_prime_difference_set(5, &g);
  CHECK(verify_ds(g, d, 17, 8));
  CHECK(kind_of([] { (void)twin_prime(13); }) == ErrorKind::not_twin_prime_powers);
  CHECK(kind_of([] { (void)twin_prime(2); }) == ErrorKind::not_twin_prime_powers);
}

TEST_CASE("m3_prime_power") {
  const auto f = m3_prime_power(7);
  CHECK(f.sets()[0] == cyc({0}));
  CHECK(f.sets()[1] == cyc({1, 2, 4}));
  CHECK(f.sets()[2] == cyc({3, 5, 6}));
  CHECK(f.lambdas() == std::vector<std::int64_t>{1, 2, 2});
  check_shape(m3_prime_power(3), 3, {1, 1, 1}, {1, 1, 1});
  check_shape(m3_prime_power(11), 11, {1, 5, 5}, {1, 3, 3});
  for (std::int64_t v : {3, 7, 11, 19, 23, 27, 31, 43}) check_family(m3_prime_power(v));
  CHECK(kind_of([] { (void)m3_prime_power(5); }) == ErrorKind::hypothesis_violation);
  CHECK(kind_of([] { (void)m3_prime_power(15); }) == ErrorKind::hypothesis_violation);
}

TEST_CASE("q4_lift and family_4m1") {
  const std::vector<std::int64_t> p3{3};
  const std::vector<std::int64_t> p35{3, 5};
  check_shape(q4_lift(5, p3), 15, {4, 7}, {2, 2});
  check_shape(q4_lift(13, p3), 39, {12, 19}, {6, 6});
  check_shape(q4_lift(5, p35), 75, {8, 37}, {4, 4});
  check_family(q4_lift(13, p3));

  check_shape(family_4m1(2, {}), 7, {4, 3}, {2, 2});
  CHECK(family_4m1(2, {}).sets()[0].size() == 4);
  check_shape(family_4m1(4, {}), 15, {8, 7}, {4, 4});
  CHECK(family_4m1(4, {}).sets()[0].size() == 8);
  check_shape(family_4m1(2, p3), 21, {8, 10}, {4, 4});
  check_family(family_4m1(2, p3));
  check_family(family_4m1(9, {}));
  CHECK(kind_of([] { (void)family_4m1(10, {}); }) == ErrorKind::not_constructible);
}

TEST_CASE("recipes") {
  for (auto name : {RecipeName::c1, RecipeName::lift, RecipeName::paley_even, RecipeName::paley_odd,
                    RecipeName::two_n, RecipeName::g16, RecipeName::twin_prime, RecipeName::m3_prime_power,
                    RecipeName::q4_lift, RecipeName::family_4m1}) {
    CHECK(recipe_from_string(to_string(name)) == name);
  }
  CHECK_FALSE(recipe_from_string("nope").has_value());

  ConstructionRecipe r{RecipeName::c1, {2, 3}, nullptr};
  CHECK(build(r) == c1(2, 3));
  ConstructionRecipe lifted{RecipeName::lift, {3}, std::make_shared<const ConstructionRecipe>(r)};
  CHECK(build(lifted) == lift(c1(2, 3), 3));
  ConstructionRecipe q4{RecipeName::q4_lift, {5, 3}, nullptr};
  CHECK(build(q4) == q4_lift(5, std::vector<std::int64_t>{3}));
  ConstructionRecipe bad{RecipeName::c1, {2}, nullptr};
  CHECK(kind_of([&] { (void)build(bad); }) == ErrorKind::invalid);
  ConstructionRecipe no_base{RecipeName::lift, {3}, nullptr};
  CHECK(kind_of([&] { (void)build(no_base); }) == ErrorKind::invalid);
}
