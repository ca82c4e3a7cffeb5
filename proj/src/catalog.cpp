#include <string>
#include <vector>

#include "gsedf/feasibility.hpp"

namespace gsedf {

namespace {

struct Entry {
  ParamTuple params;
  FeasibilityVerdict verdict;
};

std::string ds_name(std::int64_t v, std::int64_t k, std::int64_t l) {
  return "no (" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(l) + ")-DS";
}

void add(std::vector<Entry>& table, std::int64_t v, std::vector<std::int64_t> ks,
         FeasibilityStatus status, std::string reason, std::string detail) {
  auto params = with_counting_lambdas(make_params(v, std::move(ks)));
  table.push_back({*params, {status, std::move(reason), std::move(detail)}});
}

std::vector<Entry> build_table() {
  std::vector<Entry> t;
  const auto exists = FeasibilityStatus::exists_by_construction;
  const auto denied = FeasibilityStatus::denied_by_catalog;
  const auto open = FeasibilityStatus::open;

  // m = 3, sizes (1, (v-1)/2, (v-1)/2), v = 3 mod 4, 3 < v < 100.
  for (std::int64_t v : {15, 35, 63, 99}) {
    add(t, v, {1, (v - 1) / 2, (v - 1) / 2}, open, "",
        "existence of the complementary difference sets is unresolved");
  }
  for (std::int64_t v : {39, 51, 55, 75, 87, 91, 95}) {
    add(t, v, {1, (v - 1) / 2, (v - 1) / 2}, denied, ds_name(v, (v - 1) / 2, (v - 3) / 4),
        "a partition of G needs each set to be a difference set; the middle one does not exist");
  }
  for (std::int64_t v : {7, 11, 19, 23, 27, 31, 43, 47, 59, 67, 71, 79, 83}) {
    add(t, v, {1, (v - 1) / 2, (v - 1) / 2}, exists, "m3_prime_power",
        "{0}, even powers and odd powers of a primitive element");
  }

  // m = 3, sum k = v, sqrt(v) < k1 < k2 < k3, v <= 200. The v = 85 entry is
  // stored as (21, 28, 36); it circulates misprinted as (85, 21, 28, 26).
  const std::vector<std::vector<std::int64_t>> partition_triples = {
      {31, 6, 10, 15},    {43, 7, 15, 21},    {67, 12, 22, 33},   {71, 15, 21, 35},
      {79, 13, 27, 39},   {85, 21, 28, 36},   {91, 10, 36, 45},   {103, 18, 34, 51},
      {106, 15, 21, 70},  {111, 11, 45, 55},  {115, 19, 39, 57},  {127, 28, 36, 63},
      {131, 26, 40, 65},  {133, 12, 33, 88},  {139, 24, 46, 69},  {151, 25, 51, 75},
      {155, 22, 56, 77},  {166, 45, 55, 66},  {171, 35, 51, 85},  {175, 30, 58, 87},
      {181, 36, 45, 100}, {183, 14, 78, 91},  {187, 31, 63, 93},  {191, 20, 76, 95},
      {199, 45, 55, 99},
  };
  for (const auto& row : partition_triples) {
    const std::int64_t v = row[0];
    std::string reason = "no difference set for one of the partition classes";
    if (v == 171) reason = ds_name(171, 35, 7);
    if (v == 175) reason = ds_name(175, 87, 43);
    add(t, v, {row[1], row[2], row[3]}, denied, reason,
        "a partition of G needs each set to be a difference set; at least one is known not to exist");
  }

  // m = 2, lambda >= 2, v <= 21.
  add(t, 21, {4, 10}, exists, "two_n", "two_n([7, 3])");
  add(t, 21, {8, 10}, exists, "family_4m1", "family_4m1(2, [3])");
  add(t, 15, {4, 7}, exists, "two_n", "two_n([5, 3])");
  add(t, 16, {5, 9}, exists, "g16", "explicit family in Z_2 x Z_8");
  add(t, 13, {4, 9}, exists, "difference-set partition", "(13,4,1)-DS and its complement");
  add(t, 15, {7, 8}, exists, "twin_prime", "twin_prime(3)");
  add(t, 16, {6, 10}, exists, "difference-set partition", "(16,6,2)-DS and its complement");
  add(t, 21, {5, 16}, exists, "difference-set partition", "(21,5,1)-DS and its complement");
  add(t, 7, {3, 4}, exists, "paley_odd", "paley_odd(7)");
  add(t, 9, {4, 4}, exists, "paley_even", "paley_even(9)");
  add(t, 11, {5, 6}, exists, "paley_odd", "paley_odd(11)");
  add(t, 13, {6, 6}, exists, "paley_even", "paley_even(13)");
  add(t, 17, {8, 8}, exists, "paley_even", "paley_even(17)");
  add(t, 19, {9, 10}, exists, "paley_odd", "paley_odd(19)");
  add(t, 21, {10, 10}, denied, "nonexistence of (21,2;10,10;5,5) from the literature",
      "ruled out by a published nonexistence result");
  const std::vector<std::vector<std::int64_t>> searched = {
      {10, 3, 6},  {11, 4, 5},  {13, 3, 8},  {13, 4, 6}, {15, 6, 7},  {16, 3, 10}, {16, 5, 6},
      {17, 4, 8},  {17, 4, 12}, {17, 6, 8},  {19, 3, 12}, {19, 4, 9}, {19, 6, 6},  {19, 6, 9},
      {19, 8, 9},  {21, 5, 8},  {21, 4, 15}, {21, 5, 12}, {21, 6, 10},
  };
  for (const auto& row : searched) {
    add(t, row[0], {row[1], row[2]}, denied, "exhaustive computer search",
        "no family found by exhaustive search");
  }
  return t;
}

}  // namespace

FeasibilityVerdict catalog_lookup(const ParamTuple& t) {
  static const std::vector<Entry> table = build_table();
  const auto full = with_counting_lambdas(t);
  if (!full) return {};
  for (const auto& e : table) {
    if (e.params == *full) return e.verdict;
  }
  return {};
}

}  // namespace gsedf
