#include "gsedf/feasibility.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "gsedf/arith.hpp"
#include "gsedf/error.hpp"

namespace gsedf {

std::int64_t ParamTuple::k_total() const { return std::accumulate(ks.begin(), ks.end(), std::int64_t{0}); }

std::string_view to_string(FeasibilityStatus s) {
  switch (s) {
    case FeasibilityStatus::ruled_out: return "ruled_out";
    case FeasibilityStatus::exists_by_construction: return "exists_by_construction";
    case FeasibilityStatus::denied_by_catalog: return "denied_by_catalog";
    case FeasibilityStatus::open: return "open";
  }
  return "open";
}

ParamTuple make_params(std::int64_t v, std::vector<std::int64_t> ks,
                       std::vector<std::int64_t> lambdas) {
  if (v < 1) throw Error(ErrorKind::invalid, "v must be positive");
  if (ks.size() < 2) throw Error(ErrorKind::invalid, "at least two set sizes are required");
  if (!lambdas.empty() && lambdas.size() != ks.size()) {
    throw Error(ErrorKind::invalid, "lambda list length must match the k list");
  }
  for (auto k : ks) {
    if (k < 1) throw Error(ErrorKind::invalid, "set sizes must be positive");
  }
  for (auto l : lambdas) {
    if (l < 1) throw Error(ErrorKind::invalid, "lambda values must be positive");
  }
  ParamTuple t{v, std::move(ks), std::move(lambdas)};
  if (t.lambdas.empty()) {
    std::sort(t.ks.begin(), t.ks.end());
  } else {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::size_t i = 0; i < t.ks.size(); ++i) pairs.emplace_back(t.ks[i], t.lambdas[i]);
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i < pairs.size(); ++i) std::tie(t.ks[i], t.lambdas[i]) = pairs[i];
  }
  return t;
}

std::optional<std::vector<std::int64_t>> counting_solve(std::int64_t v,
                                                        std::span<const std::int64_t> ks) {
  if (v < 2) return std::nullopt;
  const std::int64_t k = std::accumulate(ks.begin(), ks.end(), std::int64_t{0});
  std::vector<std::int64_t> lambdas;
  for (auto ki : ks) {
    const std::int64_t num = ki * (k - ki);
    if (num <= 0 || num % (v - 1) != 0) return std::nullopt;
    lambdas.push_back(num / (v - 1));
  }
  return lambdas;
}

std::optional<ParamTuple> with_counting_lambdas(const ParamTuple& t) {
  if (!t.lambdas.empty()) return t;
  auto l = counting_solve(t.v, t.ks);
  if (!l) return std::nullopt;
  ParamTuple out = t;
  out.lambdas = std::move(*l);
  return out;
}

namespace {

FeasibilityVerdict ruled(std::string_view stage_name, std::string detail) {
  return {FeasibilityStatus::ruled_out, std::string(stage_name), std::move(detail)};
}

bool is_product_of_two_distinct_primes(std::int64_t n) {
  const auto f = arith::factorize(n);
  return f.size() == 2 && f[0].second == 1 && f[1].second == 1;
}

}  // namespace

FeasibilityVerdict rule_out(const ParamTuple& t) {
  const std::int64_t v = t.v;
  const std::size_t m = t.m();
  const std::int64_t k = t.k_total();
  const auto& ks = t.ks;

  // counting
  if (k > v) return ruled(stage::counting, "sum of set sizes exceeds v");
  std::vector<std::int64_t> lambdas = t.lambdas;
  if (lambdas.empty()) {
    auto solved = counting_solve(v, ks);
    if (!solved) return ruled(stage::counting, "k_i (k - k_i) / (v - 1) is not a positive integer");
    lambdas = std::move(*solved);
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      if (lambdas[i] * (v - 1) != ks[i] * (k - ks[i])) {
        return ruled(stage::counting, "lambda_i (v - 1) != k_i (k - k_i) for i = " + std::to_string(i + 1));
      }
    }
  }

  if (m == 2 && lambdas[0] != lambdas[1]) {
    return ruled(stage::lambda_equality, "two-set families need lambda_1 = lambda_2");
  }

  if (m >= 3) {
    for (std::size_t i = 1; i < m; ++i) {
      if (lambdas[i] < lambdas[i - 1]) {
        return ruled(stage::lambda_order, "lambdas must be non-decreasing along sorted k");
      }
    }
    const std::int64_t head = std::accumulate(lambdas.begin(), lambdas.end() - 1, std::int64_t{0});
    if (head <= lambdas.back()) {
      return ruled(stage::lambda_strict_sum, "lambda_1 + ... + lambda_{m-1} must exceed lambda_m");
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (lambdas[i] > ks[i] || (k < v && lambdas[i] == ks[i])) {
        return ruled(stage::lambda_below_k, "lambda_i must stay below k_i");
      }
    }
  }

  if (std::all_of(lambdas.begin(), lambdas.end(), [](std::int64_t l) { return l == 1; })) {
    const bool pair = m == 2 && v == ks[0] * ks[1] + 1;
    const bool singletons = std::all_of(ks.begin(), ks.end(), [](std::int64_t x) { return x == 1; }) &&
                            v == static_cast<std::int64_t>(m);
    if (!pair && !singletons) {
      return ruled(stage::all_lambda_one,
                   "all-one lambdas need m = 2 with v = k_1 k_2 + 1, or singletons with v = m");
    }
  }

  if (m == 3 && k < v) return ruled(stage::m3_sum_below_v, "three sets with sum of k below v");

  if (m == 3 && k == v) {
    const std::set<std::int64_t> distinct(ks.begin(), ks.end());
    const bool has_one = ks[0] == 1;
    if (distinct.size() == 2 || has_one) {
      const bool shape = v % 4 == 3 && ks[0] == 1 && ks[1] == (v - 1) / 2 && ks[2] == (v - 1) / 2 &&
                         lambdas[0] == 1 && lambdas[1] == (v + 1) / 4 && lambdas[2] == (v + 1) / 4;
      if (!shape) {
        return ruled(stage::m3_sum_equals_v_shape,
                     "with a repeated size or a singleton, only (1, (v-1)/2, (v-1)/2), v = 3 mod 4, remains");
      }
    }
  }

  if (arith::is_prime(v - 1) && k <= v - 1) {
    return ruled(stage::v_prime_plus_one, "v - 1 is prime and k <= v - 1");
  }

  if (m >= 3 && is_product_of_two_distinct_primes(v - 1) && k <= v - 1) {
    return ruled(stage::v_two_primes_plus_one, "v - 1 = p1 p2 with distinct primes, m >= 3 and k <= v - 1");
  }

  return {};
}

EnumerationConstraints m3_partition_constraints() {
  EnumerationConstraints c;
  c.sum_k_eq_v = true;
  c.k1_bound = KLowerBound::greater_than_sqrt_v;
  c.strictly_increasing = true;
  return c;
}

namespace {

void enumerate_sizes(std::int64_t v, std::size_t m, const EnumerationConstraints& c,
                     std::vector<std::int64_t>& current, std::int64_t used,
                     std::vector<ParamTuple>& out) {
  const std::size_t depth = current.size();
  std::int64_t lo = 1;
  if (depth == 0) {
    if (c.k1_bound == KLowerBound::greater_than_one) lo = 2;
    if (c.k1_bound == KLowerBound::greater_than_sqrt_v) {
      while (lo * lo <= v) ++lo;
    }
  } else {
    lo = current.back() + (c.strictly_increasing ? 1 : 0);
  }
  const auto remaining_slots = static_cast<std::int64_t>(m - depth);

  if (remaining_slots == 1 && c.sum_k_eq_v) {
    const std::int64_t last = v - used;
    if (last >= lo) {
      current.push_back(last);
      if (auto l = counting_solve(v, current)) {
        if (std::all_of(l->begin(), l->end(), [&](std::int64_t x) { return x >= c.lambda_min; })) {
          out.push_back({v, current, *l});
        }
      }
      current.pop_back();
    }
    return;
  }

  // Later sizes are at least this one, so x * remaining_slots must still fit.
  for (std::int64_t x = lo; used + x * remaining_slots <= v; ++x) {
    current.push_back(x);
    if (remaining_slots == 1) {
      if (auto l = counting_solve(v, current)) {
        if (std::all_of(l->begin(), l->end(), [&](std::int64_t y) { return y >= c.lambda_min; })) {
          out.push_back({v, current, *l});
        }
      }
    } else {
      enumerate_sizes(v, m, c, current, used + x, out);
    }
    current.pop_back();
  }
}

}  // namespace

std::vector<ParamTuple> enumerate_params(std::int64_t v_max, std::size_t m,
                                         const EnumerationConstraints& constraints) {
  if (v_max > kDefaultEnumerationBound) {
    throw Error(ErrorKind::too_large, "enumeration bound is " + std::to_string(kDefaultEnumerationBound));
  }
  if (m < 2) throw Error(ErrorKind::invalid, "m must be at least 2");

  const unsigned workers = std::max(1U, constraints.workers);
  std::vector<std::vector<ParamTuple>> partial(workers);
  auto work = [&](unsigned w) {
    std::vector<std::int64_t> current;
    for (std::int64_t v = 2 + w; v <= v_max; v += workers) {
      enumerate_sizes(v, m, constraints, current, 0, partial[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }

  std::vector<ParamTuple> out;
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(), [](const ParamTuple& a, const ParamTuple& b) {
    return std::tie(a.v, a.ks) < std::tie(b.v, b.ks);
  });
  return out;
}

FeasibilityVerdict classify(const ParamTuple& t) {
  auto verdict = rule_out(t);
  if (verdict.status != FeasibilityStatus::open) return verdict;
  return catalog_lookup(t);
}

}  // namespace gsedf
