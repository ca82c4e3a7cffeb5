#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gsedf {

/// Candidate parameters (v, m; k_1 <= ... <= k_m; lambda_1..lambda_m),
/// independent of any group. `lambdas` may be empty, meaning "not declared";
/// the counting relation then supplies them where needed.
struct ParamTuple {
  std::int64_t v = 0;
  std::vector<std::int64_t> ks;
  std::vector<std::int64_t> lambdas;

  [[nodiscard]] std::size_t m() const { return ks.size(); }
  [[nodiscard]] std::int64_t k_total() const;

  auto operator<=>(const ParamTuple&) const = default;
};

/// Validates (m >= 2, k_i >= 1, lambda_i >= 1 when given) and sorts ks
/// ascending, carrying declared lambdas along (ties broken by lambda).
ParamTuple make_params(std::int64_t v, std::vector<std::int64_t> ks,
                       std::vector<std::int64_t> lambdas = {});

/// lambda_i = k_i (k - k_i) / (v - 1) when every value is a positive integer.
std::optional<std::vector<std::int64_t>> counting_solve(std::int64_t v,
                                                        std::span<const std::int64_t> ks);

/// ParamTuple with lambdas filled from the counting relation when undeclared.
std::optional<ParamTuple> with_counting_lambdas(const ParamTuple& t);

enum class FeasibilityStatus { ruled_out, exists_by_construction, denied_by_catalog, open };

std::string_view to_string(FeasibilityStatus s);

struct FeasibilityVerdict {
  FeasibilityStatus status = FeasibilityStatus::open;
  std::string reason;  // stage name, recipe, or catalog citation; empty only when open
  std::string detail;  // human-readable explanation
};

/// Stage names reported by rule_out, in the order the filters run.
namespace stage {
inline constexpr std::string_view counting = "counting";
inline constexpr std::string_view lambda_equality = "lambda-equality";
inline constexpr std::string_view lambda_order = "lambda-order";
inline constexpr std::string_view lambda_strict_sum = "lambda-strict-sum";
inline constexpr std::string_view lambda_below_k = "lambda-below-k";
inline constexpr std::string_view all_lambda_one = "all-lambda-one";
inline constexpr std::string_view m3_sum_below_v = "m3-sum-below-v";
inline constexpr std::string_view m3_sum_equals_v_shape = "m3-sum-equals-v-shape";
inline constexpr std::string_view v_prime_plus_one = "v-prime-plus-one";
inline constexpr std::string_view v_two_primes_plus_one = "v-two-primes-plus-one";
}  // namespace stage

/// Runs the nonexistence filters in fixed order and reports the first one
/// that fires (status ruled_out, reason = stage name); otherwise open.
FeasibilityVerdict rule_out(const ParamTuple& t);

enum class KLowerBound { none, greater_than_one, greater_than_sqrt_v };

struct EnumerationConstraints {
  std::int64_t lambda_min = 1;
  bool sum_k_eq_v = false;
  KLowerBound k1_bound = KLowerBound::none;
  bool strictly_increasing = false;
  unsigned workers = 1;
};

inline constexpr std::int64_t kDefaultEnumerationBound = 10000;

/// The constraint set matching the m = 3, sum k = v list: sqrt(v) < k_1 < k_2 < k_3.
EnumerationConstraints m3_partition_constraints();

/// All counting-feasible tuples with 2 <= v <= v_max, sum k <= v, meeting the
/// constraints, sorted by (v, ks). Throws too-large above the default bound.
std::vector<ParamTuple> enumerate_params(std::int64_t v_max, std::size_t m,
                                         const EnumerationConstraints& constraints);

/// Statuses asserted for specific tuples, keyed by exact (v, ks, lambdas).
/// Undeclared lambdas are filled by counting before the lookup.
FeasibilityVerdict catalog_lookup(const ParamTuple& t);

/// rule_out, then catalog_lookup when the filters leave the tuple open.
FeasibilityVerdict classify(const ParamTuple& t);

/// Numeric probe of the sign-pattern equations
///   sum_j 1/2 (1 + eps_j sqrt(1 + c lambda_j)) = 1
/// over c in [4/k^2, c_max].
struct AlphaPattern {
  std::vector<int> signs;  // +1 / -1 per lambda
  bool root_found = false;
  std::vector<std::pair<double, double>> brackets;  // refined sign-change brackets
};

struct AlphaReport {
  std::vector<std::int64_t> lambdas;
  double c_min = 0.0;
  double c_max = 0.0;
  std::size_t grid = 0;
  /// m = 2: the probe cannot indicate nonexistence; results are informational.
  bool informational = false;
  std::vector<AlphaPattern> patterns;

  [[nodiscard]] bool any_root() const;
};

inline constexpr double kDefaultAlphaCMax = 1e6;
inline constexpr std::size_t kDefaultAlphaGrid = 100000;

/// Scans every sign pattern except all-plus and all-minus on a geometric grid
/// of `grid` points, refining sign changes by bisection to relative width
/// 1e-12. Throws empty-range when c_max <= 4/k^2.
AlphaReport alpha_scan(std::span<const std::int64_t> lambdas, std::int64_t k,
                       double c_max = kDefaultAlphaCMax, std::size_t grid = kDefaultAlphaGrid);

}  // namespace gsedf
