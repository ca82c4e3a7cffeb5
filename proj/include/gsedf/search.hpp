#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gsedf/feasibility.hpp"
#include "gsedf/group.hpp"
#include "gsedf/verify.hpp"

namespace gsedf {

enum class SearchStatus { found, exhausted, budget_exceeded };

std::string_view to_string(SearchStatus s);

/// Symmetries the search quotients out; reported with every outcome so an
/// exhaustion certificate states exactly what was covered.
inline constexpr std::string_view kSymmetryDeclaration =
    "translation: 0 forced into D_1; permutation: sets with equal (k, lambda) ordered by least "
    "element; elements ascending within each set; group automorphisms not used";

struct SearchOutcome {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<DiffFamily> family;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{};
  AbelianGroup group;
  ParamTuple params;  // lambdas always filled
};

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000'000;

struct SearchOptions {
  std::uint64_t budget = kDefaultSearchBudget;  // placement attempts
  unsigned workers = 1;
};

/// Depth-first search for a family with parameters t in g. Sets are filled in
/// index order with ascending elements; per-set difference counts are kept
/// incrementally and branches die as soon as a count passes lambda_i or a
/// deficit can no longer be repaired. Node counts and the reported family do
/// not depend on the number of workers.
///
/// Throws rejected-before-search when t fails the counting relation or
/// sum k > v, and invalid when |g| != v.
SearchOutcome exhaustive_search(const AbelianGroup& g, const ParamTuple& t,
                                const SearchOptions& options = {});

/// exhaustive_search over every group of order t.v, in abelian_groups_of_order order.
std::vector<SearchOutcome> search_all_groups(const ParamTuple& t, const SearchOptions& options = {});

/// found if any group found one, exhausted if every group exhausted,
/// budget_exceeded otherwise.
SearchStatus aggregate_status(const std::vector<SearchOutcome>& outcomes);

}  // namespace gsedf
