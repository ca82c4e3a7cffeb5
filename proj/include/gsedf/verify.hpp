#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gsedf/group.hpp"

namespace gsedf {

/// m pairwise-disjoint nonempty subsets D_1..D_m of a group with declared
/// multiplicities lambda_1..lambda_m. The constructor canonicalizes each set
/// (ascending element order) and enforces the structural invariants; the
/// difference property itself is only established by verify_gsedf.
class DiffFamily {
 public:
  /// Throws invalid (m < 2, empty set, lambda < 1, arity mismatch, duplicate
  /// element), wrong-group, or not-disjoint.
  DiffFamily(AbelianGroup group, std::vector<ElementSet> sets, std::vector<std::int64_t> lambdas);

  [[nodiscard]] const AbelianGroup& group() const { return group_; }
  [[nodiscard]] const std::vector<ElementSet>& sets() const { return sets_; }
  [[nodiscard]] const std::vector<std::int64_t>& lambdas() const { return lambdas_; }
  [[nodiscard]] std::size_t m() const { return sets_.size(); }
  [[nodiscard]] std::int64_t v() const { return static_cast<std::int64_t>(group_.order()); }
  [[nodiscard]] std::vector<std::int64_t> ks() const;
  [[nodiscard]] std::int64_t k_total() const;

  /// D = union of the D_i, ascending.
  [[nodiscard]] ElementSet support() const;

  bool operator==(const DiffFamily&) const = default;

 private:
  AbelianGroup group_;
  std::vector<ElementSet> sets_;
  std::vector<std::int64_t> lambdas_;
};

struct Violation {
  std::size_t index;  // 0-based set index i
  GroupElement element;
  std::int64_t observed;
  std::int64_t expected;
};

struct VerifyReport {
  bool is_gsedf = false;
  /// For each i, the multiset union over j != i of Delta(D_i, D_j).
  std::vector<Multiset> per_index_counts;
  /// First mismatch scanning i ascending, then elements in canonical order.
  std::optional<Violation> first_violation;
};

/// Exact check that every nonzero element occurs lambda_i times (and 0 never)
/// in the union over j != i of Delta(D_i, D_j), for every i.
VerifyReport verify_gsedf(const DiffFamily& f);

/// Delta(D, D) == k{0} + lambda (G \ {0}). Returns false when |D| != k.
bool verify_ds(const AbelianGroup& g, const ElementSet& d, std::int64_t k, std::int64_t lambda);

/// Delta(D, D) == k{0} + lambda (D \ {0}) + mu (G \ (D u {0})). Returns false when |D| != k.
bool verify_pds(const AbelianGroup& g, const ElementSet& d, std::int64_t k, std::int64_t lambda,
                std::int64_t mu);

enum class PartitionShape { none, whole_group, nonzero_elements };

PartitionShape partition_shape(const DiffFamily& f);

/// For a family partitioning G (resp. G \ {0}), whether verify_gsedf agrees
/// with every D_i being a (v, k_i, k_i - lambda_i)-DS
/// (resp. (v, k_i, k_i - lambda_i - 1, k_i - lambda_i)-PDS).
/// Throws not-applicable for any other shape.
bool partition_equivalence_check(const DiffFamily& f);

inline double default_spectral_tol(const DiffFamily& f) { return 1e-6 * static_cast<double>(f.v()); }

/// Largest |chi(D_j) conj(chi(D)) - |chi(D_j)|^2 + lambda_j| over all
/// non-principal characters chi and all j.
double spectral_deviation(const DiffFamily& f);

/// Character-sum form of the GSEDF condition: spectral_deviation <= tol and
/// the principal-character counting identity holds exactly. Advisory only;
/// verify_gsedf is authoritative.
bool spectral_verify(const DiffFamily& f, double tol);

/// True iff no D_i lies inside a coset of a proper subgroup.
/// Throws not-applicable when the sets cover the whole group.
bool coset_check(const DiffFamily& f);

}  // namespace gsedf
