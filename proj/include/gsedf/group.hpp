#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

namespace gsedf {

/// An element of an AbelianGroup as a mixed-radix coordinate tuple;
/// coords[i] lies in [0, d_i). Ordering is lexicographic, which coincides
/// with the canonical element index order of the owning group.
struct GroupElement {
  std::vector<int> coords;

  auto operator<=>(const GroupElement&) const = default;
};

/// Sorted, duplicate-free list of elements.
using ElementSet = std::vector<GroupElement>;

/// Finite abelian group Z_{d_1} x ... x Z_{d_r} in invariant-factor form
/// (d_1 | d_2 | ... | d_r, every d_i >= 2). The empty factor list is the
/// trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  /// Builds the group from arbitrary cyclic factors, normalizing to
  /// invariant-factor form. Throws invalid-factors for entries < 2.
  static AbelianGroup make(std::span<const std::int64_t> factors);
  static AbelianGroup make(std::initializer_list<std::int64_t> factors) {
    return make(std::span<const std::int64_t>(factors.begin(), factors.size()));
  }

  [[nodiscard]] const std::vector<int>& invariant_factors() const { return factors_; }
  [[nodiscard]] std::size_t order() const { return order_; }
  [[nodiscard]] std::size_t num_factors() const { return factors_.size(); }

  /// Largest invariant factor (1 for the trivial group).
  [[nodiscard]] int exponent() const { return factors_.empty() ? 1 : factors_.back(); }

  [[nodiscard]] bool contains(const GroupElement& x) const;
  /// Throws wrong-group unless contains(x).
  void require(const GroupElement& x) const;

  [[nodiscard]] GroupElement zero() const;
  [[nodiscard]] GroupElement add(const GroupElement& a, const GroupElement& b) const;
  [[nodiscard]] GroupElement neg(const GroupElement& a) const;
  [[nodiscard]] GroupElement sub(const GroupElement& a, const GroupElement& b) const;

  /// Canonical rank of x in mixed-radix order (first coordinate most significant).
  [[nodiscard]] std::size_t index_of(const GroupElement& x) const;
  [[nodiscard]] GroupElement element_at(std::size_t index) const;
  [[nodiscard]] std::vector<GroupElement> elements() const;

  /// Unit vector of the i-th invariant factor.
  [[nodiscard]] GroupElement generator(std::size_t i) const;

  // Arithmetic directly on canonical indices.
  [[nodiscard]] std::size_t add_index(std::size_t a, std::size_t b) const;
  [[nodiscard]] std::size_t sub_index(std::size_t a, std::size_t b) const;

  bool operator==(const AbelianGroup& other) const { return factors_ == other.factors_; }

 private:
  explicit AbelianGroup(std::vector<int> factors);

  std::vector<int> factors_;
  std::vector<std::size_t> strides_;
  std::size_t order_ = 1;

  friend class ProductIsomorphism;
};

inline AbelianGroup make_group(std::span<const std::int64_t> factors) {
  return AbelianGroup::make(factors);
}

/// Isomorphism from a direct product Z_{n_1} x ... x Z_{n_k} (arbitrary n_i >= 2)
/// onto its invariant-factor normal form, assembled from the prime-power
/// components of each factor via the Chinese remainder theorem.
class ProductIsomorphism {
 public:
  explicit ProductIsomorphism(std::vector<std::int64_t> factors);

  [[nodiscard]] const AbelianGroup& group() const { return group_; }
  [[nodiscard]] const std::vector<std::int64_t>& product_factors() const { return factors_; }

  /// Image of the product element with the given coordinates (reduced mod n_i).
  [[nodiscard]] GroupElement map(std::span<const std::int64_t> coords) const;

 private:
  struct Component {
    std::size_t source;   // index into the product factors
    std::size_t target;   // index into the invariant factors
    std::int64_t modulus; // prime power p^e
    std::int64_t weight;  // CRT idempotent inside Z_{d_target}
  };

  std::vector<std::int64_t> factors_;
  std::vector<Component> components_;
  AbelianGroup group_;
};

/// Multiset of group elements.
class Multiset {
 public:
  void add(const GroupElement& x, std::int64_t times = 1);
  [[nodiscard]] std::int64_t count(const GroupElement& x) const;
  [[nodiscard]] std::int64_t total() const { return total_; }
  [[nodiscard]] const std::map<GroupElement, std::int64_t>& counts() const { return counts_; }

  bool operator==(const Multiset& other) const { return counts_ == other.counts_; }

 private:
  std::map<GroupElement, std::int64_t> counts_;
  std::int64_t total_ = 0;
};

/// Sorts and deduplicates a list of elements into an ElementSet.
ElementSet make_set(std::vector<GroupElement> elements);

/// The multiset {a - b : a in A, b in B}.
Multiset delta(const AbelianGroup& g, std::span<const GroupElement> a,
               std::span<const GroupElement> b);

/// One representative per isomorphism class of abelian groups of order v.
/// Primes vary in ascending order, the first prime slowest; exponent
/// partitions are taken largest-first.
std::vector<AbelianGroup> abelian_groups_of_order(std::int64_t v);

inline constexpr std::size_t kDefaultSubgroupBound = 10000;

/// All proper subgroups as explicit element sets, ordered by (size, elements).
/// Throws too-large when the group order exceeds `bound`.
std::vector<ElementSet> proper_subgroups(const AbelianGroup& g,
                                         std::size_t bound = kDefaultSubgroupBound);

/// The subgroup generated by `generators`.
ElementSet generated_subgroup(const AbelianGroup& g, std::span<const GroupElement> generators);

/// Translate of a set by g.
ElementSet translate(const AbelianGroup& g, std::span<const GroupElement> set,
                     const GroupElement& shift);

}  // namespace gsedf
