#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "gsedf/group.hpp"

namespace gsedf {

/// Element of GF(p^n), stored by its code sum_i c_i p^i over the polynomial
/// coefficients c_0..c_{n-1}. Code order is the coefficient order used for
/// every "least" choice in this module (highest-degree coefficient most
/// significant).
struct FieldElement {
  std::uint32_t code = 0;

  auto operator<=>(const FieldElement&) const = default;
};

inline constexpr std::int64_t kDefaultFieldBound = std::int64_t{1} << 20;

/// GF(q) with a deterministic modulus (least monic irreducible of degree n)
/// and primitive element (least element of multiplicative order q - 1).
/// Cheap to copy; the log/antilog tables are shared.
class FiniteField {
 public:
  /// Throws not-prime-power, or too-large when q exceeds `bound`.
  static FiniteField make(std::int64_t q, std::int64_t bound = kDefaultFieldBound);

  [[nodiscard]] int characteristic() const { return p_; }
  [[nodiscard]] int degree() const { return n_; }
  [[nodiscard]] std::uint32_t order() const { return q_; }

  /// Modulus coefficients c_0..c_n (monic, so c_n == 1).
  [[nodiscard]] const std::vector<int>& modulus() const { return modulus_; }
  [[nodiscard]] FieldElement primitive() const { return primitive_; }

  [[nodiscard]] FieldElement zero() const { return {0}; }
  [[nodiscard]] FieldElement one() const { return {1}; }
  [[nodiscard]] std::vector<FieldElement> elements() const;

  [[nodiscard]] std::vector<int> coefficients(FieldElement a) const;
  [[nodiscard]] FieldElement from_coefficients(std::span<const int> coeffs) const;

  [[nodiscard]] FieldElement add(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement neg(FieldElement a) const;
  [[nodiscard]] FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  [[nodiscard]] FieldElement mul(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement pow(FieldElement a, std::uint64_t e) const;
  [[nodiscard]] FieldElement inv(FieldElement a) const;

  /// g^e for the primitive element g.
  [[nodiscard]] FieldElement primitive_power(std::uint64_t e) const;

  /// Nonzero squares are exactly the even powers of the primitive element.
  /// Characteristic 2 is not classified (every element is a square there).
  [[nodiscard]] bool is_nonzero_square(FieldElement a) const;

 private:
  struct Tables {
    std::vector<std::uint32_t> exp;  // exp[i] = g^i, i in [0, q-1)
    std::vector<std::uint32_t> log;  // log[exp[i]] = i; log[0] unused
  };

  int p_ = 0;
  int n_ = 0;
  std::uint32_t q_ = 0;
  std::vector<int> modulus_;
  FieldElement primitive_;
  std::shared_ptr<const Tables> tables_;
};

inline FiniteField make_field(std::int64_t q, std::int64_t bound = kDefaultFieldBound) {
  return FiniteField::make(q, bound);
}

/// The (q-1)/2 nonzero squares, ascending. Throws unsupported for even q.
std::vector<FieldElement> squares(const FiniteField& f);

/// The additive group of GF(p^n) as [p, ..., p] (n copies). Coordinates are
/// the coefficients from highest degree down, so the canonical group index of
/// an embedded element equals its field code.
class AdditiveEmbedding {
 public:
  explicit AdditiveEmbedding(const FiniteField& f);

  [[nodiscard]] const AbelianGroup& group() const { return group_; }
  [[nodiscard]] GroupElement to_group(FieldElement a) const;
  [[nodiscard]] FieldElement to_field(const GroupElement& x) const;

 private:
  AbelianGroup group_;
};

inline AdditiveEmbedding additive_embedding(const FiniteField& f) { return AdditiveEmbedding(f); }

}  // namespace gsedf
