#include "gsedf/ffield.hpp"

#include <algorithm>
#include <string>

#include "gsedf/arith.hpp"
#include "gsedf/error.hpp"

namespace gsedf {

namespace {

// Polynomials over GF(p), coefficients lowest degree first, no trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, int p) {
  // f is monic.
  const std::size_t n = f.size() - 1;
  trim(a);
  while (a.size() > n) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i) {
      a[shift + i] = static_cast<int>(arith::mod(a[shift + i] - std::int64_t{lead} * f[i], p));
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::int64_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + std::int64_t{a[i]} * b[j]) % p;
    }
  }
  return poly_mod(Poly(prod.begin(), prod.end()), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, int p) {
  Poly result{1};
  result = poly_mod(result, f, p);
  base = poly_mod(base, f, p);
  while (e > 0) {
    if (e & 1U) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1U;
  }
  return result;
}

Poly poly_sub(Poly a, const Poly& b, int p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = static_cast<int>(arith::mod(a[i] - b[i], p));
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // Make b monic, then reduce a by it.
    const std::int64_t inv_lead = arith::invmod(b.back(), p);
    for (auto& c : b) c = static_cast<int>(c * inv_lead % p);
    a = poly_mod(a, b, p);
    std::swap(a, b);
  }
  return a;
}

/// Rabin's test: f of degree n is irreducible over GF(p) iff x^(p^n) = x mod f
/// and gcd(x^(p^(n/r)) - x, f) = 1 for every prime r dividing n.
bool is_irreducible(const Poly& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 1) return true;
  const Poly x{0, 1};
  std::vector<Poly> frobenius(static_cast<std::size_t>(n) + 1);
  frobenius[0] = poly_mod(x, f, p);
  for (int k = 1; k <= n; ++k) {
    frobenius[static_cast<std::size_t>(k)] =
        poly_powmod(frobenius[static_cast<std::size_t>(k) - 1], static_cast<std::uint64_t>(p), f, p);
  }
  if (frobenius[static_cast<std::size_t>(n)] != frobenius[0]) return false;
  for (auto [r, e] : arith::factorize(n)) {
    (void)e;
    const Poly diff = poly_sub(frobenius[static_cast<std::size_t>(n / r)], x, p);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() != 1) return false;
  }
  return true;
}

Poly decode(std::uint32_t code, int p, int n) {
  Poly a(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    a[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint32_t>(p));
    code /= static_cast<std::uint32_t>(p);
  }
  trim(a);
  return a;
}

std::uint32_t encode(const Poly& a, int p) {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(a[i]);
  return code;
}

}  // namespace

FiniteField FiniteField::make(std::int64_t q, std::int64_t bound) {
  const auto pp = arith::prime_power(q);
  if (!pp) throw Error(ErrorKind::not_prime_power, std::to_string(q) + " is not a prime power");
  if (q > bound) {
    throw Error(ErrorKind::too_large,
                "field order " + std::to_string(q) + " exceeds bound " + std::to_string(bound));
  }
  FiniteField f;
  f.p_ = static_cast<int>(pp->first);
  f.n_ = pp->second;
  f.q_ = static_cast<std::uint32_t>(q);
  const int p = f.p_;
  const int n = f.n_;

  // Least monic irreducible of degree n, scanning the lower coefficients in code order.
  const auto lower_count = static_cast<std::uint32_t>(q);
  for (std::uint32_t c = 0; c < lower_count; ++c) {
    Poly cand(static_cast<std::size_t>(n) + 1, 0);
    std::uint32_t rest = c;
    for (int i = 0; i < n; ++i) {
      cand[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint32_t>(p));
      rest /= static_cast<std::uint32_t>(p);
    }
    cand[static_cast<std::size_t>(n)] = 1;
    if (is_irreducible(cand, p)) {
      f.modulus_ = cand;
      break;
    }
  }
  if (f.modulus_.empty()) throw Error(ErrorKind::invalid, "no irreducible polynomial found");

  const Poly& mod_poly = f.modulus_;
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    return encode(poly_mulmod(decode(a, p, n), decode(b, p, n), mod_poly, p), p);
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    return encode(poly_powmod(decode(a, p, n), e, mod_poly, p), p);
  };

  const std::uint64_t group_order = f.q_ - 1;
  const auto prime_divisors = arith::factorize(static_cast<std::int64_t>(group_order));
  bool found = false;
  for (std::uint32_t g = 1; g < f.q_ && !found; ++g) {
    bool full_order = true;
    for (auto [r, e] : prime_divisors) {
      (void)e;
      if (slow_pow(g, group_order / static_cast<std::uint64_t>(r)) == 1) {
        full_order = false;
        break;
      }
    }
    if (full_order) {
      f.primitive_ = {g};
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::invalid, "no primitive element found");

  auto tables = std::make_shared<Tables>();
  tables->exp.resize(group_order);
  tables->log.assign(f.q_, 0);
  std::uint32_t cur = 1;
  for (std::uint64_t i = 0; i < group_order; ++i) {
    tables->exp[i] = cur;
    tables->log[cur] = static_cast<std::uint32_t>(i);
    cur = n == 1 ? static_cast<std::uint32_t>(std::uint64_t{cur} * f.primitive_.code % f.q_)
                 : slow_mul(cur, f.primitive_.code);
  }
  f.tables_ = std::move(tables);
  return f;
}

std::vector<FieldElement> FiniteField::elements() const {
  std::vector<FieldElement> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
  return out;
}

std::vector<int> FiniteField::coefficients(FieldElement a) const {
  std::vector<int> c(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<int>(a.code % static_cast<std::uint32_t>(p_));
    a.code /= static_cast<std::uint32_t>(p_);
  }
  return c;
}

FieldElement FiniteField::from_coefficients(std::span<const int> coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(n_)) {
    throw Error(ErrorKind::invalid, "field element must have exactly n coefficients");
  }
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] < 0 || coeffs[i] >= p_) throw Error(ErrorKind::invalid, "coefficient out of range");
    code = code * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(coeffs[i]);
  }
  return {code};
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const {
  if (n_ == 1) return {(a.code + b.code) % q_};
  const auto p = static_cast<std::uint32_t>(p_);
  std::uint32_t out = 0, place = 1;
  for (int i = 0; i < n_; ++i) {
    out += ((a.code % p + b.code % p) % p) * place;
    a.code /= p;
    b.code /= p;
    place *= p;
  }
  return {out};
}

FieldElement FiniteField::neg(FieldElement a) const {
  if (n_ == 1) return {(q_ - a.code) % q_};
  const auto p = static_cast<std::uint32_t>(p_);
  std::uint32_t out = 0, place = 1;
  for (int i = 0; i < n_; ++i) {
    out += ((p - a.code % p) % p) * place;
    a.code /= p;
    place *= p;
  }
  return {out};
}

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const {
  if (a.code == 0 || b.code == 0) return {0};
  const std::uint64_t e = (std::uint64_t{tables_->log[a.code]} + tables_->log[b.code]) % (q_ - 1);
  return {tables_->exp[e]};
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t e) const {
  if (a.code == 0) return {e == 0 ? 1U : 0U};
  const std::uint64_t k = (std::uint64_t{tables_->log[a.code]} * (e % (q_ - 1))) % (q_ - 1);
  return {tables_->exp[k]};
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a.code == 0) throw Error(ErrorKind::invalid, "zero has no inverse");
  return {tables_->exp[(q_ - 1 - tables_->log[a.code]) % (q_ - 1)]};
}

FieldElement FiniteField::primitive_power(std::uint64_t e) const {
  return {tables_->exp[e % (q_ - 1)]};
}

bool FiniteField::is_nonzero_square(FieldElement a) const {
  if (p_ == 2) throw Error(ErrorKind::unsupported, "square classification needs odd characteristic");
  return a.code != 0 && tables_->log[a.code] % 2 == 0;
}

std::vector<FieldElement> squares(const FiniteField& f) {
  if (f.characteristic() == 2) {
    throw Error(ErrorKind::unsupported, "squares are only classified for odd q");
  }
  std::vector<FieldElement> out;
  for (std::uint64_t e = 0; e + 1 < f.order(); e += 2) out.push_back(f.primitive_power(e));
  std::sort(out.begin(), out.end());
  return out;
}

AdditiveEmbedding::AdditiveEmbedding(const FiniteField& f) {
  std::vector<std::int64_t> factors(static_cast<std::size_t>(f.degree()), f.characteristic());
  group_ = AbelianGroup::make(factors);
}

GroupElement AdditiveEmbedding::to_group(FieldElement a) const {
  return group_.element_at(a.code);
}

FieldElement AdditiveEmbedding::to_field(const GroupElement& x) const {
  return {static_cast<std::uint32_t>(group_.index_of(x))};
}

}  // namespace gsedf
