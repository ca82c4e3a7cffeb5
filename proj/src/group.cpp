#include "gsedf/group.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "gsedf/arith.hpp"
#include "gsedf/error.hpp"

namespace gsedf {

namespace {

constexpr std::int64_t kMaxOrder = std::numeric_limits<int>::max();

}  // namespace

// ---------------------------------------------------------------- AbelianGroup

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  strides_.assign(factors_.size(), 1);
  order_ = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    strides_[i] = order_;
    order_ *= static_cast<std::size_t>(factors_[i]);
  }
}

AbelianGroup AbelianGroup::make(std::span<const std::int64_t> factors) {
  return ProductIsomorphism(std::vector<std::int64_t>(factors.begin(), factors.end())).group();
}

bool AbelianGroup::contains(const GroupElement& x) const {
  if (x.coords.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (x.coords[i] < 0 || x.coords[i] >= factors_[i]) return false;
  }
  return true;
}

void AbelianGroup::require(const GroupElement& x) const {
  if (!contains(x)) throw Error(ErrorKind::wrong_group, "element does not belong to the group");
}

GroupElement AbelianGroup::zero() const { return {std::vector<int>(factors_.size(), 0)}; }

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  require(a);
  require(b);
  GroupElement r{a.coords};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    r.coords[i] += b.coords[i];
    if (r.coords[i] >= factors_[i]) r.coords[i] -= factors_[i];
  }
  return r;
}

GroupElement AbelianGroup::neg(const GroupElement& a) const {
  require(a);
  GroupElement r{a.coords};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (r.coords[i] != 0) r.coords[i] = factors_[i] - r.coords[i];
  }
  return r;
}

GroupElement AbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
  return add(a, neg(b));
}

std::size_t AbelianGroup::index_of(const GroupElement& x) const {
  require(x);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    idx += strides_[i] * static_cast<std::size_t>(x.coords[i]);
  }
  return idx;
}

GroupElement AbelianGroup::element_at(std::size_t index) const {
  if (index >= order_) throw Error(ErrorKind::wrong_group, "element index out of range");
  GroupElement x{std::vector<int>(factors_.size(), 0)};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    x.coords[i] = static_cast<int>(index / strides_[i]);
    index %= strides_[i];
  }
  return x;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

GroupElement AbelianGroup::generator(std::size_t i) const {
  GroupElement e = zero();
  e.coords.at(i) = 1;
  return e;
}

std::size_t AbelianGroup::add_index(std::size_t a, std::size_t b) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto d = static_cast<std::size_t>(factors_[i]);
    std::size_t c = (a / strides_[i]) % d + (b / strides_[i]) % d;
    if (c >= d) c -= d;
    r += c * strides_[i];
  }
  return r;
}

std::size_t AbelianGroup::sub_index(std::size_t a, std::size_t b) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto d = static_cast<std::size_t>(factors_[i]);
    std::size_t c = (a / strides_[i]) % d + d - (b / strides_[i]) % d;
    if (c >= d) c -= d;
    r += c * strides_[i];
  }
  return r;
}

// ----------------------------------------------------------- ProductIsomorphism

ProductIsomorphism::ProductIsomorphism(std::vector<std::int64_t> factors)
    : factors_(std::move(factors)) {
  struct Piece {
    std::int64_t prime;
    int exponent;
    std::size_t source;
  };
  std::vector<Piece> pieces;
  std::int64_t order = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::int64_t n = factors_[i];
    if (n < 2) {
      throw Error(ErrorKind::invalid_factors,
                  "cyclic factor " + std::to_string(n) + " must be at least 2");
    }
    if (order > kMaxOrder / n) throw Error(ErrorKind::too_large, "group order too large");
    order *= n;
    for (auto [p, e] : arith::factorize(n)) pieces.push_back({p, e, i});
  }

  // Per prime, the largest components go to the last invariant factor.
  std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    if (a.prime != b.prime) return a.prime < b.prime;
    return a.exponent > b.exponent;
  });
  std::size_t rank = 0;
  for (std::size_t i = 0; i < pieces.size();) {
    std::size_t j = i;
    while (j < pieces.size() && pieces[j].prime == pieces[i].prime) ++j;
    rank = std::max(rank, j - i);
    i = j;
  }

  std::vector<std::int64_t> invariant(rank, 1);
  for (std::size_t i = 0; i < pieces.size();) {
    std::size_t j = i;
    while (j < pieces.size() && pieces[j].prime == pieces[i].prime) {
      const std::size_t target = rank - 1 - (j - i);
      const std::int64_t modulus = arith::ipow(pieces[j].prime, pieces[j].exponent);
      invariant[target] *= modulus;
      components_.push_back({pieces[j].source, target, modulus, 0});
      ++j;
    }
    i = j;
  }
  for (auto& c : components_) {
    const std::int64_t d = invariant[c.target];
    const std::int64_t cofactor = d / c.modulus;
    c.weight = cofactor * arith::invmod(cofactor % c.modulus, c.modulus) % d;
  }

  group_ = AbelianGroup(std::vector<int>(invariant.begin(), invariant.end()));
}

GroupElement ProductIsomorphism::map(std::span<const std::int64_t> coords) const {
  if (coords.size() != factors_.size()) {
    throw Error(ErrorKind::wrong_group, "product coordinate length mismatch");
  }
  const auto& inv = group_.invariant_factors();
  std::vector<std::int64_t> acc(inv.size(), 0);
  for (const auto& c : components_) {
    const std::int64_t residue = arith::mod(coords[c.source], c.modulus);
    acc[c.target] = (acc[c.target] + residue * c.weight) % inv[c.target];
  }
  GroupElement x;
  x.coords.assign(acc.begin(), acc.end());
  return x;
}

// -------------------------------------------------------------------- Multiset

void Multiset::add(const GroupElement& x, std::int64_t times) {
  if (times == 0) return;
  counts_[x] += times;
  total_ += times;
}

std::int64_t Multiset::count(const GroupElement& x) const {
  auto it = counts_.find(x);
  return it == counts_.end() ? 0 : it->second;
}

// ------------------------------------------------------------------ functions

ElementSet make_set(std::vector<GroupElement> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

Multiset delta(const AbelianGroup& g, std::span<const GroupElement> a,
               std::span<const GroupElement> b) {
  Multiset out;
  for (const auto& x : a) {
    for (const auto& y : b) out.add(g.sub(x, y));
  }
  return out;
}

std::vector<AbelianGroup> abelian_groups_of_order(std::int64_t v) {
  if (v < 1) throw Error(ErrorKind::invalid, "group order must be positive");
  const auto primes = arith::factorize(v);
  std::vector<std::vector<std::vector<int>>> choices;
  for (auto [p, e] : primes) choices.push_back(arith::partitions(e));

  std::vector<AbelianGroup> out;
  std::vector<std::size_t> pick(primes.size(), 0);
  while (true) {
    std::size_t rank = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      rank = std::max(rank, choices[i][pick[i]].size());
    }
    std::vector<std::int64_t> factors(rank, 1);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const auto& parts = choices[i][pick[i]];
      for (std::size_t j = 0; j < parts.size(); ++j) {
        factors[rank - 1 - j] *= arith::ipow(primes[i].first, parts[j]);
      }
    }
    out.push_back(AbelianGroup::make(factors));

    // Odometer with the last prime varying fastest.
    std::size_t i = primes.size();
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (primes.empty()) return out;
  }
}

std::vector<ElementSet> proper_subgroups(const AbelianGroup& g, std::size_t bound) {
  const std::size_t n = g.order();
  if (n > bound) {
    throw Error(ErrorKind::too_large,
                "subgroup enumeration limited to order " + std::to_string(bound));
  }
  using Mask = std::vector<bool>;

  std::set<Mask> seen;
  std::vector<Mask> all;
  std::vector<Mask> cyclic;
  for (std::size_t x = 0; x < n; ++x) {
    Mask m(n, false);
    std::size_t y = 0;
    do {
      m[y] = true;
      y = g.add_index(y, x);
    } while (y != 0);
    if (seen.insert(m).second) {
      all.push_back(m);
      cyclic.push_back(m);
    }
  }
  // Every subgroup is a join of cyclic subgroups.
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& c : cyclic) {
      Mask join(n, false);
      for (std::size_t h = 0; h < n; ++h) {
        if (!all[i][h]) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (c[k]) join[g.add_index(h, k)] = true;
        }
      }
      if (seen.insert(join).second) all.push_back(std::move(join));
    }
  }

  std::vector<ElementSet> out;
  for (const auto& m : all) {
    ElementSet s;
    for (std::size_t x = 0; x < n; ++x) {
      if (m[x]) s.push_back(g.element_at(x));
    }
    if (s.size() < n) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

ElementSet generated_subgroup(const AbelianGroup& g, std::span<const GroupElement> generators) {
  std::vector<std::size_t> gens;
  for (const auto& x : generators) gens.push_back(g.index_of(x));
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> queue{0};
  in[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t s : gens) {
      const std::size_t z = g.add_index(queue[head], s);
      if (!in[z]) {
        in[z] = true;
        queue.push_back(z);
      }
    }
  }
  ElementSet out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (in[x]) out.push_back(g.element_at(x));
  }
  return out;
}

ElementSet translate(const AbelianGroup& g, std::span<const GroupElement> set,
                     const GroupElement& shift) {
  std::vector<GroupElement> out;
  out.reserve(set.size());
  for (const auto& x : set) out.push_back(g.add(x, shift));
  return make_set(std::move(out));
}

}  // namespace gsedf
