#include "gsedf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "gsedf/error.hpp"

namespace gsedf {

namespace {

std::vector<std::vector<std::size_t>> index_sets(const DiffFamily& f) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(f.m());
  for (const auto& s : f.sets()) {
    std::vector<std::size_t> idx;
    idx.reserve(s.size());
    for (const auto& x : s) idx.push_back(f.group().index_of(x));
    out.push_back(std::move(idx));
  }
  return out;
}

std::vector<std::int64_t> self_difference_counts(const AbelianGroup& g, const ElementSet& d) {
  std::vector<std::size_t> idx;
  for (const auto& x : d) idx.push_back(g.index_of(x));
  std::vector<std::int64_t> counts(g.order(), 0);
  for (std::size_t a : idx) {
    for (std::size_t b : idx) ++counts[g.sub_index(a, b)];
  }
  return counts;
}

}  // namespace

DiffFamily::DiffFamily(AbelianGroup group, std::vector<ElementSet> sets,
                       std::vector<std::int64_t> lambdas)
    : group_(std::move(group)), sets_(std::move(sets)), lambdas_(std::move(lambdas)) {
  if (sets_.size() < 2) throw Error(ErrorKind::invalid, "a family needs at least two sets");
  if (lambdas_.size() != sets_.size()) {
    throw Error(ErrorKind::invalid, "one lambda is required per set");
  }
  for (auto l : lambdas_) {
    if (l < 1) throw Error(ErrorKind::invalid, "lambda values must be positive");
  }
  std::vector<bool> seen(group_.order(), false);
  for (auto& s : sets_) {
    if (s.empty()) throw Error(ErrorKind::invalid, "sets must be nonempty");
    const std::size_t before = s.size();
    for (const auto& x : s) group_.require(x);
    s = make_set(std::move(s));
    if (s.size() != before) throw Error(ErrorKind::invalid, "duplicate element inside a set");
    for (const auto& x : s) {
      const std::size_t i = group_.index_of(x);
      if (seen[i]) throw Error(ErrorKind::not_disjoint, "sets are not pairwise disjoint");
      seen[i] = true;
    }
  }
}

std::vector<std::int64_t> DiffFamily::ks() const {
  std::vector<std::int64_t> out;
  for (const auto& s : sets_) out.push_back(static_cast<std::int64_t>(s.size()));
  return out;
}

std::int64_t DiffFamily::k_total() const {
  std::int64_t k = 0;
  for (const auto& s : sets_) k += static_cast<std::int64_t>(s.size());
  return k;
}

ElementSet DiffFamily::support() const {
  ElementSet all;
  for (const auto& s : sets_) all.insert(all.end(), s.begin(), s.end());
  return make_set(std::move(all));
}

VerifyReport verify_gsedf(const DiffFamily& f) {
  const auto& g = f.group();
  const auto sets = index_sets(f);
  const std::size_t v = g.order();

  VerifyReport report;
  report.is_gsedf = true;
  for (std::size_t i = 0; i < f.m(); ++i) {
    std::vector<std::int64_t> counts(v, 0);
    for (std::size_t j = 0; j < f.m(); ++j) {
      if (j == i) continue;
      for (std::size_t a : sets[i]) {
        for (std::size_t b : sets[j]) ++counts[g.sub_index(a, b)];
      }
    }
    Multiset ms;
    for (std::size_t x = 0; x < v; ++x) {
      if (counts[x] != 0) ms.add(g.element_at(x), counts[x]);
      const std::int64_t expected = x == 0 ? 0 : f.lambdas()[i];
      if (counts[x] != expected && !report.first_violation) {
        report.is_gsedf = false;
        report.first_violation = Violation{i, g.element_at(x), counts[x], expected};
      }
    }
    report.per_index_counts.push_back(std::move(ms));
  }
  return report;
}

bool verify_ds(const AbelianGroup& g, const ElementSet& d, std::int64_t k, std::int64_t lambda) {
  if (static_cast<std::int64_t>(d.size()) != k) return false;
  const auto counts = self_difference_counts(g, d);
  if (counts[0] != k) return false;
  return std::all_of(counts.begin() + 1, counts.end(), [&](std::int64_t c) { return c == lambda; });
}

bool verify_pds(const AbelianGroup& g, const ElementSet& d, std::int64_t k, std::int64_t lambda,
                std::int64_t mu) {
  if (static_cast<std::int64_t>(d.size()) != k) return false;
  const auto counts = self_difference_counts(g, d);
  if (counts[0] != k) return false;
  std::vector<bool> in_d(g.order(), false);
  for (const auto& x : d) in_d[g.index_of(x)] = true;
  for (std::size_t x = 1; x < g.order(); ++x) {
    if (counts[x] != (in_d[x] ? lambda : mu)) return false;
  }
  return true;
}

PartitionShape partition_shape(const DiffFamily& f) {
  const auto v = static_cast<std::size_t>(f.v());
  const auto k = static_cast<std::size_t>(f.k_total());
  if (k == v) return PartitionShape::whole_group;
  if (k + 1 == v) {
    const auto zero = f.group().zero();
    const bool has_zero = std::any_of(f.sets().begin(), f.sets().end(), [&](const ElementSet& s) {
      return std::binary_search(s.begin(), s.end(), zero);
    });
    if (!has_zero) return PartitionShape::nonzero_elements;
  }
  return PartitionShape::none;
}

bool partition_equivalence_check(const DiffFamily& f) {
  const auto shape = partition_shape(f);
  if (shape == PartitionShape::none) {
    throw Error(ErrorKind::not_applicable, "family partitions neither G nor G \\ {0}");
  }
  const bool gsedf = verify_gsedf(f).is_gsedf;
  bool all_sets = true;
  for (std::size_t i = 0; i < f.m() && all_sets; ++i) {
    const auto k = static_cast<std::int64_t>(f.sets()[i].size());
    const std::int64_t l = f.lambdas()[i];
    all_sets = shape == PartitionShape::whole_group
                   ? verify_ds(f.group(), f.sets()[i], k, k - l)
                   : verify_pds(f.group(), f.sets()[i], k, k - l - 1, k - l);
  }
  return gsedf == all_sets;
}

double spectral_deviation(const DiffFamily& f) {
  const auto& g = f.group();
  const auto& factors = g.invariant_factors();
  const int exponent = g.exponent();
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(exponent));
  for (int t = 0; t < exponent; ++t) {
    roots[static_cast<std::size_t>(t)] =
        std::polar(1.0, 2.0 * std::numbers::pi * t / static_cast<double>(exponent));
  }
  std::vector<int> scale;
  for (int d : factors) scale.push_back(exponent / d);

  double worst = 0.0;
  const std::size_t v = g.order();
  std::vector<std::complex<double>> chi_sets(f.m());
  for (std::size_t a = 1; a < v; ++a) {
    const GroupElement ca = g.element_at(a);
    std::complex<double> chi_all = 0.0;
    for (std::size_t j = 0; j < f.m(); ++j) {
      std::complex<double> sum = 0.0;
      for (const auto& x : f.sets()[j]) {
        std::int64_t phase = 0;
        for (std::size_t t = 0; t < factors.size(); ++t) {
          phase += std::int64_t{ca.coords[t]} * x.coords[t] * scale[t];
        }
        sum += roots[static_cast<std::size_t>(phase % exponent)];
      }
      chi_sets[j] = sum;
      chi_all += sum;
    }
    for (std::size_t j = 0; j < f.m(); ++j) {
      const auto lhs = chi_sets[j] * std::conj(chi_all) - std::norm(chi_sets[j]) +
                       static_cast<double>(f.lambdas()[j]);
      worst = std::max(worst, std::abs(lhs));
    }
  }
  return worst;
}

bool spectral_verify(const DiffFamily& f, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::invalid, "tolerance must be positive");
  const auto ks = f.ks();
  const std::int64_t k = f.k_total();
  for (std::size_t i = 0; i < f.m(); ++i) {
    if (ks[i] * (k - ks[i]) != f.lambdas()[i] * (f.v() - 1)) return false;
  }
  return spectral_deviation(f) <= tol;
}

bool coset_check(const DiffFamily& f) {
  if (f.k_total() == f.v()) {
    throw Error(ErrorKind::not_applicable, "coset condition only applies when D != G");
  }
  const auto& g = f.group();
  for (const auto& s : f.sets()) {
    // s lies in a coset of a proper subgroup iff its difference set generates one.
    std::vector<GroupElement> gens;
    for (const auto& x : s) gens.push_back(g.sub(x, s.front()));
    if (generated_subgroup(g, gens).size() < g.order()) return false;
  }
  return true;
}

}  // namespace gsedf
