#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "gsedf/construct.hpp"
#include "gsedf/decomp.hpp"
#include "gsedf/error.hpp"
#include "gsedf/feasibility.hpp"
#include "gsedf/search.hpp"
#include "gsedf/verify.hpp"

using namespace gsedf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Named {
  std::string label;
  DiffFamily family;
};

// m = 2, lambda >= 2, v <= 21 reference list: (v, k1, k2).
const std::vector<std::vector<std::int64_t>> kReferenceM2 = {
    {21, 4, 10}, {21, 8, 10}, {15, 4, 7},  {16, 5, 9},  {13, 4, 9},  {15, 7, 8},  {16, 6, 10},
    {21, 5, 16}, {7, 3, 4},   {9, 4, 4},   {11, 5, 6},  {13, 6, 6},  {17, 8, 8},  {19, 9, 10},
    {21, 10, 10}, {10, 3, 6}, {11, 4, 5},  {13, 3, 8},  {13, 4, 6},  {15, 6, 7},  {16, 3, 10},
    {16, 5, 6},  {17, 4, 8},  {17, 4, 12}, {17, 6, 8},  {19, 3, 12}, {19, 4, 9},  {19, 6, 6},
    {19, 6, 9},  {19, 8, 9},  {21, 5, 8},  {21, 4, 15}, {21, 5, 12}, {21, 6, 10},
};

// m = 3 partition reference list (v, k1, k2, k3) as printed, including its v = 85 entry.
const std::vector<std::vector<std::int64_t>> kReferenceM3 = {
    {31, 6, 10, 15},   {43, 7, 15, 21},   {67, 12, 22, 33},  {71, 15, 21, 35},  {79, 13, 27, 39},
    {85, 21, 28, 26},  {91, 10, 36, 45},  {103, 18, 34, 51}, {106, 15, 21, 70}, {111, 11, 45, 55},
    {115, 19, 39, 57}, {127, 28, 36, 63}, {131, 26, 40, 65}, {133, 12, 33, 88}, {139, 24, 46, 69},
    {151, 25, 51, 75}, {155, 22, 56, 77}, {166, 45, 55, 66}, {171, 35, 51, 85}, {175, 30, 58, 87},
    {181, 36, 45, 100}, {183, 14, 78, 91}, {187, 31, 63, 93}, {191, 20, 76, 95}, {199, 45, 55, 99},
};

bool is_prime_power(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1;
    }
  }
  return true;
}

std::string show(const ParamTuple& t) {
  std::ostringstream s;
  s << "(" << t.v << ";";
  for (std::size_t i = 0; i < t.ks.size(); ++i) s << (i ? "," : "") << t.ks[i];
  s << ")";
  return s.str();
}

// Ordered lists of odd factors > 1 with at most `len` entries and product * base <= limit.
void odd_lists(std::int64_t base, std::int64_t limit, std::size_t len, std::vector<std::int64_t>& cur,
               const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  visit(cur);
  if (cur.size() == len) return;
  for (std::int64_t p = 3; base * p <= limit; p += 2) {
    cur.push_back(p);
    odd_lists(base * p, limit, len, cur, visit);
    cur.pop_back();
  }
}

std::vector<Named> criterion1_families() {
  std::vector<Named> out;
  auto add = [&](std::string label, DiffFamily f) { out.push_back({std::move(label), std::move(f)}); };

  for (std::int64_t a = 1; a <= 12; ++a) {
    for (std::int64_t b = 1; b <= 12; ++b) add("c1(" + std::to_string(a) + "," + std::to_string(b) + ")", c1(a, b));
  }
  for (std::int64_t q = 3; q <= 200; q += 2) {
    if (!is_prime_power(q)) continue;
    if (q % 4 == 1) add("paley_even(" + std::to_string(q) + ")", paley_even(q));
    if (q % 4 == 3) add("paley_odd(" + std::to_string(q) + ")", paley_odd(q));
    if (q % 4 == 3) add("m3_prime_power(" + std::to_string(q) + ")", m3_prime_power(q));
  }
  std::vector<std::int64_t> cur;
  odd_lists(1, 315, 3, cur, [&](const std::vector<std::int64_t>& ps) {
    if (!ps.empty()) add("two_n", two_n(ps));
  });
  add("g16", g16());
  for (std::int64_t q : {3, 5, 7, 9}) add("twin_prime(" + std::to_string(q) + ")", twin_prime(q));
  for (std::int64_t q = 5; q <= 315; q += 4) {
    if (!is_prime_power(q)) continue;
    odd_lists(q, 315, 315, cur, [&](const std::vector<std::int64_t>& ps) { add("q4_lift", q4_lift(q, ps)); });
  }
  for (std::int64_t m = 1; 4 * m - 1 <= 315; ++m) {
    odd_lists(4 * m - 1, 315, 315, cur, [&](const std::vector<std::int64_t>& ps) {
      try {
        add("family_4m1", family_4m1(m, ps));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::not_constructible) throw;
      }
    });
  }
  return out;
}

ParamTuple params_of(const DiffFamily& f) { return make_params(f.v(), f.ks(), f.lambdas()); }

Verdict criterion1(const std::vector<Named>& fams, double build_seconds) {
  const auto t0 = Clock::now();
  std::size_t bad = 0;
  std::string first_bad;
  for (const auto& n : fams) {
    if (!verify_gsedf(n.family).is_gsedf) {
      if (!bad++) first_bad = n.label;
    }
  }
  const double total = build_seconds + seconds_since(t0);
  std::ostringstream s;
  s << fams.size() << " families built and verified in " << total << "s";
  if (bad) s << "; " << bad << " failed, first " << first_bad;
  return {bad == 0 && total < 60.0, s.str()};
}

Verdict criterion2() {
  EnumerationConstraints c;
  c.lambda_min = 2;
  const auto got = enumerate_params(21, 2, c);
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> emitted, reference;
  for (const auto& t : got) emitted.emplace(t.v, t.ks[0], t.ks[1]);
  for (const auto& r : kReferenceM2) reference.emplace(r[0], r[1], r[2]);
  std::ostringstream s;
  s << "emitted " << emitted.size() << " tuples, reference lists " << reference.size();
  for (const auto& [v, a, b] : emitted) {
    if (reference.count({v, a, b})) continue;
    const auto outcomes = search_all_groups(make_params(v, {a, b}));
    s << "; extra (" << v << ";" << a << "," << b << ") is counting-feasible, search over all groups: "
      << to_string(aggregate_status(outcomes));
  }
  for (const auto& [v, a, b] : reference) {
    if (!emitted.count({v, a, b})) s << "; missing (" << v << ";" << a << "," << b << ")";
  }
  return {emitted == reference, s.str()};
}

Verdict criterion3() {
  const auto got = enumerate_params(200, 3, m3_partition_constraints());
  std::size_t matches = 0;
  bool fixed_ok = false;
  for (std::size_t i = 0; i < std::min(got.size(), kReferenceM3.size()); ++i) {
    const auto& r = kReferenceM3[i];
    if (got[i].v == r[0] && got[i].ks == std::vector<std::int64_t>{r[1], r[2], r[3]}) {
      ++matches;
    } else if (got[i].v == 85) {
      fixed_ok = got[i].k_total() == 85 && counting_solve(85, got[i].ks).has_value();
    }
  }
  const bool all_partitions =
      std::all_of(got.begin(), got.end(), [](const ParamTuple& t) { return t.k_total() == t.v; });
  std::ostringstream s;
  s << got.size() << " tuples, " << matches << " positions match the printed list";
  if (got.size() > 5) s << ", v=85 entry " << show(got[5]);
  return {got.size() == 25 && matches == 24 && fixed_ok && all_partitions, s.str()};
}

Verdict criterion4() {
  const std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> cases{
      {10, {3, 6}}, {11, {4, 5}}, {13, {3, 8}}, {13, {4, 6}}};
  bool ok = true;
  std::ostringstream s;
  for (const auto& [v, ks] : cases) {
    const auto t0 = Clock::now();
    const auto outcomes = search_all_groups(make_params(v, ks, {2, 2}));
    const double secs = seconds_since(t0);
    std::uint64_t nodes = 0;
    for (const auto& o : outcomes) nodes += o.nodes_explored;
    const auto agg = aggregate_status(outcomes);
    ok = ok && agg == SearchStatus::exhausted && secs < 60.0 && nodes < kDefaultSearchBudget;
    s << show(make_params(v, ks)) << " " << to_string(agg) << " " << nodes << " nodes " << secs << "s; ";
  }
  return {ok, s.str()};
}

std::vector<ParamTuple> g_search_hits;

Verdict criterion5() {
  bool ok = true;
  std::ostringstream s;
  for (const auto& [v, ks] : std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>{{7, {3, 4}}, {9, {4, 4}}}) {
    const auto t0 = Clock::now();
    const auto outcomes = search_all_groups(make_params(v, ks, {2, 2}));
    const double secs = seconds_since(t0);
    bool found = false;
    for (const auto& o : outcomes) {
      if (o.status != SearchStatus::found) continue;
      found = true;
      ok = ok && verify_gsedf(*o.family).is_gsedf;
      g_search_hits.push_back(params_of(*o.family));
      s << show(o.params) << " found in [";
      const auto f = o.group.invariant_factors();
      for (std::size_t i = 0; i < f.size(); ++i) s << (i ? "," : "") << f[i];
      s << "] ";
    }
    ok = ok && found && secs < 1.0;
    s << secs << "s; ";
  }
  return {ok, s.str()};
}

Verdict criterion6(const std::vector<Named>& fams) {
  std::size_t partitions = 0, cosets = 0, bad = 0;
  std::string first_bad;
  for (const auto& n : fams) {
    const auto& f = n.family;
    if (partition_shape(f) != PartitionShape::none) {
      ++partitions;
      if (!partition_equivalence_check(f) && !bad++) first_bad = n.label;
    }
    if (f.k_total() < f.v() && f.v() <= 50) {
      ++cosets;
      if (!coset_check(f) && !bad++) first_bad = n.label;
    }
  }
  std::ostringstream s;
  s << partitions << " partition-shaped families agree, " << cosets << " coset checks";
  if (bad) s << "; " << bad << " disagreements, first " << first_bad;
  return {bad == 0 && partitions > 0 && cosets > 0, s.str()};
}

// Replaces one element of a set by an unused one, or moves it to another set
// when the family covers the whole group. Empty when neither is possible.
std::optional<DiffFamily> perturb(const DiffFamily& f, std::mt19937& rng) {
  auto sets = f.sets();
  const auto support = f.support();
  const bool full = support.size() == static_cast<std::size_t>(f.v());
  std::vector<std::size_t> movable;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!full || sets[i].size() > 1) movable.push_back(i);
  }
  if (movable.empty()) return std::nullopt;
  const std::size_t from = movable[rng() % movable.size()];
  const std::size_t pos = rng() % sets[from].size();
  if (!full) {
    auto all = f.group().elements();
    std::vector<GroupElement> unused;
    std::set_difference(all.begin(), all.end(), support.begin(), support.end(), std::back_inserter(unused));
    sets[from][pos] = unused[rng() % unused.size()];
  } else {
    const std::size_t to = (from + 1 + rng() % (sets.size() - 1)) % sets.size();
    sets[to].push_back(sets[from][pos]);
    sets[from].erase(sets[from].begin() + static_cast<std::ptrdiff_t>(pos));
  }
  return DiffFamily(f.group(), sets, f.lambdas());
}

Verdict criterion7(const std::vector<Named>& fams) {
  std::mt19937 rng(20240601);
  std::size_t instances = 0, agree = 0, rejected = 0;
  auto run = [&](const DiffFamily& f) {
    const bool exact = verify_gsedf(f).is_gsedf;
    const bool spectral = spectral_verify(f, default_spectral_tol(f));
    ++instances;
    agree += exact == spectral;
    rejected += !exact;
  };
  for (const auto& n : fams) {
    if (n.family.v() > 100) continue;
    run(n.family);
    if (const auto p = perturb(n.family, rng)) run(*p);
  }
  std::ostringstream s;
  s << agree << "/" << instances << " instances agree (" << rejected << " rejected by the exact check)";
  return {instances >= 100 && agree == instances, s.str()};
}

Verdict criterion8(const std::vector<Named>& fams) {
  std::size_t checked = 0, bad = 0;
  std::string first_bad;
  for (const auto& n : fams) {
    const auto& f = n.family;
    if (f.m() != 2 || f.lambdas()[0] != f.lambdas()[1]) continue;
    ++checked;
    if (!verify_decomposition(decompose(f)) && !bad++) first_bad = n.label;
  }
  const auto m7 = decompose(c1(2, 3)).multiplicity;
  const auto m16 = decompose(g16()).multiplicity;
  const auto m15 = decompose(twin_prime(3)).multiplicity;
  std::ostringstream s;
  s << checked << " decompositions verified; multiplicities " << m7 << "K7, " << m16 << "K16, " << m15 << "K15";
  if (bad) s << "; " << bad << " failed, first " << first_bad;
  return {bad == 0 && checked > 0 && m7 == 2 && m16 == 6 && m15 == 8, s.str()};
}

Verdict criterion9() {
  const auto t0 = Clock::now();
  std::size_t triples = 0, with_root = 0;
  std::string first;
  for (std::int64_t a = 1; a <= 20; ++a) {
    for (std::int64_t b = a; b <= 20; ++b) {
      for (std::int64_t c = b; c <= 20 && c < a + b; ++c) {
        const std::vector<std::int64_t> l{a, b, c};
        ++triples;
        if (alpha_scan(l, 1000).any_root() && !with_root++) {
          first = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream s;
  s << triples << " triples scanned in " << secs << "s, " << with_root << " with a root";
  if (with_root) s << ", first " << first;
  return {with_root == 0 && secs < 60.0, s.str()};
}

Verdict criterion10(const std::vector<Named>& fams) {
  std::set<ParamTuple> realized;
  for (const auto& n : fams) {
    if (n.family.v() <= 50) realized.insert(params_of(n.family));
  }
  for (const auto& t : g_search_hits) realized.insert(t);
  std::set<ParamTuple> feasible;
  for (std::size_t m = 2; m <= 3; ++m) {
    for (const auto& t : enumerate_params(50, m, {})) feasible.insert(t);
  }
  std::size_t bad = 0, outside = 0;
  std::string first_bad;
  for (const auto& t : realized) {
    if (!feasible.count(t)) ++outside;
    if (rule_out(t).status == FeasibilityStatus::ruled_out && !bad++) first_bad = show(t);
  }
  std::size_t ruled = 0;
  for (const auto& t : feasible) ruled += rule_out(t).status == FeasibilityStatus::ruled_out;
  std::ostringstream s;
  s << realized.size() << " realized tuples, none ruled out among " << feasible.size()
    << " counting-feasible (" << ruled << " ruled out overall)";
  if (bad) s.str(std::to_string(bad) + " realized tuples ruled out, first " + first_bad);
  if (outside) s << "; " << outside << " realized tuples missing from the enumeration";
  return {bad == 0 && outside == 0, s.str()};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::function<Verdict()>& fn) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << v.detail << std::endl;
  };

  const auto t0 = Clock::now();
  std::vector<Named> fams;
  try {
    fams = criterion1_families();
  } catch (const std::exception& e) {
    std::cout << "construction grid aborted: " << e.what() << std::endl;
  }
  const double build_seconds = seconds_since(t0);

  report(1, [&] { return criterion1(fams, build_seconds); });
  report(2, criterion2);
  report(3, criterion3);
  report(4, criterion4);
  report(5, criterion5);
  report(6, [&] { return criterion6(fams); });
  report(7, [&] { return criterion7(fams); });
  report(8, [&] { return criterion8(fams); });
  report(9, criterion9);
  report(10, [&] { return criterion10(fams); });
  return failures == 0 ? 0 : 1;
}
