#include "gsedf/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "gsedf/error.hpp"

namespace gsedf {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
  }
  return "exhausted";
}

namespace {

constexpr std::size_t kMaxSearchOrder = 4096;
constexpr std::uint64_t kStopPollMask = 0xFFF;

enum class Result { none, found, over_budget, stopped };

struct Problem {
  std::size_t v = 0;
  std::size_t m = 0;
  std::vector<int> ks;
  std::vector<int> lambdas;
  int max_lambda = 0;
  std::vector<std::size_t> slot_set;
  std::vector<int> slot_pos;
  std::vector<bool> same_as_prev;
  std::vector<std::uint32_t> sub;  // sub[a * v + b] = index of a - b
  std::uint64_t budget = 0;
};

struct State {
  std::vector<int> in_set;
  std::vector<std::vector<std::uint32_t>> members;
  std::vector<std::vector<int>> counts;
};

class Worker {
 public:
  Worker(const Problem& p, State state, std::size_t branch, const std::atomic<std::size_t>& stop)
      : p_(p), s_(std::move(state)), branch_(branch), stop_(stop) {}

  bool place(std::uint32_t e, std::size_t set) {
    bool ok = true;
    const std::uint32_t* row_e = &p_.sub[e * p_.v];
    auto& own = s_.counts[set];
    for (std::size_t j = 0; j < p_.m; ++j) {
      if (j == set) continue;
      auto& other = s_.counts[j];
      for (std::uint32_t b : s_.members[j]) {
        if (++own[row_e[b]] > p_.lambdas[set]) ok = false;
        if (++other[p_.sub[b * p_.v + e]] > p_.lambdas[j]) ok = false;
      }
    }
    s_.members[set].push_back(e);
    s_.in_set[e] = static_cast<int>(set);
    return ok;
  }

  void remove(std::uint32_t e, std::size_t set) {
    s_.members[set].pop_back();
    s_.in_set[e] = -1;
    const std::uint32_t* row_e = &p_.sub[e * p_.v];
    auto& own = s_.counts[set];
    for (std::size_t j = 0; j < p_.m; ++j) {
      if (j == set) continue;
      auto& other = s_.counts[j];
      for (std::uint32_t b : s_.members[j]) {
        --own[row_e[b]];
        --other[p_.sub[b * p_.v + e]];
      }
    }
  }

  // Every remaining placement raises each count of each set by at most one.
  [[nodiscard]] bool deficits_reachable(std::size_t remaining) const {
    if (static_cast<int>(remaining) >= p_.max_lambda) return true;
    const int r = static_cast<int>(remaining);
    for (std::size_t i = 0; i < p_.m; ++i) {
      const auto& c = s_.counts[i];
      const int floor = p_.lambdas[i] - r;
      for (std::size_t x = 1; x < p_.v; ++x) {
        if (c[x] < floor) return false;
      }
    }
    return true;
  }

  Result dfs(std::size_t slot) {
    if (slot == p_.slot_set.size()) return Result::found;
    const std::size_t set = p_.slot_set[slot];
    const int pos = p_.slot_pos[slot];
    std::uint32_t lo = 0;
    if (pos > 0) {
      lo = s_.members[set].back() + 1;
    } else if (p_.same_as_prev[set]) {
      lo = s_.members[set - 1].front() + 1;
    }
    const auto hi = static_cast<std::uint32_t>(p_.v - static_cast<std::size_t>(p_.ks[set] - pos));
    const std::size_t remaining = p_.slot_set.size() - slot - 1;
    for (std::uint32_t e = lo; e <= hi; ++e) {
      if (s_.in_set[e] >= 0) continue;
      if (++nodes_ > p_.budget) return Result::over_budget;
      if ((nodes_ & kStopPollMask) == 0 && stop_.load(std::memory_order_relaxed) < branch_) {
        return Result::stopped;
      }
      const bool ok = place(e, set);
      if (ok && deficits_reachable(remaining)) {
        const Result r = dfs(slot + 1);
        if (r == Result::found) return r;
        if (r != Result::none) {
          remove(e, set);
          return r;
        }
      }
      remove(e, set);
    }
    return Result::none;
  }

  Result run_branch(std::uint32_t first) {
    ++nodes_;
    if (nodes_ > p_.budget) return Result::over_budget;
    const bool ok = place(first, p_.slot_set[1]);
    if (!ok || !deficits_reachable(p_.slot_set.size() - 2)) return Result::none;
    return dfs(2);
  }

  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }
  [[nodiscard]] const State& state() const { return s_; }

 private:
  const Problem& p_;
  State s_;
  std::size_t branch_;
  const std::atomic<std::size_t>& stop_;
  std::uint64_t nodes_ = 0;
};

ParamTuple normalize(const ParamTuple& raw, std::int64_t order) {
  const ParamTuple t = make_params(raw.v, raw.ks, raw.lambdas);
  if (t.k_total() > t.v) {
    throw Error(ErrorKind::rejected_before_search, "sum of set sizes exceeds v");
  }
  auto lambdas = counting_solve(t.v, t.ks);
  if (!lambdas) {
    throw Error(ErrorKind::rejected_before_search, "parameters fail the counting relation");
  }
  if (!t.lambdas.empty() && t.lambdas != *lambdas) {
    throw Error(ErrorKind::rejected_before_search, "declared lambdas fail the counting relation");
  }
  if (order != t.v) throw Error(ErrorKind::invalid, "group order differs from v");
  if (t.v > static_cast<std::int64_t>(kMaxSearchOrder)) {
    throw Error(ErrorKind::too_large, "search supports groups of order up to " + std::to_string(kMaxSearchOrder));
  }
  ParamTuple out = t;
  out.lambdas = *lambdas;
  return out;
}

struct BranchResult {
  Result result = Result::none;
  std::uint64_t nodes = 0;
  State state;
};

}  // namespace

SearchOutcome exhaustive_search(const AbelianGroup& g, const ParamTuple& raw, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const ParamTuple t = normalize(raw, static_cast<std::int64_t>(g.order()));

  Problem p;
  p.v = g.order();
  p.m = t.m();
  p.budget = options.budget;
  for (std::size_t i = 0; i < p.m; ++i) {
    p.ks.push_back(static_cast<int>(t.ks[i]));
    p.lambdas.push_back(static_cast<int>(t.lambdas[i]));
    p.same_as_prev.push_back(i > 0 && t.ks[i] == t.ks[i - 1] && t.lambdas[i] == t.lambdas[i - 1]);
    for (int pos = 0; pos < p.ks[i]; ++pos) {
      p.slot_set.push_back(i);
      p.slot_pos.push_back(pos);
    }
  }
  p.max_lambda = *std::max_element(p.lambdas.begin(), p.lambdas.end());
  p.sub.resize(p.v * p.v);
  for (std::size_t a = 0; a < p.v; ++a) {
    for (std::size_t b = 0; b < p.v; ++b) p.sub[a * p.v + b] = static_cast<std::uint32_t>(g.sub_index(a, b));
  }

  State base;
  base.in_set.assign(p.v, -1);
  base.members.assign(p.m, {});
  base.counts.assign(p.m, std::vector<int>(p.v, 0));
  std::atomic<std::size_t> stop{std::numeric_limits<std::size_t>::max()};

  // 0 goes into D_1; the next slot's candidates define the parallel branches.
  Worker seed(p, base, 0, stop);
  seed.place(0, 0);
  base = seed.state();
  std::vector<std::uint32_t> firsts;
  {
    const std::size_t set = p.slot_set[1];
    const int pos = p.slot_pos[1];
    std::uint32_t lo = pos > 0 ? 1 : (p.same_as_prev[set] ? 1 : 0);
    const auto hi = static_cast<std::uint32_t>(p.v - static_cast<std::size_t>(p.ks[set] - pos));
    for (std::uint32_t e = lo; e <= hi; ++e) {
      if (base.in_set[e] < 0) firsts.push_back(e);
    }
  }

  std::vector<BranchResult> results(firsts.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= firsts.size()) return;
      if (b > stop.load()) continue;
      Worker w(p, base, b, stop);
      const Result r = w.run_branch(firsts[b]);
      results[b].result = r;
      results[b].nodes = w.nodes();
      if (r == Result::found) results[b].state = w.state();
      if (r == Result::found || r == Result::over_budget) {
        std::size_t cur = stop.load();
        while (b < cur && !stop.compare_exchange_weak(cur, b)) {
        }
      }
    }
  };
  const unsigned workers = std::max(1U, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < workers; ++i) threads.emplace_back(work);
    for (auto& th : threads) th.join();
  }

  SearchOutcome out;
  out.group = g;
  out.params = t;
  out.status = SearchStatus::exhausted;
  std::uint64_t total = 0;
  for (auto& r : results) {
    if (r.result == Result::over_budget || total + r.nodes > p.budget) {
      out.status = SearchStatus::budget_exceeded;
      total = p.budget;
      break;
    }
    total += r.nodes;
    if (r.result == Result::found) {
      std::vector<ElementSet> sets;
      for (const auto& mem : r.state.members) {
        ElementSet s;
        for (auto idx : mem) s.push_back(g.element_at(idx));
        sets.push_back(make_set(std::move(s)));
      }
      DiffFamily f(g, std::move(sets), t.lambdas);
      if (!verify_gsedf(f).is_gsedf) throw std::logic_error("search produced an invalid family");
      out.status = SearchStatus::found;
      out.family = std::move(f);
      break;
    }
  }
  out.nodes_explored = total;
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

std::vector<SearchOutcome> search_all_groups(const ParamTuple& t, const SearchOptions& options) {
  std::vector<SearchOutcome> out;
  for (const auto& g : abelian_groups_of_order(t.v)) out.push_back(exhaustive_search(g, t, options));
  return out;
}

SearchStatus aggregate_status(const std::vector<SearchOutcome>& outcomes) {
  bool all_exhausted = true;
  for (const auto& o : outcomes) {
    if (o.status == SearchStatus::found) return SearchStatus::found;
    if (o.status != SearchStatus::exhausted) all_exhausted = false;
  }
  return all_exhausted ? SearchStatus::exhausted : SearchStatus::budget_exceeded;
}

}  // namespace gsedf
