#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gsedf/construct.hpp"
#include "gsedf/decomp.hpp"
#include "gsedf/error.hpp"
#include "gsedf/feasibility.hpp"
#include "gsedf/io.hpp"
#include "gsedf/search.hpp"
#include "gsedf/verify.hpp"

namespace gsedf::cli {

namespace {

using io::Json;

io::Json read_json(const std::string& path, std::istream& in) {
  std::ifstream file;
  std::istream* src = &in;
  if (path != "-") {
    file.open(path);
    if (!file) throw Error(ErrorKind::usage, "cannot open " + path);
    src = &file;
  }
  try {
    return Json::parse(*src);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::invalid, "malformed JSON in " + path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::usage, "cannot write " + path);
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage:
    case ErrorKind::invalid:
    case ErrorKind::invalid_factors:
    case ErrorKind::wrong_group:
    case ErrorKind::empty_range:
      return kUsage;
    default:
      return kNegative;
  }
}

struct ParamFlags {
  std::int64_t v = 0;
  std::vector<std::int64_t> ks;
  std::vector<std::int64_t> lambdas;

  void attach(CLI::App* sub, bool lambda_flag = true) {
    sub->add_option("--v", v, "group order")->required()->check(CLI::PositiveNumber);
    sub->add_option("--k", ks, "set sizes k1,k2,...")->required()->delimiter(',');
    if (lambda_flag) sub->add_option("--lambda", lambdas, "declared lambdas l1,l2,...")->delimiter(',');
  }

  [[nodiscard]] ParamTuple tuple() const { return make_params(v, ks, lambdas); }
};

int verdict_exit(const FeasibilityVerdict& v) {
  return v.status == FeasibilityStatus::ruled_out || v.status == FeasibilityStatus::denied_by_catalog
             ? kNegative
             : kOk;
}

int search_exit(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return kOk;
    case SearchStatus::exhausted: return kNegative;
    case SearchStatus::budget_exceeded: return kBudget;
  }
  return kNegative;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized strong external difference families: construct, verify, search, rule out."};
  app.name("gsedf");
  app.require_subcommand(1, 1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a family from a named recipe");
  std::string recipe_name;
  std::vector<std::int64_t> recipe_args;
  std::string base_path;
  std::string out_path = "-";
  construct->add_option("recipe", recipe_name,
                        "c1 | lift | paley_even | paley_odd | two_n | g16 | twin_prime | "
                        "m3_prime_power | q4_lift | family_4m1")
      ->required();
  construct->add_option("--args", recipe_args, "integer arguments a,b,...")->delimiter(',');
  construct->add_option("--base", base_path, "family file to lift (lift only)");
  construct->add_option("--out", out_path, "output file, - for stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "check a family file exactly");
  std::string verify_path;
  bool spectral = false;
  std::optional<double> tol;
  bool coset = false;
  verify->add_option("file", verify_path, "family file, - for stdin")->required();
  verify->add_flag("--spectral", spectral, "also run the character-sum check");
  verify->add_option("--tol", tol, "spectral tolerance (default 1e-6 v)");
  verify->add_flag("--coset-check", coset, "also check that no set lies in a proper-subgroup coset");

  // search
  auto* search = app.add_subcommand("search", "exhaustive backtracking search");
  ParamFlags search_params;
  search_params.attach(search);
  std::vector<std::int64_t> group_factors;
  bool all_groups = false;
  SearchOptions search_opts;
  bool timing = false;
  auto* group_opt = search->add_option("--group", group_factors, "group factors d1,d2,... (default cyclic)")
                        ->delimiter(',');
  search->add_flag("--all-groups", all_groups, "search every abelian group of order v")->excludes(group_opt);
  search->add_option("--budget", search_opts.budget, "node budget")->check(CLI::PositiveNumber);
  search->add_option("--workers", search_opts.workers, "worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--timing", timing, "include elapsed seconds in the output");

  // feasible
  auto* feasible = app.add_subcommand("feasible", "enumerate counting-feasible parameter tuples");
  std::int64_t v_max = 0;
  std::size_t m = 0;
  EnumerationConstraints constraints;
  bool sum_k_eq_v = false;
  std::string k1_bound;
  bool strict = false;
  std::string format = "csv";
  feasible->add_option("--v-max", v_max, "largest v")->required()->check(CLI::PositiveNumber);
  feasible->add_option("--m", m, "number of sets")->required()->check(CLI::Range(2, 64));
  feasible->add_option("--lambda-min", constraints.lambda_min, "smallest lambda")->check(CLI::PositiveNumber);
  feasible->add_flag("--sum-k-eq-v", sum_k_eq_v, "only partitions of G (implies --k1-bound sqrt-v --strict)");
  feasible->add_option("--k1-bound", k1_bound, "lower bound on k1: none | one | sqrt-v")
      ->check(CLI::IsMember({"none", "one", "sqrt-v"}));
  feasible->add_flag("--strict", strict, "require k1 < k2 < ... < km");
  feasible->add_option("--workers", constraints.workers, "worker threads")->check(CLI::PositiveNumber);
  feasible->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  // ruleout / catalog
  auto* ruleout = app.add_subcommand("ruleout", "run the nonexistence filters");
  ParamFlags ruleout_params;
  ruleout_params.attach(ruleout);
  auto* catalog = app.add_subcommand("catalog", "look up a tuple in the static status catalog");
  ParamFlags catalog_params;
  catalog_params.attach(catalog);

  // decompose
  auto* decomp = app.add_subcommand("decompose", "emit the induced bipartite decomposition");
  std::string decomp_path;
  std::string decomp_format = "edges";
  decomp->add_option("file", decomp_path, "family file, - for stdin")->required();
  decomp->add_option("--format", decomp_format, "edges | dot");

  // alpha
  auto* alpha = app.add_subcommand("alpha", "numeric sign-pattern probe");
  std::vector<std::int64_t> alpha_lambdas;
  std::int64_t alpha_k = 0;
  double c_max = kDefaultAlphaCMax;
  std::size_t grid = kDefaultAlphaGrid;
  alpha->add_option("--lambda", alpha_lambdas, "l1,l2,...")->required()->delimiter(',');
  alpha->add_option("--k", alpha_k, "total size k")->required()->check(CLI::PositiveNumber);
  alpha->add_option("--c-max", c_max, "upper end of the scan");
  alpha->add_option("--grid", grid, "grid points")->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (construct->parsed()) {
      const auto name = recipe_from_string(recipe_name);
      if (!name) throw Error(ErrorKind::usage, "unknown recipe '" + recipe_name + "'");
      std::optional<DiffFamily> family;
      if (*name == RecipeName::lift) {
        if (base_path.empty()) throw Error(ErrorKind::usage, "lift needs --base FILE");
        if (recipe_args.size() != 1) throw Error(ErrorKind::usage, "lift takes one argument t");
        family = lift(io::family_from_json(read_json(base_path, in)), recipe_args[0]);
      } else {
        if (!base_path.empty()) throw Error(ErrorKind::usage, "--base applies to lift only");
        ConstructionRecipe r;
        r.name = *name;
        r.args = recipe_args;
        family = build(r);
      }
      write_text(out_path, dump(io::to_json(*family)), out);
      return kOk;
    }

    if (verify->parsed()) {
      const DiffFamily f = io::family_from_json(read_json(verify_path, in));
      const VerifyReport report = verify_gsedf(f);
      Json j = io::to_json(report, f);
      bool ok = report.is_gsedf;
      if (spectral || tol) {
        const double t = tol.value_or(default_spectral_tol(f));
        const bool s = spectral_verify(f, t);
        j["spectral"] = {{"tol", t}, {"deviation", spectral_deviation(f)}, {"accepted", s}};
        ok = ok && s;
      }
      if (coset) {
        if (partition_shape(f) == PartitionShape::whole_group) {
          j["coset_check"] = "not_applicable";
        } else {
          const bool c = coset_check(f);
          j["coset_check"] = c;
          ok = ok && c;
        }
      }
      out << dump(j);
      return ok ? kOk : kNegative;
    }

    if (search->parsed()) {
      const ParamTuple t = search_params.tuple();
      if (all_groups) {
        const auto outcomes = search_all_groups(t, search_opts);
        Json list = Json::array();
        for (const auto& o : outcomes) list.push_back(io::to_json(o, timing));
        const auto agg = aggregate_status(outcomes);
        out << dump({{"aggregate", std::string(to_string(agg))}, {"outcomes", list}});
        return search_exit(agg);
      }
      const AbelianGroup g =
          group_factors.empty() ? AbelianGroup::make({t.v}) : AbelianGroup::make(group_factors);
      const auto outcome = exhaustive_search(g, t, search_opts);
      out << dump(io::to_json(outcome, timing));
      return search_exit(outcome.status);
    }

    if (feasible->parsed()) {
      if (sum_k_eq_v) constraints = [&] {
        auto c = m3_partition_constraints();
        c.lambda_min = constraints.lambda_min;
        c.workers = constraints.workers;
        return c;
      }();
      if (k1_bound == "none") constraints.k1_bound = KLowerBound::none;
      if (k1_bound == "one") constraints.k1_bound = KLowerBound::greater_than_one;
      if (k1_bound == "sqrt-v") constraints.k1_bound = KLowerBound::greater_than_sqrt_v;
      if (strict) constraints.strictly_increasing = true;
      const auto tuples = enumerate_params(v_max, m, constraints);
      if (format == "csv") {
        io::write_csv(out, tuples);
      } else {
        Json list = Json::array();
        for (const auto& t : tuples) list.push_back(io::to_json(t, classify(t)));
        out << dump(list);
      }
      return kOk;
    }

    if (ruleout->parsed()) {
      const ParamTuple t = ruleout_params.tuple();
      const auto verdict = rule_out(t);
      out << dump(io::to_json(with_counting_lambdas(t).value_or(t), verdict));
      return verdict_exit(verdict);
    }

    if (catalog->parsed()) {
      const ParamTuple t = catalog_params.tuple();
      const auto verdict = catalog_lookup(t);
      out << dump(io::to_json(with_counting_lambdas(t).value_or(t), verdict));
      return verdict_exit(verdict);
    }

    if (decomp->parsed()) {
      const EmitFormat fmt = parse_emit_format(decomp_format);
      const DiffFamily f = io::family_from_json(read_json(decomp_path, in));
      out << emit(decompose(f), fmt);
      return kOk;
    }

    if (alpha->parsed()) {
      const auto report = alpha_scan(alpha_lambdas, alpha_k, c_max, grid);
      out << dump(io::to_json(report));
      return report.any_root() ? kNegative : kOk;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    if (exit_for(e.kind()) == kUsage) err << app.help();
    return exit_for(e.kind());
  }
  return kUsage;
}

}  // namespace gsedf::cli
