#include "gsedf/io.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "gsedf/error.hpp"

namespace gsedf::io {

namespace {

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

template <typename T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::invalid, std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::invalid, std::string("malformed field '") + key + "'");
  }
}

}  // namespace

Json to_json(const AbelianGroup& g) { return g.invariant_factors(); }

Json to_json(const GroupElement& x) { return x.coords; }

Json to_json(const ElementSet& s) {
  Json a = Json::array();
  for (const auto& x : s) a.push_back(to_json(x));
  return a;
}

Json to_json(const DiffFamily& f) {
  Json sets = Json::array();
  for (const auto& s : f.sets()) sets.push_back(to_json(s));
  return {{"group", to_json(f.group())}, {"lambda", f.lambdas()}, {"sets", sets}};
}

DiffFamily family_from_json(const Json& j) {
  const auto factors = get<std::vector<std::int64_t>>(j, "group");
  const auto lambdas = get<std::vector<std::int64_t>>(j, "lambda");
  const auto raw = get<std::vector<std::vector<std::vector<int>>>>(j, "sets");
  const AbelianGroup g = AbelianGroup::make(factors);
  if (g.invariant_factors().size() != factors.size() ||
      !std::equal(factors.begin(), factors.end(), g.invariant_factors().begin())) {
    throw Error(ErrorKind::invalid_factors, "group must be given in invariant-factor form");
  }
  std::vector<ElementSet> sets;
  for (const auto& s : raw) {
    ElementSet set;
    for (const auto& coords : s) {
      GroupElement x{coords};
      g.require(x);
      set.push_back(std::move(x));
    }
    sets.push_back(std::move(set));
  }
  return DiffFamily(g, std::move(sets), lambdas);
}

Json to_json(const ConstructionRecipe& r) {
  return {{"name", std::string(to_string(r.name))},
          {"args", r.args},
          {"base", r.base ? to_json(*r.base) : Json(nullptr)}};
}

ConstructionRecipe recipe_from_json(const Json& j) {
  const auto name = get<std::string>(j, "name");
  const auto parsed = recipe_from_string(name);
  if (!parsed) throw Error(ErrorKind::invalid, "unknown recipe '" + name + "'");
  ConstructionRecipe r;
  r.name = *parsed;
  if (j.contains("args")) r.args = get<std::vector<std::int64_t>>(j, "args");
  if (j.contains("base") && !j.at("base").is_null()) {
    r.base = std::make_shared<const ConstructionRecipe>(recipe_from_json(j.at("base")));
  }
  r.validate();
  return r;
}

Json to_json(const ParamTuple& t) {
  return {{"v", t.v}, {"m", t.m()}, {"k", t.ks}, {"lambda", t.lambdas}};
}

Json to_json(const VerifyReport& r, const DiffFamily& f) {
  const auto& g = f.group();
  Json counts = Json::array();
  for (const auto& ms : r.per_index_counts) {
    std::vector<std::int64_t> row(g.order(), 0);
    for (const auto& [x, c] : ms.counts()) row[g.index_of(x)] = c;
    counts.push_back(row);
  }
  Json j = {{"is_gsedf", r.is_gsedf}, {"counts", counts}, {"first_violation", nullptr}};
  if (r.first_violation) {
    const auto& v = *r.first_violation;
    j["first_violation"] = {{"index", v.index},
                            {"element", to_json(v.element)},
                            {"observed", v.observed},
                            {"expected", v.expected}};
  }
  return j;
}

Json to_json(const ParamTuple& t, const FeasibilityVerdict& v) {
  Json j = to_json(t);
  j["status"] = std::string(to_string(v.status));
  j["reason"] = v.reason;
  j["detail"] = v.detail;
  return j;
}

Json to_json(const SearchOutcome& o, bool include_timing) {
  Json j = {{"group", to_json(o.group)},
            {"params", to_json(o.params)},
            {"status", std::string(to_string(o.status))},
            {"nodes_explored", o.nodes_explored},
            {"symmetry", std::string(kSymmetryDeclaration)},
            {"family", o.family ? to_json(*o.family) : Json(nullptr)}};
  if (include_timing) j["elapsed_seconds"] = o.elapsed.count();
  return j;
}

Json to_json(const AlphaReport& r) {
  Json patterns = Json::array();
  for (const auto& p : r.patterns) {
    Json brackets = Json::array();
    for (const auto& [lo, hi] : p.brackets) brackets.push_back({lo, hi});
    patterns.push_back({{"signs", p.signs}, {"root_found", p.root_found}, {"brackets", brackets}});
  }
  return {{"lambda", r.lambdas},
          {"c_min", r.c_min},
          {"c_max", r.c_max},
          {"grid", r.grid},
          {"informational", r.informational},
          {"any_root", r.any_root()},
          {"patterns", patterns}};
}

void write_csv(std::ostream& out, const std::vector<ParamTuple>& tuples) {
  out << "v,m,k,lambda,status,reason\n";
  for (const auto& t : tuples) {
    const auto verdict = classify(t);
    out << t.v << ',' << t.m() << ',' << join(t.ks) << ',' << join(t.lambdas) << ','
        << to_string(verdict.status) << ',' << csv_field(verdict.reason) << '\n';
  }
}

}  // namespace gsedf::io
