#include "gsedf/decomp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gsedf/error.hpp"

namespace gsedf {

Decomposition decompose(const DiffFamily& f) {
  if (f.m() != 2) throw Error(ErrorKind::not_applicable, "decomposition needs exactly two sets");
  if (f.lambdas()[0] != f.lambdas()[1]) {
    throw Error(ErrorKind::not_applicable, "decomposition needs lambda_1 = lambda_2");
  }
  if (!verify_gsedf(f).is_gsedf) throw Error(ErrorKind::not_applicable, "family does not verify");

  const auto& g = f.group();
  Decomposition d;
  d.group = g;
  d.v = f.v();
  d.k1 = static_cast<std::int64_t>(f.sets()[0].size());
  d.k2 = static_cast<std::int64_t>(f.sets()[1].size());
  d.multiplicity = 2 * f.lambdas()[0];
  d.blocks.reserve(g.order());
  for (const auto& shift : g.elements()) {
    d.blocks.push_back({translate(g, f.sets()[0], shift), translate(g, f.sets()[1], shift), shift});
  }
  return d;
}

bool verify_decomposition(const Decomposition& d) {
  const auto& g = d.group;
  const std::size_t v = g.order();
  if (d.v != static_cast<std::int64_t>(v) || d.blocks.size() != v || d.multiplicity < 1) return false;

  std::vector<std::int64_t> cover(v * v, 0);
  for (const auto& b : d.blocks) {
    if (static_cast<std::int64_t>(b.left.size()) != d.k1 ||
        static_cast<std::int64_t>(b.right.size()) != d.k2) {
      return false;
    }
    for (const auto& x : b.left) {
      for (const auto& y : b.right) {
        if (!g.contains(x) || !g.contains(y)) return false;
        std::size_t u = g.index_of(x);
        std::size_t w = g.index_of(y);
        if (u == w) return false;
        if (u > w) std::swap(u, w);
        ++cover[u * v + w];
      }
    }
  }
  for (std::size_t u = 0; u < v; ++u) {
    for (std::size_t w = u + 1; w < v; ++w) {
      if (cover[u * v + w] != d.multiplicity) return false;
    }
  }

  using Key = std::pair<ElementSet, ElementSet>;
  std::multiset<Key> blocks;
  for (const auto& b : d.blocks) blocks.emplace(b.left, b.right);
  for (std::size_t i = 0; i < g.num_factors(); ++i) {
    const GroupElement gen = g.generator(i);
    std::multiset<Key> shifted;
    for (const auto& b : d.blocks) shifted.emplace(translate(g, b.left, gen), translate(g, b.right, gen));
    if (shifted != blocks) return false;
  }
  return true;
}

EmitFormat parse_emit_format(std::string_view name) {
  if (name == "edges" || name == "edge-list") return EmitFormat::edge_list;
  if (name == "dot") return EmitFormat::dot;
  throw Error(ErrorKind::usage, "unknown format '" + std::string(name) + "' (expected edges or dot)");
}

std::string emit(const Decomposition& d, EmitFormat format) {
  const auto& g = d.group;
  std::ostringstream out;
  if (format == EmitFormat::edge_list) {
    for (const auto& b : d.blocks) {
      out << g.index_of(b.shift) << ":";
      for (const auto& x : b.left) out << ' ' << g.index_of(x);
      out << " |";
      for (const auto& y : b.right) out << ' ' << g.index_of(y);
      out << '\n';
    }
    return out.str();
  }

  out << "graph decomposition {\n";
  for (const auto& b : d.blocks) {
    const auto s = g.index_of(b.shift);
    out << "  subgraph cluster_" << s << " {\n";
    out << "    label=\"shift " << s << "\";\n";
    for (const auto& x : b.left) {
      for (const auto& y : b.right) {
        out << "    " << g.index_of(x) << " -- " << g.index_of(y) << ";\n";
      }
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gsedf
