#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gsedf/group.hpp"
#include "gsedf/verify.hpp"

namespace gsedf {

/// The block (D_1 + g; D_2 + g) of the induced K_{k1,k2}-decomposition.
struct BipartiteBlock {
  ElementSet left;
  ElementSet right;
  GroupElement shift;
};

/// A decomposition of the complete multigraph 2 lambda K_v into v copies of
/// K_{k1,k2}, one per group element.
struct Decomposition {
  AbelianGroup group;
  std::int64_t v = 0;
  std::int64_t k1 = 0;
  std::int64_t k2 = 0;
  std::int64_t multiplicity = 0;  // 2 lambda
  std::vector<BipartiteBlock> blocks;
};

/// Throws not-applicable unless f has two sets, equal lambdas and passes
/// verify_gsedf.
Decomposition decompose(const DiffFamily& f);

/// Exact pair-coverage count plus closure of the block set under translation
/// by each generator of the group.
bool verify_decomposition(const Decomposition& d);

enum class EmitFormat { edge_list, dot };

/// Accepts "edges", "edge-list" and "dot"; throws usage otherwise.
EmitFormat parse_emit_format(std::string_view name);

/// Vertices are written as canonical element ranks.
std::string emit(const Decomposition& d, EmitFormat format);

}  // namespace gsedf
