#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frucht/graph.hpp"

namespace frucht {

struct AutSearchOptions {
  // Backtrack-node budget; exceeding it raises SearchBudgetExceeded.
  std::uint64_t max_nodes = 10'000'000;
  // When set, only automorphisms fixing this vertex are enumerated.
  std::optional<int> fix_vertex;
};

struct AutSearchStats {
  std::uint64_t nodes = 0;
};

// Enumerates the full automorphism group of g (as permutation arrays,
// vertex index -> image index) by backtracking: iterated neighborhood
// partition refinement to a fixed point, then individualization of the
// lowest-index unresolved vertex.  Every emitted permutation is recheck-
// verified against the adjacency structure.  Output is sorted
// lexicographically, so results are deterministic.
std::vector<std::vector<int>> enumerate_automorphisms(
    const SimpleGraph& g, const AutSearchOptions& opts = {},
    AutSearchStats* stats = nullptr);

}  // namespace frucht
