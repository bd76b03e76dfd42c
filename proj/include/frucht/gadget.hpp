#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frucht/codec.hpp"
#include "frucht/graph.hpp"

namespace frucht {

// Coded gadget graph.  For a code of T bits (terminator included) the
// vertices are the integers 2..2T+4: the fixed initial path 2-3-4, then one
// block per bit i at n = 4+2i, a fork (n-(n+1), n-(n+2)) for bit 1 or a path
// segment (n-(n+1), (n+1)-(n+2)) for bit 0.  The terminator makes the final
// block a path segment.
struct GadgetGraph {
  static constexpr int first_vertex = 2;

  CodeWord code;
  SimpleGraph graph;  // index i <-> vertex label i + first_vertex

  int index_of(int label) const { return label - first_vertex; }
  int label_of(int index) const { return index + first_vertex; }
  int max_label() const { return graph.num_vertices() + first_vertex - 1; }
};

// Adjacency of the (not necessarily materialized) gadget for bit oracle a,
// on vertex labels m, n >= 2.  Symmetric and irreflexive; IndexBelowTwo for
// labels below 2.
bool gadget_edge(const BitOracle& a, std::uint64_t m, std::uint64_t n);

// Builds the finite gadget for a code; MissingTerminator unless the code's
// last bit is 0.
GadgetGraph materialize_gadget(const CodeWord& code);

// Order in which vertices become forced once vertex 2 is pinned: repeatedly,
// any neighbor set of an already-forced vertex whose unforced members have
// pairwise distinct degrees is forced too.  nullopt when propagation stalls
// before forcing every vertex.
std::optional<std::vector<int>> anchored_forcing_order(const GadgetGraph& g);

// True iff the identity is the only automorphism fixing vertex 2, decided by
// the forcing propagation above and cross-checked against the backtracking
// automorphism search for graphs with at most 22 vertices.
bool anchored_rigidity_check(const GadgetGraph& g);

// Least index below `bound` where the oracles disagree.
std::optional<std::uint64_t> first_divergence(const BitOracle& a,
                                              const BitOracle& b,
                                              std::uint64_t bound);

}  // namespace frucht
