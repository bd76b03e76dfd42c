#include "frucht/gadget.hpp"

#include <algorithm>

#include "frucht/aut_search.hpp"
#include "frucht/errors.hpp"

namespace frucht {
namespace {

constexpr int kBruteForceCrossCheckLimit = 22;

}  // namespace

bool gadget_edge(const BitOracle& a, std::uint64_t m, std::uint64_t n) {
  if (m < 2 || n < 2)
    throw IndexBelowTwoError("gadget vertices start at 2, got " +
                             std::to_string(std::min(m, n)));
  if (m == n) return false;
  const std::uint64_t lo = std::min(m, n), hi = std::max(m, n);
  // Initial path segment 2-3-4.
  if ((lo == 2 && hi == 3) || (lo == 3 && hi == 4)) return true;
  if (hi - lo == 1) {
    if (lo >= 4 && lo % 2 == 0) return true;  // (n, n+1), fork and path alike
    if (lo >= 5 && lo % 2 == 1)
      return a((lo - 5) / 2) == 0;  // (n+1, n+2) of a path block at n = lo-1
    return false;
  }
  if (hi - lo == 2) {
    if (lo >= 4 && lo % 2 == 0) return a((lo - 4) / 2) == 1;  // fork (n, n+2)
    return false;
  }
  return false;
}

GadgetGraph materialize_gadget(const CodeWord& code) {
  if (code.bits.empty())
    throw InvalidInputError("cannot materialize an empty code");
  if (!code.ends_in_terminator())
    throw MissingTerminatorError("code must end in the terminator bit 0: " +
                                 code.str());
  const int t = static_cast<int>(code.length());
  GadgetGraph g;
  g.code = code;
  g.graph = SimpleGraph(2 * t + 3);  // labels 2..2t+4
  const auto add = [&g](int a, int b) {
    g.graph.add_edge(g.index_of(a), g.index_of(b));
  };
  add(2, 3);
  add(3, 4);
  for (int i = 0; i < t; ++i) {
    const int n = 4 + 2 * i;
    add(n, n + 1);
    if (code.bit(i))
      add(n, n + 2);
    else
      add(n + 1, n + 2);
  }
  return g;
}

std::optional<std::vector<int>> anchored_forcing_order(const GadgetGraph& g) {
  const SimpleGraph& adj = g.graph;
  const int n = adj.num_vertices();
  if (n == 0) return std::nullopt;
  std::vector<char> forced(n, 0);
  std::vector<int> order;
  const int anchor = g.index_of(GadgetGraph::first_vertex);
  forced[anchor] = 1;
  order.push_back(g.label_of(anchor));

  // An automorphism fixing every forced vertex permutes the unforced
  // neighbors of each forced vertex among themselves; when those have
  // pairwise distinct degrees the permutation must fix them all.
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v = 0; v < n; ++v) {
      if (!forced[v]) continue;
      std::vector<int> open;
      for (const int nb : adj.neighbors(v))
        if (!forced[nb]) open.push_back(nb);
      if (open.empty()) continue;
      bool distinct = true;
      for (std::size_t i = 0; i < open.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < open.size() && distinct; ++j)
          distinct = adj.degree(open[i]) != adj.degree(open[j]);
      if (!distinct) continue;
      for (const int u : open) {
        forced[u] = 1;
        order.push_back(g.label_of(u));
      }
      progress = true;
    }
  }
  if (std::find(forced.begin(), forced.end(), 0) != forced.end())
    return std::nullopt;
  return order;
}

bool anchored_rigidity_check(const GadgetGraph& g) {
  const bool propagated = anchored_forcing_order(g).has_value();
  if (g.graph.num_vertices() <= kBruteForceCrossCheckLimit) {
    AutSearchOptions opts;
    opts.fix_vertex = g.index_of(GadgetGraph::first_vertex);
    const auto auts = enumerate_automorphisms(g.graph, opts);
    const bool only_identity = auts.size() == 1;
    if (only_identity != propagated)
      throw InternalError(
          "rigidity propagation disagrees with enumeration for code " +
          g.code.str());
  }
  return propagated;
}

std::optional<std::uint64_t> first_divergence(const BitOracle& a,
                                              const BitOracle& b,
                                              std::uint64_t bound) {
  for (std::uint64_t i = 0; i < bound; ++i)
    if (a(i) != b(i)) return i;
  return std::nullopt;
}

}  // namespace frucht
