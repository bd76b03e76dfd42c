#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "frucht/codec.hpp"
#include "frucht/errors.hpp"
#include "frucht/graph.hpp"
#include "frucht/groups.hpp"

namespace frucht {

// Vertex (x, y, k): x, y are group element handles, k a natural index.
template <typename Element>
struct TripleVertex {
  Element x;
  Element y;
  std::uint64_t k;
  bool operator==(const TripleVertex&) const = default;
};

using Vertex = TripleVertex<int>;

std::string vertex_str(const Vertex& v);            // "x,y,k"
Vertex parse_vertex(const std::string& s);          // inverse of vertex_str

// Adjacency contexts bind a group together with the code assignment Psi and
// supply the two queries the edge relation needs: handle equality and the
// i-th bit of Psi(x^-1 y).

class FinitePsiContext {
 public:
  // The context keeps a pointer to the group; callers keep it alive.
  FinitePsiContext(const FiniteGroup& group, std::vector<CodeWord> psi);

  bool equal(int a, int b) const {
    check_handle(a);
    check_handle(b);
    return a == b;
  }
  int psi_bit(int x, int y, std::uint64_t i) const {
    check_handle(x);
    check_handle(y);
    return psi_[group_->mul(group_->inv(x), y)].bit(i);
  }
  const FiniteGroup& group() const { return *group_; }
  const std::vector<CodeWord>& psi() const { return psi_; }

 private:
  void check_handle(int a) const {
    if (a < 0 || a >= group_->order())
      throw GroupMismatchError("vertex handle " + std::to_string(a) +
                               " does not belong to group of order " +
                               std::to_string(group_->order()));
  }

  const FiniteGroup* group_;
  std::vector<CodeWord> psi_;
};

// Lazy context over a computable group: the graph is never materialized, the
// edge relation is queried pointwise (diagonal tails included).
template <typename G>
class LazyContext {
 public:
  using Element = typename G::Handle;
  using VertexT = TripleVertex<Element>;

  LazyContext(G group, std::function<BitOracle(const Element&)> psi)
      : group_(std::move(group)), psi_(std::move(psi)) {}

  bool equal(const Element& a, const Element& b) const {
    return group_.equal(a, b);
  }
  int psi_bit(const Element& x, const Element& y, std::uint64_t i) const {
    return psi_(group_.mul(group_.inv(x), y))(i);
  }
  // The lifted vertex map of left translation by g.
  VertexT lift_vertex(const Element& g, const VertexT& v) const {
    return {group_.mul(g, v.x), group_.mul(g, v.y), v.k};
  }
  const G& group() const { return group_; }

 private:
  G group_;
  std::function<BitOracle(const Element&)> psi_;
};

// The edge relation on triples, symmetric and irreflexive.  Four families:
// the block base wiring each off-diagonal column (x, y, *) to the hubs
// (x, x, 0) and (y, y, 0), the per-bit fork/path blocks encoding
// Psi(x^-1 y), and the diagonal tail paths (x, x, n)-(x, x, n+1).
template <typename Ctx, typename V>
bool main_edge(const Ctx& ctx, const V& u, const V& v) {
  const bool u_diag = ctx.equal(u.x, u.y);
  const bool v_diag = ctx.equal(v.x, v.y);
  if (u_diag && v_diag) {
    if (!ctx.equal(u.x, v.x)) return false;
    return u.k + 1 == v.k || v.k + 1 == u.k;
  }
  if (u_diag != v_diag) {
    const V& d = u_diag ? u : v;  // the diagonal endpoint
    const V& p = u_diag ? v : u;
    if (d.k != 0) return false;
    if (p.k == 0) return ctx.equal(d.x, p.x);  // hub to column base
    if (p.k == 2) return ctx.equal(d.x, p.y);  // column port back to hub
    return false;
  }
  // Both off-diagonal: edges stay within one column.
  if (!ctx.equal(u.x, v.x) || !ctx.equal(u.y, v.y)) return false;
  const std::uint64_t lo = std::min(u.k, v.k), hi = std::max(u.k, v.k);
  if (lo == hi) return false;
  if (hi - lo == 1) {
    if (lo == 0 || lo == 2 || lo == 3) return true;
    if (lo == 1) return false;
    if (lo % 2 == 0) return true;  // block edge (n, n+1), any bit
    return ctx.psi_bit(u.x, u.y, (lo - 5) / 2) == 0;  // path tail (n+1, n+2)
  }
  if (hi - lo == 2) {
    if (lo == 0) return true;
    if (lo >= 4 && lo % 2 == 0)
      return ctx.psi_bit(u.x, u.y, (lo - 4) / 2) == 1;  // fork (n, n+2)
    return false;
  }
  return false;
}

// Materialized main graph for a finite group: hubs (x, x, 0) plus the full
// off-diagonal columns (x, y, 0..2T+6) where T is the shared code length
// (terminator included).  Diagonal tails (x, x, k >= 1) are omitted; for the
// trivial group the graph is the single hub.
struct FiniteGraph {
  explicit FiniteGraph(FiniteGroup g) : group(std::move(g)) {}

  FiniteGroup group;
  std::vector<CodeWord> psi;
  int code_len = 0;  // T
  int k_max = 0;     // 2T + 6
  std::vector<Vertex> vertices;  // hubs first (index = x), then columns
  SimpleGraph graph;

  int index_of(const Vertex& v) const;  // -1 when not materialized
  FinitePsiContext context() const { return {group, psi}; }
};

FiniteGraph materialize(const FiniteGroup& group, std::vector<CodeWord> psi);

// Dual-route check: compares the constructed adjacency structure against
// the pointwise edge relation over every vertex pair.  GroupMismatch when
// the context belongs to a group of a different order.
bool oracle_agreement(const FiniteGraph& g, const FinitePsiContext& ctx);

// Degree-based recovery of the structural vertex classes (needs order >= 3):
// column bases (x, y, 0) are the vertices with both a degree-1 neighbor and
// a neighbor of the hub degree 2(order - 1); the other classes are read off
// their neighborhoods.
struct VertexClasses {
  std::vector<int> hubs;        // (x, x, 0)
  std::vector<int> column_base; // (x, y, 0)
  std::vector<int> column_leaf; // (x, y, 1)
  std::vector<int> column_port; // (x, y, 2)
  bool neighbors_unique = true; // every base had exactly one of each
};

VertexClasses classify_by_degree(const FiniteGraph& g);

// True when classify_by_degree recovers exactly the label-defined classes.
bool degree_classification_matches(const FiniteGraph& g);

}  // namespace frucht
