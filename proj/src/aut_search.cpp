#include "frucht/aut_search.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "frucht/errors.hpp"

namespace frucht {
namespace {

// The searcher keeps two partitions of the vertex set with aligned cell
// lists: the branch invariant is that any automorphism extending the current
// choices maps cells1[i] onto cells2[i].  Refinement splits both sides by
// neighbor counts into a splitter cell using identical, canonical rules, so
// the alignment survives; a shape mismatch between the sides proves that no
// automorphism extends the branch.
struct PairedPartition {
  std::vector<std::vector<int>> cells1, cells2;
};

class AutSearcher {
 public:
  AutSearcher(const SimpleGraph& g, const AutSearchOptions& opts)
      : g_(g), opts_(opts) {}

  std::vector<std::vector<int>> run(AutSearchStats* stats) {
    const int n = g_.num_vertices();
    if (n == 0) return {{}};

    PairedPartition root;
    for (auto& [deg, verts] : g_.degree_index()) {
      root.cells1.push_back(verts);
      root.cells2.push_back(verts);
    }
    if (opts_.fix_vertex) {
      individualize_in_place(root, *opts_.fix_vertex, *opts_.fix_vertex);
    }
    std::vector<int> work(root.cells1.size());
    for (std::size_t i = 0; i < work.size(); ++i) work[i] = static_cast<int>(i);
    if (refine(root, work)) search(root);

    std::sort(found_.begin(), found_.end());
    if (stats) stats->nodes = nodes_;
    return std::move(found_);
  }

 private:
  // Splits the cell containing v (side 1) / w (side 2) into {v} plus the
  // rest; both sides must hold them in the same cell index.
  static void individualize_in_place(PairedPartition& p, int v, int w) {
    for (std::size_t ci = 0; ci < p.cells1.size(); ++ci) {
      auto& c1 = p.cells1[ci];
      if (std::find(c1.begin(), c1.end(), v) == c1.end()) continue;
      if (c1.size() == 1) return;  // already alone
      auto& c2 = p.cells2[ci];
      std::vector<int> rest1, rest2;
      for (const int x : c1)
        if (x != v) rest1.push_back(x);
      for (const int x : c2)
        if (x != w) rest2.push_back(x);
      c1 = {v};
      c2 = {w};
      p.cells1.push_back(std::move(rest1));
      p.cells2.push_back(std::move(rest2));
      return;
    }
  }

  // Propagates neighbor-count splits to a fixed point.  `work` seeds the
  // splitter queue with cell indices.  Returns false when the sides split
  // incompatibly.
  bool refine(PairedPartition& p, const std::vector<int>& work) const {
    const int n = g_.num_vertices();
    std::deque<int> queue(work.begin(), work.end());
    std::vector<int> cnt1(n), cnt2(n);
    while (!queue.empty()) {
      const int s = queue.front();
      queue.pop_front();
      std::fill(cnt1.begin(), cnt1.end(), 0);
      std::fill(cnt2.begin(), cnt2.end(), 0);
      for (const int u : p.cells1[s])
        for (const int nb : g_.neighbors(u)) ++cnt1[nb];
      for (const int u : p.cells2[s])
        for (const int nb : g_.neighbors(u)) ++cnt2[nb];

      for (std::size_t ci = 0; ci < p.cells1.size(); ++ci) {
        auto& c1 = p.cells1[ci];
        auto& c2 = p.cells2[ci];
        if (c1.size() != c2.size()) return false;
        if (c1.size() == 1) {
          if (cnt1[c1[0]] != cnt2[c2[0]]) return false;
          continue;
        }
        // Group both cells by count; keys and group sizes must agree.
        std::map<int, std::vector<int>> g1, g2;
        for (const int v : c1) g1[cnt1[v]].push_back(v);
        for (const int v : c2) g2[cnt2[v]].push_back(v);
        if (g1.size() != g2.size()) return false;
        auto it1 = g1.begin();
        auto it2 = g2.begin();
        for (; it1 != g1.end(); ++it1, ++it2) {
          if (it1->first != it2->first ||
              it1->second.size() != it2->second.size())
            return false;
        }
        if (g1.size() == 1) continue;
        // Replace the cell by the first fragment, append the rest (same
        // canonical order on both sides), and requeue all fragments.
        it1 = g1.begin();
        it2 = g2.begin();
        c1 = std::move(it1->second);
        c2 = std::move(it2->second);
        queue.push_back(static_cast<int>(ci));
        for (++it1, ++it2; it1 != g1.end(); ++it1, ++it2) {
          p.cells1.push_back(std::move(it1->second));
          p.cells2.push_back(std::move(it2->second));
          queue.push_back(static_cast<int>(p.cells1.size()) - 1);
        }
      }
    }
    return true;
  }

  void search(const PairedPartition& p) {
    // Branch vertex: the lowest-index vertex living in a non-singleton cell.
    int branch_cell = -1;
    int branch_v = g_.num_vertices();
    for (std::size_t ci = 0; ci < p.cells1.size(); ++ci) {
      if (p.cells1[ci].size() > 1 && p.cells1[ci][0] < branch_v) {
        branch_v = p.cells1[ci][0];
        branch_cell = static_cast<int>(ci);
      }
    }
    if (branch_cell < 0) {
      emit_leaf(p);
      return;
    }
    for (const int w : p.cells2[branch_cell]) {
      if (++nodes_ > opts_.max_nodes)
        throw SearchBudgetExceededError(
            "automorphism search exceeded " +
                std::to_string(opts_.max_nodes) + " nodes (" +
                std::to_string(found_.size()) + " automorphisms found so far)",
            nodes_, found_.size());
      PairedPartition child = p;
      individualize_in_place(child, branch_v, w);
      const std::vector<int> work = {
          branch_cell, static_cast<int>(child.cells1.size()) - 1};
      if (refine(child, work)) search(child);
    }
  }

  void emit_leaf(const PairedPartition& p) {
    std::vector<int> f(g_.num_vertices(), -1);
    for (std::size_t ci = 0; ci < p.cells1.size(); ++ci) {
      if (p.cells1[ci].size() != 1 || p.cells2[ci].size() != 1) return;
      f[p.cells1[ci][0]] = p.cells2[ci][0];
    }
    // Exhaustive recheck: bijection + adjacency preservation.  With equal
    // edge counts, forward preservation implies non-edges map to non-edges.
    std::vector<char> hit(f.size(), 0);
    for (const int img : f) {
      if (img < 0 || hit[img]) return;
      hit[img] = 1;
    }
    for (int u = 0; u < g_.num_vertices(); ++u)
      for (const int nb : g_.neighbors(u))
        if (!g_.has_edge(f[u], f[nb])) return;
    found_.push_back(std::move(f));
  }

  const SimpleGraph& g_;
  AutSearchOptions opts_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<int>> found_;
};

}  // namespace

std::vector<std::vector<int>> enumerate_automorphisms(
    const SimpleGraph& g, const AutSearchOptions& opts,
    AutSearchStats* stats) {
  if (opts.fix_vertex &&
      (*opts.fix_vertex < 0 || *opts.fix_vertex >= g.num_vertices()))
    throw InvalidInputError("fixed vertex out of range");
  AutSearcher searcher(g, opts);
  return searcher.run(stats);
}

}  // namespace frucht
