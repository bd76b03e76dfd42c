#pragma once

#include <map>
#include <utility>
#include <vector>

namespace frucht {

// Undirected simple graph on vertices 0..n-1.  Adjacency lists are kept
// sorted; loops are rejected and duplicate insertions are ignored.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0) : adj_(n) {}

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const { return edge_count_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

  // Degree -> sorted vertex list.
  std::map<int, std::vector<int>> degree_index() const;

  // All edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

}  // namespace frucht
