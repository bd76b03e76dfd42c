#include "frucht/graph.hpp"

#include <algorithm>

#include "frucht/errors.hpp"

namespace frucht {

void SimpleGraph::add_edge(int u, int v) {
  const int n = num_vertices();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw InvalidInputError("edge endpoint out of range: " +
                            std::to_string(u) + "-" + std::to_string(v));
  if (u == v)
    throw InvalidInputError("loops are not allowed: " + std::to_string(u));
  auto& au = adj_[u];
  const auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return;  // already present
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edge_count_;
}

bool SimpleGraph::has_edge(int u, int v) const {
  const auto& au = adj_.at(u);
  return std::binary_search(au.begin(), au.end(), v);
}

std::map<int, std::vector<int>> SimpleGraph::degree_index() const {
  std::map<int, std::vector<int>> idx;
  for (int v = 0; v < num_vertices(); ++v) idx[degree(v)].push_back(v);
  return idx;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < num_vertices(); ++u)
    for (const int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

}  // namespace frucht
