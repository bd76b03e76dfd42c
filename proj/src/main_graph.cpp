#include "frucht/main_graph.hpp"

#include <limits>
#include <set>

namespace frucht {

std::string vertex_str(const Vertex& v) {
  return std::to_string(v.x) + "," + std::to_string(v.y) + "," +
         std::to_string(v.k);
}

Vertex parse_vertex(const std::string& s) {
  const auto bad = [&] {
    return InvalidInputError("malformed vertex '" + s +
                             "', expected \"x,y,k\"");
  };
  const auto c1 = s.find(',');
  const auto c2 = s.find(',', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) throw bad();
  const auto parse_part = [&](const std::string& part, std::uint64_t& out) {
    if (part.empty()) throw bad();
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(part, &pos);
    } catch (const std::exception&) {
      throw bad();
    }
    if (pos != part.size()) throw bad();
    out = value;
  };
  std::uint64_t x = 0, y = 0, k = 0;
  parse_part(s.substr(0, c1), x);
  parse_part(s.substr(c1 + 1, c2 - c1 - 1), y);
  parse_part(s.substr(c2 + 1), k);
  if (x > static_cast<std::uint64_t>(std::numeric_limits<int>::max()) ||
      y > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
    throw bad();
  return {static_cast<int>(x), static_cast<int>(y), k};
}

FinitePsiContext::FinitePsiContext(const FiniteGroup& group,
                                   std::vector<CodeWord> psi)
    : group_(&group), psi_(std::move(psi)) {
  if (static_cast<int>(psi_.size()) != group.order())
    throw GroupMismatchError("code assignment has " +
                             std::to_string(psi_.size()) +
                             " words for group of order " +
                             std::to_string(group.order()));
}

namespace {

// Off-diagonal pairs (x, y) are ranked lexicographically.
int pair_rank(int order, int x, int y) {
  return x * (order - 1) + (y < x ? y : y - 1);
}

void validate_psi(const FiniteGroup& group, const std::vector<CodeWord>& psi) {
  if (static_cast<int>(psi.size()) != group.order())
    throw GroupMismatchError("code assignment has " +
                             std::to_string(psi.size()) +
                             " words for group of order " +
                             std::to_string(group.order()));
  const std::size_t len = psi.empty() ? 0 : psi[0].length();
  for (int g = 0; g < group.order(); ++g) {
    if (psi[g].length() != len)
      throw InvalidInputError("code words must share one length; word " +
                              std::to_string(g) + " has length " +
                              std::to_string(psi[g].length()));
    if (!psi[g].ends_in_terminator())
      throw MissingTerminatorError("code word " + std::to_string(g) + " ('" +
                                   psi[g].str() +
                                   "') does not end in the 0 terminator");
  }
  std::set<CodeWord> distinct(psi.begin(), psi.end());
  if (static_cast<int>(distinct.size()) != group.order())
    throw InvalidInputError("code words must be pairwise distinct");
}

}  // namespace

int FiniteGraph::index_of(const Vertex& v) const {
  const int n = group.order();
  if (v.x < 0 || v.x >= n || v.y < 0 || v.y >= n) return -1;
  if (v.x == v.y) return v.k == 0 ? v.x : -1;
  if (v.k > static_cast<std::uint64_t>(k_max)) return -1;
  const int column_len = k_max + 1;
  return n + pair_rank(n, v.x, v.y) * column_len + static_cast<int>(v.k);
}

FiniteGraph materialize(const FiniteGroup& group, std::vector<CodeWord> psi) {
  validate_psi(group, psi);
  FiniteGraph out(group);
  out.psi = std::move(psi);
  const int n = group.order();
  out.code_len = static_cast<int>(out.psi[0].length());
  out.k_max = 2 * out.code_len + 6;
  const int column_len = out.k_max + 1;

  out.vertices.reserve(n + n * (n - 1) * column_len);
  for (int x = 0; x < n; ++x) out.vertices.push_back({x, x, 0});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      for (int k = 0; k < column_len; ++k)
        out.vertices.push_back({x, y, static_cast<std::uint64_t>(k)});
    }

  SimpleGraph g(static_cast<int>(out.vertices.size()));
  const auto at = [&](int x, int y, int k) { return out.index_of({x, y, static_cast<std::uint64_t>(k)}); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      g.add_edge(at(x, x, 0), at(x, y, 0));
      g.add_edge(at(x, y, 0), at(x, y, 1));
      g.add_edge(at(x, y, 0), at(x, y, 2));
      g.add_edge(at(x, y, 2), at(x, y, 3));
      g.add_edge(at(x, y, 3), at(x, y, 4));
      g.add_edge(at(x, y, 2), at(y, y, 0));
      const CodeWord& word = out.psi[group.mul(group.inv(x), y)];
      for (int i = 0; i <= out.code_len; ++i) {
        const int base = 4 + 2 * i;  // block i spans base .. base + 2
        if (word.bit(i) == 1) {
          g.add_edge(at(x, y, base), at(x, y, base + 1));
          g.add_edge(at(x, y, base), at(x, y, base + 2));
        } else {
          g.add_edge(at(x, y, base), at(x, y, base + 1));
          g.add_edge(at(x, y, base + 1), at(x, y, base + 2));
        }
      }
    }
  out.graph = std::move(g);
  return out;
}

bool oracle_agreement(const FiniteGraph& g, const FinitePsiContext& ctx) {
  if (ctx.group().order() != g.group.order())
    throw GroupMismatchError("context group order " +
                             std::to_string(ctx.group().order()) +
                             " does not match graph group order " +
                             std::to_string(g.group.order()));
  const int m = static_cast<int>(g.vertices.size());
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) {
      const bool predicate = main_edge(ctx, g.vertices[u], g.vertices[v]);
      if (predicate != g.graph.has_edge(u, v)) return false;
    }
  return true;
}

VertexClasses classify_by_degree(const FiniteGraph& g) {
  const int n = g.group.order();
  if (n < 3)
    throw ParameterOutOfRangeError(
        "degree classification needs group order >= 3, got " +
        std::to_string(n));
  const int hub_degree = 2 * (n - 1);
  VertexClasses out;
  const int m = g.graph.num_vertices();
  for (int v = 0; v < m; ++v) {
    bool leaf_nb = false, hub_nb = false;
    for (int w : g.graph.neighbors(v)) {
      if (g.graph.degree(w) == 1) leaf_nb = true;
      if (g.graph.degree(w) == hub_degree) hub_nb = true;
    }
    if (leaf_nb && hub_nb) out.column_base.push_back(v);
  }
  std::set<int> hubs, leaves, ports;
  for (int b : out.column_base) {
    int leaf = -1, hub = -1, port = -1;
    int leaf_count = 0, hub_count = 0, port_count = 0;
    for (int w : g.graph.neighbors(b)) {
      const int d = g.graph.degree(w);
      if (d == 1) {
        leaf = w;
        ++leaf_count;
      } else if (d == hub_degree) {
        hub = w;
        ++hub_count;
      } else {
        port = w;
        ++port_count;
      }
    }
    if (leaf_count != 1 || hub_count != 1 || port_count != 1)
      out.neighbors_unique = false;
    if (leaf >= 0) leaves.insert(leaf);
    if (hub >= 0) hubs.insert(hub);
    if (port >= 0) ports.insert(port);
  }
  out.hubs.assign(hubs.begin(), hubs.end());
  out.column_leaf.assign(leaves.begin(), leaves.end());
  out.column_port.assign(ports.begin(), ports.end());
  return out;
}

bool degree_classification_matches(const FiniteGraph& g) {
  const VertexClasses got = classify_by_degree(g);
  if (!got.neighbors_unique) return false;
  std::vector<int> hubs, bases, leaves, ports;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    const Vertex& vx = g.vertices[v];
    if (vx.x == vx.y)
      hubs.push_back(v);
    else if (vx.k == 0)
      bases.push_back(v);
    else if (vx.k == 1)
      leaves.push_back(v);
    else if (vx.k == 2)
      ports.push_back(v);
  }
  return got.hubs == hubs && got.column_base == bases &&
         got.column_leaf == leaves && got.column_port == ports;
}

}  // namespace frucht
