#include "frucht/aut.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>

namespace frucht {

bool Automorphism::is_identity() const {
  for (int v = 0; v < static_cast<int>(perm.size()); ++v)
    if (perm[v] != v) return false;
  return true;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  if (a.perm.size() != b.perm.size())
    throw InvalidInputError("cannot compose permutations of sizes " +
                            std::to_string(a.perm.size()) + " and " +
                            std::to_string(b.perm.size()));
  Automorphism out;
  out.perm.resize(a.perm.size());
  for (std::size_t v = 0; v < b.perm.size(); ++v)
    out.perm[v] = a.perm[b.perm[v]];
  return out;
}

Automorphism lift(const FiniteGraph& g, int element) {
  const int n = g.group.order();
  if (element < 0 || element >= n)
    throw GroupMismatchError("element " + std::to_string(element) +
                             " does not belong to group of order " +
                             std::to_string(n));
  Automorphism out;
  out.perm.resize(g.vertices.size());
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const Vertex& src = g.vertices[v];
    const Vertex dst{g.group.mul(element, src.x), g.group.mul(element, src.y),
                     src.k};
    const int w = g.index_of(dst);
    if (w < 0)
      throw InternalError("lift of " + vertex_str(src) + " by element " +
                          std::to_string(element) + " left the vertex set");
    out.perm[v] = w;
  }
  return out;
}

Vertex default_probe(const FiniteGraph& g) {
  if (g.group.order() < 2)
    throw ParameterOutOfRangeError(
        "decoding needs a column base, so group order >= 2");
  return {0, 1, 0};
}

int decode(const FiniteGraph& g, const Automorphism& phi,
           const Vertex& probe) {
  if (phi.perm.size() != g.vertices.size())
    throw InvalidInputError("permutation acts on " +
                            std::to_string(phi.perm.size()) +
                            " vertices, graph has " +
                            std::to_string(g.vertices.size()));
  const int p = g.index_of(probe);
  if (p < 0 || probe.x == probe.y || probe.k != 0)
    throw InvalidInputError("probe " + vertex_str(probe) +
                            " is not a column base of the graph");
  const Vertex image = g.vertices[phi.perm[p]];
  if (image.x == image.y || image.k != 0)
    throw MalformedImageError("image " + vertex_str(image) +
                              " of column base " + vertex_str(probe) +
                              " is not a column base");
  const int e = g.group.mul(image.x, g.group.inv(probe.x));
  if (g.group.mul(e, probe.y) != image.y)
    throw MalformedImageError("image " + vertex_str(image) + " of " +
                              vertex_str(probe) +
                              " is inconsistent with a left translation");
  return e;
}

int decode(const FiniteGraph& g, const Automorphism& phi) {
  return decode(g, phi, default_probe(g));
}

bool decode_consistency(const FiniteGraph& g, const Automorphism& phi,
                        int samples, std::uint64_t seed) {
  std::vector<Vertex> probes;
  for (const Vertex& v : g.vertices)
    if (v.x != v.y && v.k == 0) probes.push_back(v);
  if (probes.empty()) return phi.is_identity();
  if (samples > 0 && samples < static_cast<int>(probes.size())) {
    std::mt19937_64 rng(seed);
    std::shuffle(probes.begin(), probes.end(), rng);
    probes.resize(samples);
  }
  int element = 0;
  try {
    element = decode(g, phi, probes[0]);
    for (std::size_t i = 1; i < probes.size(); ++i)
      if (decode(g, phi, probes[i]) != element) return false;
  } catch (const MalformedImageError&) {
    return false;
  }
  return phi == lift(g, element);
}

RealizationReport verify_realization(const FiniteGroup& group,
                                     const VerifyOptions& opts) {
  return verify_realization(group, finite_psi(group), opts);
}

RealizationReport verify_realization(const FiniteGroup& group,
                                     std::vector<CodeWord> psi,
                                     const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  RealizationReport report;
  report.group_name = group.name();
  report.order = group.order();

  const FiniteGraph graph = materialize(group, std::move(psi));
  report.vertex_count = graph.graph.num_vertices();
  report.edge_count = static_cast<int>(graph.graph.num_edges());

  AutSearchOptions search_opts;
  search_opts.max_nodes = opts.max_nodes;
  AutSearchStats stats;
  const std::vector<std::vector<int>> automorphisms =
      enumerate_automorphisms(graph.graph, search_opts, &stats);
  report.aut_count = automorphisms.size();
  report.search_nodes = stats.nodes;

  std::set<std::vector<int>> lifted;
  for (int e = 0; e < group.order(); ++e)
    lifted.insert(lift(graph, e).perm);
  std::set<std::vector<int>> found(automorphisms.begin(), automorphisms.end());
  report.is_isomorphic = lifted == found;
  if (!report.is_isomorphic)
    report.first_failure =
        "automorphism group has " + std::to_string(found.size()) +
        " elements, lifted group contributes " + std::to_string(lifted.size());

  report.homomorphism_ok = true;
  for (int a = 0; a < group.order() && report.homomorphism_ok; ++a)
    for (int b = 0; b < group.order(); ++b)
      if (compose(lift(graph, a), lift(graph, b)) !=
          lift(graph, group.mul(a, b))) {
        report.homomorphism_ok = false;
        report.first_failure = "lift is not multiplicative at (" +
                               std::to_string(a) + ", " + std::to_string(b) +
                               ")";
        break;
      }

  report.decode_ok = true;
  if (group.order() == 1) {
    // Single hub: the only automorphism is the identity, nothing to decode.
    report.decode_ok =
        automorphisms.size() == 1 && automorphisms[0] == std::vector<int>{0};
    if (!report.decode_ok) report.first_failure = "trivial group not rigid";
  } else {
    for (const auto& perm : automorphisms) {
      const Automorphism phi{perm};
      int element = -1;
      try {
        element = decode(graph, phi);
      } catch (const Error& e) {
        report.decode_ok = false;
        report.first_failure = std::string("decode failed: ") + e.what();
        break;
      }
      if (lift(graph, element) != phi ||
          !decode_consistency(graph, phi, opts.decode_samples, opts.seed)) {
        report.decode_ok = false;
        report.first_failure =
            "decoded element " + std::to_string(element) +
            " does not reproduce the automorphism consistently";
        break;
      }
    }
  }

  const auto end = std::chrono::steady_clock::now();
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(end - start).count();
  return report;
}

}  // namespace frucht
