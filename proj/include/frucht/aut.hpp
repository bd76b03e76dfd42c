#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frucht/aut_search.hpp"
#include "frucht/main_graph.hpp"

namespace frucht {

// A graph automorphism as a permutation of vertex indices.
struct Automorphism {
  std::vector<int> perm;
  bool operator==(const Automorphism&) const = default;
  bool is_identity() const;
};

// (a * b)(v) = a(b(v)).
Automorphism compose(const Automorphism& a, const Automorphism& b);

// The automorphism induced by left translation: (x, y, k) -> (gx, gy, k).
Automorphism lift(const FiniteGraph& g, int element);

// Probe used to read a group element back off an automorphism.
Vertex default_probe(const FiniteGraph& g);

// Recovers g from phi via phi(x, y, 0) = (g x, g y, 0): the probe must be a
// materialized column base, and its image must be one too (otherwise the
// permutation is no lift and MalformedImage is thrown).
int decode(const FiniteGraph& g, const Automorphism& phi, const Vertex& probe);
int decode(const FiniteGraph& g, const Automorphism& phi);

// True when phi equals the lift of its decoded element and every sampled
// probe decodes to that same element.  samples == 0 means every column base;
// otherwise `samples` bases are drawn without replacement from `seed`.
bool decode_consistency(const FiniteGraph& g, const Automorphism& phi,
                        int samples = 0, std::uint64_t seed = 0);

struct VerifyOptions {
  std::uint64_t max_nodes = 10'000'000;
  int decode_samples = 0;  // 0 = all column bases
  std::uint64_t seed = 0;
};

struct RealizationReport {
  std::string group_name;
  int order = 0;
  int vertex_count = 0;
  int edge_count = 0;
  std::uint64_t aut_count = 0;
  std::uint64_t search_nodes = 0;
  bool is_isomorphic = false;    // Aut(graph) = {lifts} as a set
  bool homomorphism_ok = false;  // lift(a b) = lift(a) lift(b), all pairs
  bool decode_ok = false;        // decode round-trips every automorphism
  double elapsed_ms = 0.0;
  std::string first_failure;     // empty when ok()

  bool ok() const { return is_isomorphic && homomorphism_ok && decode_ok; }
};

// Builds the graph for `group` (with the default code assignment unless one
// is supplied), enumerates its full automorphism group, and checks that it
// is exactly the lifted copy of `group`.
RealizationReport verify_realization(const FiniteGroup& group,
                                     const VerifyOptions& opts = {});
RealizationReport verify_realization(const FiniteGroup& group,
                                     std::vector<CodeWord> psi,
                                     const VerifyOptions& opts = {});

// Lazy decode against a computable group: reads g off one probe image via
// phi(x, y, 0) = (g x, g y, 0).  The probe must be a column base; throws
// MalformedImage when the image cannot come from a left translation.
template <typename G>
typename G::Handle decode_lazy(const LazyContext<G>& ctx,
                               const typename LazyContext<G>::VertexT& probe,
                               const typename LazyContext<G>::VertexT& image) {
  if (probe.k != 0 || ctx.equal(probe.x, probe.y))
    throw InvalidInputError("probe must be a column base (x, y, 0), x != y");
  if (image.k != 0 || ctx.equal(image.x, image.y))
    throw MalformedImageError("image of a column base must be a column base");
  const auto g = ctx.group().mul(image.x, ctx.group().inv(probe.x));
  if (!ctx.equal(ctx.group().mul(g, probe.y), image.y))
    throw MalformedImageError("image is inconsistent with a left translation");
  return g;
}

// Checks that a vertex map given pointwise decodes to one and the same
// element at every supplied probe.
template <typename G, typename Map>
bool decode_consistency_lazy(
    const LazyContext<G>& ctx, const Map& phi,
    const std::vector<typename LazyContext<G>::VertexT>& probes) {
  std::optional<typename G::Handle> g;
  try {
    for (const auto& probe : probes) {
      const auto candidate = decode_lazy(ctx, probe, phi(probe));
      if (!g)
        g = candidate;
      else if (!ctx.equal(*g, candidate))
        return false;
    }
  } catch (const MalformedImageError&) {
    return false;
  }
  return true;
}

}  // namespace frucht
