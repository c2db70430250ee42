#pragma once

#include "mzk/graph.hpp"
#include "mzk/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mzk {

// ---------------------------------------------------------------------------
// Combinatorial embeddings

/// Cyclic neighbor order per vertex, in graph indices.
struct RotationSystem {
    std::vector<std::vector<int>> order;
};

/// Orders each vertex's neighbors counterclockwise by the direction of the
/// edge in the layout, starting from the positive x axis. Comparisons are
/// exact. Throws GraphError when the layout is missing or two neighbors of a
/// vertex lie in the same direction.
RotationSystem rotation_from_layout(const Graph& g);

/// Throws GraphError unless every rotation is a permutation of the vertex's
/// neighbors.
void check_rotation(const Graph& g, const RotationSystem& rot);

struct FaceCensus {
    /// Each face as the cyclic sequence of dart tails.
    std::vector<std::vector<VertexId>> faces;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t face_count = 0;
    long long euler = 0;
    bool connected = false;

    std::size_t length_sum() const;
    bool all_triangles() const;
};

/// Traces faces: from dart (u, v) continue with (v, w) where w follows u in
/// the rotation at v. Every dart is consumed exactly once.
FaceCensus face_census(const Graph& g, const RotationSystem& rot);

/// The outer face walk of a layout-induced rotation (the face traced with
/// positive signed area). Throws GraphError naming a repeated vertex when the
/// outer face is not a simple cycle.
std::vector<VertexId> outer_walk(const Graph& g, const RotationSystem& rot);

/// Embeds `apex` over the outer face of g - apex: the apex rotation is the
/// reversed outer walk and each walk vertex receives the apex edge in its
/// outer-face gap. Throws GraphError if the apex is not adjacent to exactly
/// the walk vertices or the walk is not simple.
RotationSystem apex_embed(const Graph& g, const VertexId& apex = VertexId::apex());

Json face_census_to_json(const FaceCensus& census);

// ---------------------------------------------------------------------------
// Hamiltonicity

inline constexpr std::uint64_t kDefaultHamiltonBudget = 100'000'000;

enum class HamiltonStatus { Found, NoneProved, Exhausted };

std::string to_string(HamiltonStatus status);

struct HamiltonResult {
    HamiltonStatus status = HamiltonStatus::Exhausted;
    std::vector<VertexId> cycle;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
};

/// Depth-first path extension from the least vertex. Prunes with forced
/// degree-2 moves, a connectivity cut-off on the unvisited vertices and a
/// component-count bound; neighbors are tried fewest-exits first.
HamiltonResult hamilton(const Graph& g, std::uint64_t budget = kDefaultHamiltonBudget);

/// Independent replay: `cycle` lists every vertex once and consecutive
/// vertices (cyclically) are adjacent. Returns the first problem found.
std::optional<std::string> check_hamiltonian_cycle(const Graph& g, const std::vector<VertexId>& cycle);

struct CutCertificate {
    std::vector<VertexId> removed;
    std::size_t components_after = 0;
    /// components_after > |removed|.
    bool non_hamiltonian = false;
};

CutCertificate cut_certificate(const Graph& g, const std::set<VertexId>& removed);

// ---------------------------------------------------------------------------
// Matchings

struct MatchingResult {
    bool perfect = false;
    std::vector<Edge> edges;
    /// Maximum matching size; a perfect matching has order/2 edges.
    std::size_t maximum = 0;
    std::string evidence;
};

/// Maximum matching by Edmonds' blossom algorithm; perfect when it covers
/// every vertex. Odd order is rejected immediately.
MatchingResult perfect_matching(const Graph& g);

/// Maximum matching size only, for oracle comparisons.
std::vector<Edge> maximum_matching(const Graph& g);

/// Independent replay: pairwise disjoint graph edges covering every vertex.
std::optional<std::string> check_perfect_matching(const Graph& g, const std::vector<Edge>& edges);

Json hamilton_result_to_json(const HamiltonResult& r);
Json cut_certificate_to_json(const CutCertificate& c);
Json matching_result_to_json(const MatchingResult& m);

}  // namespace mzk
