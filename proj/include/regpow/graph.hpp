#pragma once

// Simple graphs on [n], edge ideals, and the graph predicates and corpus
// generators used by the verification suites. Vertices are 0-based in the
// API and 1-based in every text/JSON form.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "regpow/monomial.hpp"

namespace regpow {

using Edge = std::pair<int, int>; // u < v, 0-based

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws DomainError on loops, out-of-range vertices or repeated edges.
    Graph(int n, const std::vector<Edge>& edges);

    int num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept;
    bool has_edge(int u, int v) const noexcept;
    VertexMask neighbors(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Bit-packed upper triangle in (0,1),(0,2),...,(n-2,n-1) order.
    std::uint64_t upper_triangle_bits() const;
    static Graph from_upper_triangle_bits(int n, std::uint64_t bits);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<VertexMask> adj_;
};

MonomialIdeal edge_ideal(const Graph& g);

VertexMask open_neighborhood(const Graph& g, VertexMask set);
VertexMask closed_neighborhood(const Graph& g, VertexMask set);
bool is_independent(const Graph& g, VertexMask set);
/// Some edge has both endpoints in the set.
bool has_edge_within(const Graph& g, VertexMask set);

Graph complement(const Graph& g);
bool is_gap_free(const Graph& g);
/// The induced subgraph on [n] \ N[{u,v}] is edgeless. Throws DomainError for non-edges.
bool covering_edge_property(const Graph& g, int u, int v);
bool is_chordal(const Graph& g);
bool is_bipartite(const Graph& g);
/// Inclusion-minimal vertex covers, ascending by mask.
std::vector<VertexMask> minimal_vertex_covers(const Graph& g);

// ---------------------------------------------------------------------------
// Generators

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
/// Erdos-Renyi G(n, p); deterministic per seed across platforms.
Graph gnp_graph(int n, double p, std::uint64_t seed);

struct GapFreeSample {
    Graph graph;
    std::size_t attempts = 0; // gnp draws consumed, including the accepted one
};
/// Rejection sampling of G(n, p) on is_gap_free; DomainError after max_attempts rejections.
GapFreeSample gapfree_random_graph(int n, double p, std::uint64_t seed,
                                   std::size_t max_attempts = 10000);

inline constexpr int kMaxEnumerateVertices = 7;

/// Calls fn on all 2^(n choose 2) labeled graphs on n <= 7 vertices, in bit order.
void enumerate_all(int n, const std::function<void(const Graph&)>& fn);
/// Minimum upper-triangle code over all vertex permutations (n <= 7).
std::uint64_t canonical_code(const Graph& g);
/// One representative per isomorphism class (the canonical one), sorted by code.
std::vector<Graph> isomorphism_classes(int n);

/// Uniform double in [0, 1) from the raw engine output, so sampling is
/// reproducible across standard library implementations.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace regpow
