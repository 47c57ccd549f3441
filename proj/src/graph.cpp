#include "regpow/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>

#include "regpow/complex.hpp"

namespace regpow {

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }

std::size_t pair_count(int n) { return static_cast<std::size_t>(n * (n - 1) / 2); }

} // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVars) throw DomainError("vertex count out of range: " + std::to_string(n));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw DomainError("edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                              "} out of range");
        }
        if (u == v) throw DomainError("loop at vertex " + std::to_string(u + 1));
        if (has_edge(u, v)) {
            throw DomainError("duplicate edge {" + std::to_string(std::min(u, v) + 1) + "," +
                              std::to_string(std::max(u, v) + 1) + "}");
        }
        adj_[static_cast<std::size_t>(u)] |= bit(v);
        adj_[static_cast<std::size_t>(v)] |= bit(u);
    }
}

std::size_t Graph::num_edges() const noexcept {
    std::size_t twice = 0;
    for (VertexMask m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const noexcept {
    return u >= 0 && u < n_ && v >= 0 && v < n_ && ((adj_[static_cast<std::size_t>(u)] >> v) & 1U);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (has_edge(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

std::uint64_t Graph::upper_triangle_bits() const {
    std::uint64_t bits = 0;
    int k = 0;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v, ++k) {
            if (has_edge(u, v)) bits |= std::uint64_t{1} << k;
        }
    }
    return bits;
}

Graph Graph::from_upper_triangle_bits(int n, std::uint64_t bits) {
    if (pair_count(n) > 64) throw DomainError("too many vertices for a 64-bit edge code");
    Graph g(n);
    int k = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++k) {
            if ((bits >> k) & 1U) {
                g.adj_[static_cast<std::size_t>(u)] |= bit(v);
                g.adj_[static_cast<std::size_t>(v)] |= bit(u);
            }
        }
    }
    return g;
}

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<ExponentVector> gens;
    for (auto [u, v] : g.edges()) gens.push_back(ExponentVector::from_mask(g.num_vertices(), bit(u) | bit(v)));
    return minimalize(g.num_vertices(), std::move(gens));
}

VertexMask open_neighborhood(const Graph& g, VertexMask set) {
    VertexMask out = 0;
    for (VertexMask rest = set; rest; rest &= rest - 1) out |= g.neighbors(std::countr_zero(rest));
    return out;
}

VertexMask closed_neighborhood(const Graph& g, VertexMask set) {
    return open_neighborhood(g, set) | set;
}

bool is_independent(const Graph& g, VertexMask set) { return !has_edge_within(g, set); }

bool has_edge_within(const Graph& g, VertexMask set) {
    for (VertexMask rest = set; rest; rest &= rest - 1) {
        if (g.neighbors(std::countr_zero(rest)) & set) return true;
    }
    return false;
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.num_vertices(); ++u) {
        for (int v = u + 1; v < g.num_vertices(); ++v) {
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
        }
    }
    return {g.num_vertices(), edges};
}

bool is_gap_free(const Graph& g) {
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [a, b] = edges[i];
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (!g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d)) {
                return false;
            }
        }
    }
    return true;
}

bool covering_edge_property(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) {
        throw DomainError("{" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "} is not an edge");
    }
    const VertexMask all = g.num_vertices() == 64 ? ~VertexMask{0} : (VertexMask{1} << g.num_vertices()) - 1;
    const VertexMask rest = all & ~closed_neighborhood(g, bit(u) | bit(v));
    return !has_edge_within(g, rest);
}

bool is_chordal(const Graph& g) {
    VertexMask remaining = g.num_vertices() == 64 ? ~VertexMask{0} : (VertexMask{1} << g.num_vertices()) - 1;
    while (remaining) {
        bool removed = false;
        for (VertexMask rest = remaining; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const VertexMask nb = g.neighbors(v) & remaining;
            bool clique = true;
            for (VertexMask r2 = nb; r2 && clique; r2 &= r2 - 1) {
                const int w = std::countr_zero(r2);
                if ((nb & ~bit(w) & ~g.neighbors(w)) != 0) clique = false;
            }
            if (clique) {
                remaining &= ~bit(v);
                removed = true;
                break;
            }
        }
        if (!removed) return false;
    }
    return true;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.num_vertices()), -1);
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (VertexMask rest = g.neighbors(u); rest; rest &= rest - 1) {
                const int w = std::countr_zero(rest);
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw == -1) {
                    cw = 1 - color[static_cast<std::size_t>(u)];
                    stack.push_back(w);
                } else if (cw == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<VertexMask> minimal_vertex_covers(const Graph& g) {
    std::vector<VertexMask> edges;
    for (auto [u, v] : g.edges()) edges.push_back(bit(u) | bit(v));
    return minimal_transversals(edges);
}

// ---------------------------------------------------------------------------

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return {n, edges};
}

Graph cycle_graph(int n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return {n, edges};
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return {n, edges};
}

Graph complete_bipartite_graph(int a, int b) {
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u) {
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    }
    return {a + b, edges};
}

Graph gnp_graph(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw DomainError("edge probability outside [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (uniform01(rng) < p) edges.emplace_back(u, v);
        }
    }
    return {n, edges};
}

GapFreeSample gapfree_random_graph(int n, double p, std::uint64_t seed, std::size_t max_attempts) {
    if (p < 0.0 || p > 1.0) throw DomainError("edge probability outside [0, 1]");
    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (uniform01(rng) < p) edges.emplace_back(u, v);
            }
        }
        Graph g(n, edges);
        if (is_gap_free(g)) return {std::move(g), attempt};
    }
    throw DomainError("no gap-free graph after " + std::to_string(max_attempts) + " attempts");
}

void enumerate_all(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 0 || n > kMaxEnumerateVertices) {
        throw DomainError("exhaustive enumeration supports n <= " + std::to_string(kMaxEnumerateVertices));
    }
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t bits = 0; bits < total; ++bits) fn(Graph::from_upper_triangle_bits(n, bits));
}

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.num_vertices();
    if (n > kMaxEnumerateVertices) throw DomainError("canonical form supports n <= 7");
    std::array<int, kMaxEnumerateVertices> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        // code of the relabeled graph: new vertex i is old vertex perm[i]
        std::uint64_t code = 0;
        int k = 0;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v, ++k) {
                if (g.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
                    code |= std::uint64_t{1} << k;
                }
            }
        }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return best;
}

std::vector<Graph> isomorphism_classes(int n) {
    if (n < 0 || n > kMaxEnumerateVertices) throw DomainError("isomorphism classes support n <= 7");
    if (n == 0) return {Graph(0)};
    // Every graph on n vertices is a smaller class representative plus one
    // vertex attached to some subset, so extending the n-1 classes is exhaustive.
    std::set<std::uint64_t> codes;
    for (const Graph& base : isomorphism_classes(n - 1)) {
        const auto base_edges = base.edges();
        for (VertexMask nb = 0; nb < (VertexMask{1} << (n - 1)); ++nb) {
            auto edges = base_edges;
            for (VertexMask rest = nb; rest; rest &= rest - 1) edges.emplace_back(std::countr_zero(rest), n - 1);
            codes.insert(canonical_code(Graph(n, edges)));
        }
    }
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (std::uint64_t c : codes) out.push_back(Graph::from_upper_triangle_bits(n, c));
    return out;
}

} // namespace regpow
