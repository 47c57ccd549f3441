#pragma once

// Brute-force reference implementations used only by the tests. They work
// straight from definitions (subset enumeration, dense GF(2) elimination,
// Hochster's formula) and share no code paths with the library algorithms
// beyond the basic graph and exponent containers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "regpow/graph.hpp"
#include "regpow/monomial.hpp"

namespace oracle {

using regpow::ExponentVector;
using regpow::Graph;
using regpow::VertexMask;

inline bool is_subset(VertexMask a, VertexMask b) { return (a & ~b) == 0; }

/// All minimal vertex covers, by checking every subset.
inline std::vector<VertexMask> minimal_covers(const Graph& g) {
    const int n = g.num_vertices();
    auto covers = [&](VertexMask c) {
        for (auto [u, v] : g.edges()) {
            if (!(c >> u & 1) && !(c >> v & 1)) return false;
        }
        return true;
    };
    std::vector<VertexMask> out;
    for (VertexMask c = 0; c < (VertexMask{1} << n); ++c) {
        if (!covers(c)) continue;
        bool minimal = true;
        for (VertexMask r = c; r && minimal; r &= r - 1) {
            if (covers(c & ~(r & -r))) minimal = false;
        }
        if (minimal) out.push_back(c);
    }
    return out;
}

/// f in I(G)^(s): every minimal cover C has sum_{j in C} f_j >= s.
inline bool symbolic_member(const Graph& g, const ExponentVector& f, int s) {
    for (VertexMask c : minimal_covers(g)) {
        int total = 0;
        for (int j = 0; j < g.num_vertices(); ++j) {
            if (c >> j & 1) total += f[j];
        }
        if (total < s) return false;
    }
    return true;
}

/// f in I(G)^s: some multiset of s edges has product dividing f.
inline bool power_member(const Graph& g, ExponentVector f, int s) {
    if (s == 0) return true;
    for (auto [u, v] : g.edges()) {
        if (f[u] > 0 && f[v] > 0) {
            ExponentVector rest = f;
            rest.set(u, f[u] - 1);
            rest.set(v, f[v] - 1);
            if (power_member(g, rest, s - 1)) return true;
        }
    }
    return false;
}

/// A pair of disjoint edges with no edge between them.
inline bool has_gap(const Graph& g) {
    const auto edges = g.edges();
    for (std::size_t x = 0; x < edges.size(); ++x) {
        for (std::size_t y = x + 1; y < edges.size(); ++y) {
            auto [a, b] = edges[x];
            auto [c, d] = edges[y];
            if (a == c || a == d || b == c || b == d) continue;
            if (!g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d)) return true;
        }
    }
    return false;
}

/// Chordal: no induced cycle of length >= 4 (checked over all vertex subsets).
inline bool chordal(const Graph& g) {
    const int n = g.num_vertices();
    for (VertexMask S = 0; S < (VertexMask{1} << n); ++S) {
        if (std::popcount(S) < 4) continue;
        bool two_regular = true;
        for (int v = 0; v < n && two_regular; ++v) {
            if (!(S >> v & 1)) continue;
            int deg = 0;
            for (int u = 0; u < n; ++u) deg += (S >> u & 1) && g.has_edge(u, v);
            two_regular = deg == 2;
        }
        if (!two_regular) continue;
        // 2-regular; it is a single cycle iff connected
        VertexMask seen = S & -S, frontier = seen;
        while (frontier) {
            VertexMask next = 0;
            for (int v = 0; v < n; ++v) {
                if (!(frontier >> v & 1)) continue;
                for (int u = 0; u < n; ++u) {
                    if ((S >> u & 1) && g.has_edge(u, v) && !(seen >> u & 1)) next |= VertexMask{1} << u;
                }
            }
            seen |= next;
            frontier = next;
        }
        if (seen == S) return false;
    }
    return true;
}

/// Rank over GF(2) of a dense 0/1 matrix.
inline int gf2_rank(std::vector<std::vector<char>> m) {
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[r][c]) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r != rank && m[r][c]) {
                for (int k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

/// Reduced GF(2) Betti numbers of the complex whose faces satisfy `is_face`
/// (vertex set `ground`), returned as a vector indexed by dim + 1. Empty when
/// the complex is void.
inline std::vector<int> reduced_homology(VertexMask ground, const std::function<bool(VertexMask)>& is_face) {
    std::vector<std::vector<VertexMask>> faces; // by dim + 1
    for (VertexMask f = ground;; f = (f - 1) & ground) {
        if (is_face(f)) {
            const auto d = static_cast<std::size_t>(std::popcount(f));
            if (faces.size() <= d) faces.resize(d + 1);
            faces[d].push_back(f);
        }
        if (f == 0) break;
    }
    if (faces.empty() || faces[0].empty()) return {};
    // rank of boundary from dim k (index k+1) to dim k-1 (index k)
    auto boundary_rank = [&](std::size_t idx) {
        if (idx == 0 || idx >= faces.size() || faces[idx].empty()) return 0;
        const auto& lower = faces[idx - 1];
        std::vector<std::vector<char>> m(faces[idx].size(), std::vector<char>(lower.size(), 0));
        for (std::size_t r = 0; r < faces[idx].size(); ++r) {
            for (std::size_t c = 0; c < lower.size(); ++c) {
                const VertexMask diff = faces[idx][r] & ~lower[c];
                if (is_subset(lower[c], faces[idx][r]) && std::popcount(diff) == 1) m[r][c] = 1;
            }
        }
        return gf2_rank(std::move(m));
    };
    std::vector<int> out(faces.size(), 0);
    for (std::size_t idx = 0; idx < faces.size(); ++idx) {
        out[idx] = static_cast<int>(faces[idx].size()) - boundary_rank(idx) - boundary_rank(idx + 1);
    }
    return out;
}

/// reg of a squarefree ideal over GF(2) from Hochster's formula:
/// reg I = 2 + max{ k : H~_k(Delta_W) != 0 for some vertex subset W }.
inline int hochster_regularity(const regpow::MonomialIdeal& I) {
    const int n = I.num_vars();
    const auto masks = I.squarefree_masks();
    auto is_face = [&](VertexMask f) {
        return std::none_of(masks.begin(), masks.end(), [&](VertexMask g) { return is_subset(g, f); });
    };
    int best = -100;
    for (VertexMask W = 1; W < (VertexMask{1} << n); ++W) {
        const auto h = reduced_homology(W, is_face);
        for (std::size_t idx = 0; idx < h.size(); ++idx) {
            if (h[idx] > 0) best = std::max(best, static_cast<int>(idx) - 1);
        }
    }
    return best + 2;
}

} // namespace oracle
