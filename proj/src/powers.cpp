#include "regpow/powers.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <unordered_map>

#include "regpow/complex.hpp"

namespace regpow {

std::size_t ExponentHash::operator()(const ExponentVector& a) const noexcept {
    std::size_t h = static_cast<std::size_t>(a.size()) * 0x9E3779B97F4A7C15ULL;
    for (int j = 0; j < a.size(); ++j) {
        h ^= static_cast<std::size_t>(a[j]) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::vector<VertexMask> minimal_primes(const MonomialIdeal& I) {
    if (I.is_zero()) return {0};
    return minimal_transversals(I.squarefree_masks());
}

MonomialIdeal symbolic_power(const MonomialIdeal& I, int s) {
    if (s < 1) throw DomainError("symbolic power requires s >= 1");
    if (!I.is_squarefree()) throw DomainError("symbolic powers are implemented for squarefree ideals only");
    const int n = I.num_vars();
    if (I.is_zero() || I.is_unit()) return I;
    if (s == 1) return I;
    MonomialIdeal result = MonomialIdeal::unit(n);
    for (VertexMask prime : minimal_primes(I)) {
        result = intersect(result, power(MonomialIdeal::variables(n, prime), s));
    }
    return result;
}

MonomialIdeal symbolic_power(const Graph& g, int s) { return symbolic_power(edge_ideal(g), s); }

bool differential_membership(const ExponentVector& f, const MonomialIdeal& I, int s) {
    if (s < 1) throw DomainError("differential power requires s >= 1");
    if (!I.is_squarefree()) throw DomainError("differential criterion requires a squarefree ideal");
    if (f.size() != I.num_vars()) throw DimensionError("mismatched variable counts");
    // Enumerate all a <= f with |a| <= s - 1; a not dividing f gives a zero
    // derivative and imposes no condition.
    const int n = f.size();
    ExponentVector a(n);
    std::function<bool(int, int)> walk = [&](int j, int budget) -> bool {
        if (j == n) return I.contains(quotient(f, a));
        for (int e = 0; e <= std::min(f[j], budget); ++e) {
            a.set(j, e);
            if (!walk(j + 1, budget - e)) {
                a.set(j, 0);
                return false;
            }
        }
        a.set(j, 0);
        return true;
    };
    return walk(0, s - 1);
}

std::vector<ExponentVector> extra_generators(const MonomialIdeal& ordinary, const MonomialIdeal& symbolic) {
    std::vector<ExponentVector> out;
    for (const auto& g : symbolic.gens()) {
        if (!ordinary.contains(g)) out.push_back(g);
    }
    return out;
}

MonomialIdeal intermediate_ideal(const MonomialIdeal& ordinary, const MonomialIdeal& symbolic,
                                 const IntermediateSelector& selector) {
    using Kind = IntermediateSelector::Kind;
    std::vector<ExponentVector> gens = ordinary.gens();
    switch (selector.kind) {
    case Kind::None: break;
    case Kind::All: gens.insert(gens.end(), symbolic.gens().begin(), symbolic.gens().end()); break;
    case Kind::Explicit:
        for (const auto& f : selector.chosen) {
            if (!std::binary_search(symbolic.gens().begin(), symbolic.gens().end(), f)) {
                throw DomainError(f.to_string() + " is not a minimal generator of the symbolic power");
            }
            gens.push_back(f);
        }
        break;
    case Kind::Random: {
        std::mt19937_64 rng(selector.seed);
        for (const auto& f : extra_generators(ordinary, symbolic)) {
            if (rng() >> 63) gens.push_back(f);
        }
        break;
    }
    }
    return minimalize(ordinary.num_vars(), std::move(gens));
}

MonomialIdeal intermediate_ideal(const IntermediateSpec& spec) {
    return intermediate_ideal(power(spec.base, spec.s), symbolic_power(spec.base, spec.s), spec.selector);
}

// ---------------------------------------------------------------------------

int ord(const Graph& g, const ExponentVector& f) {
    if (f.size() != g.num_vertices()) throw DimensionError("mismatched vertex count");
    std::unordered_map<ExponentVector, int, ExponentHash> memo;
    std::function<int(const ExponentVector&)> best = [&](const ExponentVector& x) -> int {
        // branch on the first vertex that still has a neighbor in the support:
        // either no further edge uses it, or one of its edges is taken
        const VertexMask supp = x.support();
        int pivot = -1;
        for (VertexMask rest = supp; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if (g.neighbors(v) & supp) {
                pivot = v;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (auto it = memo.find(x); it != memo.end()) return it->second;
        ExponentVector dropped = x;
        dropped.set(pivot, 0);
        int result = best(dropped);
        for (VertexMask rest = g.neighbors(pivot) & supp; rest; rest &= rest - 1) {
            const int w = std::countr_zero(rest);
            ExponentVector next = x;
            next.set(pivot, x[pivot] - 1);
            next.set(w, x[w] - 1);
            result = std::max(result, 1 + best(next));
        }
        memo.emplace(x, result);
        return result;
    };
    return best(f);
}

int ideal_order(const MonomialIdeal& I, const ExponentVector& f, int cap) {
    if (f.size() != I.num_vars()) throw DimensionError("mismatched variable counts");
    if (cap <= 0) return 0;
    if (I.is_unit()) return cap;
    std::unordered_map<ExponentVector, int, ExponentHash> memo;
    std::function<int(const ExponentVector&)> best = [&](const ExponentVector& x) -> int {
        if (auto it = memo.find(x); it != memo.end()) return it->second;
        int result = 0;
        for (const auto& g : I.gens()) {
            if (!g.divides(x)) continue;
            result = std::max(result, 1 + best(quotient(x, g)));
            if (result >= cap) break;
        }
        result = std::min(result, cap);
        memo.emplace(x, result);
        return result;
    };
    return best(f);
}

bool power_membership(const ExponentVector& f, const MonomialIdeal& I, int s) {
    if (s < 0) throw DomainError("negative power");
    return ideal_order(I, f, s) >= s;
}

bool criterion_in_power(const Graph& g, VertexMask face, const ExponentVector& a, int s) {
    if (a.size() != g.num_vertices()) throw DimensionError("mismatched vertex count");
    if (!is_independent(g, face)) throw DomainError("criterion requires an independent set");
    const VertexMask open = open_neighborhood(g, face);
    const VertexMask closed = open | face;
    int total = 0;
    ExponentVector outside(a.size());
    for (int j = 0; j < a.size(); ++j) {
        if ((open >> j) & 1U) total += a[j];
        if (!((closed >> j) & 1U)) outside.set(j, a[j]);
    }
    return total + ord(g, outside) >= s;
}

// ---------------------------------------------------------------------------

std::string to_string(ColonPattern pattern) {
    switch (pattern) {
    case ColonPattern::SquarefreePair: return "pair";
    case ColonPattern::SquarePlusOne: return "square-one";
    case ColonPattern::SquarePlusPair: return "square-pair";
    case ColonPattern::SquarefreeQuad: return "quad";
    }
    return "?";
}

std::optional<ColonPattern> parse_colon_pattern(const std::string& text) {
    for (auto p : {ColonPattern::SquarefreePair, ColonPattern::SquarePlusOne, ColonPattern::SquarePlusPair,
                   ColonPattern::SquarefreeQuad}) {
        if (to_string(p) == text) return p;
    }
    return std::nullopt;
}

int pattern_power(ColonPattern pattern) { return pattern == ColonPattern::SquarefreePair ? 2 : 3; }

int pattern_arity(ColonPattern pattern) {
    switch (pattern) {
    case ColonPattern::SquarefreePair:
    case ColonPattern::SquarePlusOne: return 2;
    case ColonPattern::SquarePlusPair: return 3;
    case ColonPattern::SquarefreeQuad: return 4;
    }
    return 0;
}

ExponentVector pattern_exponent(ColonPattern pattern, int n, const std::vector<int>& vertices) {
    if (static_cast<int>(vertices.size()) != pattern_arity(pattern)) {
        throw DomainError("pattern " + to_string(pattern) + " needs " + std::to_string(pattern_arity(pattern)) +
                          " vertices");
    }
    std::set<int> distinct(vertices.begin(), vertices.end());
    if (distinct.size() != vertices.size()) throw DomainError("pattern vertices must be distinct");
    for (int v : vertices) {
        if (v < 0 || v >= n) throw DomainError("pattern vertex out of range");
    }
    ExponentVector a(n);
    for (int v : vertices) a.set(v, 1);
    if (pattern == ColonPattern::SquarePlusOne || pattern == ColonPattern::SquarePlusPair) a.set(vertices[0], 2);
    return a;
}

ColonIdentityResult colon_identity(const Graph& g, const MonomialIdeal& symbolic, ColonPattern pattern,
                                   const std::vector<int>& vertices) {
    const int n = g.num_vertices();
    const MonomialIdeal I = edge_ideal(g);
    ExponentVector a = pattern_exponent(pattern, n, vertices);
    auto colon_by = [&](std::initializer_list<int> vs) {
        ExponentVector m(n);
        for (int v : vs) m.set(v, 1);
        return colon(I, m);
    };
    MonomialIdeal rhs = MonomialIdeal::unit(n);
    switch (pattern) {
    case ColonPattern::SquarefreePair:
    case ColonPattern::SquarePlusOne:
        rhs = intersect(colon_by({vertices[0]}), colon_by({vertices[1]}));
        break;
    case ColonPattern::SquarePlusPair:
        rhs = intersect(colon_by({vertices[0]}), colon_by({vertices[1], vertices[2]}));
        break;
    case ColonPattern::SquarefreeQuad:
        for (std::size_t x = 0; x < 4; ++x) {
            for (std::size_t y = x + 1; y < 4; ++y) {
                if (!g.has_edge(vertices[x], vertices[y])) rhs = intersect(rhs, colon_by({vertices[x], vertices[y]}));
            }
        }
        break;
    }
    MonomialIdeal lhs = radical_colon(symbolic, a);
    const bool holds = lhs == rhs;
    return {std::move(a), std::move(lhs), std::move(rhs), holds};
}

ColonIdentityResult colon_identity(const Graph& g, ColonPattern pattern, const std::vector<int>& vertices) {
    return colon_identity(g, symbolic_power(g, pattern_power(pattern)), pattern, vertices);
}

} // namespace regpow
