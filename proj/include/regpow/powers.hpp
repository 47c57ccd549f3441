#pragma once

// Ordinary and symbolic powers of squarefree monomial ideals, intermediate
// ideals between them, the I-order of a monomial, and the colon identities
// describing sqrt(I^(s) : x^a) for edge ideals in low degree.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regpow/graph.hpp"
#include "regpow/monomial.hpp"

namespace regpow {

struct ExponentHash {
    std::size_t operator()(const ExponentVector& a) const noexcept;
};

/// Minimal primes of a squarefree ideal, as vertex masks (minimal transversals of the generators).
std::vector<VertexMask> minimal_primes(const MonomialIdeal& I);

/// I^(s) as the intersection of P^s over the minimal primes P of a squarefree I.
MonomialIdeal symbolic_power(const MonomialIdeal& I, int s);
/// I(G)^(s); the zero ideal for an edgeless graph.
MonomialIdeal symbolic_power(const Graph& g, int s);

/// f lies in the s-th *-differential power of the squarefree ideal I:
/// every coefficient-free derivative of f of order <= s-1 lies in I.
bool differential_membership(const ExponentVector& f, const MonomialIdeal& I, int s);

/// Minimal generators of `symbolic` that do not lie in `ordinary`.
std::vector<ExponentVector> extra_generators(const MonomialIdeal& ordinary, const MonomialIdeal& symbolic);

struct IntermediateSelector {
    enum class Kind { None, All, Explicit, Random };
    Kind kind = Kind::None;
    std::vector<ExponentVector> chosen; // Explicit
    std::uint64_t seed = 0;             // Random: each extra generator kept with probability 1/2

    static IntermediateSelector none() { return {}; }
    static IntermediateSelector all() { return {Kind::All, {}, 0}; }
    static IntermediateSelector explicit_list(std::vector<ExponentVector> gens) {
        return {Kind::Explicit, std::move(gens), 0};
    }
    static IntermediateSelector random(std::uint64_t seed) { return {Kind::Random, {}, seed}; }
};

struct IntermediateSpec {
    MonomialIdeal base; // squarefree
    int s = 2;
    IntermediateSelector selector;
};

/// I^s + (selected minimal generators of I^(s)).
MonomialIdeal intermediate_ideal(const IntermediateSpec& spec);
/// Same, reusing already computed I^s and I^(s).
MonomialIdeal intermediate_ideal(const MonomialIdeal& ordinary, const MonomialIdeal& symbolic,
                                 const IntermediateSelector& selector);

/// ord_{I(G)}(x^f): the largest number of edges (with repetition) whose product divides x^f.
int ord(const Graph& g, const ExponentVector& f);
/// Largest t with x^f in I^t, capped at `cap` (search stops once reached).
int ideal_order(const MonomialIdeal& I, const ExponentVector& f, int cap);
/// x^f in I^s, by recursion over generator factorizations.
bool power_membership(const ExponentVector& f, const MonomialIdeal& I, int s);

/// sum_{j in N(F)} a_j + ord(prod_{u not in N[F]} x_u^{a_u}) >= s. F must be independent.
bool criterion_in_power(const Graph& g, VertexMask face, const ExponentVector& a, int s);

/// Shapes of the closed-form descriptions of sqrt(I^(s) : x^a).
enum class ColonPattern {
    SquarefreePair,    // s=2, x^a = x_i x_j:          (I:x_i) cap (I:x_j)
    SquarePlusOne,     // s=3, x^a = x_i^2 x_j:        (I:x_i) cap (I:x_j)
    SquarePlusPair,    // s=3, x^a = x_i^2 x_j x_k:    (I:x_i) cap (I:x_j x_k)
    SquarefreeQuad,    // s=3, x^a = x_i x_j x_k x_l:  cap over non-edges e of G[ijkl] of (I:x_e)
};

std::string to_string(ColonPattern pattern);
std::optional<ColonPattern> parse_colon_pattern(const std::string& text);
int pattern_power(ColonPattern pattern);
int pattern_arity(ColonPattern pattern);
/// Exponent x^a for the pattern on the given 0-based vertex tuple; DomainError on a malformed tuple.
ExponentVector pattern_exponent(ColonPattern pattern, int n, const std::vector<int>& vertices);

struct ColonIdentityResult {
    ExponentVector a;
    MonomialIdeal lhs; // sqrt(I^(s) : x^a)
    MonomialIdeal rhs; // closed form built from colons of I
    bool holds = false;
};

ColonIdentityResult colon_identity(const Graph& g, ColonPattern pattern, const std::vector<int>& vertices);
/// Same, with I^(s) for s = pattern_power(pattern) precomputed.
ColonIdentityResult colon_identity(const Graph& g, const MonomialIdeal& symbolic, ColonPattern pattern,
                                   const std::vector<int>& vertices);

} // namespace regpow
