#include <doctest.h>

#include <bit>

#include "oracle.hpp"
#include "regpow/harness.hpp"
#include "regpow/powers.hpp"
#include "regpow/regularity.hpp"

using namespace regpow;

namespace {

MonomialIdeal ideal(int n, std::initializer_list<const char*> gens) {
    std::vector<ExponentVector> v;
    for (const char* g : gens) v.push_back(parse_monomial(g, n));
    return minimalize(n, std::move(v));
}

const Graph triangle = complete_graph(3);

// Every monomial of degree <= d in n variables.
template <typename Fn>
void for_monomials(int n, int d, Fn&& fn) {
    GammaBox(n, std::vector<int>(static_cast<std::size_t>(n), d)).for_each([&](const ExponentVector& f) {
        if (f.degree() <= d) fn(f);
    });
}

} // namespace

TEST_CASE("symbolic powers of small graphs") {
    const auto I = edge_ideal(triangle);
    CHECK(symbolic_power(triangle, 1) == I);
    CHECK(symbolic_power(triangle, 2) == sum(power(I, 2), ideal(3, {"x1*x2*x3"})));
    CHECK(symbolic_power(cycle_graph(4), 2) == power(edge_ideal(cycle_graph(4)), 2));
    CHECK(symbolic_power(Graph{3, {}}, 2).is_zero());
    CHECK_THROWS_AS((symbolic_power(I, 0)), DomainError);
    CHECK_THROWS_AS((symbolic_power(ideal(2, {"x1^2"}), 2)), DomainError);
    CHECK(extra_generators(power(I, 2), symbolic_power(I, 2)) == std::vector<ExponentVector>{ExponentVector{1, 1, 1}});
}

TEST_CASE("symbolic powers match the cover definition") {
    for (int s = 1; s <= 3; ++s) {
        enumerate_all(4, [&](const Graph& g) {
            if (g.num_edges() == 0) return;
            const auto Is = symbolic_power(g, s);
            const auto Ip = power(edge_ideal(g), s);
            CHECK(Is.contains(Ip));
            for_monomials(4, 2 * s + 1, [&](const ExponentVector& f) {
                CHECK(Is.contains(f) == oracle::symbolic_member(g, f, s));
                CHECK(Ip.contains(f) == oracle::power_member(g, f, s));
            });
        });
    }
}

TEST_CASE("bipartite graphs have equal ordinary and symbolic powers") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : isomorphism_classes(n)) {
            if (g.num_edges() == 0 || !is_bipartite(g)) continue;
            for (int s = 2; s <= 3; ++s) CHECK(symbolic_power(g, s) == power(edge_ideal(g), s));
        }
    }
}

TEST_CASE("differential membership") {
    const auto I = edge_ideal(triangle);
    CHECK(differential_membership(ExponentVector{1, 1, 1}, I, 2));
    CHECK_FALSE(differential_membership(ExponentVector{2, 0}, ideal(2, {"x1*x2"}), 2));
    const auto I3 = power(I, 3);
    for (const auto& g : I3.gens()) CHECK(differential_membership(g, I, 3));
    CHECK_THROWS_AS((differential_membership(ExponentVector{1, 1}, ideal(2, {"x1^2"}), 2)), DomainError);
}

TEST_CASE("intermediate ideals") {
    const auto I = edge_ideal(triangle);
    CHECK(intermediate_ideal({I, 2, IntermediateSelector::none()}) == power(I, 2));
    CHECK(intermediate_ideal({I, 2, IntermediateSelector::all()}) == symbolic_power(I, 2));
    CHECK(intermediate_ideal({I, 2, IntermediateSelector::explicit_list({ExponentVector{1, 1, 1}})}) ==
          symbolic_power(I, 2));
    CHECK_THROWS_AS((intermediate_ideal({I, 2, IntermediateSelector::explicit_list({ExponentVector{2, 2, 2}})})),
                    DomainError);
    const auto c5 = edge_ideal(cycle_graph(5));
    const auto r1 = intermediate_ideal({c5, 3, IntermediateSelector::random(11)});
    CHECK(r1 == intermediate_ideal({c5, 3, IntermediateSelector::random(11)}));
    CHECK(r1.contains(power(c5, 3)));
    CHECK(symbolic_power(c5, 3).contains(r1));
}

TEST_CASE("low-degree colons of intermediate ideals recover I") {
    for (int n = 3; n <= 5; ++n) {
        for (const Graph& g : isomorphism_classes(n)) {
            if (g.num_edges() == 0) continue;
            const auto I = edge_ideal(g);
            for (int s = 2; s <= 3; ++s) {
                for (std::uint64_t seed = 0; seed < 3; ++seed) {
                    const auto J = intermediate_ideal({I, s, IntermediateSelector::random(seed)});
                    for_monomials(n, s - 1, [&](const ExponentVector& a) { CHECK(radical_colon(J, a) == I); });
                }
            }
        }
    }
}

TEST_CASE("ord and power membership") {
    CHECK(ord(cycle_graph(4), ExponentVector{1, 1, 1, 1}) == 2);
    CHECK(ord(cycle_graph(4), ExponentVector(4)) == 0);
    CHECK(ord(Graph{2, {{0, 1}}}, ExponentVector{1, 1}) == 1);
    CHECK(ord(triangle, ExponentVector{2, 2, 2}) == 3);
    const auto edge = ideal(2, {"x1*x2"});
    CHECK(power_membership(ExponentVector{2, 2}, edge, 2));
    CHECK_FALSE(power_membership(ExponentVector{1, 1}, edge, 2));
    CHECK(power_membership(ExponentVector{2, 2, 1}, edge_ideal(path_graph(3)), 2));
    enumerate_all(4, [](const Graph& g) {
        const auto I = edge_ideal(g);
        for_monomials(4, 5, [&](const ExponentVector& f) {
            const int t = ord(g, f);
            CHECK(ideal_order(I, f, 10) == t);
            CHECK(power_membership(f, I, 2) == (t >= 2));
            CHECK(oracle::power_member(g, f, t));
            CHECK_FALSE(oracle::power_member(g, f, t + 1));
        });
    });
}

TEST_CASE("criterion for membership in a radical colon of a power") {
    const auto c4 = cycle_graph(4);
    CHECK(criterion_in_power(c4, 0b0001, ExponentVector{0, 1, 0, 1}, 2));
    CHECK_THROWS_AS((criterion_in_power(c4, 0b0011, ExponentVector{0, 1, 0, 1}, 2)), DomainError);
    CHECK(criterion_in_power(c4, 0, ExponentVector{1, 1, 1, 1}, 2));

    // sufficiency on every independent set, necessity on independent minimal generators
    for (int n = 3; n <= 5; ++n) {
        for (const Graph& g : isomorphism_classes(n)) {
            if (g.num_edges() == 0) continue;
            const auto I = edge_ideal(g);
            for (int s = 2; s <= 3; ++s) {
                const auto Is = power(I, s);
                for_monomials(n, s + 1, [&](const ExponentVector& a) {
                    const auto rc = radical_colon(Is, a);
                    for (VertexMask F = 0; F < (VertexMask{1} << n); ++F) {
                        if (!is_independent(g, F)) continue;
                        if (criterion_in_power(g, F, a, s)) CHECK(rc.contains(ExponentVector::from_mask(n, F)));
                    }
                    for (const auto& gen : rc.gens()) {
                        if (is_independent(g, gen.support())) CHECK(criterion_in_power(g, gen.support(), a, s));
                    }
                });
            }
        }
    }
}

TEST_CASE("colon identities on small examples") {
    const auto c5 = cycle_graph(5);
    CHECK(colon_identity(c5, ColonPattern::SquarefreePair, {0, 1}).holds);
    const auto r = colon_identity(c5, ColonPattern::SquarePlusOne, {0, 1});
    CHECK(r.a == ExponentVector{2, 1, 0, 0, 0});
    CHECK(r.holds);
    CHECK(colon_identity(c5, ColonPattern::SquarePlusPair, {0, 1, 2}).holds);
    CHECK(colon_identity(cycle_graph(4), ColonPattern::SquarefreeQuad, {0, 1, 2, 3}).holds);
    CHECK_THROWS_AS((colon_identity(c5, ColonPattern::SquarefreePair, {0, 0})), DomainError);
    CHECK_THROWS_AS((colon_identity(c5, ColonPattern::SquarefreeQuad, {0, 1, 2})), DomainError);
    CHECK_THROWS_AS((colon_identity(c5, ColonPattern::SquarefreePair, {0, 7})), DomainError);
    CHECK(parse_colon_pattern("square-pair") == ColonPattern::SquarePlusPair);
    CHECK_FALSE(parse_colon_pattern("cube").has_value());
    CHECK(admissible_tuples(ColonPattern::SquarefreePair, 4).size() == 6);
    CHECK(admissible_tuples(ColonPattern::SquarePlusOne, 4).size() == 12);
    CHECK(admissible_tuples(ColonPattern::SquarePlusPair, 4).size() == 12);
    CHECK(admissible_tuples(ColonPattern::SquarefreeQuad, 5).size() == 5);
}

TEST_CASE("minimal primes are the minimal vertex covers") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : isomorphism_classes(n)) {
            if (g.num_edges() == 0) continue;
            auto a = minimal_primes(edge_ideal(g));
            auto b = minimal_vertex_covers(g);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);
        }
    }
}
