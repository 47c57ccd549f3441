#include <doctest.h>

#include <random>

#include "regpow/monomial.hpp"

using namespace regpow;

namespace {

MonomialIdeal ideal(int n, std::initializer_list<const char*> gens) {
    std::vector<ExponentVector> v;
    for (const char* g : gens) v.push_back(parse_monomial(g, n));
    return minimalize(n, std::move(v));
}

ExponentVector random_exponent(std::mt19937_64& rng, int n, int bound) {
    ExponentVector a(n);
    for (int j = 0; j < n; ++j) a.set(j, static_cast<int>(rng() % static_cast<std::uint64_t>(bound + 1)));
    return a;
}

MonomialIdeal random_ideal(std::mt19937_64& rng, int n, int gens, int bound) {
    std::vector<ExponentVector> v;
    for (int k = 0; k < gens; ++k) {
        ExponentVector a = random_exponent(rng, n, bound);
        if (a.is_zero()) a.set(0, 1);
        v.push_back(a);
    }
    return minimalize(n, std::move(v));
}

} // namespace

TEST_CASE("exponent vectors") {
    const ExponentVector a{2, 0, 1};
    CHECK(a.degree() == 3);
    CHECK(a.support() == 0b101);
    CHECK_FALSE(a.is_squarefree());
    CHECK(a.to_string() == "x1^2*x3");
    CHECK(ExponentVector(3).to_string() == "1");
    CHECK(parse_monomial("x1^2*x3", 3) == a);
    CHECK(parse_monomial("1", 3) == ExponentVector(3));
    CHECK(ExponentVector{1, 0, 1}.divides(a));
    CHECK_FALSE(a.divides(ExponentVector{1, 0, 1}));
    CHECK(lcm(ExponentVector{2, 0, 1}, ExponentVector{1, 3, 0}) == ExponentVector{2, 3, 1});
    CHECK(gcd(ExponentVector{2, 0, 1}, ExponentVector{1, 3, 1}) == ExponentVector{1, 0, 1});
    CHECK(radical(a) == ExponentVector{1, 0, 1});
    CHECK(ExponentVector{0, 1} < ExponentVector{1, 0});
}

TEST_CASE("exponent vector errors") {
    CHECK_THROWS_AS(ExponentVector(kMaxVars + 1), DimensionError);
    CHECK_THROWS_AS((ExponentVector{-1, 0}), DomainError);
    CHECK_THROWS_AS((lcm(ExponentVector{1}, ExponentVector{1, 0})), DimensionError);
    CHECK_THROWS_AS((parse_monomial("x4", 3)), DimensionError);
    CHECK_THROWS_AS((parse_monomial("y1", 3)), DomainError);
    ExponentVector big(1);
    big.set(0, ExponentVector::kMaxExponent);
    CHECK_THROWS_AS(big + ExponentVector{1}, DomainError);
    CHECK_THROWS_AS((quotient(ExponentVector{1, 0}, ExponentVector{0, 1})), DomainError);
}

TEST_CASE("star partial derivatives") {
    CHECK(star_partial(ExponentVector{2, 1}, ExponentVector{1, 0}) == ExponentVector{1, 1});
    CHECK_FALSE(star_partial(ExponentVector{1, 0}, ExponentVector{0, 1}).has_value());
    const ExponentVector f{3, 1, 2};
    CHECK(star_partial(f, ExponentVector(3)) == f);
}

TEST_CASE("minimalize") {
    CHECK(ideal(3, {"x1*x2", "x1*x2*x3"}) == ideal(3, {"x1*x2"}));
    CHECK(minimalize(3, {}).is_zero());
    const auto I = ideal(2, {"x1^2", "x1*x2", "x2^2"});
    CHECK(I.num_gens() == 3);
    CHECK(minimalize(2, I.gens()) == I);
    CHECK_THROWS_AS((minimalize(2, {ExponentVector{1, 0, 0}})), DimensionError);
    CHECK(ideal(2, {"1", "x1"}).is_unit());
}

TEST_CASE("products and powers") {
    CHECK(power(ideal(2, {"x1*x2"}), 2) == ideal(2, {"x1^2*x2^2"}));
    const auto I = ideal(3, {"x1*x2", "x2*x3"});
    CHECK(power(I, 2) == ideal(3, {"x1^2*x2^2", "x1*x2^2*x3", "x2^2*x3^2"}));
    CHECK(power(I, 1) == I);
    CHECK(power(I, 0).is_unit());
    CHECK(multiply(I, I) == power(I, 2));
    CHECK(sum(ideal(3, {"x1"}), ideal(3, {"x1*x2", "x3"})) == ideal(3, {"x1", "x3"}));
}

TEST_CASE("colon, radical, intersection") {
    const auto I = ideal(3, {"x1*x2", "x2*x3"});
    CHECK(colon(I, ExponentVector{0, 1, 0}) == ideal(3, {"x1", "x3"}));
    CHECK(colon(I, ExponentVector(3)) == I);
    CHECK(colon(ideal(2, {"x1^2*x2^2"}), ExponentVector{1, 1}) == ideal(2, {"x1*x2"}));

    CHECK(radical(ideal(2, {"x1^2*x2^2"})) == ideal(2, {"x1*x2"}));
    CHECK(radical(I) == I);
    CHECK(radical(ideal(2, {"x1^2", "x2^3"})) == ideal(2, {"x1", "x2"}));

    CHECK(radical_colon(I, ExponentVector{0, 2, 0}) == ideal(3, {"x1", "x3"}));
    CHECK(radical_colon(I, ExponentVector(3)) == radical(I));
    CHECK(radical_colon(ideal(2, {"x1^2*x2^2"}), ExponentVector{2, 0}) == ideal(2, {"x2"}));

    CHECK(intersect(ideal(2, {"x1"}), ideal(2, {"x2"})) == ideal(2, {"x1*x2"}));
    CHECK(intersect(I, I) == I);
    CHECK(colon(I, ideal(3, {"x1", "x3"})) == ideal(3, {"x2"}));
}

TEST_CASE("membership") {
    CHECK(ideal(3, {"x1*x2"}).contains(ExponentVector{1, 1, 1}));
    CHECK_FALSE(ideal(3, {"x1*x2"}).contains(ExponentVector{1, 0, 0}));
    CHECK_FALSE(MonomialIdeal::zero(3).contains(ExponentVector(3)));
    CHECK(MonomialIdeal::unit(3).contains(ExponentVector(3)));
    const auto I = ideal(3, {"x1*x2", "x2*x3"});
    CHECK(I.contains(power(I, 2)));
    CHECK_FALSE(power(I, 2).contains(I));
}

TEST_CASE("rho and the Gamma box") {
    const auto sq = ideal(2, {"x1^2*x2^2"});
    CHECK(rho(sq) == std::vector<int>{2, 2});
    CHECK(GammaBox(sq).size() == 4);
    const auto p3 = ideal(3, {"x1*x2", "x2*x3"});
    CHECK(rho(p3) == std::vector<int>{1, 1, 1});
    const auto box = GammaBox(p3).to_vector();
    REQUIRE(box.size() == 1);
    CHECK(box.front().is_zero());
    CHECK_THROWS_AS(rho(MonomialIdeal::zero(2)), DomainError);
    CHECK_THROWS_AS(rho(MonomialIdeal::unit(2)), DomainError);
    // a variable absent from every generator contributes a single coordinate 0
    CHECK(GammaBox(ideal(3, {"x1^3"})).size() == 3);
    const auto order = GammaBox(2, {1, 1}).to_vector();
    CHECK(std::is_sorted(order.begin(), order.end()));
}

TEST_CASE("randomized ideal identities") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto I = random_ideal(rng, n, 1 + static_cast<int>(rng() % 5), 3);
        const auto J = random_ideal(rng, n, 1 + static_cast<int>(rng() % 4), 2);
        const auto a = random_exponent(rng, n, 2);
        const auto b = random_exponent(rng, n, 2);
        CAPTURE(I.to_string());
        CAPTURE(a.to_string());
        CHECK(radical_colon(I, a) == radical(colon(I, a)));
        CHECK(colon(colon(I, a), b) == colon(I, a + b));
        CHECK(minimalize(n, I.gens()) == I);
        const auto meet = intersect(I, J);
        CHECK(I.contains(meet));
        CHECK(J.contains(meet));
        CHECK(meet.contains(multiply(I, J)));
        CHECK(sum(I, J).contains(I));
        for (int t = 0; t < 10; ++t) {
            const auto f = random_exponent(rng, n, 4);
            CHECK(meet.contains(f) == (I.contains(f) && J.contains(f)));
            CHECK(colon(I, a).contains(f) == I.contains(f + a));
        }
    }
}
