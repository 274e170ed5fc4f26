#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowkit/newton.hpp"
#include "chowkit/rational.hpp"
#include "chowkit/series.hpp"
#include "chowkit/space.hpp"

#include <random>

using namespace chowkit;

namespace {

TruncatedSeries linear(int d, long a, long b) {
    return TruncatedSeries::linear(d, Rational(a), Rational(b));
}

Rational random_rational(std::mt19937& rng) {
    const long num = static_cast<long>(rng() % 41) - 20;
    const long den = 1 + static_cast<long>(rng() % 9);
    return Rational(num, den);
}

}  // namespace

TEST_CASE("rational invariants") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(6, -4).is_canonical());
    CHECK(Rational(4, 2) == Rational(2));
    CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
    CHECK(Rational::from_string("7").is_integer());
    CHECK((Rational(1, 3) + Rational(2, 3)).is_one());
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 2).to_int64(), std::logic_error);
}

TEST_CASE("series arithmetic examples") {
    const int d3 = 3;
    auto prod = linear(d3, 1, 1) * linear(d3, 1, -1);
    CHECK(prod.coeff(0) == Rational(1));
    CHECK(prod.coeff(1) == Rational(0));
    CHECK(prod.coeff(2) == Rational(-1));
    CHECK(prod.coeff(3) == Rational(0));

    auto sq = linear(2, 1, 2).pow(2);
    CHECK(sq.coeff(0) == Rational(1));
    CHECK(sq.coeff(1) == Rational(4));
    CHECK(sq.coeff(2) == Rational(4));

    auto p4 = linear(2, 1, 1).pow(4);  // truncation drops h^3, h^4
    CHECK(p4.coeff(0) == Rational(1));
    CHECK(p4.coeff(1) == Rational(4));
    CHECK(p4.coeff(2) == Rational(6));

    CHECK_THROWS_AS(linear(2, 1, 1) * linear(3, 1, 1), std::invalid_argument);
}

TEST_CASE("series powers and inversion") {
    auto geom = linear(3, 1, -1).pow(-1);
    for (int i = 0; i <= 3; ++i) CHECK(geom.coeff(i) == Rational(1));

    auto cube = linear(1, 1, 2).pow(3);
    CHECK(cube.coeff(1) == Rational(6));

    auto cancel = linear(5, 1, 6) * linear(5, 1, 6).pow(-1);
    CHECK(cancel == TruncatedSeries::constant(5, Rational(1)));

    CHECK_THROWS_AS(linear(2, 2, 1).pow(-1), std::invalid_argument);
}

TEST_CASE("series_pow(a,e)*series_pow(a,-e) = 1 for random unit series") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 12);
        TruncatedSeries a(d);
        a.set_coeff(0, Rational(1));
        for (int i = 1; i <= d; ++i) a.set_coeff(i, random_rational(rng));
        const long e = static_cast<long>(rng() % 11);
        CHECK(a.pow(e) * a.pow(-e) == TruncatedSeries::constant(d, Rational(1)));
    }
}

TEST_CASE("newton identities: scalar examples and round-trip") {
    // e = (0, 0, ...) -> p = (0, 0, ...)
    const std::vector<Rational> zeros(6, Rational(0));
    CHECK(newton_p_from_e(zeros, Rational(0)) == zeros);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const size_t d = 1 + rng() % 10;
        std::vector<Rational> e;
        for (size_t i = 0; i < d; ++i) e.push_back(random_rational(rng));
        const auto p = newton_p_from_e(e, Rational(0));
        CHECK(newton_e_from_p(p, Rational(0)) == e);
        const auto e2 = newton_e_from_p(p, Rational(0));
        CHECK(newton_p_from_e(e2, Rational(0)) == p);
    }
}

TEST_CASE("newton identities on Chow classes") {
    auto gr = grassmannian_space(2, 5);
    const GradedElement zero(gr);
    const GradedElement c1 = gr->chern_sub_dual(1);
    const GradedElement c2 = gr->chern_sub_dual(2);

    SUBCASE("p1 = c1, p2 = c1^2 - 2 c2") {
        const auto p = newton_p_from_e<GradedElement>({c1, c2}, zero);
        CHECK(p[0] == c1);
        CHECK(p[1] == c1 * c1 - c2 * Rational(2));
    }
    SUBCASE("p3 = c1^3 - 3 c1 c2 + 3 c3 with c3 = 0") {
        const auto p = newton_p_from_e<GradedElement>({c1, c2, zero}, zero);
        CHECK(p[2] == c1 * c1 * c1 - c1 * c2 * Rational(3));
    }
    SUBCASE("line-bundle pattern: p1 = c1, p2 = c1^2 gives e = (c1, 0)") {
        const auto e = newton_e_from_p<GradedElement>({c1, c1 * c1}, zero);
        CHECK(e[0] == c1);
        CHECK(e[1] == zero);
    }
}

TEST_CASE("two equal Chern roots: p = (2t, 2t^2, 2t^3) -> e = (2t, t^2, 0)") {
    auto p3 = proj_space(3);
    const GradedElement t = p3->hyperplane_power(1);
    const GradedElement t2 = p3->hyperplane_power(2);
    const GradedElement t3 = p3->hyperplane_power(3);
    const GradedElement zero(p3);
    const auto e = newton_e_from_p<GradedElement>(
        {t * Rational(2), t2 * Rational(2), t3 * Rational(2)}, zero);
    CHECK(e[0] == t * Rational(2));
    CHECK(e[1] == t2);
    CHECK(e[2] == zero);
    // Oracle: elementary symmetric functions of the root multiset {t, t}.
    CHECK(e[0] == t + t);
    CHECK(e[1] == t * t);
}

TEST_CASE("newton round-trip on random integer classes of P^4") {
    auto p4 = proj_space(4);
    const GradedElement zero(p4);
    std::mt19937 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<GradedElement> e;
        for (int d = 1; d <= 4; ++d)
            e.push_back(p4->hyperplane_power(d) *
                        Rational(static_cast<long>(rng() % 13) - 6));
        const auto p = newton_p_from_e(e, zero);
        const auto back = newton_e_from_p(p, zero);
        for (size_t i = 0; i < e.size(); ++i) CHECK(back[i] == e[i]);
    }
}
