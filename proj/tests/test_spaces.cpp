#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowkit/sheaf.hpp"
#include "chowkit/space.hpp"

using namespace chowkit;

TEST_CASE("grassmannian bases") {
    auto g24 = grassmannian_space(2, 4);
    CHECK(g24->dimension() == 4);
    CHECK(g24->basis_size() == 6);
    const auto [first, last] = g24->degree_range(2);
    CHECK(last - first == 2);
    CHECK(g24->partition_of(first) == Partition{2});
    CHECK(g24->partition_of(first + 1) == Partition{1, 1});

    auto g310 = grassmannian_space(3, 10);
    CHECK(g310->dimension() == 21);
    CHECK(g310->basis_size() == 120);
    auto g410 = grassmannian_space(4, 10);
    CHECK(g410->dimension() == 24);
    CHECK(g410->basis_size() == 210);

    CHECK_THROWS_AS(grassmannian_space(4, 4), std::invalid_argument);
}

TEST_CASE("integration") {
    auto g24 = grassmannian_space(2, 4);
    CHECK(integrate(g24->schubert_class(Partition{2, 2})) == Rational(1));
    const GradedElement s1 = g24->schubert_class(Partition{1});
    CHECK(integrate(s1 * s1 * s1 * s1) == Rational(2));
    CHECK(integrate(s1) == Rational(0));

    auto p3 = proj_space(3);
    CHECK(integrate(p3->hyperplane_power(2)) == Rational(0));
    CHECK(integrate(p3->hyperplane_power(3)) == Rational(1));
}

TEST_CASE("sigma_1^4 on Gr(2,4) matches a Pieri-chain oracle") {
    // Independent route: iterate the Pieri rule from the empty partition and
    // read off the multiplicity of the full box.
    const BoxShape box(2, 2);
    std::map<Partition, long long> cur{{Partition{}, 1}};
    for (int step = 0; step < 4; ++step) {
        std::map<Partition, long long> next;
        for (const auto& [p, c] : cur)
            for (const auto& q : pieri_multiply(p, 1, box)) next[q] += c;
        cur = std::move(next);
    }
    CHECK(cur.at(Partition{2, 2}) == 2);
}

TEST_CASE("Poincare duality pairing, exhaustively") {
    for (auto [k, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 6}}) {
        auto g = grassmannian_space(k, n);
        for (const auto& lam : g->basis())
            for (const auto& mu : g->basis()) {
                const Rational pairing =
                    integrate(g->schubert_class(lam) * g->schubert_class(mu));
                const bool dual = (mu == complement_in_box(lam, g->box()));
                CHECK(pairing == Rational(dual ? 1 : 0));
            }
    }
}

TEST_CASE("product space") {
    auto g1 = grassmannian_space(3, 10);
    auto g2 = grassmannian_space(4, 10);
    auto gg = product_space(g1, g2);
    CHECK(gg->dimension() == 45);

    // 120 * 210 = 25200 pair labels, counted per degree without materializing
    size_t total = 0;
    for (int d = 0; d <= gg->dimension(); ++d)
        for (int a = 0; a <= std::min(d, g1->dimension()); ++a) {
            const int b = d - a;
            if (b > g2->dimension()) continue;
            const auto [a0, a1] = g1->degree_range(a);
            const auto [b0, b1] = g2->degree_range(b);
            total += (a1 - a0) * (b1 - b0);
        }
    CHECK(total == 25200);

    const GradedElement x = pullback_first(gg, g1->schubert_class(Partition{1}));
    const GradedElement y = pullback_second(gg, g2->schubert_class(Partition{1}));
    int deg = -1;
    CHECK((x * y).is_homogeneous(&deg));
    CHECK(deg == 2);
}

TEST_CASE("pushforward to the first factor") {
    auto g1 = grassmannian_space(2, 4);
    auto g2 = grassmannian_space(2, 5);
    auto gg = product_space(g1, g2);

    const GradedElement pt2 = pullback_second(gg, g2->schubert_class(Partition{3, 3}));
    CHECK(pushforward_to_first_factor(pt2) == GradedElement::unit(g1));

    const GradedElement low = pullback_second(gg, g2->schubert_class(Partition{1}));
    CHECK(pushforward_to_first_factor(low).is_zero());

    const GradedElement alpha = g1->schubert_class(Partition{2, 1});
    CHECK(pushforward_to_first_factor(pullback_first(gg, alpha) * pt2) == alpha);
}

TEST_CASE("projective bundle over P^1: P(O + O(-1))") {
    auto p1 = proj_space(1);
    const Sheaf f = sum(line_bundle(p1, p1->hyperplane_power(1) * Rational(-1)),
                        trivial_bundle(p1, 1));
    auto pb = proj_bundle(f);
    CHECK(pb->dimension() == 2);
    CHECK(pb->fiber_rank() == 2);

    const GradedElement zeta = pb->zeta_power(1);
    CHECK(projbundle_pushforward(zeta) == GradedElement::unit(p1));        // s_0 = 1
    CHECK(projbundle_pushforward(zeta * zeta) == p1->hyperplane_power(1));  // s_1 = h
    CHECK(projbundle_pushforward(pb->zeta_power(0)).is_zero());

    // zeta-relation: zeta^2 + c1(F) zeta + c2(F) = 0 with c1(F) = -h
    const GradedElement relation =
        zeta * zeta + pb->pullback_from_base(f.chern_class(1)) * zeta;
    CHECK(relation.is_zero());
}

TEST_CASE("projective bundle pushforward follows the Segre rule") {
    auto p2 = proj_space(2);
    const GradedElement h = p2->hyperplane_power(1);
    const Sheaf f = sum(sum(line_bundle(p2, h), line_bundle(p2, h * Rational(-2))),
                        trivial_bundle(p2, 1));
    auto pb = proj_bundle(f);
    CHECK(pb->dimension() == 4);
    const GradedElement s = segre_series(f);

    // push(zeta^{r-1}) = 1 always; push(pullback(alpha) . zeta^k) = s_{k-r+1} . alpha
    CHECK(projbundle_pushforward(pb->zeta_power(2)) == GradedElement::unit(p2));
    for (int extra = 0; extra <= 2; ++extra) {
        GradedElement zk = pb->zeta_power(2);
        for (int i = 0; i < extra; ++i) zk = zk * pb->zeta_power(1);
        CHECK(projbundle_pushforward(zk * pb->pullback_from_base(h)) ==
              s.homogeneous_part(extra) * h);
    }
    CHECK(projbundle_pushforward(pb->zeta_power(1)).is_zero());
    CHECK(projbundle_pushforward(pb->pullback_from_base(h)).is_zero());
}

TEST_CASE("express_in_chern_monomials") {
    auto g = grassmannian_space(3, 10);

    SUBCASE("sigma_1 is c1 and sigma_(1,1,1) is c3") {
        auto p1 = express_in_chern_monomials(g->schubert_class(Partition{1}), 1);
        CHECK(p1.terms == decltype(p1.terms){{{1, 0, 0}, Rational(1)}});
        auto p3 = express_in_chern_monomials(g->schubert_class(Partition{1, 1, 1}), 3);
        CHECK(p3.terms == decltype(p3.terms){{{0, 0, 1}, Rational(1)}});
        CHECK(p3.str() == "c3");
    }
    SUBCASE("sigma_3 = c1^3 - 2 c1 c2 + c3") {
        auto p = express_in_chern_monomials(g->schubert_class(Partition{3}), 3);
        decltype(p.terms) expected{{{3, 0, 0}, Rational(1)},
                                   {{1, 1, 0}, Rational(-2)},
                                   {{0, 0, 1}, Rational(1)}};
        CHECK(p.terms == expected);
        CHECK(p.str() == "c1^3 - 2*c1*c2 + c3");
    }
    SUBCASE("round-trip: expanding the monomials reproduces the class") {
        for (const Partition lam : {Partition{3}, Partition{2, 1}, Partition{4}, Partition{2, 2}}) {
            const GradedElement x = g->schubert_class(lam);
            const auto poly = express_in_chern_monomials(x, lam.weight());
            GradedElement back(g);
            for (const auto& [exps, coeff] : poly.terms) {
                GradedElement mono = GradedElement::unit(g);
                for (size_t i = 0; i < exps.size(); ++i)
                    for (int e = 0; e < exps[i]; ++e)
                        mono = mono * g->chern_sub_dual(static_cast<int>(i) + 1);
                back += mono * coeff;
            }
            CHECK(back == x);
        }
    }
    SUBCASE("degree beyond n-k is rejected") {
        auto g25 = grassmannian_space(2, 5);
        const GradedElement x = g25->schubert_class(Partition{2, 2});
        CHECK_THROWS_AS(express_in_chern_monomials(x, 4), std::invalid_argument);
    }
}

TEST_CASE("elements of different spaces never mix") {
    auto a = grassmannian_space(2, 4);
    auto b = grassmannian_space(2, 4);  // same shape, different identity
    CHECK_THROWS_AS(a->schubert_class(Partition{1}) + b->schubert_class(Partition{1}),
                    std::invalid_argument);
}
