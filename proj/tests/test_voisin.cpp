#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowkit/verify.hpp"
#include "chowkit/voisin.hpp"

using namespace chowkit;

TEST_CASE("family parameters") {
    const auto p0 = VoisinParams::for_r(0);
    CHECK(p0.n == 2);
    CHECK(p0.N == 1);  // elliptic curve
    const auto p1 = VoisinParams::for_r(1);
    CHECK(p1.n == 5);
    CHECK(p1.N == 4);  // hyper-Kaehler fourfold
    const auto p2 = VoisinParams::for_r(2);
    CHECK(p2.n == 9);
    CHECK(p2.N == 11);
    for (int r = 0; r <= 8; ++r)
        CHECK(VoisinParams::for_r(r).n + 1 == binomial(r + 3, 2));
    CHECK_THROWS_AS(VoisinParams::for_r(-1), std::invalid_argument);
}

TEST_CASE("dims_report") {
    const auto d2 = dims_report(2);
    CHECK(d2.n == 9);
    CHECK(d2.N == 11);
    CHECK(d2.m == 3);
    CHECK(d2.fix_codim == 3);
    CHECK(d2.dim_incidence == 227);  // 11 + C(12,3) - 4
    CHECK(d2.delta == std::vector<long long>{19, 16, 10});

    const auto d1 = dims_report(1);
    CHECK(d1.n == 5);
    CHECK(d1.N == 4);
    CHECK(d1.dim_incidence == 57);  // 4 + C(8,3) - 3
    CHECK(d1.delta == std::vector<long long>{7, 4});

    for (int r = 0; r <= 6; ++r) {
        const auto d = dims_report(r);
        CHECK(d.m == r + 1);
        CHECK(d.fix_codim == r + 1);
        CHECK(d.delta.size() == static_cast<size_t>(r + 1));
    }
}

TEST_CASE("voisin_degree: both routes, paper values") {
    CHECK(voisin_degree(0) == 4);
    CHECK(voisin_degree(1) == 16);
    CHECK(voisin_degree(2) == 64);
    CHECK(voisin_degree(3) == 256);
}

TEST_CASE("eigen_crosscheck") {
    for (int r = 0; r <= 3; ++r) CHECK(eigen_crosscheck(r));
}

TEST_CASE("psi_star_h = 3r + 4") {
    CHECK(psi_star_h(1) == 7);
    CHECK(psi_star_h(2) == 10);
    CHECK(psi_star_h(3) == 13);
    CHECK_THROWS_AS(psi_star_h(0), std::invalid_argument);
}

TEST_CASE("rank strata codimensions") {
    CHECK(rank_strata_codims(5) == std::vector<long long>{1, 3, 6, 10});
    CHECK(rank_strata_codims(2) == std::vector<long long>{1});
    CHECK_THROWS_AS(rank_strata_codims(1), std::invalid_argument);
}

TEST_CASE("determinant degrees") {
    const auto [d5, d4] = determinant_degrees();
    CHECK(d5 == 7);
    CHECK(d4 == 4);

    // constant symmetric matrix: degree 0
    auto p5 = proj_space(5);
    CHECK(det_degree(trivial_bundle(p5, 3), trivial_bundle(p5, 1)) == 0);
    CHECK_THROWS_AS(det_degree(trivial_bundle(p5, 3), trivial_bundle(p5, 2)),
                    std::invalid_argument);
}

TEST_CASE("fixed locus class for r = 1 is 21 c2") {
    const auto poly = fixed_locus_class(1);
    CHECK(poly.named_terms() ==
          std::vector<std::pair<std::string, std::string>>{{"c2", "21"}});
    CHECK(poly.str() == "21*c2");
    CHECK_THROWS_AS(fixed_locus_class(0), std::invalid_argument);
    CHECK_THROWS_AS(fixed_locus_class(4), std::invalid_argument);
}

TEST_CASE("verification registry") {
    CHECK(all_case_names().size() == 23);
    CHECK(is_known_case("fixed-locus-r2"));
    CHECK_FALSE(is_known_case("nope"));
    CHECK_THROWS_AS(run_case("nope"), std::invalid_argument);

    const auto rep = run_case("deg-r1");
    CHECK(rep.pass);
    CHECK(rep.provenance == "paper");
    CHECK(rep.result == rep.expected);

    // the same cases give the same reports regardless of worker count
    const std::vector<std::string> names{"deg-r0", "psi-h-r1", "strata-m5", "dims-r1"};
    const auto seq = run_cases(names, 1);
    const auto par = run_cases(names, 4);
    for (size_t i = 0; i < names.size(); ++i) {
        CHECK(seq[i].case_name == par[i].case_name);
        CHECK(seq[i].result == par[i].result);
        CHECK(seq[i].pass);
    }
}

TEST_CASE("json rendering round-trips and is timing-free by default") {
    const auto reports = run_cases({"deg-r0", "det-degrees"}, 1);
    const std::string a = render_json(reports, false);
    const std::string b = render_json(reports, false);
    CHECK(a == b);
    CHECK(a.find("\"millis\": 0") != std::string::npos);
}
