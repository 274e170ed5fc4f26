#include "chowkit/voisin.hpp"

#include "chowkit/series.hpp"

#include <stdexcept>
#include <string>

namespace chowkit {

namespace {

long long h0(int a, int d) {  // h^0(P^a, O(d)) = C(a+d, d)
    const mpz_class v = binomial(a + d, d);
    if (!v.fits_slong_p()) throw std::logic_error("h0: value exceeds 64 bits");
    return v.get_si();
}

long long to_ll(const mpz_class& v, const char* what) {
    if (!v.fits_slong_p()) throw std::logic_error(std::string(what) + ": value exceeds 64 bits");
    return v.get_si();
}

}  // namespace

VoisinParams VoisinParams::for_r(int r) {
    if (r < 0) throw std::invalid_argument("VoisinParams: r must be nonnegative");
    VoisinParams p;
    p.r = r;
    p.n = static_cast<int>(to_ll(binomial(r + 3, 2), "n+1")) - 1;
    p.N = static_cast<long long>(r + 1) * (p.n - r) - to_ll(binomial(r + 3, 3), "N");
    if (p.N <= 0) throw std::logic_error("VoisinParams: nonpositive dimension N");
    return p;
}

DimsReport dims_report(int r) {
    const VoisinParams p = VoisinParams::for_r(r);
    DimsReport out;
    out.r = r;
    out.n = p.n;
    out.N = p.N;
    for (int k = 1; k <= r + 1; ++k) out.delta.push_back(2 * h0(r, 3) - h0(k - 1, 3));
    out.dim_incidence = p.N + h0(p.n, 3) - r - 2;
    out.m = p.n - (r + 1) * (r + 2) / 2;
    out.fix_codim = r + 1;
    if (out.m != r + 1)
        throw std::logic_error("dims_report: relative dimension m != r+1");
    return out;
}

long long voisin_degree(int r) {
    const VoisinParams p = VoisinParams::for_r(r);
    const int D = p.n - r - 1;  // equals (r+1)(r+2)/2

    // Route 1: degree-D coefficient of the closed series quotient
    //   2^{r+1} (1+2h)^{(r+1)(r+2)/2} (1+4h)^{r+1} (1+6h) / ((1+2h)^{r+1} (1+6h)).
    const TruncatedSeries one_2h = TruncatedSeries::linear(D, Rational(1), Rational(2));
    const TruncatedSeries one_4h = TruncatedSeries::linear(D, Rational(1), Rational(4));
    const TruncatedSeries one_6h = TruncatedSeries::linear(D, Rational(1), Rational(6));
    const TruncatedSeries quotient = one_2h.pow((r + 1) * (r + 2) / 2) * one_4h.pow(r + 1) *
                                     one_6h * (one_2h.pow(r + 1) * one_6h).pow(-1);
    const Rational route1 = quotient.coeff(D) * Rational(pow_int(2, r + 1));

    // Route 2: 2^{r+1} sum_i 2^i s_i(F) c_{D-i}(Sym^2 F) with F = O(1)^{r+1} + O(3).
    auto pm = proj_space(D);
    const GradedElement h = pm->hyperplane_power(1);
    Sheaf f = line_bundle(pm, h * Rational(3));
    for (int i = 0; i < r + 1; ++i) f = sum(f, line_bundle(pm, h));
    const Sheaf sym2f = sym(2, f);
    const GradedElement c_sym2f = sym2f.total_chern();
    const GradedElement s = segre_series(f);
    Rational route2;
    mpz_class two_i = 1;
    for (int i = 0; i <= D; ++i) {
        route2 += Rational(two_i) * s.coefficient(i, static_cast<LabelId>(i)) *
                  c_sym2f.coefficient(D - i, static_cast<LabelId>(D - i));
        two_i *= 2;
    }
    route2 *= Rational(pow_int(2, r + 1));

    if (route1 != route2)
        throw std::runtime_error("voisin_degree: series route " + route1.str() +
                                 " disagrees with Segre/Sym^2 route " + route2.str());

    // Both routes compute deg f^* Z_q = 2^{n-r-1} deg Z_q.
    const Rational deg = route1 / Rational(pow_int(2, D));
    return deg.to_int64();
}

bool eigen_crosscheck(int r) {
    const mpz_class lambda = pow_int(-2, r + 1);
    return mpz_class(static_cast<long>(voisin_degree(r))) == lambda * lambda;
}

ChernPolynomial fixed_locus_class(int r) {
    if (r < 1 || r > 3)
        throw std::invalid_argument("fixed_locus_class: supported for r in {1,2,3}");
    const VoisinParams p = VoisinParams::for_r(r);
    const int n1 = p.n + 1;

    auto g1 = grassmannian_space(r + 1, n1);
    auto g2 = grassmannian_space(r + 2, n1);
    auto gg = product_space(g1, g2);

    const Sheaf pe_dual = dual(pullback_first(gg, tautological_sub(g1)));
    const Sheaf pf = pullback_second(gg, tautological_sub(g2));
    const Sheaf pf_dual = dual(pf);

    const long rank1 = static_cast<long>(r + 1) * (n1 - (r + 2));
    const long rank2 = static_cast<long>(r + 1) * (r + 2) / 2;
    const long rank3 = r + 1;
    if (rank1 + rank2 + rank3 != g2->dimension() + (r + 1))
        throw std::runtime_error("fixed_locus_class: Euler ranks do not sum to the pushforward "
                                 "codimension");

    // Everything is eventually pushed to first-factor degree r+1, so the
    // whole pipeline can prune first-factor degrees above that.
    const int fcap = r + 1;
    const PruneSpec ps1{static_cast<int>(rank1), fcap};
    const PruneSpec ps2{static_cast<int>(rank2), fcap};
    const PruneSpec ps3{static_cast<int>(rank3), fcap};

    const Sheaf quotient_bundle = difference(trivial_bundle(gg, n1), pf, ps1);
    const GradedElement e1 = euler_class(tensor(pe_dual, quotient_bundle, ps1), rank1);
    const Sheaf diff = difference(pf_dual, pe_dual, PruneSpec{-1, fcap});
    const GradedElement e2 = euler_class(tensor(diff, sym(2, pe_dual, ps2), ps2), rank2);
    const GradedElement e3 =
        euler_class(tensor(tensor(diff, diff, ps3), pe_dual, ps3), rank3);

    GradedElement cls = e1.mul_capped(e2, gg->dimension(), fcap).mul_capped(e3, gg->dimension(),
                                                                            fcap);
    int cls_degree = -1;
    if (cls.is_zero() || !cls.is_homogeneous(&cls_degree) ||
        cls_degree != g2->dimension() + (r + 1))
        throw std::runtime_error("fixed_locus_class: Euler-class product is not homogeneous of "
                                 "degree dim Gr(r+2,n+1) + r + 1");

    const GradedElement pushed = pushforward_to_first_factor(cls);
    int pushed_degree = -1;
    if (pushed.is_zero() || !pushed.is_homogeneous(&pushed_degree) || pushed_degree != r + 1)
        throw std::runtime_error("fixed_locus_class: pushforward is not homogeneous of degree "
                                 "r + 1");
    return express_in_chern_monomials(pushed, r + 1);
}

long long psi_star_h(int r) {
    if (r < 1) throw std::invalid_argument("psi_star_h: needs r >= 1");
    const VoisinParams p = VoisinParams::for_r(r);

    // Only c1 data matters; a one-generator formal ring (P^1) carries it.
    auto sp = proj_space(1);
    const GradedElement h = sp->hyperplane_power(1);
    auto c1_multiple = [&](const Sheaf& s) {
        return s.chern_class(1).coefficient(1, 1);
    };

    // 0 -> F -> V_{n+1} -> Sym^2 E* -> 0 with c1(E) = -h, rank E = r+1.
    const Sheaf taut = sum(line_bundle(sp, h * Rational(-1)), trivial_bundle(sp, r));
    const Sheaf f = difference(trivial_bundle(sp, p.n + 1), sym(2, dual(taut)));
    if (c1_multiple(f) != Rational(-(r + 2)))
        throw std::runtime_error("psi_star_h: c1(F) != -(r+2)h");

    // 0 -> psi^*E -> F -> (F/E)* (x) (F/E)* -> 0.
    const Sheaf fe = difference(f, taut);  // the line F/E
    const Sheaf twist = tensor(dual(fe), dual(fe));
    const Sheaf pulled = difference(f, twist);
    if (pulled.rank() != r + 1)
        throw std::runtime_error("psi_star_h: pulled-back bundle has wrong rank");

    const Rational ratio = c1_multiple(pulled) / c1_multiple(taut);
    return ratio.to_int64();
}

std::vector<long long> rank_strata_codims(int m) {
    if (m < 2) throw std::invalid_argument("rank_strata_codims: needs m >= 2");
    std::vector<long long> out;
    for (int rho = m - 1; rho >= 1; --rho)
        out.push_back(to_ll(binomial(m - rho + 1, 2), "rank_strata_codims"));
    return out;
}

long long det_degree(const Sheaf& v, const Sheaf& l) {
    if (v.space().get() != l.space().get())
        throw std::invalid_argument("det_degree: bundles on different spaces");
    if (l.rank() != 1) throw std::invalid_argument("det_degree: twist must be a line bundle");
    auto h_multiple = [](const Sheaf& s) {
        const GradedElement c1 = s.chern_class(1);
        if (c1.is_zero()) return Rational(0);
        return c1.coefficient(1, 1);
    };
    // det of V -> V* (x) L is a section of (det V*)^2 (x) L^{rank V}.
    const Rational deg = Rational(-2) * h_multiple(v) + Rational(v.rank()) * h_multiple(l);
    return deg.to_int64();
}

std::pair<long long, long long> determinant_degrees() {
    auto p5 = proj_space(5);
    const GradedElement h = p5->hyperplane_power(1);
    const Sheaf l = line_bundle(p5, h);
    const Sheaf v5 = sum(line_bundle(p5, h * Rational(-1)), trivial_bundle(p5, 4));
    const Sheaf v4 = trivial_bundle(p5, 4);
    return {det_degree(v5, l), det_degree(v4, l)};
}

}  // namespace chowkit
