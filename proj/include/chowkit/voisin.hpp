#pragma once

#include "chowkit/sheaf.hpp"
#include "chowkit/space.hpp"

#include <utility>
#include <vector>

namespace chowkit {

/// Parameters of the r-planes-in-a-cubic family: the ambient projective space
/// has n+1 = C(r+3,2) coordinates and the variety of r-planes has dimension
/// N = (r+1)(n-r) - C(r+3,3).
struct VoisinParams {
    int r = 0;
    int n = 0;
    long long N = 0;
    static VoisinParams for_r(int r);
};

struct DimsReport {
    int r = 0;
    int n = 0;
    long long N = 0;
    std::vector<long long> delta;  // delta_k for k = 1..r+1
    long long dim_incidence = 0;   // dim X + h^0(P^n, O(3)) - r - 2
    int m = 0;                     // relative dimension of the incidence stratum; equals r+1
    int fix_codim = 0;             // codimension of the fixed locus; equals r+1
};

/// Closed-form dimension bookkeeping, with the m = r+1 identity asserted.
DimsReport dims_report(int r);

/// Degree of the self-map, computed twice: as the degree-(n-r-1) coefficient
/// of the closed series quotient and as the Segre/Sym^2 sum over
/// F = O(1)^{r+1} + O(3) on P^{n-r-1}. The two routes must agree exactly.
long long voisin_degree(int r);

/// Consistency of the degree with the action on the canonical form:
/// deg = ((-2)^{r+1})^2.
bool eigen_crosscheck(int r);

/// Class of the fixed locus in CH^{r+1}, as a polynomial in c_1..c_{r+1} of
/// the dual tautological subbundle: the product of three Euler classes on
/// Gr(r+1,n+1) x Gr(r+2,n+1), pushed to the first factor. r in {1,2} is
/// verified against known values; r = 3 is an unverified long-running case.
ChernPolynomial fixed_locus_class(int r);

/// Coefficient a in psi^* h = a h, derived by first-Chern-class bookkeeping
/// through the defining exact sequences on a one-generator formal space.
long long psi_star_h(int r);

/// Codimensions of the rank <= m-1, ..., rank <= 1 strata of a generic
/// m x m symmetric form: codim(rank <= rho) = C(m - rho + 1, 2).
std::vector<long long> rank_strata_codims(int m);

/// Degree of the determinant hypersurface of a symmetric form V -> V* (x) L:
/// -2 deg c1(V) + rank(V) deg c1(L).
long long det_degree(const Sheaf& v, const Sheaf& l);

/// The two determinant degrees of the rank-5 and rank-4 form bundles on P^5.
std::pair<long long, long long> determinant_degrees();

}  // namespace chowkit
