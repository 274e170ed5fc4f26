#include "chowkit/partition.hpp"
#include "chowkit/verify.hpp"
#include "chowkit/voisin.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

std::map<std::string, std::string> poly_dict(const chowkit::ChernPolynomial& poly) {
    std::map<std::string, std::string> out;
    for (const auto& [name, value] : poly.named_terms()) out.emplace(name, value);
    return out;
}

py::dict report_dict(const chowkit::VerificationReport& rep) {
    py::dict d;
    d["case"] = rep.case_name;
    d["r"] = rep.r;
    d["n"] = rep.n;
    py::dict result, expected;
    for (const auto& [k, v] : rep.result) result[py::str(k)] = v;
    for (const auto& [k, v] : rep.expected) expected[py::str(k)] = v;
    d["result"] = result;
    d["expected"] = expected;
    d["provenance"] = rep.provenance;
    d["pass"] = rep.pass;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Schubert-calculus engine for Voisin self-maps of varieties of r-planes "
              "in cubic hypersurfaces";

    m.def("voisin_degree", &chowkit::voisin_degree, py::arg("r"),
          "Degree of the self-map, computed by two independent exact routes.");
    m.def("eigen_crosscheck", &chowkit::eigen_crosscheck, py::arg("r"),
          "Checks deg = ((-2)^{r+1})^2.");
    m.def(
        "fixed_locus_class",
        [](int r) { return poly_dict(chowkit::fixed_locus_class(r)); }, py::arg("r"),
        "Fixed-locus class in CH^{r+1} as {monomial: coefficient} in c_i of E*.");
    m.def("psi_star_h", &chowkit::psi_star_h, py::arg("r"),
          "Coefficient a in psi^* h = a h.");
    m.def(
        "dims_report",
        [](int r) {
            const auto d = chowkit::dims_report(r);
            py::dict out;
            out["r"] = d.r;
            out["n"] = d.n;
            out["N"] = d.N;
            out["m"] = d.m;
            out["fix_codim"] = d.fix_codim;
            out["dim_I"] = d.dim_incidence;
            out["delta"] = d.delta;
            return out;
        },
        py::arg("r"), "Closed-form dimension bookkeeping.");
    m.def("rank_strata_codims", &chowkit::rank_strata_codims, py::arg("m"),
          "Codimensions of the rank <= m-1 ... <= 1 strata of an m x m symmetric form.");
    m.def(
        "determinant_degrees",
        [] {
            const auto [d5, d4] = chowkit::determinant_degrees();
            return py::make_tuple(d5, d4);
        },
        "Degrees of the rank-5 and rank-4 determinant hypersurfaces on P^5.");
    m.def(
        "schubert_product",
        [](const std::vector<int>& lambda, const std::vector<int>& mu, int rows, int cols) {
            const chowkit::BoxShape box(rows, cols);
            std::map<std::vector<int>, long long> out;
            for (const auto& [nu, c] :
                 chowkit::schubert_product(chowkit::Partition(lambda), chowkit::Partition(mu), box))
                out.emplace(nu.parts(), c);
            return out;
        },
        py::arg("lam"), py::arg("mu"), py::arg("rows"), py::arg("cols"),
        "Schubert structure constants in the rows x cols box.");
    m.def("case_names", [] { return chowkit::all_case_names(); },
          "Names of the bundled verification cases.");
    m.def(
        "run_case", [](const std::string& name) { return report_dict(chowkit::run_case(name)); },
        py::arg("name"), "Runs one verification case.");
    m.def(
        "verify_all",
        [](int threads) {
            py::list out;
            for (const auto& rep : chowkit::run_cases(chowkit::all_case_names(), threads))
                out.append(report_dict(rep));
            return out;
        },
        py::arg("threads") = 1, "Runs every verification case.");
}
