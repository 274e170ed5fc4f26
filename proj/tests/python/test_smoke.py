"""Smoke tests for the python bindings."""

import chowkit


def test_voisin_degree():
    assert chowkit.voisin_degree(0) == 4
    assert chowkit.voisin_degree(1) == 16
    assert chowkit.voisin_degree(2) == 64


def test_eigen_crosscheck():
    assert all(chowkit.eigen_crosscheck(r) for r in range(4))


def test_fixed_locus_classes():
    assert chowkit.fixed_locus_class(1) == {"c2": "21"}
    assert chowkit.fixed_locus_class(2) == {"c1^3": "-20", "c1*c2": "110", "c3": "49"}


def test_psi_star_h():
    assert [chowkit.psi_star_h(r) for r in (1, 2, 3)] == [7, 10, 13]


def test_dims_report():
    d = chowkit.dims_report(2)
    assert (d["n"], d["N"], d["m"], d["fix_codim"], d["dim_I"]) == (9, 11, 3, 3, 227)
    assert d["delta"] == [19, 16, 10]


def test_strata_and_determinants():
    assert chowkit.rank_strata_codims(5) == [1, 3, 6, 10]
    assert chowkit.determinant_degrees() == (7, 4)


def test_schubert_product():
    prod = chowkit.schubert_product([1], [1], 2, 2)
    assert prod == {(2,): 1, (1, 1): 1}


def test_run_case_and_registry():
    names = chowkit.case_names()
    assert "fixed-locus-r2" in names
    rep = chowkit.run_case("deg-r1")
    assert rep["pass"] and rep["result"] == {"deg": "16"}


def test_verify_all_passes():
    reports = chowkit.verify_all(threads=2)
    assert len(reports) == len(chowkit.case_names())
    assert all(rep["pass"] for rep in reports)
