import math
import os
import pathlib

import pytest

import gl3twist as g

DATA = pathlib.Path(os.environ.get("GL3TWIST_TEST_DATA", pathlib.Path(__file__).parents[1] / "data"))


def test_conductor_and_coefficients():
    p = g.LanglandsParams(2, -1, -1)
    assert g.analytic_conductor(p) == 12.0
    spec = g.FormSpec.eisenstein(g.LanglandsParams(0, 0, 0))
    assert abs(g.coeff(spec, 1, 4) - 6) < 1e-12
    prov = g.CoefficientProvider(spec, 100)
    assert abs(prov.coeff(1, 2) ** 2 - prov.coeff(1, 4) - prov.coeff(2, 1)) < 1e-12


def test_diophantine_and_kloosterman():
    r = g.dirichlet_approx(math.pi, 10)
    assert (r.a, r.q) == (22, 7)
    assert abs(g.kloosterman(0, 1, 5) + 1) < 1e-12
    with pytest.raises(g.NotInvertible):
        g.mod_inverse(4, 8)


def test_window_and_saddle():
    assert abs(g.window_eval(1000, 1500) - 1) < 1e-15
    win = g.ModulatedWindow(1000, 0.05, -0.5)
    main, err, regime = g.saddle_I(win, -75.0)
    assert regime == "saddle"
    assert abs(main - g.direct_I(win, -75.0)) <= err


def test_transform_contour_shift():
    spec = g.GammaQuotientSpec(0, g.LanglandsParams(2, -1, -1))
    win = g.ModulatedWindow(500, 0.01)
    a = g.psi_k_contour(0.5, spec, win, 0.0, 1e-9)
    b = g.psi_k_contour(0.5, spec, win, 0.25, 1e-9)
    assert a.converged and b.converged
    assert abs(a.value - b.value) <= 1e-6 * abs(a.value)


def test_sums():
    spec = g.FormSpec.eisenstein(g.LanglandsParams(0, 0, 0))
    prov = g.CoefficientProvider(spec, 100)
    exp = g.SumExperiment.make(spec, 10, 0.0, 10, g.SumMode.Sharp)
    assert abs(g.direct_sum(prov, exp) - 53) < 1e-12
    b = g.predicted_bound(1e4, 1e6, g.choose_Q(1e4, 1e6), 0.0)
    assert abs(b["unconditional"] / b["ramanujan"] - 10) < 1e-9


@pytest.mark.skipif(not (DATA / "maass_r9.5337.txt").exists(), reason="no eigenvalue fixture")
def test_insufficient_data_is_an_exception():
    table = g.ingest_gl2_table(DATA / "maass_r9.5337.txt")
    spec = g.FormSpec.sym_square(table)
    prov = g.CoefficientProvider(spec, 100)
    with pytest.raises(g.InsufficientData):
        prov.coeff(1, 20011)
