from __future__ import annotations

import pytest
import sympy

from operad_calculus import configs as C
from operad_calculus import (
    ComplexBroken,
    ComplexHandle,
    ComplexKind,
    DegreeOutOfRange,
    MissingWeight,
    NotOperatorOfKind,
    coboundary_matrix,
    cohomology_dims,
    differential_matrix,
    partial_compose,
    rb_deformations,
    report,
)
from operad_calculus.operators import Kind, operator_coboundary, rota_baxter_coboundary_via_rep


def _sympy_dims(h):
    mats = [sympy.Matrix(coboundary_matrix(h, n).to_rows()) for n in range(1, h.degree_max + 1)]
    ranks = [m.rank() for m in mats]
    return [mats[k].cols - ranks[k] - (ranks[k - 1] if k else 0) for k in range(h.degree_max - 1)]


def test_ground_field_matrices(a1):
    h = ComplexHandle("hochschild", a1.pi, degree_max=3)
    assert coboundary_matrix(h, 1).to_rows() == [[1]]
    assert coboundary_matrix(h, 2).to_rows() == [[0]]
    assert coboundary_matrix(h, 3).to_rows() == [[1]]
    trivial = ComplexHandle("trivial_rep", a1.pi, degree_max=2)
    assert coboundary_matrix(trivial, 1).to_rows() == [[-1]]


def test_ground_field_hochschild_vanishes(a1):
    assert cohomology_dims(ComplexHandle("hochschild", a1.pi, degree_max=4)) == [0, 0, 0]


def test_dual_numbers_hochschild_is_one_dimensional(a2):
    """Over the rationals the dual numbers have one-dimensional HH^n for n >= 1."""
    h = ComplexHandle("hochschild", a2.pi, degree_max=5)
    assert cohomology_dims(h) == [1, 1, 1, 1]


def test_trivial_coefficients_are_acyclic_for_unital_algebras(a2):
    assert cohomology_dims(ComplexHandle("trivial_rep", a2.pi)) == [0, 0, 0]


@pytest.mark.parametrize(
    "kind, params",
    [
        ("nijenhuis", lambda cfg: {"operator": cfg.nijenhuis[2]}),
        ("rota_baxter", lambda cfg: {"operator": cfg.rota_baxter[3][0], "weight": 0}),
        ("rota_baxter", lambda cfg: {"operator": cfg.rota_baxter[1][0], "weight": 1}),
        ("preserving", lambda cfg: {"phi": cfg.preserving[1]}),
        ("averaging", lambda cfg: {"operator": cfg.averaging[1]}),
        ("representation", lambda cfg: {"rep": (cfg.pi.pi, cfg.pi.pi)}),
    ],
)
def test_dims_match_sympy_ranks(a2, kind, params):
    h = ComplexHandle(kind, a2.pi, params(a2))
    assert cohomology_dims(h) == _sympy_dims(h)


def test_report(a1):
    out = report(ComplexHandle("hochschild", a1.pi, degree_max=3))
    assert out == {"complex": "hochschild", "dims": [0, 0], "degrees": [1, 2]}


def test_default_degree_max(a2):
    assert ComplexHandle("hochschild", a2.pi).degree_max == 4
    assert ComplexHandle("averaging", a2.pi, {"operator": a2.averaging[1]}).degree_max == 3
    assert ComplexHandle(ComplexKind.TRIVIAL_REP, a2.pi, degree_max=2).degree_max == 2


def test_degree_errors(a2):
    h = ComplexHandle("hochschild", a2.pi, degree_max=3)
    for n in (0, 4):
        with pytest.raises(DegreeOutOfRange):
            coboundary_matrix(h, n)
    with pytest.raises(DegreeOutOfRange):
        cohomology_dims(ComplexHandle("hochschild", a2.pi, degree_max=1))
    with pytest.raises(DegreeOutOfRange):
        differential_matrix(a2.operad, lambda f: f, 2)


def test_broken_complex_is_reported(a2):
    h = ComplexHandle("hochschild", a2.pi, degree_max=3)
    h.differential = lambda: (lambda f: partial_compose(f, 1, a2.pi.pi))
    with pytest.raises(ComplexBroken):
        cohomology_dims(h)


def test_invalid_handles(a2):
    swap = C.matrix_element(a2.operad, [[0, 1], [1, 0]])
    with pytest.raises(NotOperatorOfKind):
        ComplexHandle("nijenhuis", a2.pi, {"operator": swap})
    with pytest.raises(NotOperatorOfKind):
        ComplexHandle("preserving", a2.pi, {"phi": swap})
    with pytest.raises(MissingWeight):
        ComplexHandle("rota-baxter", a2.pi, {"operator": a2.operad.unit()})
    with pytest.raises(ValueError):
        ComplexHandle("de-rham", a2.pi)


def test_rota_baxter_routes_agree_as_matrices(a2):
    for R, lam in a2.rota_baxter:
        for n in (1, 2, 3):
            direct = differential_matrix(a2.operad, lambda f: operator_coboundary(a2.pi, Kind.ROTA_BAXTER, R, f, lam), n)
            via = differential_matrix(a2.operad, lambda f: rota_baxter_coboundary_via_rep(a2.pi, R, lam, f), n)
            assert direct == via


def test_representation_complex_from_rota_baxter(a2):
    R = C.matrix_element(a2.operad, [[0, 0], [1, 0]])
    piR, rep = rb_deformations(a2.pi, R, 0)
    h = ComplexHandle("representation", piR, {"rep": rep}, degree_max=3)
    assert cohomology_dims(h) == _sympy_dims(h)


@pytest.mark.parametrize("cfg", [C.dendriform_d1(), C.hom_a2()], ids=lambda c: c.name)
def test_variant_complexes(cfg):
    h = ComplexHandle("hochschild", cfg.pi, degree_max=3)
    assert cohomology_dims(h) == _sympy_dims(h)
