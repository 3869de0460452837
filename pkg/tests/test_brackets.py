from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from operad_calculus import configs as C
from operad_calculus import (
    D,
    SemidirectPair,
    WrongArity,
    InstanceMismatch,
    cup_bracket,
    d_weighted,
    delta_pi,
    derived_bracket,
    fn_bracket,
    gv_bracket,
    iota,
    nijenhuis_deformation,
    phi_embedding,
    psi_map,
    rho_action,
    semidirect_bracket,
    theta,
    theta_embedding,
    upsilon_map,
)
from operad_calculus.operad import sign
from operad_calculus.operators import Kind, operator_coboundary, rb_deformations

CONFIGS = [C.end_a2(), C.end_random2(5), C.hom_a2(), C.dendriform_d2()]


def _pairs(rng, cfg, arities=(1, 2)):
    for m, n in itertools.product(arities, repeat=2):
        yield cfg.operad.random_element(m, rng), cfg.operad.random_element(n, rng)


def test_semidirect_pair_validation(a1, a2):
    with pytest.raises(WrongArity):
        SemidirectPair(a2.operad.unit(), a2.operad.unit())
    with pytest.raises(InstanceMismatch):
        SemidirectPair(a1.pi.pi, a2.operad.unit())
    assert SemidirectPair(a2.pi.pi, a2.operad.unit()).degree == 1


def test_semidirect_bracket_with_pure_pi(a2, rng):
    """Bracketing ``(pi, 0)`` with ``(0, psi)`` gives ``(0, -D psi)``."""
    op, pi = a2.operad, a2.pi
    a = SemidirectPair(pi.pi, op.zero(1))
    for n in (1, 2, 3):
        psi = op.random_element(n, rng)
        b = SemidirectPair(op.zero(n + 1), psi)
        out = semidirect_bracket(pi, a, b)
        assert out.upper.is_zero()
        assert out.lower == -D(pi, psi)


def test_semidirect_bracket_graded_antisymmetry(a2, rng):
    op, pi = a2.operad, a2.pi
    for m, n in itertools.product((1, 2), repeat=2):
        a = SemidirectPair(op.random_element(m + 1, rng), op.random_element(m, rng))
        b = SemidirectPair(op.random_element(n + 1, rng), op.random_element(n, rng))
        assert semidirect_bracket(pi, a, b) == -sign(m * n) * semidirect_bracket(pi, b, a)


def test_fn_bracket_of_identity_vanishes(a1, a2):
    for cfg in (a1, a2):
        one = cfg.operad.unit()
        assert fn_bracket(cfg.pi, one, one).is_zero()


def test_fn_bracket_of_nijenhuis_elements_vanishes(a2):
    for N in a2.nijenhuis:
        assert fn_bracket(a2.pi, N, N).is_zero()


def test_derived_bracket_maurer_cartan_for_rota_baxter(a2):
    for R, lam in a2.rota_baxter:
        assert (d_weighted(a2.pi, lam, R) + Fraction(1, 2) * derived_bracket(a2.pi, R, R)).is_zero()


def test_weight_zero_rb_element_has_zero_derived_square(a2):
    R = C.matrix_element(a2.operad, [[0, 0], [1, 0]])
    assert derived_bracket(a2.pi, R, R).is_zero()


@pytest.mark.parametrize("cfg", CONFIGS, ids=lambda c: c.name)
def test_embeddings_are_homomorphisms(cfg, rng):
    pi = cfg.pi
    for f, g in _pairs(rng, cfg):
        assert semidirect_bracket(pi, theta_embedding(pi, f), theta_embedding(pi, g)) == theta_embedding(
            pi, fn_bracket(pi, f, g)
        )
        assert semidirect_bracket(pi, phi_embedding(pi, f), phi_embedding(pi, g)) == phi_embedding(
            pi, derived_bracket(pi, f, g)
        )


@pytest.mark.parametrize("cfg", CONFIGS, ids=lambda c: c.name)
def test_cup_bracket_through_contractions(cfg, rng):
    pi = cfg.pi
    for f, g in _pairs(rng, cfg):
        m, n = f.arity, g.arity
        assert cup_bracket(pi, f, g) == sign(n) * (iota(f, theta(pi, g)) - theta(pi, iota(f, g)))
        via_delta = iota(f, delta_pi(pi, g)) + sign(m - 1) * iota(delta_pi(pi, f), g) + sign(m) * delta_pi(pi, iota(f, g))
        assert cup_bracket(pi, f, g) == via_delta


@pytest.mark.parametrize("cfg", CONFIGS, ids=lambda c: c.name)
def test_brackets_are_graded_antisymmetric(cfg, rng):
    pi = cfg.pi
    for f, g in _pairs(rng, cfg, (1, 2, 3)):
        s = sign(f.arity * g.arity)
        assert fn_bracket(pi, f, g) == -s * fn_bracket(pi, g, f)
        assert derived_bracket(pi, f, g) == -s * derived_bracket(pi, g, f)


@pytest.mark.parametrize("bracket", [fn_bracket, derived_bracket], ids=["fn", "derived"])
def test_graded_jacobi(bracket, rng):
    cfg = C.end_a2()
    pi, op = cfg.pi, cfg.operad
    for m, n, k in itertools.product((1, 2), repeat=3):
        f, g, h = op.random_element(m, rng), op.random_element(n, rng), op.random_element(k, rng)
        b = lambda x, y: bracket(pi, x, y)  # noqa: E731
        total = sign(m * k) * b(f, b(g, h)) + sign(n * m) * b(g, b(h, f)) + sign(k * n) * b(h, b(f, g))
        assert total.is_zero()


def test_rho_action(a2, rng):
    op, pi = a2.operad, a2.pi
    for m, n, k in itertools.product((1, 2), repeat=3):
        f, g = op.random_element(m + 1, rng), op.random_element(n + 1, rng)
        phi, psi = op.random_element(k, rng), op.random_element(2, rng)
        assert rho_action(gv_bracket(f, g), phi) == rho_action(f, rho_action(g, phi)) - sign(m * n) * rho_action(
            g, rho_action(f, phi)
        )
        assert rho_action(f, cup_bracket(pi, phi, psi)) == cup_bracket(pi, rho_action(f, phi), psi) + sign(
            m * k
        ) * cup_bracket(pi, phi, rho_action(f, psi))


def test_psi_intertwines_nijenhuis_complex(a2, rng):
    pi = a2.pi
    for N in a2.nijenhuis:
        piN = nijenhuis_deformation(pi, N)
        for n in (1, 2, 3):
            B = a2.operad.random_element(n, rng)
            assert delta_pi(piN, psi_map(pi, B)) == psi_map(pi, operator_coboundary(pi, Kind.NIJENHUIS, N, B))


def test_upsilon_intertwines_weight_zero_rb_complex(a2, rng):
    pi = a2.pi
    R = C.matrix_element(a2.operad, [[0, 0], [1, 0]])
    piR, _ = rb_deformations(pi, R, 0)
    for n in (1, 2, 3):
        B = a2.operad.random_element(n, rng)
        assert delta_pi(piR, upsilon_map(pi, B)) == upsilon_map(pi, operator_coboundary(pi, Kind.ROTA_BAXTER, R, B, 0))
