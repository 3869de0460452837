from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from operad_calculus import configs as C
from operad_calculus import (
    D,
    Element,
    InstanceMismatch,
    IndexOutOfRange,
    InvalidRepresentation,
    NotAMultiplication,
    NotOperatorOfKind,
    WrongArity,
    cup_bracket,
    cup_product,
    d_phi,
    d_weighted,
    delta_pi,
    delta_rep,
    gv_bracket,
    iota,
    is_multiplication,
    partial_compose,
    preserves_multiplication,
    seeded_rng,
    theta,
)
from operad_calculus.exact import as_object_array
from operad_calculus.kernel import Multiplication, Representation, phi_representation
from operad_calculus.operad import sign


def test_a1_scalar_examples(a1):
    pi, one = a1.pi, a1.operad.unit()
    p = pi.pi
    assert delta_pi(pi, one) == p
    assert theta(pi, one) == -2 * p
    assert D(pi, one) == -p
    for lam in (0, 1, -2, 5):
        assert d_weighted(pi, lam, one) == -lam * p
    assert cup_product(pi, one, one) == p
    assert cup_bracket(pi, one, one) == 2 * p


def test_hochschild_on_identity_is_pi_and_d_is_minus_pi(a2):
    """On the dual numbers the identity is a derivation-like cochain."""
    one = a2.operad.unit()
    assert delta_pi(a2.pi, one) == a2.pi.pi
    assert D(a2.pi, one) == -a2.pi.pi


def test_partial_compose_matches_explicit_substitution(a2, rng):
    op = a2.operad
    f = op.random_element(2, rng)
    g = op.random_element(2, rng)
    h = partial_compose(f, 2, g)
    for a, b, c in itertools.product(range(2), repeat=3):
        inner = g.data[:, b, c]
        want = [sum(f.data[o, a, k] * inner[k] for k in range(2)) for o in range(2)]
        assert list(h.data[:, a, b, c]) == want


def test_partial_compose_index_errors(a2):
    one = a2.operad.unit()
    with pytest.raises(IndexOutOfRange):
        partial_compose(one, 2, one)
    with pytest.raises(IndexOutOfRange):
        partial_compose(a2.pi.pi, 0, one)


def test_mixing_operads_raises(a1, a2):
    with pytest.raises(InstanceMismatch):
        partial_compose(a1.operad.unit(), 1, a2.operad.unit())
    with pytest.raises(InstanceMismatch):
        a1.operad.unit() + a2.operad.unit()


def test_arity_checks(a2):
    one = a2.operad.unit()
    with pytest.raises(WrongArity):
        one + a2.pi.pi
    with pytest.raises(WrongArity):
        is_multiplication(one)
    with pytest.raises(WrongArity):
        a2.operad.zero(0)


def test_multiplication_validation(a2):
    op = a2.operad
    bad = Element(op, 2, as_object_array([[[0, 1], [0, 0]], [[0, 0], [1, 0]]]))
    assert not is_multiplication(bad)
    with pytest.raises(NotAMultiplication):
        Multiplication(bad)


def test_representation_validation(a2):
    p = a2.pi.pi
    Representation(a2.pi, p, p)
    with pytest.raises(InvalidRepresentation):
        Representation(a2.pi, p, 2 * p)


def test_regular_representation_gives_hochschild(a2, rng):
    for n in (1, 2, 3):
        f = a2.operad.random_element(n, rng)
        assert delta_rep(a2.pi, (a2.pi.pi, a2.pi.pi), f) == delta_pi(a2.pi, f)


def test_zero_representation_gives_trivial_differential(a2, rng):
    z = a2.operad.zero(2)
    for n in (1, 2, 3):
        f = a2.operad.random_element(n, rng)
        assert delta_rep(a2.pi, (z, z), f) == D(a2.pi, f)


def test_preserving_map_and_its_representation(a2, rng):
    phi = C.matrix_element(a2.operad, [[1, 0], [0, 0]])
    assert preserves_multiplication(a2.pi, phi)
    rep = phi_representation(a2.pi, phi)
    for n in (1, 2, 3):
        f = a2.operad.random_element(n, rng)
        assert delta_rep(a2.pi, rep, f) == d_phi(a2.pi, phi, f)


def test_d_phi_rejects_non_preserving(a2):
    bad = C.matrix_element(a2.operad, [[0, 0], [1, 0]])
    assert not preserves_multiplication(a2.pi, bad)
    with pytest.raises(NotOperatorOfKind):
        d_phi(a2.pi, bad, a2.operad.unit())


@pytest.mark.parametrize("cfg", C.differential_configs(), ids=lambda c: c.name)
def test_differentials_square_to_zero(cfg, rng):
    op, pi = cfg.operad, cfg.pi
    for n in (1, 2, 3):
        f = op.random_element(n, rng)
        assert delta_pi(pi, delta_pi(pi, f)).is_zero()
        assert D(pi, D(pi, f)).is_zero()
        assert d_weighted(pi, 3, d_weighted(pi, 3, f)).is_zero()


def test_delta_is_a_derivation_of_cup(a2, rng):
    op, pi = a2.operad, a2.pi
    for m, n in itertools.product((1, 2), repeat=2):
        f, g = op.random_element(m, rng), op.random_element(n, rng)
        lhs = delta_pi(pi, cup_product(pi, f, g))
        rhs = cup_product(pi, delta_pi(pi, f), g) + sign(m) * cup_product(pi, f, delta_pi(pi, g))
        assert lhs == rhs


def test_delta_splits_into_trivial_part_and_theta(a2, rng):
    for n in (1, 2, 3):
        f = a2.operad.random_element(n, rng)
        assert delta_pi(a2.pi, f) == D(a2.pi, f) + sign(n) * theta(a2.pi, f)


arities = st.integers(1, 3)


@settings(max_examples=25, deadline=None)
@given(arities, arities, arities, st.integers(0, 10**6))
def test_pre_lie_identity(m, n, k, seed):
    op = C.end_a2().operad
    rng = seeded_rng(seed, "pre-lie")
    f, g, h = (op.random_element(a, rng) for a in (m, n, k))

    def assoc(x, y, z):
        return iota(iota(z, y), x) - iota(z, iota(y, x))

    assert assoc(f, g, h) == sign((n - 1) * (k - 1)) * assoc(f, h, g)


@settings(max_examples=25, deadline=None)
@given(arities, arities, arities, st.integers(0, 10**6))
def test_gv_bracket_graded_jacobi(m, n, k, seed):
    op = C.end_a2().operad
    rng = seeded_rng(seed, "gv")
    f, g, h = (op.random_element(a, rng) for a in (m, n, k))
    a, b, c = m - 1, n - 1, k - 1
    assert gv_bracket(f, g) == -sign(a * b) * gv_bracket(g, f)
    total = (
        sign(a * c) * gv_bracket(f, gv_bracket(g, h))
        + sign(b * a) * gv_bracket(g, gv_bracket(h, f))
        + sign(c * b) * gv_bracket(h, gv_bracket(f, g))
    )
    assert total.is_zero()


@settings(max_examples=25, deadline=None)
@given(arities, arities, arities, st.integers(0, 10**6))
def test_cup_bracket_graded_jacobi(m, n, k, seed):
    pi = C.end_a2().pi
    rng = seeded_rng(seed, "cup")
    f, g, h = (pi.operad.random_element(a, rng) for a in (m, n, k))
    assert cup_bracket(pi, f, g) == -sign(m * n) * cup_bracket(pi, g, f)
    total = (
        sign(m * k) * cup_bracket(pi, f, cup_bracket(pi, g, h))
        + sign(n * m) * cup_bracket(pi, g, cup_bracket(pi, h, f))
        + sign(k * n) * cup_bracket(pi, h, cup_bracket(pi, f, g))
    )
    assert total.is_zero()


def test_theta_is_a_derivation_of_the_cup_bracket(a2, rng):
    pi = a2.pi
    for m, n in itertools.product((1, 2), repeat=2):
        f, g = a2.operad.random_element(m, rng), a2.operad.random_element(n, rng)
        lhs = theta(pi, cup_bracket(pi, f, g))
        rhs = sign(n) * cup_bracket(pi, theta(pi, f), g) + cup_bracket(pi, f, theta(pi, g))
        assert lhs == rhs


def test_batched_elements_compose_slotwise(a2, rng):
    op = a2.operad
    basis = Element(op, 1, op.basis(1), check=False)
    g = op.random_element(2, rng)
    batched = partial_compose(g, 1, basis)
    for k, b in enumerate(op.basis_elements(1)):
        assert Element(op, 2, batched.data[k], check=False) == partial_compose(g, 1, b)
