from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from operad_calculus import configs as C
from operad_calculus import (
    D,
    AlphaNotCompatible,
    Element,
    MalformedSpec,
    build_dendriform_operad,
    build_hom_operad,
    cup_product,
    d_weighted,
    delta_pi,
    derived_bracket,
    end_operad,
    fn_bracket,
    hom_multiplication,
    is_multiplication,
    partial_compose,
    theta,
)
from operad_calculus.exact import as_object_array, zeros
from operad_calculus.variants import (
    dend_cup_explicit,
    dend_d_lambda_explicit,
    dend_delta_explicit,
    dend_theta_explicit,
    dendriform_axioms_hold,
    dendriform_product,
    hom_associative,
    hom_cup_explicit,
    hom_d_lambda_explicit,
    hom_delta_explicit,
    hom_derived_explicit,
    hom_fn_explicit,
    hom_theta_explicit,
)

# ---------------------------------------------------------------------------
# dendriform


def test_dendriform_shapes_and_unit():
    op = build_dendriform_operad(2)
    assert op.shape(3) == (3, 2, 2, 2, 2)
    assert op.dim(2) == 2 * 8
    assert op.unit().data.shape == (1, 2, 2)
    with pytest.raises(MalformedSpec):
        build_dendriform_operad(0)


def test_zero_structure_is_a_multiplication():
    assert is_multiplication(dendriform_product(zeros((1, 1, 1)), zeros((1, 1, 1))))


def test_halves_on_the_ground_field_are_not_dendriform():
    half = as_object_array([[[Fraction(1, 2)]]])
    assert not dendriform_axioms_hold(half, half)
    assert not is_multiplication(dendriform_product(half, half))


@pytest.mark.parametrize("tensors", [C.dendriform_d1_tensors(), C.dendriform_d2_tensors()], ids=["d1", "d2"])
def test_reference_structures_are_dendriform(tensors):
    assert dendriform_axioms_hold(*tensors)
    assert is_multiplication(dendriform_product(*tensors))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-1, 1), min_size=16, max_size=16))
def test_multiplication_iff_dendriform_axioms(entries):
    prec = as_object_array(entries[:8], (2, 2, 2))
    succ = as_object_array(entries[8:], (2, 2, 2))
    assert is_multiplication(dendriform_product(prec, succ)) == dendriform_axioms_hold(prec, succ)


def test_composition_colors(rng):
    """Colors outside the grafted slot see the sum of the inserted colors."""
    op = build_dendriform_operad(1)
    f, g = op.random_element(2, rng), op.random_element(2, rng)
    h = partial_compose(f, 1, g).data
    gsum = g.data[0] + g.data[1]
    assert h[0, 0, 0, 0, 0] == f.data[0, 0, 0, 0] * g.data[0, 0, 0, 0]
    assert h[1, 0, 0, 0, 0] == f.data[0, 0, 0, 0] * g.data[1, 0, 0, 0]
    assert h[2, 0, 0, 0, 0] == f.data[1, 0, 0, 0] * gsum[0, 0, 0]


@pytest.mark.parametrize("cfg", [C.dendriform_d1(), C.dendriform_d2()], ids=lambda c: c.name)
def test_dendriform_operations_match_explicit_formulas(cfg, rng):
    pi, op = cfg.pi, cfg.operad
    for n in (1, 2, 3):
        f = op.random_element(n, rng)
        assert theta(pi, f).data.tolist() == dend_theta_explicit(pi.pi, f).tolist()
        assert delta_pi(pi, f).data.tolist() == dend_delta_explicit(pi.pi, f).tolist()
        assert d_weighted(pi, 3, f).data.tolist() == dend_d_lambda_explicit(pi.pi, 3, f).tolist()
    for m, n in itertools.product((1, 2), repeat=2):
        f, g = op.random_element(m, rng), op.random_element(n, rng)
        assert cup_product(pi, f, g).data.tolist() == dend_cup_explicit(pi.pi, f, g).tolist()


# ---------------------------------------------------------------------------
# Hom-associative


def test_identity_twist_recovers_end(rng):
    H = build_hom_operad([[1, 0], [0, 1]])
    E = end_operad(2)
    for n in (1, 2, 3):
        assert H.dim(n) == E.dim(n)
    f, g = E.random_element(2, rng), E.random_element(3, rng)
    for i in (1, 2):
        assert H.compose(f.data, 2, i, g.data, 3).tolist() == E.compose(f.data, 2, i, g.data, 3).tolist()


def test_zero_twist_gives_full_space():
    H = build_hom_operad([[0, 0], [0, 0]])
    for n in (1, 2, 3):
        assert H.dim(n) == 2 ** (n + 1)


def test_degenerate_twist_on_dual_numbers():
    """``alpha = diag(1, 0)`` preserves the product but breaks the twisted associativity."""
    alpha = as_object_array([[1, 0], [0, 0]])
    H = build_hom_operad(alpha)
    t = C.a2().product_tensor()
    pi = hom_multiplication(H, t)
    assert not hom_associative(t, alpha)
    assert not is_multiplication(pi)


def test_non_member_product_is_rejected():
    alpha = as_object_array([[0, 1], [1, 0]])
    H = build_hom_operad(alpha)
    with pytest.raises(AlphaNotCompatible):
        hom_multiplication(H, C.a2().product_tensor())
    with pytest.raises(AlphaNotCompatible):
        Element(H, 2, C.a2().product_tensor())
    with pytest.raises(MalformedSpec):
        build_hom_operad([[1, 0]])


def test_reference_hom_structure():
    alpha, t = C.hom_a2_tensors()
    assert hom_associative(t, alpha)
    assert is_multiplication(C.hom_a2().pi.pi)
    H = C.hom_a2().operad
    assert [H.dim(n) for n in (1, 2, 3)] == [2, 4, 8]


def test_members_are_closed_under_composition(rng):
    H = C.hom_a2().operad
    for m, n in itertools.product((1, 2, 3), (1, 2)):
        f, g = H.random_element(m, rng), H.random_element(n, rng)
        for i in range(1, m + 1):
            assert H.contains(partial_compose(f, i, g).data, m + n - 1)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-1, 1), min_size=8, max_size=8))
def test_multiplication_iff_hom_associative(entries):
    alpha, _ = C.hom_a2_tensors()
    H = build_hom_operad(alpha)
    t = as_object_array(entries, (2, 2, 2))
    if not H.contains(t, 2):
        return
    assert is_multiplication(hom_multiplication(H, t)) == hom_associative(t, alpha)


def test_hom_operations_match_explicit_formulas(rng):
    cfg = C.hom_a2()
    pi, op = cfg.pi, cfg.operad
    for n in (1, 2, 3):
        f = op.random_element(n, rng)
        assert delta_pi(pi, f).data.tolist() == hom_delta_explicit(pi.pi, f).tolist()
        assert theta(pi, f).data.tolist() == hom_theta_explicit(pi.pi, f).tolist()
        assert D(pi, f).data.tolist() == hom_d_lambda_explicit(pi.pi, 1, f).tolist()
    for m, n in itertools.product((1, 2), repeat=2):
        f, g = op.random_element(m, rng), op.random_element(n, rng)
        assert cup_product(pi, f, g).data.tolist() == hom_cup_explicit(pi.pi, f, g).tolist()
        assert fn_bracket(pi, f, g).data.tolist() == hom_fn_explicit(pi.pi, f, g).tolist()
        assert derived_bracket(pi, f, g).data.tolist() == hom_derived_explicit(pi.pi, f, g).tolist()
