"""The operad ``Q_n = Hom(k[Y_n], P_n)`` and its averaging derived bracket.

A tree element of arity ``n`` is stored as an array whose first instance axis
runs over ``enumerate_trees(n)`` and whose remaining axes hold one payload of
the underlying operad per tree.  Compositions gather the restricted trees
with ``np.take`` and then compose all payloads in a single batched call.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .brackets import derived_bracket
from .errors import InstanceMismatch, NotOperatorOfKind, WrongArity
from .exact import zeros
from .kernel import Multiplication, _pi
from .operad import Element, OperadInstance, sign
from .trees import enumerate_trees, restriction, restriction_indices, tree_index


class TreeOperad(OperadInstance):
    """``Q`` built over an underlying operad instance."""

    def __init__(self, base: OperadInstance):
        self.base = base
        self.name = f"Q[{base.name}]"

    def key(self):
        return ("trees", self.base.key())

    def shape(self, n: int) -> tuple[int, ...]:
        return (len(enumerate_trees(n)),) + self.base.shape(n)

    def _tree_axis(self, n: int) -> int:
        return -(len(self.base.shape(n)) + 1)

    def compose(self, f, m, i, g, n):
        outer, inner = restriction_indices(m, i, n)
        fs = np.take(f, outer, axis=self._tree_axis(m))
        gs = np.take(g, inner, axis=self._tree_axis(n))
        return self.base.compose(fs, m, i, gs, n)

    def unit_data(self) -> np.ndarray:
        return self.base.unit_data()[None]

    def coords(self, data, n):
        c = self.base.coords(data, n)
        return c.reshape(c.shape[:-2] + (c.shape[-2] * c.shape[-1],))

    def from_coords(self, coords, n):
        trees = len(enumerate_trees(n))
        c = coords.reshape(coords.shape[:-1] + (trees, self.base.dim(n)))
        return self.base.from_coords(c, n)

    def dim(self, n: int) -> int:
        return len(enumerate_trees(n)) * self.base.dim(n)

    def contains(self, data, n):
        if tuple(data.shape[-len(self.shape(n)):]) != self.shape(n):
            return False
        return self.base.contains(data, n)

    def random_data(self, n, rng):
        return np.stack([self.base.random_data(n, rng) for _ in enumerate_trees(n)])


@lru_cache(maxsize=None)
def tree_operad(base: OperadInstance) -> TreeOperad:
    return TreeOperad(base)


def lift(r: Element) -> Element:
    """``r~``: the arity-one tree element sending the single tree to ``r``."""
    if r.arity != 1:
        raise WrongArity("only arity-one elements lift to Q_1")
    data = np.expand_dims(r.data, -len(r.operad.shape(1)) - 1)
    return Element(tree_operad(r.operad), 1, data, check=False)


def constant(p: Element) -> Element:
    """Tree element taking the value ``p`` on every tree."""
    Q = tree_operad(p.operad)
    trees = len(enumerate_trees(p.arity))
    axis = -len(p.operad.shape(p.arity)) - 1
    data = np.repeat(np.expand_dims(p.data, axis), trees, axis=axis)
    return Element(Q, p.arity, data, check=False)


def pi_q(pi: Element | Multiplication) -> Element:
    """``pi^Q``: the multiplication on both trees of ``Y_2``."""
    return constant(_pi(pi))


def table(F: Element) -> dict[str, Element]:
    """Per-tree payloads keyed by the canonical tree string."""
    base = F.operad.base
    axis = F.data.ndim - len(base.shape(F.arity)) - 1
    return {
        str(t): Element(base, F.arity, np.take(F.data, k, axis=axis), check=False)
        for k, t in enumerate(enumerate_trees(F.arity))
    }


def from_table(base: OperadInstance, n: int, values: dict) -> Element:
    """Tree element from a (total) mapping tree -> payload element."""
    keyed = {str(k): v for k, v in values.items()}
    payloads = []
    for t in enumerate_trees(n):
        v = keyed.get(str(t))
        if v is None:
            raise WrongArity(f"missing value for tree {t}")
        if v.operad != base or v.arity != n:
            raise InstanceMismatch("payload does not live in the base operad at this arity")
        payloads.append(v.data)
    return Element(tree_operad(base), n, np.stack(payloads), check=False)


@lru_cache(maxsize=None)
def _theta_cases(m: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Trees of ``Y_{m+1}`` falling under each case, with their source trees in ``Y_m``.

    Case one: the outer restriction for slot 2 is the right comb.  Case two:
    the outer restriction for slot 1 is the left comb.
    """
    y2 = enumerate_trees(2)
    right, left = y2[0], y2[1]
    idx = tree_index(m)
    first_t, first_src, second_t, second_src = [], [], [], []
    for k, t in enumerate(enumerate_trees(m + 1)):
        if restriction(t, 2, 2, m, "outer") == right:
            first_t.append(k)
            first_src.append(idx[restriction(t, 2, 2, m, "inner")])
        elif restriction(t, 2, 1, m, "outer") == left:
            second_t.append(k)
            second_src.append(idx[restriction(t, 2, 1, m, "inner")])
    return tuple(first_t), tuple(first_src), tuple(second_t), tuple(second_src)


def theta_q(pi: Element | Multiplication, F: Element) -> Element:
    """``theta^Q``, extended by zero on trees outside both cases."""
    Q = F.operad
    if not isinstance(Q, TreeOperad):
        raise InstanceMismatch("theta_q expects a tree element")
    base = Q.base
    p = _pi(pi)
    if p.operad != base:
        raise InstanceMismatch("multiplication and tree element use different operads")
    m = F.arity
    first_t, first_src, second_t, second_src = _theta_cases(m)
    taxis_in = Q._tree_axis(m)
    case1 = sign(m) * base.compose(p.data, 2, 2, np.take(F.data, first_src, axis=taxis_in), m)
    case2 = -base.compose(p.data, 2, 1, np.take(F.data, second_src, axis=taxis_in), m)
    # assemble in tree order; trees in neither case get zero
    taxis = Q._tree_axis(m + 1)
    batch = np.broadcast_shapes(case1.shape[: case1.ndim + taxis], case2.shape[: case2.ndim + taxis])
    out = zeros(batch + Q.shape(m + 1))
    out_t = np.moveaxis(out, taxis, 0)
    if first_t:
        out_t[list(first_t)] = np.moveaxis(case1, taxis, 0)
    if second_t:
        out_t[list(second_t)] = np.moveaxis(case2, taxis, 0)
    return Element(Q, m + 1, out, check=False)


def avg_derived_bracket(pi: Element | Multiplication, F: Element, G: Element) -> Element:
    """``[[F, G]]_D = [F, G]_{pi^Q} + iota_{theta F} G - (-1)^{mn} iota_{theta G} F``."""
    if F.operad != G.operad:
        raise InstanceMismatch("tree elements over different operads")
    return derived_bracket(pi_q(pi), F, G, theta_map=lambda H: theta_q(pi, H))


def d_r_avg(pi: Element | Multiplication, r: Element, F: Element) -> Element:
    """``d_r(F) = -[[r~, F]]_D`` for an averaging element ``r``."""
    from .operators import averaging_defects

    if not all(d.is_zero() for d in averaging_defects(pi, r)):
        raise NotOperatorOfKind("r is not an averaging element")
    return -avg_derived_bracket(pi, lift(r), F)
