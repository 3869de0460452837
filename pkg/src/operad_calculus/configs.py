"""Named test configurations shared by the self-test and the test suite.

Each :class:`Config` bundles an operad instance, a multiplication on it, and
the arity-one elements known to be Nijenhuis, Rota-Baxter, averaging or
multiplication-preserving there.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .endomorphism import AlgebraSpec, build_endomorphism_operad, compose_multilinear
from .exact import as_object_array, zeros
from .kernel import Multiplication
from .operad import Element, OperadInstance, seeded_rng
from .variants import build_hom_operad, dendriform_product, hom_multiplication

WEIGHTS = (0, 1, -2)


def a1() -> AlgebraSpec:
    """The ground field, ``e . e = e``."""
    return AlgebraSpec.from_table(["e"], {("e", "e"): {"e": 1}})


def a2() -> AlgebraSpec:
    """Dual numbers ``k[x]/(x^2)`` on the basis ``(e, x)``."""
    return AlgebraSpec.from_table(["e", "x"], {("e", "e"): {"e": 1}, ("e", "x"): {"x": 1}, ("x", "e"): {"x": 1}})


def random_associative_dim2(seed: int | str = 0) -> AlgebraSpec:
    """``A2`` transported along a seeded invertible integer change of basis."""
    rng = seeded_rng(seed, "random_associative_dim2")
    while True:
        a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
        if a * d - b * c in (1, -1):
            break
    P = as_object_array([[a, b], [c, d]])
    det = Fraction(a * d - b * c)
    Pinv = as_object_array([[d / det, -b / det], [-c / det, a / det]])
    t = a2().product_tensor()
    out = zeros((2, 2, 2))
    for c_, a_, b_ in itertools.product(range(2), repeat=3):
        out[c_, a_, b_] = sum(
            Pinv[c_, k] * t[k, i, j] * P[i, a_] * P[j, b_] for k, i, j in itertools.product(range(2), repeat=3)
        )
    return AlgebraSpec.from_tensor(["u", "v"], out)


def matrix_element(operad: OperadInstance, rows) -> Element:
    """Arity-one element whose tensor is ``rows`` (output index first)."""
    return Element(operad, 1, as_object_array(rows))


@dataclass(eq=False)
class Config:
    name: str
    pi: Multiplication
    nijenhuis: list[Element] = field(default_factory=list)
    rota_baxter: list[tuple[Element, int]] = field(default_factory=list)
    averaging: list[Element] = field(default_factory=list)
    preserving: list[Element] = field(default_factory=list)

    @property
    def operad(self) -> OperadInstance:
        return self.pi.operad


def _scalar_family(name: str, pi: Element) -> Config:
    """Operators available on every multiplication: multiples of the unit."""
    one = pi.operad.unit()
    return Config(
        name,
        Multiplication(pi),
        nijenhuis=[one, 3 * one],
        rota_baxter=[(-lam * one, lam) for lam in WEIGHTS],
        averaging=[one],
        preserving=[one],
    )


@lru_cache(maxsize=None)
def end_a1() -> Config:
    _, pi = build_endomorphism_operad(a1())
    return _scalar_family("A1", pi)


@lru_cache(maxsize=None)
def end_a2() -> Config:
    op, pi = build_endomorphism_operad(a2())
    cfg = _scalar_family("A2", pi)
    N = matrix_element(op, [[0, 0], [0, 1]])
    R = matrix_element(op, [[0, 0], [1, 0]])
    cfg.nijenhuis.append(N)
    cfg.rota_baxter.append((R, 0))
    cfg.averaging.append(R)
    cfg.preserving.append(matrix_element(op, [[1, 0], [0, 0]]))
    return cfg


@lru_cache(maxsize=None)
def end_random2(seed: int | str = 0) -> Config:
    _, pi = build_endomorphism_operad(random_associative_dim2(seed))
    return _scalar_family(f"random-dim2[{seed}]", pi)


def dendriform_d1_tensors() -> tuple[np.ndarray, np.ndarray]:
    """``a < b = ab`` and ``a > b = 0`` on the ground field."""
    prec = zeros((1, 1, 1))
    prec[0, 0, 0] = 1
    return prec, zeros((1, 1, 1))


def dendriform_d2_tensors() -> tuple[np.ndarray, np.ndarray]:
    """Split ``k x k`` along the weight ``-1`` Rota-Baxter projection onto the first factor.

    ``a < b = a R(b) - ab`` and ``a > b = R(a) b``.
    """
    mul = zeros((2, 2, 2))
    mul[0, 0, 0] = 1
    mul[1, 1, 1] = 1
    R = zeros((2, 2))
    R[0, 0] = 1
    prec = compose_multilinear(mul, 2, 2, R, 1) - mul
    succ = compose_multilinear(mul, 2, 1, R, 1)
    return prec, succ


@lru_cache(maxsize=None)
def dendriform_d1() -> Config:
    return _scalar_family("dendriform d=1", dendriform_product(*dendriform_d1_tensors()))


@lru_cache(maxsize=None)
def dendriform_d2() -> Config:
    return _scalar_family("dendriform d=2", dendriform_product(*dendriform_d2_tensors()))


def hom_a2_tensors() -> tuple[np.ndarray, np.ndarray]:
    """Twist ``alpha = diag(1, -1)`` and the product ``e.e = e``, ``e.x = x.e = -x``."""
    alpha = zeros((2, 2))
    alpha[0, 0] = 1
    alpha[1, 1] = -1
    t = zeros((2, 2, 2))
    t[0, 0, 0] = 1
    t[1, 0, 1] = -1
    t[1, 1, 0] = -1
    return alpha, t


@lru_cache(maxsize=None)
def hom_a2() -> Config:
    alpha, t = hom_a2_tensors()
    H = build_hom_operad(alpha)
    cfg = _scalar_family("Hom A2", hom_multiplication(H, t))
    cfg.preserving.append(Element(H, 1, alpha))
    return cfg


def differential_configs() -> list[Config]:
    """The configurations on which every differential is checked to square to zero."""
    return [end_a1(), end_a2(), dendriform_d1(), hom_a2()]


__all__ = [
    "Config",
    "WEIGHTS",
    "a1",
    "a2",
    "random_associative_dim2",
    "matrix_element",
    "end_a1",
    "end_a2",
    "end_random2",
    "dendriform_d1",
    "dendriform_d2",
    "dendriform_d1_tensors",
    "dendriform_d2_tensors",
    "hom_a2",
    "hom_a2_tensors",
    "differential_configs",
]
