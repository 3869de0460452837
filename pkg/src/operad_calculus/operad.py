"""Nonsymmetric operads as computable objects, and their elements.

An :class:`OperadInstance` describes the coefficient spaces ``P_n`` as dense
object arrays of a fixed shape together with the partial compositions.  All
compositions are *batch transparent*: leading axes beyond the instance shape
are treated as independent copies and broadcast against each other.  That
makes it cheap to run an identity over every basis triple at once, and to
assemble coboundary matrices by pushing a whole basis through a differential.
"""

from __future__ import annotations

import hashlib
import math
import random
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Hashable

import numpy as np

from .errors import IndexOutOfRange, InstanceMismatch, WrongArity
from .exact import as_object_array, zeros

COEFF_RANGE = 3


def seeded_rng(seed: int | str, name: str) -> random.Random:
    """Deterministic generator for a (seed, test name) pair."""
    digest = hashlib.sha256(f"{seed}:{name}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def random_integer_array(shape: tuple[int, ...], rng: random.Random) -> np.ndarray:
    values = [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(math.prod(shape))]
    return as_object_array(values, shape)


class OperadInstance(ABC):
    """Partial-composition interface over dense coefficient arrays."""

    name: str = "operad"

    @abstractmethod
    def key(self) -> Hashable:
        """Identity of the instance; elements compose only under equal keys."""

    @abstractmethod
    def shape(self, n: int) -> tuple[int, ...]:
        """Array shape of one element of ``P_n``."""

    @abstractmethod
    def compose(self, f: np.ndarray, m: int, i: int, g: np.ndarray, n: int) -> np.ndarray:
        """Batch-transparent ``f o_i g`` on raw arrays (no validation)."""

    @abstractmethod
    def unit_data(self) -> np.ndarray:
        ...

    # Coordinates.  The default treats every array entry as a coordinate.

    def dim(self, n: int) -> int:
        return math.prod(self.shape(n))

    def coords(self, data: np.ndarray, n: int) -> np.ndarray:
        """Coordinates in the basis of ``P_n``; leading batch axes are kept."""
        nd = len(self.shape(n))
        batch = data.shape[: data.ndim - nd]
        return data.reshape(batch + (self.dim(n),))

    def from_coords(self, coords: np.ndarray, n: int) -> np.ndarray:
        batch = coords.shape[:-1]
        return as_object_array(coords).reshape(batch + self.shape(n))

    def basis(self, n: int) -> np.ndarray:
        """All basis elements of ``P_n`` stacked along a leading axis."""
        dim = self.dim(n)
        eye = zeros((dim, dim))
        for k in range(dim):
            eye[k, k] = 1
        return self.from_coords(eye, n)

    def contains(self, data: np.ndarray, n: int) -> bool:
        return tuple(data.shape[-len(self.shape(n)):]) == self.shape(n)

    def random_data(self, n: int, rng: random.Random) -> np.ndarray:
        return random_integer_array(self.shape(n), rng)

    # Conveniences returning Elements.

    def element(self, data, n: int, check: bool = True) -> "Element":
        arr = as_object_array(data)
        if tuple(arr.shape) != self.shape(n):
            arr = arr.reshape(self.shape(n))
        return Element(self, n, arr, check=check)

    def unit(self) -> "Element":
        return Element(self, 1, self.unit_data(), check=False)

    def zero(self, n: int) -> "Element":
        return Element(self, n, zeros(self.shape(n)), check=False)

    def random_element(self, n: int, rng: random.Random) -> "Element":
        return Element(self, n, self.random_data(n, rng), check=False)

    def basis_elements(self, n: int) -> list["Element"]:
        stacked = self.basis(n)
        return [Element(self, n, stacked[k], check=False) for k in range(stacked.shape[0])]

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, OperadInstance) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())


class Element:
    """An element of ``P_n``, possibly carrying leading batch axes.

    Arithmetic is exact and coefficientwise.  Elements are treated as
    immutable: no operation writes into ``data``.
    """

    __slots__ = ("operad", "arity", "data")

    def __init__(self, operad: OperadInstance, arity: int, data: np.ndarray, check: bool = True):
        if arity < 1:
            raise WrongArity(f"arity must be at least 1, got {arity}")
        if check and not operad.contains(data, arity):
            from .errors import AlphaNotCompatible

            raise AlphaNotCompatible(f"data is not an element of P_{arity} for {operad.name}")
        self.operad = operad
        self.arity = arity
        self.data = data

    @property
    def batch_shape(self) -> tuple[int, ...]:
        return self.data.shape[: self.data.ndim - len(self.operad.shape(self.arity))]

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected an Element, got {type(other).__name__}")
        if self.operad != other.operad:
            raise InstanceMismatch(f"{self.operad.name} vs {other.operad.name}")
        if self.arity != other.arity:
            raise WrongArity(f"cannot add arities {self.arity} and {other.arity}")

    def _new(self, data: np.ndarray) -> "Element":
        return Element(self.operad, self.arity, data, check=False)

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return self._new(self.data + other.data)

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return self._new(self.data - other.data)

    def __neg__(self) -> "Element":
        return self._new(-self.data)

    def __mul__(self, scalar: int | Fraction) -> "Element":
        if isinstance(scalar, Element) or isinstance(scalar, float):
            return NotImplemented
        if isinstance(scalar, Fraction) and scalar.denominator == 1:
            scalar = scalar.numerator
        if scalar == 0:
            return self._new(zeros(self.data.shape))
        if scalar == 1:
            return self
        return self._new(self.data * scalar)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(x != 0 for x in self.data.reshape(-1))

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        if self.operad != other.operad or self.arity != other.arity:
            return False
        try:
            a, b = np.broadcast_arrays(self.data, other.data)
        except ValueError:
            return False
        return bool((a == b).all())

    __hash__ = None  # type: ignore[assignment]

    def coords(self) -> list:
        return list(self.operad.coords(self.data, self.arity).reshape(-1))

    def flatten(self) -> list:
        return list(self.data.reshape(-1))

    def __repr__(self) -> str:
        return f"Element({self.operad.name}, arity={self.arity}, shape={self.data.shape})"


def _same(f: Element, g: Element) -> None:
    if not isinstance(f, Element) or not isinstance(g, Element):
        raise TypeError("expected Elements")
    if f.operad != g.operad:
        raise InstanceMismatch(f"{f.operad.name} vs {g.operad.name}")


def partial_compose(f: Element, i: int, g: Element) -> Element:
    """``f o_i g`` for ``1 <= i <= arity(f)``."""
    _same(f, g)
    if not 1 <= i <= f.arity:
        raise IndexOutOfRange(f"slot {i} outside 1..{f.arity}")
    data = f.operad.compose(f.data, f.arity, i, g.data, g.arity)
    return Element(f.operad, f.arity + g.arity - 1, data, check=False)


def _sum(terms: list[Element], operad: OperadInstance, arity: int) -> Element:
    if not terms:
        return operad.zero(arity)
    data = terms[0].data
    for t in terms[1:]:
        data = data + t.data
    return Element(operad, arity, data, check=False)


def contraction(f: Element, g: Element) -> Element:
    """``iota_g f``: every insertion of ``g`` into ``f`` with the Koszul sign."""
    _same(f, g)
    m, n = f.arity, g.arity
    terms = []
    for i in range(1, m + 1):
        term = partial_compose(f, i, g)
        terms.append(-term if ((i - 1) * (n - 1)) % 2 else term)
    return _sum(terms, f.operad, m + n - 1)


def iota(a: Element, b: Element) -> Element:
    """``iota_a b``, argument order matching the written symbol."""
    return contraction(b, a)


def sign(k: int) -> int:
    return -1 if k % 2 else 1


def gv_bracket(f: Element, g: Element) -> Element:
    """Gerstenhaber bracket; degrees are arity minus one."""
    m, n = f.arity - 1, g.arity - 1
    return iota(f, g) - sign(m * n) * iota(g, f)


def is_multiplication(pi: Element) -> bool:
    if pi.arity != 2:
        raise WrongArity(f"a multiplication has arity 2, got {pi.arity}")
    return partial_compose(pi, 1, pi) == partial_compose(pi, 2, pi)
