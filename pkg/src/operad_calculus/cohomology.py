"""Coboundary matrices and cohomology dimensions over the rationals.

A :class:`ComplexHandle` names one of the cochain complexes (Hochschild,
representation, preserving map, Nijenhuis, Rota-Baxter, averaging, trivial
coefficients) together with the data it needs.  The degree-``n`` matrix has
one column per basis element of ``P_n``, holding the coordinates of its image
in ``P_{n+1}``.  The whole basis is pushed through the differential as one
batched element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable

from .errors import ComplexBroken, DegreeOutOfRange, MissingWeight, NotOperatorOfKind
from .exact import RatMatrix, matrix_rank
from .kernel import D, Multiplication, Representation, as_multiplication, delta_pi, delta_rep, preserves_multiplication
from .operad import Element, OperadInstance
from .operators import Kind, classify, operator_coboundary


class ComplexKind(str, Enum):
    HOCHSCHILD = "hochschild"
    REPRESENTATION = "representation"
    PRESERVING = "preserving"
    NIJENHUIS = "nijenhuis"
    ROTA_BAXTER = "rota_baxter"
    AVERAGING = "averaging"
    TRIVIAL_REP = "trivial_rep"

    @classmethod
    def parse(cls, value: "str | ComplexKind") -> "ComplexKind":
        if isinstance(value, ComplexKind):
            return value
        return cls(value.replace("-", "_").lower())


@dataclass(eq=False)
class ComplexHandle:
    """A validated cochain complex ``(P_., d)``."""

    kind: ComplexKind
    pi: Multiplication
    params: dict[str, Any] = field(default_factory=dict)
    degree_max: int | None = None

    def __post_init__(self):
        self.kind = ComplexKind.parse(self.kind)
        self.pi = as_multiplication(self.pi)
        p = self.params
        k = self.kind
        if k is ComplexKind.REPRESENTATION:
            rep = p.get("rep")
            if not isinstance(rep, Representation):
                p["rep"] = Representation(self.pi, *rep)
        elif k is ComplexKind.PRESERVING:
            if not preserves_multiplication(self.pi, p["phi"]):
                raise NotOperatorOfKind("phi does not preserve the multiplication")
        elif k in (ComplexKind.NIJENHUIS, ComplexKind.ROTA_BAXTER, ComplexKind.AVERAGING):
            if k is ComplexKind.ROTA_BAXTER and p.get("weight") is None:
                raise MissingWeight("the Rota-Baxter complex needs a weight")
            verdict = classify(self.pi, p["operator"], Kind.parse(k.value), p.get("weight"))
            if not verdict.holds:
                raise NotOperatorOfKind(f"operator is not a {k.value} element")
        if self.degree_max is None:
            self.degree_max = default_degree_max(self.kind, self.pi.operad)

    @property
    def space(self) -> OperadInstance:
        """The operad whose arity-n part is the degree-n cochain space."""
        if self.kind is ComplexKind.AVERAGING:
            from .tree_operad import tree_operad

            return tree_operad(self.pi.operad)
        return self.pi.operad

    def differential(self) -> Callable[[Element], Element]:
        pi, p, k = self.pi, self.params, self.kind
        if k is ComplexKind.HOCHSCHILD:
            return lambda f: delta_pi(pi, f)
        if k is ComplexKind.TRIVIAL_REP:
            return lambda f: D(pi, f)
        if k is ComplexKind.REPRESENTATION:
            return lambda f: delta_rep(pi, p["rep"], f)
        if k is ComplexKind.PRESERVING:
            return lambda f: operator_coboundary(pi, Kind.PRESERVING, p["phi"], f)
        kind = Kind.parse(k.value)
        return lambda f: operator_coboundary(pi, kind, p["operator"], f, p.get("weight"))


def default_degree_max(kind: ComplexKind, operad: OperadInstance) -> int:
    d = getattr(operad, "d", 2)
    if ComplexKind.parse(kind) is ComplexKind.AVERAGING:
        return 3
    return 4 if d <= 2 else 3


def differential_matrix(space: OperadInstance, fn: Callable[[Element], Element], n: int, target: int | None = None) -> RatMatrix:
    """Matrix of a linear map ``P_n -> P_target`` (default ``n + 1``) in the coordinate bases."""
    target = n + 1 if target is None else target
    basis = Element(space, n, space.basis(n), check=False)
    image = fn(basis)
    if image.arity != target:
        raise DegreeOutOfRange(f"map sends arity {n} to {image.arity}, expected {target}")
    rows = space.dim(target)
    cols = space.dim(n)
    coords = space.coords(image.data, target).reshape(cols, rows)
    entries = tuple(Fraction(coords[c, r]) for r in range(rows) for c in range(cols))
    return RatMatrix(rows, cols, entries)


def coboundary_matrix(h: ComplexHandle, n: int) -> RatMatrix:
    """Matrix of the degree-n differential in the coordinate bases."""
    if not 1 <= n <= h.degree_max:
        raise DegreeOutOfRange(f"degree {n} outside 1..{h.degree_max}")
    return differential_matrix(h.space, h.differential(), n)


def cohomology_dims(h: ComplexHandle) -> list[int]:
    """Dimensions of ``H^1 .. H^{degree_max - 1}``."""
    if h.degree_max < 2:
        raise DegreeOutOfRange("degree_max must be at least 2")
    mats = {n: coboundary_matrix(h, n) for n in range(1, h.degree_max + 1)}
    for n in range(1, h.degree_max):
        if not (mats[n + 1] @ mats[n]).is_zero():
            raise ComplexBroken(f"d_{n + 1} d_{n} is not zero for the {h.kind.value} complex")
    ranks = {n: matrix_rank(mats[n]) for n in mats}
    dims = []
    for n in range(1, h.degree_max):
        kernel = mats[n].cols - ranks[n]
        dims.append(kernel - (ranks[n - 1] if n > 1 else 0))
    return dims


def report(h: ComplexHandle) -> dict:
    dims = cohomology_dims(h)
    return {"complex": h.kind.value, "dims": dims, "degrees": list(range(1, len(dims) + 1))}


__all__ = [
    "ComplexKind",
    "ComplexHandle",
    "coboundary_matrix",
    "differential_matrix",
    "cohomology_dims",
    "default_degree_max",
    "report",
]
