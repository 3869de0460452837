"""Arity-one elements: Nijenhuis, Rota-Baxter, averaging and preserving maps.

Each kind has a defining identity whose residual is reported exactly, and a
Maurer-Cartan characterization in a suitable graded Lie algebra.  Induced
multiplications, representations and coboundaries are built by separate
functions that validate their input first.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .brackets import derived_bracket, fn_bracket
from .errors import MissingWeight, NotOperatorOfKind, WrongArity
from .kernel import (
    Multiplication,
    Representation,
    _pi,
    d_phi,
    d_weighted,
    delta_pi,
    delta_rep,
    preserving_defect,
    preserving_mc,
)
from .operad import Element, is_multiplication, partial_compose


class Kind(str, Enum):
    NIJENHUIS = "nijenhuis"
    ROTA_BAXTER = "rota_baxter"
    AVERAGING = "averaging"
    PRESERVING = "preserving"

    @classmethod
    def parse(cls, value: "str | Kind") -> "Kind":
        if isinstance(value, Kind):
            return value
        return cls(value.replace("-", "_").lower())


@dataclass(frozen=True, eq=False)
class OperatorVerdict:
    """Outcome of :func:`classify`.

    ``defects`` holds the residual of the defining identity; averaging
    elements have two residuals, one per equality.  ``holds`` is true exactly
    when every residual vanishes, and ``mc_holds`` records the independent
    Maurer-Cartan verdict.
    """

    kind: Kind
    holds: bool
    defects: tuple[Element, ...]
    weight: Fraction | None
    mc_holds: bool

    @property
    def defect(self) -> Element:
        return self.defects[0]


def _arity_one(T: Element) -> None:
    if T.arity != 1:
        raise WrongArity(f"operators have arity 1, got {T.arity}")


def nijenhuis_deformation_raw(pi: Element | Multiplication, N: Element) -> Element:
    """``pi o_1 N + pi o_2 N - N o_1 pi`` without validation."""
    p = _pi(pi)
    c = partial_compose
    return c(p, 1, N) + c(p, 2, N) - c(N, 1, p)


def nijenhuis_defect(pi: Element | Multiplication, N: Element) -> Element:
    _arity_one(N)
    p = _pi(pi)
    lhs = partial_compose(partial_compose(p, 2, N), 1, N)
    return lhs - partial_compose(N, 1, nijenhuis_deformation_raw(p, N))


def rota_baxter_defect(pi: Element | Multiplication, R: Element, lam) -> Element:
    _arity_one(R)
    p = _pi(pi)
    c = partial_compose
    inner = c(p, 1, R) + c(p, 2, R) + Fraction(lam) * p
    return c(c(p, 2, R), 1, R) - c(R, 1, inner)


def averaging_defects(pi: Element | Multiplication, r: Element) -> tuple[Element, Element]:
    _arity_one(r)
    p = _pi(pi)
    c = partial_compose
    lhs = c(c(p, 2, r), 1, r)
    return lhs - c(r, 1, c(p, 1, r)), lhs - c(r, 1, c(p, 2, r))


def nijenhuis_mc(pi: Element | Multiplication, N: Element) -> Element:
    return fn_bracket(pi, N, N)


def rota_baxter_mc(pi: Element | Multiplication, R: Element, lam) -> Element:
    return d_weighted(pi, lam, R) + Fraction(1, 2) * derived_bracket(pi, R, R)


def averaging_mc(pi: Element | Multiplication, r: Element):
    from .tree_operad import avg_derived_bracket, lift

    rt = lift(r)
    return avg_derived_bracket(pi, rt, rt)


def classify(pi: Element | Multiplication, T: Element, kind: str | Kind, weight=None) -> OperatorVerdict:
    """Check the defining identity of ``kind`` and its Maurer-Cartan form."""
    kind = Kind.parse(kind)
    _arity_one(T)
    lam = None
    if kind is Kind.ROTA_BAXTER:
        if weight is None:
            raise MissingWeight("a Rota-Baxter check needs a weight")
        lam = Fraction(weight)
        defects = (rota_baxter_defect(pi, T, lam),)
        mc_zero = rota_baxter_mc(pi, T, lam).is_zero()
    elif kind is Kind.NIJENHUIS:
        defects = (nijenhuis_defect(pi, T),)
        mc_zero = nijenhuis_mc(pi, T).is_zero()
    elif kind is Kind.AVERAGING:
        defects = averaging_defects(pi, T)
        mc_zero = averaging_mc(pi, T).is_zero()
    else:
        defects = (preserving_defect(pi, T),)
        mc_zero = preserving_mc(pi, T).is_zero()
    holds = all(d.is_zero() for d in defects)
    return OperatorVerdict(kind, holds, defects, lam, mc_zero)


def _require(pi, T, kind: Kind, weight=None) -> None:
    verdict = classify(pi, T, kind, weight)
    if not verdict.holds:
        raise NotOperatorOfKind(f"the operator is not a {kind.value.replace('_', '-')} element")


def rb_complement(R: Element, lam) -> Element:
    """``-lambda 1 - R``; a Rota-Baxter element of the same weight when R is one."""
    _arity_one(R)
    return -(Fraction(lam) * R.operad.unit()) - R


def power(N: Element, k: int) -> Element:
    """``N^k = N o_1 N^{k-1}`` with ``N^0`` the unit."""
    _arity_one(N)
    out = N.operad.unit()
    for _ in range(k):
        out = partial_compose(N, 1, out)
    return out


def nijenhuis_deformation(pi: Element | Multiplication, N: Element) -> Element:
    """The deformed multiplication ``pi_N``; equals ``delta_pi(N)``."""
    _require(pi, N, Kind.NIJENHUIS)
    piN = nijenhuis_deformation_raw(pi, N)
    if piN != delta_pi(pi, N):
        raise AssertionError("pi_N differs from delta_pi(N)")
    if not is_multiplication(piN):
        raise AssertionError("pi_N is not a multiplication")
    if partial_compose(N, 1, piN) != partial_compose(partial_compose(_pi(pi), 2, N), 1, N):
        raise AssertionError("N is not a morphism from pi_N to pi")
    return piN


def nijenhuis_tower(pi: Element | Multiplication, N: Element, kmax: int) -> list[tuple[Element, Element]]:
    """Powers ``N^k`` and deformations ``pi_{N^k}`` for ``0 <= k <= kmax``.

    Every statement of the tower theorem is checked for all pairs
    ``0 <= k, l <= kmax`` and an AssertionError is raised on failure.
    """
    _require(pi, N, Kind.NIJENHUIS)
    p = _pi(pi)
    powers = [power(N, k) for k in range(2 * kmax + 1)]
    deformed = [nijenhuis_deformation_raw(p, P) for P in powers]
    c = partial_compose
    for k in range(kmax + 1):
        Nk = powers[k]
        if not nijenhuis_defect(p, Nk).is_zero():
            raise AssertionError(f"N^{k} is not Nijenhuis")
        for l in range(kmax + 1):
            base = deformed[l]
            if not nijenhuis_defect(base, Nk).is_zero():
                raise AssertionError(f"N^{k} is not Nijenhuis for pi_(N^{l})")
            if nijenhuis_deformation_raw(base, Nk) != deformed[k + l]:
                raise AssertionError(f"(pi_(N^{l}))_(N^{k}) differs from pi_(N^{k + l})")
            if not nijenhuis_defect(p, Nk + powers[l]).is_zero():
                raise AssertionError(f"N^{k} + N^{l} is not Nijenhuis")
            if c(c(base, 2, Nk), 1, Nk) != c(Nk, 1, deformed[k + l]):
                raise AssertionError(f"tower identity fails at k={k}, l={l}")
    return [(powers[k], deformed[k]) for k in range(kmax + 1)]


def rb_deformations(pi: Element | Multiplication, R: Element, lam) -> tuple[Element, Representation]:
    """``pi_R`` and the representation ``(pil, pir)`` it carries."""
    _require(pi, R, Kind.ROTA_BAXTER, lam)
    p = _pi(pi)
    c = partial_compose
    lam = Fraction(lam)
    piR = c(p, 1, R) + c(p, 2, R) + lam * p
    pil = c(p, 1, R) - c(R, 1, p)
    pir = c(p, 2, R) - c(R, 1, p)
    if not is_multiplication(piR):
        raise AssertionError("pi_R is not a multiplication")
    if c(R, 1, piR) != c(c(p, 2, R), 1, R):
        raise AssertionError("R is not a morphism from pi_R to pi")
    return piR, Representation(piR, pil, pir)


def averaging_products(pi: Element | Multiplication, r: Element) -> tuple[Element, Element]:
    """``(pi o_2 r, pi o_1 r)``, the two multiplications split off by ``r``."""
    _require(pi, r, Kind.AVERAGING)
    p = _pi(pi)
    c = partial_compose
    left, right = c(p, 2, r), c(p, 1, r)
    for prod in (left, right):
        if not is_multiplication(prod):
            raise AssertionError("an averaging product is not a multiplication")
    for lhs, rhs in diassociative_relations(left, right):
        if lhs != rhs:
            raise AssertionError("averaging products fail a compatibility")
    return left, right


def diassociative_relations(left: Element, right: Element) -> list[tuple[Element, Element]]:
    """The three compatibilities between the split products, as pairs."""
    c = partial_compose
    return [
        (c(left, 2, left), c(left, 2, right)),
        (c(left, 1, right), c(right, 2, left)),
        (c(right, 1, right), c(right, 1, left)),
    ]


def operator_coboundary(pi: Element | Multiplication, kind: str | Kind, T: Element, f, weight=None):
    """Coboundary attached to an operator of the given kind.

    Nijenhuis: ``[N, f]_FN``.  Rota-Baxter: ``-(d_lambda f + [R, f]_D)``.
    Preserving: ``D_phi``.  Averaging elements act on the tree operad, so
    ``f`` must be a tree element there.
    """
    kind = Kind.parse(kind)
    _require(pi, T, kind, weight)
    if kind is Kind.NIJENHUIS:
        return fn_bracket(pi, T, f)
    if kind is Kind.ROTA_BAXTER:
        return -(d_weighted(pi, weight, f) + derived_bracket(pi, T, f))
    if kind is Kind.PRESERVING:
        return d_phi(pi, T, f)
    from .tree_operad import d_r_avg

    return d_r_avg(pi, T, f)


def rota_baxter_coboundary_via_rep(pi, R: Element, lam, f: Element) -> Element:
    """``-delta`` of ``pi_R`` with coefficients in its induced representation."""
    piR, rep = rb_deformations(pi, R, lam)
    return -delta_rep(piR, rep, f)


__all__ = [
    "Kind",
    "OperatorVerdict",
    "classify",
    "rb_complement",
    "power",
    "nijenhuis_deformation",
    "nijenhuis_tower",
    "rb_deformations",
    "averaging_products",
    "diassociative_relations",
    "operator_coboundary",
    "rota_baxter_coboundary_via_rep",
    "nijenhuis_defect",
    "rota_baxter_defect",
    "averaging_defects",
    "nijenhuis_mc",
    "rota_baxter_mc",
    "averaging_mc",
]
