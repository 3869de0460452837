"""Semidirect-product, Froelicher-Nijenhuis and derived brackets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import InstanceMismatch, WrongArity
from .kernel import Multiplication, cup_bracket, delta_pi, theta
from .operad import Element, gv_bracket, iota, sign


@dataclass(frozen=True, eq=False)
class SemidirectPair:
    """``(upper, lower)`` in ``P_{m+1} + P_m``; its degree is ``m``."""

    upper: Element
    lower: Element

    def __post_init__(self):
        if self.upper.operad != self.lower.operad:
            raise InstanceMismatch("pair components live in different operads")
        if self.upper.arity != self.lower.arity + 1:
            raise WrongArity(f"upper arity {self.upper.arity} must exceed lower arity {self.lower.arity} by one")

    @property
    def degree(self) -> int:
        return self.lower.arity

    def __add__(self, other: "SemidirectPair") -> "SemidirectPair":
        return SemidirectPair(self.upper + other.upper, self.lower + other.lower)

    def __sub__(self, other: "SemidirectPair") -> "SemidirectPair":
        return SemidirectPair(self.upper - other.upper, self.lower - other.lower)

    def __rmul__(self, c) -> "SemidirectPair":
        return SemidirectPair(c * self.upper, c * self.lower)

    def __eq__(self, other) -> bool:
        return isinstance(other, SemidirectPair) and self.upper == other.upper and self.lower == other.lower

    def is_zero(self) -> bool:
        return self.upper.is_zero() and self.lower.is_zero()


def semidirect_bracket(pi: Element | Multiplication, a: SemidirectPair, b: SemidirectPair) -> SemidirectPair:
    """Bracket on ``P_{.+1} + P_.`` combining the GV and cup brackets."""
    m, n = a.degree, b.degree
    upper = gv_bracket(a.upper, b.upper)
    lower = cup_bracket(pi, a.lower, b.lower) + iota(a.upper, b.lower) - sign(m * n) * iota(b.upper, a.lower)
    return SemidirectPair(upper, lower)


def fn_bracket(pi: Element | Multiplication, f: Element, g: Element) -> Element:
    """Froelicher-Nijenhuis bracket from its definitional sum."""
    m, n = f.arity, g.arity
    return (
        cup_bracket(pi, f, g)
        + sign(m) * iota(delta_pi(pi, f), g)
        - sign((m + 1) * n) * iota(delta_pi(pi, g), f)
    )


def derived_bracket(
    pi: Element | Multiplication,
    f: Element,
    g: Element,
    theta_map: Callable[[Element], Element] | None = None,
) -> Element:
    """Derived bracket ``[f,g]_pi + iota_{theta f} g - (-1)^{mn} iota_{theta g} f``.

    ``theta_map`` replaces the default ``theta`` of ``pi``; the tree operad
    uses this hook with its own theta.
    """
    th = theta_map if theta_map is not None else (lambda h: theta(pi, h))
    m, n = f.arity, g.arity
    return cup_bracket(pi, f, g) + iota(th(f), g) - sign(m * n) * iota(th(g), f)


def theta_embedding(pi: Element | Multiplication, f: Element) -> SemidirectPair:
    """``f -> ((-1)^m delta_pi f, f)``, a homomorphism from the FN bracket."""
    return SemidirectPair(sign(f.arity) * delta_pi(pi, f), f)


def phi_embedding(pi: Element | Multiplication, f: Element) -> SemidirectPair:
    """``f -> (theta f, f)``, a homomorphism from the derived bracket."""
    return SemidirectPair(theta(pi, f), f)


def psi_map(pi: Element | Multiplication, f: Element) -> Element:
    """``Psi_n(f) = (-1)^{n+1} delta_pi(f)``."""
    return sign(f.arity + 1) * delta_pi(pi, f)


def upsilon_map(pi: Element | Multiplication, f: Element) -> Element:
    """``Upsilon_n(f) = (-1)^n theta(f)``."""
    return sign(f.arity) * theta(pi, f)


def rho_action(f: Element, phi: Element) -> Element:
    """Action of the GV algebra on the cup algebra, ``rho(f) phi = iota_f phi``."""
    return iota(f, phi)


__all__ = [
    "SemidirectPair",
    "semidirect_bracket",
    "fn_bracket",
    "derived_bracket",
    "theta_embedding",
    "phi_embedding",
    "psi_map",
    "upsilon_map",
    "rho_action",
]
