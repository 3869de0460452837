"""Calculus of an operad with multiplication.

Everything here is generic over :class:`OperadInstance`: cup products and
brackets, the maps ``theta`` and ``d_lambda``, the Hochschild-type
coboundaries and maps preserving the multiplication.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidRepresentation, NotAMultiplication, NotOperatorOfKind, WrongArity
from .exact import zeros
from .operad import (
    Element,
    _same,
    _sum,
    gv_bracket,
    iota,
    is_multiplication,
    partial_compose,
    sign,
)


class Multiplication:
    """An arity-2 element ``pi`` with ``pi o_1 pi = pi o_2 pi`` (validated)."""

    __slots__ = ("pi",)

    def __init__(self, pi: Element):
        if isinstance(pi, Multiplication):
            pi = pi.pi
        if not is_multiplication(pi):
            raise NotAMultiplication("pi o_1 pi differs from pi o_2 pi")
        self.pi = pi

    @property
    def operad(self):
        return self.pi.operad

    def __repr__(self) -> str:
        return f"Multiplication({self.pi!r})"


def as_multiplication(pi: Element | Multiplication) -> Multiplication:
    return pi if isinstance(pi, Multiplication) else Multiplication(pi)


def _pi(pi: Element | Multiplication) -> Element:
    return pi.pi if isinstance(pi, Multiplication) else pi


def representation_defects(pi: Element | Multiplication, pil: Element, pir: Element) -> list[Element]:
    """Residuals of the three identities a representation must satisfy."""
    p = _pi(pi)
    for e in (pil, pir):
        _same(p, e)
        if e.arity != 2:
            raise WrongArity("representation components have arity 2")
    c = partial_compose
    return [
        c(pil, 1, p) - c(pil, 2, pil),
        c(pir, 1, pil) - c(pil, 2, pir),
        c(pir, 1, pir) - c(pir, 2, p),
    ]


class Representation:
    """A pair ``(pil, pir)`` compatible with a multiplication (validated)."""

    __slots__ = ("pi", "pil", "pir")

    def __init__(self, pi: Element | Multiplication, pil: Element, pir: Element):
        if not all(d.is_zero() for d in representation_defects(pi, pil, pir)):
            raise InvalidRepresentation("the pair fails the representation identities")
        self.pi = as_multiplication(pi)
        self.pil = pil
        self.pir = pir


def delta_pi(pi: Element | Multiplication, f: Element) -> Element:
    """``delta_pi(f) = -[pi, f]_GV``."""
    return -gv_bracket(_pi(pi), f)


def delta_rep(pi: Element | Multiplication, rep: Representation | tuple, f: Element) -> Element:
    """Coboundary of ``pi`` with coefficients in the representation ``rep``."""
    if isinstance(rep, tuple):
        rep = Representation(pi, *rep)
    p = _pi(pi)
    n = f.arity
    terms = [
        sign(n + 1) * partial_compose(rep.pir, 1, f),
        partial_compose(rep.pil, 2, f),
    ]
    for i in range(1, n + 1):
        terms.append(sign(i) * partial_compose(f, i, p))
    return _sum(terms, f.operad, n + 1)


def cup_product(pi: Element | Multiplication, f: Element, g: Element) -> Element:
    """``f cup g = (pi o_2 g) o_1 f``."""
    _same(f, g)
    return partial_compose(partial_compose(_pi(pi), 2, g), 1, f)


def cup_bracket(pi: Element | Multiplication, f: Element, g: Element) -> Element:
    """Graded commutator of the cup product; degrees equal arities."""
    m, n = f.arity, g.arity
    return cup_product(pi, f, g) - sign(m * n) * cup_product(pi, g, f)


def theta(pi: Element | Multiplication, f: Element) -> Element:
    """``theta(f) = -iota_f pi``."""
    return -iota(f, _pi(pi))


def d_weighted(pi: Element | Multiplication, lam: int | Fraction, f: Element) -> Element:
    """``d_lambda(f) = -lambda iota_pi f``."""
    if lam == 0:
        return Element(f.operad, f.arity + 1, zeros(f.batch_shape + f.operad.shape(f.arity + 1)), check=False)
    return (-Fraction(lam)) * iota(_pi(pi), f)


def D(pi: Element | Multiplication, f: Element) -> Element:
    """Coboundary with trivial coefficients, ``D = d_1``."""
    return -iota(_pi(pi), f)


def preserving_defect(pi: Element | Multiplication, phi: Element) -> Element:
    """``phi o_1 pi - (pi o_2 phi) o_1 phi``."""
    if phi.arity != 1:
        raise WrongArity("a preserving map has arity 1")
    p = _pi(pi)
    return partial_compose(phi, 1, p) - cup_product(p, phi, phi)


def preserving_mc(pi: Element | Multiplication, phi: Element) -> Element:
    """Maurer-Cartan expression ``D(phi) + 1/2 [phi, phi]_pi``."""
    if phi.arity != 1:
        raise WrongArity("a preserving map has arity 1")
    return D(pi, phi) + Fraction(1, 2) * cup_bracket(pi, phi, phi)


def preserves_multiplication(pi: Element | Multiplication, phi: Element) -> bool:
    holds = preserving_defect(pi, phi).is_zero()
    if holds != preserving_mc(pi, phi).is_zero():
        raise AssertionError("preserving identity and Maurer-Cartan form disagree")
    return holds


def d_phi(pi: Element | Multiplication, phi: Element, f: Element) -> Element:
    """``D_phi(f) = D(f) + [phi, f]_pi`` for a map preserving ``pi``."""
    if not preserves_multiplication(pi, phi):
        raise NotOperatorOfKind("phi does not preserve the multiplication")
    return D(pi, f) + cup_bracket(pi, phi, f)


def phi_representation(pi: Element | Multiplication, phi: Element) -> Representation:
    """The representation ``(pi o_1 phi, pi o_2 phi)`` induced by a preserving map."""
    p = _pi(pi)
    return Representation(pi, partial_compose(p, 1, phi), partial_compose(p, 2, phi))
