"""JSON file formats for algebras, operators and elements.

Algebra files
    ``{"dimension": d, "basis": [labels], "product": {"l1,l2": {"l3": "p/q"}}}``.
    A dendriform file has ``"left"`` and ``"right"`` tables instead of
    ``"product"``; a Hom-associative file adds ``"alpha": [[...]]``.
Operator files
    ``{"matrix": [[...]]}``.  The matrix acts on coordinate column vectors in
    the basis order of the algebra file: column ``j`` holds the image of the
    ``j``-th basis vector.
Element files
    ``{"flavor", "dimension", "basis", "arity", "coefficients"}`` where the
    coefficients list the payload tensor in C order (output index first,
    then inputs; dendriform payloads lead with the color index).  Hom
    element files also carry ``"alpha"``.

Rationals are written as ``"p"`` or ``"p/q"`` strings.  :func:`dumps` is
canonical, so emitting a parsed file reproduces it byte for byte.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np

from .endomorphism import end_operad
from .errors import InstanceMismatch, MalformedSpec, ParseError, WrongArity
from .exact import as_object_array, format_rational, parse_rational, zeros
from .operad import Element, OperadInstance
from .variants import DendriformOperad, HomOperad, build_dendriform_operad, build_hom_operad

FLAVORS = ("associative", "dendriform", "hom")


@dataclass(frozen=True, eq=False)
class AlgebraInput:
    """A parsed algebra file: the operad and the candidate product payload.

    The product is kept as a raw tensor so that a Hom product which is not
    alpha-multiplicative can still be reported on.
    """

    flavor: str
    basis: tuple[str, ...]
    operad: OperadInstance
    product: np.ndarray
    alpha: np.ndarray | None = None

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def candidate(self) -> Element:
        """The product as an element of ``P_2``; Hom non-members raise."""
        return Element(self.operad, 2, self.product, check=True)


# ---------------------------------------------------------------------------
# Reading


def load_json(path: str | Path) -> Any:
    text = Path(path).read_text(encoding="utf-8")
    return loads(text, str(path))


def loads(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _rational(value: Any, where: str):
    try:
        return parse_rational(value)
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}") from None


def _require(obj: Any, key: str, source: str) -> Any:
    if not isinstance(obj, dict):
        raise ParseError(f"{source}: expected a JSON object")
    if key not in obj:
        raise ParseError(f"{source}: missing field {key!r}")
    return obj[key]


def _basis(obj: dict, source: str) -> tuple[str, ...]:
    basis = _require(obj, "basis", source)
    if not isinstance(basis, list) or not all(isinstance(b, str) and b for b in basis):
        raise ParseError(f"{source}: field 'basis' must be a list of non-empty strings")
    for label in basis:
        if "," in label:
            raise MalformedSpec(f"{source}: basis label {label!r} contains a comma")
    dim = _require(obj, "dimension", source)
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise ParseError(f"{source}: field 'dimension' must be an integer")
    if dim < 1:
        raise MalformedSpec(f"{source}: dimension must be at least 1")
    if len(basis) != dim:
        raise MalformedSpec(f"{source}: dimension {dim} but {len(basis)} basis labels")
    if len(set(basis)) != len(basis):
        raise MalformedSpec(f"{source}: basis labels must be distinct")
    return tuple(basis)


def parse_table(table: Any, basis: tuple[str, ...], where: str) -> np.ndarray:
    """Sparse ``{"l1,l2": {"l3": "p/q"}}`` table to a dense ``(c, a, b)`` tensor."""
    if not isinstance(table, dict):
        raise ParseError(f"{where}: expected an object of products")
    index = {label: k for k, label in enumerate(basis)}
    d = len(basis)
    t = zeros((d, d, d))
    for key, vec in table.items():
        parts = [p.strip() for p in key.split(",")]
        if len(parts) != 2:
            raise ParseError(f"{where}[{key!r}]: key must be two labels separated by a comma")
        for label in parts:
            if label not in index:
                raise MalformedSpec(f"{where}[{key!r}]: unknown basis label {label!r}")
        if not isinstance(vec, dict):
            raise ParseError(f"{where}[{key!r}]: expected an object of coefficients")
        a, b = index[parts[0]], index[parts[1]]
        for out, coeff in vec.items():
            if out not in index:
                raise MalformedSpec(f"{where}[{key!r}]: unknown basis label {out!r}")
            t[index[out], a, b] = _rational(coeff, f"{where}[{key!r}][{out!r}]")
    return as_object_array(t)


def parse_matrix(rows: Any, d: int, where: str) -> np.ndarray:
    if not isinstance(rows, list) or len(rows) != d or not all(isinstance(r, list) and len(r) == d for r in rows):
        raise ParseError(f"{where}: expected a {d}x{d} matrix")
    return as_object_array([[_rational(x, f"{where}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(rows)])


def detect_flavor(obj: dict) -> str:
    if "flavor" in obj:
        return obj["flavor"]
    if "left" in obj or "right" in obj:
        return "dendriform"
    if "alpha" in obj:
        return "hom"
    return "associative"


def parse_algebra(obj: Any, flavor: str | None = None, source: str = "<algebra>") -> AlgebraInput:
    if not isinstance(obj, dict):
        raise ParseError(f"{source}: expected a JSON object")
    flavor = flavor or detect_flavor(obj)
    if flavor not in FLAVORS:
        raise ParseError(f"{source}: unknown flavor {flavor!r}")
    basis = _basis(obj, source)
    d = len(basis)
    if flavor == "dendriform":
        prec = parse_table(_require(obj, "left", source), basis, f"{source}: left")
        succ = parse_table(_require(obj, "right", source), basis, f"{source}: right")
        return AlgebraInput(flavor, basis, build_dendriform_operad(d), np.stack([prec, succ]))
    product = parse_table(_require(obj, "product", source), basis, f"{source}: product")
    if flavor == "hom":
        alpha = parse_matrix(_require(obj, "alpha", source), d, f"{source}: alpha")
        return AlgebraInput(flavor, basis, build_hom_operad(alpha), product, alpha)
    return AlgebraInput(flavor, basis, end_operad(d), product)


def load_algebra(path: str | Path, flavor: str | None = None) -> AlgebraInput:
    return parse_algebra(load_json(path), flavor, str(path))


def _operad_from_header(obj: dict, source: str) -> tuple[str, tuple[str, ...], OperadInstance, np.ndarray | None]:
    flavor = _require(obj, "flavor", source)
    if flavor not in FLAVORS:
        raise ParseError(f"{source}: unknown flavor {flavor!r}")
    basis = _basis(obj, source)
    d = len(basis)
    if flavor == "dendriform":
        return flavor, basis, build_dendriform_operad(d), None
    if flavor == "hom":
        alpha = parse_matrix(_require(obj, "alpha", source), d, f"{source}: alpha")
        return flavor, basis, build_hom_operad(alpha), alpha
    return flavor, basis, end_operad(d), None


def parse_element(obj: Any, context: AlgebraInput | None = None, source: str = "<element>") -> Element:
    """Element or operator file to an :class:`Element`.

    Operator files (``"matrix"``) need the algebra ``context``; element files
    are self-describing and, when a context is given, must match it.
    """
    if not isinstance(obj, dict):
        raise ParseError(f"{source}: expected a JSON object")
    if "coefficients" not in obj:
        if "matrix" not in obj:
            raise ParseError(f"{source}: expected field 'coefficients' or 'matrix'")
        if context is None:
            raise ParseError(f"{source}: an operator file needs an algebra")
        m = parse_matrix(obj["matrix"], context.dimension, f"{source}: matrix")
        data = m[None] if isinstance(context.operad, DendriformOperad) else m
        return Element(context.operad, 1, data)
    flavor, basis, operad, _ = _operad_from_header(obj, source)
    arity = _require(obj, "arity", source)
    if not isinstance(arity, int) or isinstance(arity, bool) or arity < 1:
        raise WrongArity(f"{source}: field 'arity' must be a positive integer")
    coeffs = _require(obj, "coefficients", source)
    shape = operad.shape(arity)
    size = int(np.prod(shape))
    if not isinstance(coeffs, list) or len(coeffs) != size:
        raise ParseError(f"{source}: expected {size} coefficients for arity {arity}")
    values = [_rational(c, f"{source}: coefficients[{k}]") for k, c in enumerate(coeffs)]
    element = Element(operad, arity, as_object_array(values, shape))
    if context is not None:
        if operad != context.operad or basis != context.basis:
            raise InstanceMismatch(f"{source}: element does not belong to the algebra's operad")
    return element


def load_element(path: str | Path, context: AlgebraInput | None = None) -> Element:
    return parse_element(load_json(path), context, str(path))


# ---------------------------------------------------------------------------
# Writing


def _table(t: np.ndarray, basis: tuple[str, ...]) -> dict:
    d = len(basis)
    out = {}
    for a, b in itertools.product(range(d), repeat=2):
        vec = {basis[c]: format_rational(t[c, a, b]) for c in range(d) if t[c, a, b] != 0}
        if vec:
            out[f"{basis[a]},{basis[b]}"] = vec
    return out


def _matrix(m: np.ndarray) -> list:
    return [[format_rational(x) for x in row] for row in m]


def flavor_of(operad: OperadInstance) -> str:
    if isinstance(operad, DendriformOperad):
        return "dendriform"
    if isinstance(operad, HomOperad):
        return "hom"
    return "associative"


def dump_algebra(product: Element, basis: tuple[str, ...]) -> dict:
    """Algebra file for an arity-2 element, in the flavor of its operad."""
    if product.arity != 2:
        raise WrongArity("an algebra file holds an arity-2 element")
    flavor = flavor_of(product.operad)
    obj: dict[str, Any] = {"dimension": len(basis), "basis": list(basis)}
    if flavor == "dendriform":
        obj["left"] = _table(product.data[0], basis)
        obj["right"] = _table(product.data[1], basis)
    else:
        obj["product"] = _table(product.data, basis)
    if flavor == "hom":
        obj["alpha"] = _matrix(product.operad.alpha)
    return obj


def dump_element(element: Element, basis: tuple[str, ...]) -> dict:
    flavor = flavor_of(element.operad)
    obj: dict[str, Any] = {"flavor": flavor, "dimension": len(basis), "basis": list(basis)}
    if flavor == "hom":
        obj["alpha"] = _matrix(element.operad.alpha)
    obj["arity"] = element.arity
    obj["coefficients"] = [format_rational(x) for x in element.data.reshape(-1)]
    return obj


def dump_operator(element: Element) -> dict:
    if element.arity != 1:
        raise WrongArity("an operator file holds an arity-1 element")
    data = element.data[0] if isinstance(element.operad, DendriformOperad) else element.data
    return {"matrix": _matrix(data)}


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def write_json(path: str | Path, obj: Any) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


__all__ = [
    "AlgebraInput",
    "FLAVORS",
    "detect_flavor",
    "dump_algebra",
    "dump_element",
    "dump_operator",
    "dumps",
    "flavor_of",
    "load_algebra",
    "load_element",
    "load_json",
    "loads",
    "parse_algebra",
    "parse_element",
    "parse_matrix",
    "parse_table",
    "write_json",
]
