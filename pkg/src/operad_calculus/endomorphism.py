"""The endomorphism operad of a finite-dimensional based vector space.

An arity-``n`` map ``A^{(x)n} -> A`` is stored as an array of shape
``(d,) * (n + 1)`` whose axis 0 is the output coordinate and whose axes
``1..n`` are the inputs.  ``f[j, i1, ..., in]`` is the ``j``-th coordinate of
``f(e_i1, ..., e_in)``.

The module also carries evaluation-style implementations of the classical
associative formulas (Hochschild coboundary, cup product, theta, ``d_lambda``
and the two brackets).  They loop over basis inputs and never call the
tensor compositions, which makes them an independent oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

from .errors import IndexOutOfRange, MalformedSpec, NotAMultiplication
from .exact import as_object_array, parse_rational, zeros
from .operad import Element, OperadInstance, is_multiplication


def compose_multilinear(f: np.ndarray, m: int, i: int, g: np.ndarray, n: int) -> np.ndarray:
    """Substitute ``g`` into input slot ``i`` of ``f``; leading axes broadcast."""
    d = f.shape[-1]
    fm = np.moveaxis(f, -(m + 1) + i, -1)
    lead_f = fm.shape[: fm.ndim - (m + 1)]
    fm = fm.reshape(lead_f + (d ** m, d))
    lead_g = g.shape[: g.ndim - (n + 1)]
    gm = g.reshape(lead_g + (d, d ** n))
    prod = np.matmul(fm, gm)
    batch = prod.shape[:-2]
    out = prod.reshape(batch + (d,) * (m + n))
    # the n new input axes sit at the end; move them into slot i
    src = list(range(-n, 0))
    dst = list(range(-(m + n) + i, -(m + n) + i + n))
    return np.moveaxis(out, src, dst)


def identity_matrix(d: int) -> np.ndarray:
    eye = zeros((d, d))
    for k in range(d):
        eye[k, k] = 1
    return eye


class EndomorphismOperad(OperadInstance):
    """``End_A`` for ``A`` of dimension ``d``."""

    def __init__(self, d: int, label: str = ""):
        if d < 1:
            raise MalformedSpec("dimension must be at least 1")
        self.d = d
        self.label = label
        self.name = f"End(dim {d})"

    def key(self):
        return ("end", self.d)

    def shape(self, n: int) -> tuple[int, ...]:
        return (self.d,) * (n + 1)

    def compose(self, f, m, i, g, n):
        return compose_multilinear(f, m, i, g, n)

    def unit_data(self) -> np.ndarray:
        return identity_matrix(self.d)


@dataclass(frozen=True)
class AlgebraSpec:
    """A based vector space with a bilinear product table.

    ``structure`` maps a pair of basis indices to a sparse output vector
    ``{output index: coefficient}``.  Absent entries are zero.
    """

    dimension: int
    basis: tuple[str, ...]
    structure: Mapping[tuple[int, int], Mapping[int, Fraction]] = field(default_factory=dict)

    def __post_init__(self):
        if self.dimension < 1:
            raise MalformedSpec("dimension must be at least 1")
        if len(self.basis) != self.dimension:
            raise MalformedSpec(f"expected {self.dimension} basis labels, got {len(self.basis)}")
        if len(set(self.basis)) != len(self.basis):
            raise MalformedSpec("basis labels must be distinct")
        for (a, b), vec in self.structure.items():
            for idx in (a, b, *vec.keys()):
                if not 0 <= idx < self.dimension:
                    raise MalformedSpec(f"basis index {idx} out of range")

    @classmethod
    def from_table(cls, basis: Sequence[str], table: Mapping[tuple[str, str], Mapping[str, object]]) -> "AlgebraSpec":
        """Build from label-keyed entries, e.g. ``{("e", "x"): {"x": 1}}``."""
        index = {label: k for k, label in enumerate(basis)}
        structure: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (l1, l2), vec in table.items():
            try:
                key = (index[l1], index[l2])
                structure[key] = {index[l3]: parse_rational(c) for l3, c in vec.items()}
            except KeyError as exc:
                raise MalformedSpec(f"unknown basis label {exc.args[0]!r}") from None
        return cls(len(basis), tuple(basis), structure)

    def product_tensor(self) -> np.ndarray:
        t = zeros((self.dimension,) * 3)
        for (a, b), vec in self.structure.items():
            for c, coeff in vec.items():
                t[c, a, b] = Fraction(coeff)
        return as_object_array(t)

    @classmethod
    def from_tensor(cls, basis: Sequence[str], t: np.ndarray) -> "AlgebraSpec":
        d = len(basis)
        structure = {}
        for a, b in itertools.product(range(d), repeat=2):
            vec = {c: Fraction(t[c, a, b]) for c in range(d) if t[c, a, b] != 0}
            if vec:
                structure[(a, b)] = vec
        return cls(d, tuple(basis), structure)


def build_endomorphism_operad(spec: AlgebraSpec) -> tuple[EndomorphismOperad, Element]:
    """The operad ``End_A`` and the product table as an arity-2 element."""
    operad = end_operad(spec.dimension)
    return operad, Element(operad, 2, spec.product_tensor(), check=False)


@lru_cache(maxsize=None)
def end_operad(d: int) -> EndomorphismOperad:
    """The shared ``End_A`` instance for dimension ``d``."""
    return EndomorphismOperad(d)


def evaluate(f: Element | np.ndarray, inputs: Sequence[int]) -> list:
    """Output vector of a multilinear map at a tuple of basis vectors."""
    data = f.data if isinstance(f, Element) else f
    n = data.ndim - 1
    d = data.shape[0]
    if len(inputs) != n:
        raise IndexOutOfRange(f"expected {n} inputs, got {len(inputs)}")
    for k in inputs:
        if not 0 <= k < d:
            raise IndexOutOfRange(f"basis index {k} outside 0..{d - 1}")
    return list(data[(slice(None),) + tuple(inputs)])


# ---------------------------------------------------------------------------
# Evaluation-style oracle.  Maps act on vectors via explicit multilinear sums.


class _Evaluator:
    """Evaluates arity-n tensors on arbitrary input vectors."""

    def __init__(self, product: np.ndarray):
        self.t = product
        self.d = product.shape[0]

    def apply(self, f: np.ndarray, vectors: Sequence[Sequence]) -> list:
        d = self.d
        out = [0] * d
        nonzero = [[(k, c) for k, c in enumerate(v) if c != 0] for v in vectors]
        for combo in itertools.product(*nonzero):
            idx = tuple(k for k, _ in combo)
            coeff = 1
            for _, c in combo:
                coeff *= c
            col = f[(slice(None),) + idx]
            for j in range(d):
                if col[j] != 0:
                    out[j] += coeff * col[j]
        return out

    def mul(self, a: Sequence, b: Sequence) -> list:
        return self.apply(self.t, [a, b])

    def unit_vectors(self) -> list[list[int]]:
        return [[1 if j == k else 0 for j in range(self.d)] for k in range(self.d)]

    def tabulate(self, n: int, fn) -> np.ndarray:
        """Tensor of the arity-n map whose value on basis inputs is ``fn``."""
        d = self.d
        out = zeros((d,) * (n + 1))
        basis = self.unit_vectors()
        for idx in itertools.product(range(d), repeat=n):
            vec = fn([basis[k] for k in idx])
            for j in range(d):
                out[(j,) + idx] = vec[j]
        return out


def _lin(*pairs) -> list:
    """Linear combination of vectors given as (coefficient, vector) pairs."""
    length = len(pairs[0][1])
    out = [0] * length
    for c, v in pairs:
        if c == 0:
            continue
        for j in range(length):
            out[j] += c * v[j]
    return out


def _arity(f: np.ndarray) -> int:
    return f.ndim - 1


def _data(f):
    return f.data if isinstance(f, Element) else f


def _require_mult(product: np.ndarray) -> None:
    ops = EndomorphismOperad(product.shape[0])
    if not is_multiplication(Element(ops, 2, product, check=False)):
        raise NotAMultiplication("the product table is not associative")


def hochschild_delta_explicit(spec: AlgebraSpec | np.ndarray, f) -> np.ndarray:
    """Classical Hochschild coboundary evaluated on basis inputs."""
    t = spec.product_tensor() if isinstance(spec, AlgebraSpec) else spec
    _require_mult(t)
    return _hochschild(t, _data(f))


def _hochschild(t: np.ndarray, f: np.ndarray) -> np.ndarray:
    ev = _Evaluator(t)
    m = _arity(f)

    def value(a):
        terms = [(1, ev.mul(a[0], ev.apply(f, a[1:]))), ((-1) ** (m + 1), ev.mul(ev.apply(f, a[:m]), a[m]))]
        for i in range(1, m + 1):
            merged = a[: i - 1] + [ev.mul(a[i - 1], a[i])] + a[i + 1:]
            terms.append(((-1) ** i, ev.apply(f, merged)))
        return _lin(*terms)

    return ev.tabulate(m + 1, value)


def cup_explicit(t: np.ndarray, f, g) -> np.ndarray:
    f, g = _data(f), _data(g)
    ev = _Evaluator(t)
    m, n = _arity(f), _arity(g)
    return ev.tabulate(m + n, lambda a: ev.mul(ev.apply(f, a[:m]), ev.apply(g, a[m:])))


def theta_explicit(t: np.ndarray, f) -> np.ndarray:
    f = _data(f)
    ev = _Evaluator(t)
    m = _arity(f)
    return ev.tabulate(
        m + 1,
        lambda a: _lin((-1, ev.mul(ev.apply(f, a[:m]), a[m])), ((-1) ** m, ev.mul(a[0], ev.apply(f, a[1:])))),
    )


def d_lambda_explicit(t: np.ndarray, lam, f) -> np.ndarray:
    f = _data(f)
    ev = _Evaluator(t)
    m = _arity(f)

    def value(a):
        terms = []
        for i in range(1, m + 1):
            merged = a[: i - 1] + [ev.mul(a[i - 1], a[i])] + a[i + 1:]
            terms.append((Fraction(lam) * (-1) ** i, ev.apply(f, merged)))
        return _lin(*terms)

    return ev.tabulate(m + 1, value)


def _insert_sum(ev: _Evaluator, outer: np.ndarray, inner_value, k: int, a: list, sign_exp: int) -> list:
    """Sum over i of (-1)^((i-1) sign_exp) outer(a_1.., inner(a_i..a_{i+k-1}), ..)."""
    n = _arity(outer)
    terms = []
    for i in range(1, n + 1):
        inner = inner_value(a[i - 1: i - 1 + k])
        args = a[: i - 1] + [inner] + a[i - 1 + k:]
        terms.append(((-1) ** ((i - 1) * sign_exp), ev.apply(outer, args)))
    return _lin(*terms)


def fn_explicit(t: np.ndarray, f, g) -> np.ndarray:
    """Froelicher-Nijenhuis bracket written out on basis inputs."""
    f, g = _data(f), _data(g)
    ev = _Evaluator(t)
    m, n = _arity(f), _arity(g)
    df, dg = _hochschild(t, f), _hochschild(t, g)

    def value(a):
        return _lin(
            (1, ev.mul(ev.apply(f, a[:m]), ev.apply(g, a[m:]))),
            (-((-1) ** (m * n)), ev.mul(ev.apply(g, a[:n]), ev.apply(f, a[n:]))),
            ((-1) ** m, _insert_sum(ev, g, lambda s: ev.apply(df, s), m + 1, a, m)),
            (-((-1) ** ((m + 1) * n)), _insert_sum(ev, f, lambda s: ev.apply(dg, s), n + 1, a, n)),
        )

    return ev.tabulate(m + n, value)


def derived_explicit(t: np.ndarray, f, g) -> np.ndarray:
    """Derived bracket written out on basis inputs."""
    f, g = _data(f), _data(g)
    ev = _Evaluator(t)
    m, n = _arity(f), _arity(g)

    def inner(h, k):
        def v(s):
            return _lin((1, ev.mul(ev.apply(h, s[:k]), s[k])), ((-1) ** (k - 1), ev.mul(s[0], ev.apply(h, s[1:]))))

        return v

    def value(a):
        return _lin(
            (1, ev.mul(ev.apply(f, a[:m]), ev.apply(g, a[m:]))),
            (-((-1) ** (m * n)), ev.mul(ev.apply(g, a[:n]), ev.apply(f, a[n:]))),
            (-1, _insert_sum(ev, g, inner(f, m), m + 1, a, m)),
            ((-1) ** (m * n), _insert_sum(ev, f, inner(g, n), n + 1, a, n)),
        )

    return ev.tabulate(m + n, value)


def product_element(operad: EndomorphismOperad, table) -> Element:
    return Element(operad, 2, as_object_array(table), check=False)
