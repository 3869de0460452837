"""The colored operad of dendriform algebras and the alpha-twisted operad.

Dendriform: an element of arity ``n`` is an array of shape
``(n,) + (d,) * (n + 1)``; index ``r - 1`` on the first axis is the color
``[r]``.  Its multiplications are exactly dendriform structures, with
``a < b = pi([1]; a, b)`` and ``a > b = pi([2]; a, b)``.

Hom-twisted: elements are ordinary multilinear tensors restricted to the
subspace of maps commuting with ``alpha``; compositions insert powers of
``alpha`` into the untouched slots.  Multiplications are Hom-associative
products.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .endomorphism import AlgebraSpec, _Evaluator, _lin, compose_multilinear, identity_matrix
from .errors import AlphaNotCompatible, MalformedSpec
from .exact import RatMatrix, as_object_array, nullspace, zeros
from .operad import Element, OperadInstance, random_integer_array


class DendriformOperad(OperadInstance):
    """Colored operad on ``Hom(k[C_n] (x) A^{(x)n}, A)``."""

    def __init__(self, d: int):
        if d < 1:
            raise MalformedSpec("dimension must be at least 1")
        self.d = d
        self.name = f"Dend(dim {d})"

    def key(self):
        return ("dend", self.d)

    def shape(self, n: int) -> tuple[int, ...]:
        return (n,) + (self.d,) * (n + 1)

    def compose(self, f, m, i, g, n):
        caxis_f = -(m + 2)
        caxis_g = -(n + 2)
        gsum = np.expand_dims(g.sum(axis=caxis_g), caxis_g)
        parts = []
        if i > 1:
            low = np.take(f, range(0, i - 1), axis=caxis_f)
            parts.append(compose_multilinear(low, m, i, gsum, n))
        mid = np.take(f, [i - 1], axis=caxis_f)
        parts.append(compose_multilinear(mid, m, i, g, n))
        if i < m:
            high = np.take(f, range(i, m), axis=caxis_f)
            parts.append(compose_multilinear(high, m, i, gsum, n))
        caxis = -(m + n + 1)
        batch = np.broadcast_shapes(*(p.shape[: p.ndim + caxis] for p in parts))
        parts = [np.broadcast_to(p, batch + p.shape[p.ndim + caxis:]) for p in parts]
        return np.concatenate(parts, axis=caxis)

    def unit_data(self) -> np.ndarray:
        return identity_matrix(self.d)[None]


@lru_cache(maxsize=None)
def build_dendriform_operad(d: int) -> DendriformOperad:
    return DendriformOperad(d)


def dendriform_product(prec: np.ndarray, succ: np.ndarray) -> Element:
    """Arity-2 colored element from the two product tensors ``(c, a, b)``."""
    prec, succ = as_object_array(prec), as_object_array(succ)
    operad = build_dendriform_operad(prec.shape[0])
    return Element(operad, 2, np.stack([prec, succ]), check=False)


def dendriform_axioms_hold(prec: np.ndarray, succ: np.ndarray) -> bool:
    """Brute-force check of the three dendriform axioms on basis triples."""
    ev = _Evaluator(prec)
    basis = ev.unit_vectors()

    def lt(a, b):
        return ev.apply(prec, [a, b])

    def gt(a, b):
        return ev.apply(succ, [a, b])

    for a, b, c in itertools.product(basis, repeat=3):
        if lt(lt(a, b), c) != _lin((1, lt(a, lt(b, c))), (1, lt(a, gt(b, c)))):
            return False
        if lt(gt(a, b), c) != gt(a, lt(b, c)):
            return False
        if _lin((1, gt(lt(a, b), c)), (1, gt(gt(a, b), c))) != gt(a, gt(b, c)):
            return False
    return True


# ---------------------------------------------------------------------------
# Explicit colored formulas, evaluated on basis inputs.


class _Colored:
    def __init__(self, prec: np.ndarray, succ: np.ndarray):
        self.prec, self.succ = prec, succ
        self.ev = _Evaluator(prec)
        self.d = prec.shape[0]

    def lt(self, a, b):
        return self.ev.apply(self.prec, [a, b])

    def gt(self, a, b):
        return self.ev.apply(self.succ, [a, b])

    def op(self, color: int, a, b):
        return self.lt(a, b) if color == 1 else self.gt(a, b)

    def at(self, f: np.ndarray, color: int, args) -> list:
        """``f([color]; args)`` with colors 1-based; color 0 means the sum."""
        t = f.sum(axis=0) if color == 0 else f[color - 1]
        return self.ev.apply(t, args)

    def tabulate(self, n: int, fn) -> np.ndarray:
        out = zeros((n,) + (self.d,) * (n + 1))
        basis = self.ev.unit_vectors()
        for s in range(1, n + 1):
            for idx in itertools.product(range(self.d), repeat=n):
                vec = fn(s, [basis[k] for k in idx])
                for j in range(self.d):
                    out[(s - 1, j) + idx] = vec[j]
        return out


def _split(pi: Element) -> tuple[np.ndarray, np.ndarray]:
    return pi.data[0], pi.data[1]


def dend_cup_explicit(pi: Element, f: Element, g: Element) -> np.ndarray:
    c = _Colored(*_split(pi))
    m, n = f.arity, g.arity

    def value(r, a):
        if r <= m:
            return c.lt(c.at(f.data, r, a[:m]), c.at(g.data, 0, a[m:]))
        return c.gt(c.at(f.data, 0, a[:m]), c.at(g.data, r - m, a[m:]))

    return c.tabulate(m + n, value)


def dend_theta_explicit(pi: Element, f: Element) -> np.ndarray:
    c = _Colored(*_split(pi))
    m = f.arity
    sg = (-1) ** m

    def value(s, a):
        if s == 1:
            return _lin((-1, c.lt(c.at(f.data, 1, a[:m]), a[m])), (sg, c.lt(a[0], c.at(f.data, 0, a[1:]))))
        if s <= m:
            return _lin((-1, c.lt(c.at(f.data, s, a[:m]), a[m])), (sg, c.gt(a[0], c.at(f.data, s - 1, a[1:]))))
        return _lin((-1, c.gt(c.at(f.data, 0, a[:m]), a[m])), (sg, c.gt(a[0], c.at(f.data, m, a[1:]))))

    return c.tabulate(m + 1, value)


def dend_d_lambda_explicit(pi: Element, lam, f: Element) -> np.ndarray:
    c = _Colored(*_split(pi))
    m = f.arity
    lam = Fraction(lam)

    def merged(a, i, vec):
        return a[: i - 1] + [vec] + a[i + 1:]

    def value(s, a):
        terms = []
        for i in range(1, m + 1):
            if i <= s - 2:
                both = _lin((1, c.lt(a[i - 1], a[i])), (1, c.gt(a[i - 1], a[i])))
                terms.append((lam * (-1) ** i, c.at(f.data, s - 1, merged(a, i, both))))
            elif i in (s - 1, s):
                prod = c.op(s - i + 1, a[i - 1], a[i])
                terms.append((lam * (-1) ** i, c.at(f.data, i, merged(a, i, prod))))
            else:
                both = _lin((1, c.lt(a[i - 1], a[i])), (1, c.gt(a[i - 1], a[i])))
                terms.append((lam * (-1) ** i, c.at(f.data, s, merged(a, i, both))))
        return _lin(*terms) if terms else [0] * c.d

    return c.tabulate(m + 1, value)


def dend_delta_explicit(pi: Element, f: Element) -> np.ndarray:
    """``delta_pi`` assembled from explicit colored evaluations of ``pi o_1 f``,
    ``pi o_2 f`` and the ``f o_i pi`` sum."""
    c = _Colored(*_split(pi))
    m = f.arity

    def left_insert(s, a):  # (pi o_1 f)([s]; a)
        if s <= m:
            return c.lt(c.at(f.data, s, a[:m]), a[m])
        return c.gt(c.at(f.data, 0, a[:m]), a[m])

    def right_insert(s, a):  # (pi o_2 f)([s]; a)
        if s == 1:
            return c.lt(a[0], c.at(f.data, 0, a[1:]))
        return c.gt(a[0], c.at(f.data, s - 1, a[1:]))

    inner = dend_d_lambda_explicit(pi, 1, f)
    outer = c.tabulate(m + 1, lambda s, a: _lin(((-1) ** (m + 1), left_insert(s, a)), (1, right_insert(s, a))))
    return outer + inner


# ---------------------------------------------------------------------------
# The alpha-twisted operad.


def _matrix_power(alpha: np.ndarray, k: int) -> np.ndarray:
    out = identity_matrix(alpha.shape[0])
    for _ in range(k):
        out = alpha.dot(out)
    return out


def _apply_slot(f: np.ndarray, m: int, j: int, P: np.ndarray) -> np.ndarray:
    """Precompose input slot ``j`` of ``f`` with the linear map ``P``."""
    return compose_multilinear(f, m, j, P, 1)


class HomOperad(OperadInstance):
    """``End_A`` twisted by ``alpha``: maps with ``alpha f = f alpha^{(x)n}``."""

    def __init__(self, alpha):
        alpha = as_object_array(alpha)
        if alpha.ndim != 2 or alpha.shape[0] != alpha.shape[1]:
            raise MalformedSpec("alpha must be a square matrix")
        self.alpha = alpha
        self.d = alpha.shape[0]
        self.name = f"Hom(dim {self.d})"
        self._key = ("hom", self.d, tuple(Fraction(x) for x in alpha.reshape(-1)))

    def key(self):
        return self._key

    def shape(self, n: int) -> tuple[int, ...]:
        return (self.d,) * (n + 1)

    def power(self, k: int) -> np.ndarray:
        return _power_cached(self._key, k)

    def twist_slots(self, f: np.ndarray, m: int, k: int, skip: int | None = None) -> np.ndarray:
        """Insert ``alpha^k`` into every input slot of ``f`` except ``skip``."""
        if k == 0:
            return f
        P = self.power(k)
        for j in range(1, m + 1):
            if j != skip:
                f = _apply_slot(f, m, j, P)
        return f

    def compose(self, f, m, i, g, n):
        return compose_multilinear(self.twist_slots(f, m, n - 1, skip=i), m, i, g, n)

    def unit_data(self) -> np.ndarray:
        return identity_matrix(self.d)

    def membership_defect(self, data: np.ndarray, n: int) -> np.ndarray:
        """``alpha o_1 f - f o (alpha, ..., alpha)``; zero exactly on members."""
        return compose_multilinear(self.alpha, 1, 1, data, n) - self.twist_slots(data, n, 1)

    def contains(self, data, n):
        if tuple(data.shape[-(n + 1):]) != self.shape(n):
            return False
        return all(x == 0 for x in self.membership_defect(data, n).reshape(-1))

    def _subspace(self, n: int):
        return _subspace_cached(self._key, n)

    def dim(self, n: int) -> int:
        return len(self._subspace(n)[1])

    def coords(self, data, n):
        _, free = self._subspace(n)
        full = data.reshape(data.shape[: data.ndim - (n + 1)] + (self.d ** (n + 1),))
        return full[..., list(free)]

    def from_coords(self, coords, n):
        basis, _ = self._subspace(n)
        coords = as_object_array(coords)
        if basis.shape[0] == 0:
            return zeros(coords.shape[:-1] + self.shape(n))
        flat = coords.dot(basis)
        return flat.reshape(coords.shape[:-1] + self.shape(n))

    def random_data(self, n, rng):
        c = random_integer_array((self.dim(n),), rng)
        return self.from_coords(c, n)


@lru_cache(maxsize=None)
def _power_cached(key, k: int) -> np.ndarray:
    d = key[1]
    alpha = as_object_array(list(key[2]), (d, d))
    return _matrix_power(alpha, k)


@lru_cache(maxsize=None)
def _subspace_cached(key, n: int):
    """Basis (rows, in flattened coordinates) of ``P_n^alpha`` and its free columns."""
    d = key[1]
    operad = HomOperad(as_object_array(list(key[2]), (d, d)))
    size = d ** (n + 1)
    eye = zeros((size, size))
    for k in range(size):
        eye[k, k] = 1
    images = operad.membership_defect(eye.reshape((size,) + operad.shape(n)), n).reshape(size, size)
    # column k of the membership matrix is the image of the k-th unit tensor
    M = RatMatrix.from_rows(images.T.tolist())
    vectors, free = nullspace(M)
    basis = as_object_array(vectors).reshape(len(vectors), size) if vectors else zeros((0, size))
    return basis, tuple(free)


@lru_cache(maxsize=None)
def _hom_operad_cached(key) -> HomOperad:
    d = key[1]
    return HomOperad(as_object_array(list(key[2]), (d, d)))


def build_hom_operad(alpha) -> HomOperad:
    alpha = as_object_array(alpha)
    if alpha.ndim != 2 or alpha.shape[0] != alpha.shape[1]:
        raise MalformedSpec("alpha must be a square matrix")
    return _hom_operad_cached(("hom", alpha.shape[0], tuple(Fraction(x) for x in alpha.reshape(-1))))


def hom_multiplication(operad: HomOperad, product: np.ndarray) -> Element:
    """The product as an element of ``P_2^alpha``; non-members are rejected."""
    product = as_object_array(product)
    if not operad.contains(product, 2):
        raise AlphaNotCompatible("the product is not multiplicative for alpha")
    return Element(operad, 2, product, check=False)


def hom_associative(product: np.ndarray, alpha: np.ndarray) -> bool:
    """Brute-force ``(ab) alpha(c) = alpha(a) (bc)`` and ``alpha(ab) = alpha(a) alpha(b)``."""
    ev = _Evaluator(product)
    basis = ev.unit_vectors()

    def al(v):
        return ev.apply(alpha, [v])

    for a, b in itertools.product(basis, repeat=2):
        if al(ev.mul(a, b)) != ev.mul(al(a), al(b)):
            return False
    for a, b, c in itertools.product(basis, repeat=3):
        if ev.mul(ev.mul(a, b), al(c)) != ev.mul(al(a), ev.mul(b, c)):
            return False
    return True


class _HomEval:
    def __init__(self, operad: HomOperad, product: np.ndarray):
        self.operad = operad
        self.ev = _Evaluator(product)

    def al(self, k: int, v):
        return self.ev.apply(self.operad.power(k), [v])

    def mul(self, a, b):
        return self.ev.mul(a, b)

    def apply(self, f, args):
        return self.ev.apply(f, args)

    def tabulate(self, n, fn):
        return self.ev.tabulate(n, fn)


def hom_delta_explicit(pi: Element, f: Element) -> np.ndarray:
    h = _HomEval(pi.operad, pi.data)
    m = f.arity
    t = f.data

    def value(a):
        terms = [
            (1, h.mul(h.al(m - 1, a[0]), h.apply(t, a[1:]))),
            ((-1) ** (m + 1), h.mul(h.apply(t, a[:m]), h.al(m - 1, a[m]))),
        ]
        for i in range(1, m + 1):
            args = [h.al(1, v) for v in a[: i - 1]] + [h.mul(a[i - 1], a[i])] + [h.al(1, v) for v in a[i + 1:]]
            terms.append(((-1) ** i, h.apply(t, args)))
        return _lin(*terms)

    return h.tabulate(m + 1, value)


def hom_theta_explicit(pi: Element, f: Element) -> np.ndarray:
    h = _HomEval(pi.operad, pi.data)
    m = f.arity
    t = f.data
    return h.tabulate(
        m + 1,
        lambda a: _lin(
            (-1, h.mul(h.apply(t, a[:m]), h.al(m - 1, a[m]))),
            ((-1) ** m, h.mul(h.al(m - 1, a[0]), h.apply(t, a[1:]))),
        ),
    )


def hom_d_lambda_explicit(pi: Element, lam, f: Element) -> np.ndarray:
    h = _HomEval(pi.operad, pi.data)
    m = f.arity
    lam = Fraction(lam)

    def value(a):
        terms = []
        for i in range(1, m + 1):
            args = [h.al(1, v) for v in a[: i - 1]] + [h.mul(a[i - 1], a[i])] + [h.al(1, v) for v in a[i + 1:]]
            terms.append((lam * (-1) ** i, h.apply(f.data, args)))
        return _lin(*terms)

    return h.tabulate(m + 1, value)


def hom_cup_explicit(pi: Element, f: Element, g: Element) -> np.ndarray:
    h = _HomEval(pi.operad, pi.data)
    m, n = f.arity, g.arity
    return h.tabulate(
        m + n,
        lambda a: h.mul(h.al(n - 1, h.apply(f.data, a[:m])), h.al(m - 1, h.apply(g.data, a[m:]))),
    )


def _hom_bracket_explicit(pi: Element, f: Element, g: Element, inner_f: np.ndarray, inner_g: np.ndarray, cf, cg) -> np.ndarray:
    h = _HomEval(pi.operad, pi.data)
    m, n = f.arity, g.arity

    def inserted(outer, k_outer, inner, k_inner, shift, sign_exp, a):
        terms = []
        for i in range(1, k_outer + 1):
            args = (
                [h.al(shift, v) for v in a[: i - 1]]
                + [h.apply(inner, a[i - 1: i - 1 + k_inner])]
                + [h.al(shift, v) for v in a[i - 1 + k_inner:]]
            )
            terms.append(((-1) ** ((i - 1) * sign_exp), h.apply(outer, args)))
        return _lin(*terms)

    def value(a):
        return _lin(
            (1, h.mul(h.al(n - 1, h.apply(f.data, a[:m])), h.al(m - 1, h.apply(g.data, a[m:])))),
            (-((-1) ** (m * n)), h.mul(h.al(m - 1, h.apply(g.data, a[:n])), h.al(n - 1, h.apply(f.data, a[n:])))),
            (cf, inserted(g.data, n, inner_f, m + 1, m, m, a)),
            (cg, inserted(f.data, m, inner_g, n + 1, n, n, a)),
        )

    return h.tabulate(m + n, value)


def hom_fn_explicit(pi: Element, f: Element, g: Element) -> np.ndarray:
    m, n = f.arity, g.arity
    return _hom_bracket_explicit(
        pi, f, g, hom_delta_explicit(pi, f), hom_delta_explicit(pi, g), (-1) ** m, -((-1) ** ((m + 1) * n))
    )


def hom_derived_explicit(pi: Element, f: Element, g: Element) -> np.ndarray:
    m, n = f.arity, g.arity
    return _hom_bracket_explicit(pi, f, g, hom_theta_explicit(pi, f), hom_theta_explicit(pi, g), 1, -((-1) ** (m * n)))


def hom_spec_operad(spec: AlgebraSpec, alpha) -> tuple[HomOperad, Element]:
    operad = build_hom_operad(alpha)
    return operad, hom_multiplication(operad, spec.product_tensor())
