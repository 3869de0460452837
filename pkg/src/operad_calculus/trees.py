"""Planar binary trees, leaf deletion and the restriction maps.

``Y_n`` is the set of complete planar binary trees with ``n`` internal nodes
and ``n + 1`` leaves, labelled ``0..n`` from left to right.  Trees print as
nested parentheses with ``·`` for a leaf, e.g. ``((·,·),·)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import IndexOutOfRange, ParseError, WrongArity

LEAF_SYMBOL = "·"


class PlanarBinaryTree:
    """Base class; use :data:`LEAF` and :class:`Node`."""

    __slots__ = ()

    @property
    def leaves(self) -> int:
        raise NotImplementedError

    @property
    def internal(self) -> int:
        return self.leaves - 1


@dataclass(frozen=True)
class Leaf(PlanarBinaryTree):
    def __str__(self) -> str:
        return LEAF_SYMBOL

    @property
    def leaves(self) -> int:
        return 1


@dataclass(frozen=True)
class Node(PlanarBinaryTree):
    left: PlanarBinaryTree
    right: PlanarBinaryTree

    def __str__(self) -> str:
        return f"({self.left},{self.right})"

    @property
    def leaves(self) -> int:
        return _leaf_count(self)


@lru_cache(maxsize=None)
def _leaf_count(t: PlanarBinaryTree) -> int:
    if isinstance(t, Leaf):
        return 1
    return _leaf_count(t.left) + _leaf_count(t.right)


LEAF = Leaf()


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[PlanarBinaryTree, ...]:
    if n == 0:
        return (LEAF,)
    out = []
    for k in range(n):
        for left in _enumerate(k):
            for right in _enumerate(n - 1 - k):
                out.append(Node(left, right))
    return tuple(out)


def enumerate_trees(n: int) -> list[PlanarBinaryTree]:
    """All of ``Y_n``: by ascending size of the left subtree, then recursively."""
    if n < 1:
        raise WrongArity(f"Y_n needs n >= 1, got {n}")
    return list(_enumerate(n))


@lru_cache(maxsize=None)
def tree_index(n: int) -> dict[PlanarBinaryTree, int]:
    return {t: k for k, t in enumerate(_enumerate(n))}


def catalan(n: int) -> int:
    return len(_enumerate(n))


def left_comb(n: int) -> PlanarBinaryTree:
    t: PlanarBinaryTree = LEAF
    for _ in range(n):
        t = Node(t, LEAF)
    return t


def right_comb(n: int) -> PlanarBinaryTree:
    t: PlanarBinaryTree = LEAF
    for _ in range(n):
        t = Node(LEAF, t)
    return t


def parse_tree(text: str) -> PlanarBinaryTree:
    """Inverse of ``str``; accepts ``·`` or ``.`` for a leaf."""
    pos = 0
    s = text.replace(" ", "")

    def parse() -> PlanarBinaryTree:
        nonlocal pos
        if pos >= len(s):
            raise ParseError(f"unexpected end of tree string {text!r}")
        ch = s[pos]
        if ch in (LEAF_SYMBOL, "."):
            pos += 1
            return LEAF
        if ch != "(":
            raise ParseError(f"unexpected {ch!r} at position {pos} in {text!r}")
        pos += 1
        left = parse()
        if pos >= len(s) or s[pos] != ",":
            raise ParseError(f"expected ',' at position {pos} in {text!r}")
        pos += 1
        right = parse()
        if pos >= len(s) or s[pos] != ")":
            raise ParseError(f"expected ')' at position {pos} in {text!r}")
        pos += 1
        return Node(left, right)

    tree = parse()
    if pos != len(s):
        raise ParseError(f"trailing characters in {text!r}")
    return tree


def delete_leaf(t: PlanarBinaryTree, i: int) -> PlanarBinaryTree:
    """Remove leaf ``i``; its sibling subtree takes the parent's place."""
    if t.leaves < 3:
        raise WrongArity("deleting a leaf needs a tree with at least three leaves")
    if not 0 <= i < t.leaves:
        raise IndexOutOfRange(f"leaf {i} outside 0..{t.leaves - 1}")
    return _delete(t, i)


def _delete(t: PlanarBinaryTree, i: int) -> PlanarBinaryTree:
    assert isinstance(t, Node)
    nl = t.left.leaves
    if i < nl:
        if isinstance(t.left, Leaf):
            return t.right
        return Node(_delete(t.left, i), t.right)
    if isinstance(t.right, Leaf):
        return t.left
    return Node(t.left, _delete(t.right, i - nl))


def delete_leaves(t: PlanarBinaryTree, labels: Iterable[int]) -> PlanarBinaryTree:
    """Delete a set of original leaf labels, highest label first."""
    for j in sorted(set(labels), reverse=True):
        t = delete_leaf(t, j)
    return t


def restriction_set(m: int, i: int, n: int, which: str) -> list[int]:
    """Original leaf labels removed by the outer or inner restriction map."""
    if which == "outer":
        return list(range(i, i + n - 1))
    if which == "inner":
        return list(range(0, i - 1)) + list(range(i + n, m + n))
    raise ValueError(f"which must be 'outer' or 'inner', got {which!r}")


def restriction(t: PlanarBinaryTree, m: int, i: int, n: int, which: str) -> PlanarBinaryTree:
    """``R_0^{m;i,n}`` (outer, into ``Y_m``) or ``R_i^{m;i,n}`` (inner, into ``Y_n``)."""
    if m < 1 or n < 1 or not 1 <= i <= m:
        raise WrongArity(f"invalid restriction parameters m={m}, i={i}, n={n}")
    if t.leaves != m + n:
        raise WrongArity(f"tree has {t.leaves} leaves, expected {m + n}")
    return delete_leaves(t, restriction_set(m, i, n, which))


@lru_cache(maxsize=None)
def restriction_indices(m: int, i: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """For every tree of ``Y_{m+n-1}``, the indices of its outer and inner restrictions."""
    outer_index, inner_index = tree_index(m), tree_index(n)
    outer, inner = [], []
    for t in _enumerate(m + n - 1):
        outer.append(outer_index[restriction(t, m, i, n, "outer")])
        inner.append(inner_index[restriction(t, m, i, n, "inner")])
    return tuple(outer), tuple(inner)
