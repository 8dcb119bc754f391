"""Largeness of finite sets with respect to ordinals below w^w.

A set X = {x_0 < ... < x_(l-1)} is a-large when folding the
fundamental-sequence step over its elements in increasing order drives a to
0.  Two independent evaluators are provided: the trace fold
(:func:`residual`) and the definitional structural recursion
(:func:`is_large_structural`); they must agree and the test suite sweeps
them against each other.

The starred variant (:func:`is_large_star`) differs in that limit steps do
not consume the minimum element.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .ordinals import Ordinal, fund

__all__ = [
    "FinSet",
    "residual",
    "is_large",
    "is_large_structural",
    "is_large_star",
    "decompose",
    "minimal_large",
    "extract_large_subset",
]


@dataclass(frozen=True)
class FinSet:
    """A strictly increasing finite sequence of naturals."""

    elements: tuple[int, ...] = ()

    def __post_init__(self):
        prev = -1
        for x in self.elements:
            if not isinstance(x, int):
                raise TypeError("elements must be ints")
            if x < 0:
                raise ValueError("elements must be naturals")
            if x <= prev:
                raise ValueError("elements must be strictly increasing")
            prev = x

    @staticmethod
    def of(iterable: Iterable[int]) -> "FinSet":
        """Build from any iterable; duplicates are rejected."""
        xs = sorted(iterable)
        for a, b in zip(xs, xs[1:]):
            if a == b:
                raise ValueError(f"duplicate element {a}")
        return FinSet(tuple(xs))

    @staticmethod
    def interval(lo: int, hi: int) -> "FinSet":
        """The interval [lo, hi]; empty when hi < lo."""
        return FinSet(tuple(range(lo, hi + 1)))

    @staticmethod
    def from_wire(text: str) -> "FinSet":
        """Parse the wire form, a JSON array of strictly increasing naturals."""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"not a JSON array: {exc}") from exc
        if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
            raise ValueError("wire form must be an array of integers")
        return FinSet(tuple(data))

    def to_wire(self) -> str:
        return json.dumps(list(self.elements), separators=(",", ":"))

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def min(self) -> int:
        if not self.elements:
            raise ValueError("empty set has no min")
        return self.elements[0]

    @property
    def max(self) -> int:
        if not self.elements:
            raise ValueError("empty set has no max")
        return self.elements[-1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in set(self.elements)

    def __le__(self, other: "FinSet") -> bool:
        return set(self.elements) <= set(other.elements)

    def without_min(self) -> "FinSet":
        return FinSet(self.elements[1:])

    def union(self, other: "FinSet") -> "FinSet":
        return FinSet.of(set(self.elements) | set(other.elements))

    def restrict_above(self, bound: int) -> "FinSet":
        """Elements strictly greater than ``bound``."""
        return FinSet(tuple(x for x in self.elements if x > bound))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


def residual(X: FinSet, a: Ordinal) -> Ordinal:
    """Fold the fundamental-sequence step over X in increasing order."""
    for x in X.elements:
        if a.is_zero:
            return a
        a = fund(a, x)
    return a


def is_large(X: FinSet, a: Ordinal) -> bool:
    """Trace evaluator: X is a-large iff the residual reaches 0."""
    return residual(X, a).is_zero


def is_large_structural(X: FinSet, a: Ordinal) -> bool:
    """Definitional recursion, kept free of any shared code with
    :func:`residual` so the two evaluators can cross-check each other.

    Any set is 0-large; X is (b+1)-large when X minus its minimum is
    b-large; X is (b+w^n)-large when X minus its minimum is
    (b + w^(n-1)*min X)-large.
    """
    while True:
        if a.is_zero:
            return True
        if not X.elements:
            return False
        m = X.elements[0]
        X = FinSet(X.elements[1:])
        e, c = a.terms[-1]
        head = a.terms[:-1] if c == 1 else a.terms[:-1] + ((e, c - 1),)
        if e == 0:
            a = Ordinal(head)
        else:
            a = Ordinal(head + ((e - 1, m),)) if m > 0 else Ordinal(head)


def is_large_star(X: FinSet, a: Ordinal) -> bool:
    """Starred largeness: limit steps do not consume the minimum.

    0-large* always holds; successor steps remove the minimum; at a limit
    b+w^n the set itself must be (b + w^(n-1)*min X)-large*.  The successor
    case on the empty set is ruled *not* large* (convention: the minimum is
    undefined there).
    """
    elems = X.elements
    pos = 0
    while True:
        if a.is_zero:
            return True
        if pos >= len(elems):
            return False
        e, c = a.terms[-1]
        head = a.terms[:-1] if c == 1 else a.terms[:-1] + ((e, c - 1),)
        if e == 0:
            a = Ordinal(head)
            pos += 1
        else:
            m = elems[pos]
            a = Ordinal(head + ((e - 1, m),)) if m > 0 else Ordinal(head)


def decompose(X: FinSet, n: int, k: int) -> Optional[list[FinSet]]:
    """Split X into k consecutive w^n-large blocks, greedily from the left.

    Cuts as soon as the running block is w^n-large, which yields the
    leftmost-minimal blocks; trailing unused elements are permitted.
    Returns None when X is not w^n*k-large (the greedy cut succeeds exactly
    on w^n*k-large sets, because the trace of w^n*k consumes k successive
    copies of the w^n trace).
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be naturals")
    blocks: list[FinSet] = []
    block: list[int] = []
    target = Ordinal.omega_power(n)
    r = target
    it = iter(X.elements)
    while len(blocks) < k:
        if r.is_zero:
            blocks.append(FinSet(tuple(block)))
            block = []
            r = target
            continue
        x = next(it, None)
        if x is None:
            return None
        block.append(x)
        r = fund(r, x)
    return blocks


def minimal_large(start: int, a: Ordinal) -> FinSet:
    """The minimal interval [start, N] that is a-large.

    Consumes consecutive integers greedily; returns the empty set when a is
    already 0.
    """
    if start < 1:
        raise ValueError("start must be >= 1")
    elems = []
    x = start
    while not a.is_zero:
        elems.append(x)
        a = fund(a, x)
        x += 1
    return FinSet(tuple(elems))


def extract_large_subset(pool: FinSet, a: Ordinal) -> Optional[FinSet]:
    """Greedy minimal a-large prefix of the pool, or None if the whole pool
    is a-small.

    Taking elements in increasing order is optimal because largeness is
    closed under supersets, so the first prefix whose residual hits 0 is the
    greedy-minimal witness.
    """
    taken = []
    for x in pool.elements:
        if a.is_zero:
            break
        taken.append(x)
        a = fund(a, x)
    if a.is_zero:
        return FinSet(tuple(taken))
    return None
