"""Finite colorings of n-subsets, solution predicates, and generators.

A :class:`Coloring` is a total map from the n-subsets of [0, max] to colors
below k, stored as a flat entry list over colex-ordered subsets (n = 1 or 2).
The three solution predicates decide homogeneity, pseudo-homogeneity
(monochromatic increasing paths inside the candidate set) and transitivity
of the induced tournament.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .largeness import FinSet

__all__ = [
    "Coloring",
    "GammaSpec",
    "is_homogeneous",
    "is_pseudo_homogeneous",
    "pseudo_homogeneous_in_color",
    "is_transitive_on",
    "beats",
    "generate",
]


def pair_index(i: int, j: int) -> int:
    """Colex rank of the pair {i < j} among all pairs."""
    return j * (j - 1) // 2 + i


@dataclass(frozen=True)
class Coloring:
    """Total coloring of the n-subsets of [0, max] with k colors.

    ``entries`` lists colors over colex-ordered subsets: for n=2 the pair
    {i<j} sits at index j*(j-1)//2 + i, for n=1 the singleton {i} at i.
    """

    n: int
    k: int
    max: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.n not in (1, 2):
            raise ValueError("only n = 1 or 2 is supported")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.max < 0:
            raise ValueError("max must be a natural")
        want = self.max + 1 if self.n == 1 else (self.max + 1) * self.max // 2
        if len(self.entries) != want:
            raise ValueError(f"expected {want} entries, got {len(self.entries)}")
        if any(not (0 <= c < self.k) for c in self.entries):
            raise ValueError("entry out of color range")

    def __call__(self, *elems: int) -> int:
        """Color of a subset given in any order."""
        xs = sorted(elems)
        if len(xs) != self.n or len(set(xs)) != self.n:
            raise ValueError(f"need {self.n} distinct elements")
        if xs[-1] > self.max:
            raise ValueError(f"element {xs[-1]} outside [0, {self.max}]")
        if self.n == 1:
            return self.entries[xs[0]]
        return self.entries[pair_index(xs[0], xs[1])]

    def with_entries(self, entries: Sequence[int]) -> "Coloring":
        return Coloring(self.n, self.k, self.max, tuple(entries))

    def to_wire(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "max": self.max,
            "entries": list(self.entries),
        }

    @staticmethod
    def from_wire(data: dict) -> "Coloring":
        return Coloring(
            n=data["n"], k=data["k"], max=data["max"], entries=tuple(data["entries"])
        )

    def to_json(self) -> str:
        return json.dumps(self.to_wire(), separators=(",", ":"), sort_keys=True)


@dataclass(frozen=True)
class GammaSpec:
    """Selector for the solution predicate: RT(n,k), psRT(k) or EM.

    EM fixes n=2, k=2; psRT fixes n=2.
    """

    kind: str
    n: int = 2
    k: int = 2

    def __post_init__(self):
        if self.kind not in ("rt", "psrt", "em"):
            raise ValueError(f"unknown gamma kind {self.kind!r}")
        if self.n < 1 or self.k < 1:
            raise ValueError("n and k must be >= 1")
        if self.kind == "rt" and self.n > 2:
            raise ValueError("searches support n <= 2 only")
        if self.kind == "psrt" and self.n != 2:
            raise ValueError("psrt requires n = 2")
        if self.kind == "em" and (self.n, self.k) != (2, 2):
            raise ValueError("em fixes n = 2, k = 2")

    @staticmethod
    def rt(n: int, k: int) -> "GammaSpec":
        return GammaSpec("rt", n, k)

    @staticmethod
    def psrt(k: int) -> "GammaSpec":
        return GammaSpec("psrt", 2, k)

    @staticmethod
    def em() -> "GammaSpec":
        return GammaSpec("em", 2, 2)

    @staticmethod
    def parse(token: str) -> "GammaSpec":
        parts = token.lower().split(":")
        try:
            if parts[0] == "rt":
                return GammaSpec.rt(int(parts[1]), int(parts[2]))
            if parts[0] == "psrt":
                return GammaSpec.psrt(int(parts[1]))
            if parts[0] == "em" and len(parts) == 1:
                return GammaSpec.em()
        except (IndexError, ValueError) as exc:
            raise ValueError(f"bad gamma token {token!r}: {exc}") from exc
        raise ValueError(f"bad gamma token {token!r}")

    def token(self) -> str:
        if self.kind == "rt":
            return f"rt:{self.n}:{self.k}"
        if self.kind == "psrt":
            return f"psrt:{self.k}"
        return "em"

    def solution_ok(self, f: Coloring, Y: FinSet) -> bool:
        """The solution predicate applied to a candidate set."""
        if self.kind == "rt":
            return is_homogeneous(f, Y) is not None
        if self.kind == "psrt":
            return is_pseudo_homogeneous(f, Y) is not None
        return is_transitive_on(f, Y)

    def __str__(self) -> str:
        return self.token()


def is_homogeneous(f: Coloring, Y: FinSet) -> Optional[int]:
    """The witness color when all n-subsets of Y share one value, else None.

    Vacuously the smallest color 0 when |Y| < n.
    """
    if Y.elements and Y.max > f.max:
        raise ValueError("Y exceeds the coloring domain")
    if len(Y) < f.n:
        return 0
    color = None
    for sub in combinations(Y.elements, f.n):
        c = f(*sub)
        if color is None:
            color = c
        elif c != color:
            return None
    return color


def pseudo_homogeneous_in_color(f: Coloring, Y: FinSet, c: int) -> bool:
    """Every pair of Y joined by an increasing c-colored path inside Y."""
    if f.n != 2:
        raise ValueError("pseudo-homogeneity needs pair colorings")
    if Y.elements and Y.max > f.max:
        raise ValueError("Y exceeds the coloring domain")
    ys = Y.elements
    m = len(ys)
    # joined[i][j]: an increasing path from ys[i] to ys[j] through Y exists,
    # all steps colored c.  Fill by increasing span.
    joined = [[False] * m for _ in range(m)]
    for span in range(1, m):
        for i in range(m - span):
            j = i + span
            if f(ys[i], ys[j]) == c:
                joined[i][j] = True
                continue
            joined[i][j] = any(
                f(ys[i], ys[t]) == c and joined[t][j] for t in range(i + 1, j)
            )
    return all(joined[i][j] for i in range(m) for j in range(i + 1, m))


def is_pseudo_homogeneous(f: Coloring, Y: FinSet) -> Optional[int]:
    """The smallest color c joining every pair of Y by increasing c-paths
    with intermediate points inside Y, or None.
    """
    if f.n != 2:
        raise ValueError("pseudo-homogeneity needs pair colorings")
    if len(Y) < 2:
        return 0
    for c in range(f.k):
        if pseudo_homogeneous_in_color(f, Y, c):
            return c
    return None


def beats(f: Coloring, x: int, y: int) -> bool:
    """Orientation of the tournament induced by a 2-coloring.

    R(x,y) holds when x < y and f(x,y) = 1, or x > y and f(y,x) = 0.
    """
    if x == y:
        raise ValueError("tournament is irreflexive")
    if x < y:
        return f(x, y) == 1
    return f(y, x) == 0


def is_transitive_on(f: Coloring, Y: FinSet) -> bool:
    """Whether the induced tournament is transitive on Y."""
    if f.n != 2 or f.k != 2:
        raise ValueError("transitivity needs 2-colorings of pairs")
    if Y.elements and Y.max > f.max:
        raise ValueError("Y exceeds the coloring domain")
    for a, b, c in combinations(Y.elements, 3):
        ab = f(a, b) == 1  # True: a -> b
        bc = f(b, c) == 1
        ac = f(a, c) == 1
        # The triple is a 3-cycle exactly when ab and bc agree but ac differs.
        if ab == bc and ac != ab:
            return False
    return True


def generate(kind: str, params: dict, seed: int = 0) -> Coloring:
    """Deterministic coloring generators.

    kinds: ``uniform-random`` (params: max, k, n), ``constant`` (params:
    max, k, n, color), ``from-linear-order`` (params: order, a permutation
    of [0, max]), ``partition`` (params: max, blocks covering [0, max]).
    """
    if kind == "uniform-random":
        n = params.get("n", 2)
        k = params["k"]
        mx = params["max"]
        rng = random.Random(seed)
        count = mx + 1 if n == 1 else (mx + 1) * mx // 2
        return Coloring(n, k, mx, tuple(rng.randrange(k) for _ in range(count)))
    if kind == "constant":
        n = params.get("n", 2)
        k = params.get("k", 2)
        mx = params["max"]
        c = params.get("color", 0)
        if not 0 <= c < k:
            raise ValueError("constant color out of range")
        count = mx + 1 if n == 1 else (mx + 1) * mx // 2
        return Coloring(n, k, mx, (c,) * count)
    if kind == "from-linear-order":
        order = list(params["order"])
        mx = len(order) - 1
        if sorted(order) != list(range(mx + 1)):
            raise ValueError("order must be a permutation of [0, max]")
        pos = {x: i for i, x in enumerate(order)}
        entries = []
        for j in range(mx + 1):
            for i in range(j):
                entries.append(1 if pos[i] < pos[j] else 0)
        return Coloring(2, 2, mx, tuple(entries))
    if kind == "partition":
        mx = params["max"]
        blocks = [set(b) for b in params["blocks"]]
        seen: set[int] = set()
        for b in blocks:
            if seen & b:
                raise ValueError("partition blocks overlap")
            seen |= b
        if seen != set(range(mx + 1)):
            raise ValueError("partition blocks must cover [0, max]")
        member = {}
        for idx, b in enumerate(blocks):
            for x in b:
                member[x] = idx
        entries = []
        for j in range(mx + 1):
            for i in range(j):
                entries.append(1 if member[i] == member[j] else 0)
        return Coloring(2, 2, mx, tuple(entries))
    raise ValueError(f"unknown generator kind {kind!r}")
