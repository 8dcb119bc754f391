"""Ordinal notations below w^w in Cantor normal form.

An ordinal is a finite sum of terms ``w^e * c`` with strictly decreasing
exponents and positive integer coefficients; the empty sum is 0.  The only
arithmetic the rest of the package needs is comparison, adding a natural
number, and the fundamental-sequence step ``a[m]`` used to consume set
elements, so nothing beyond that is implemented here.

All integers are plain Python ints: exponents like 3^(m+1) overflow 64 bits
for large m and must not wrap.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Ordinal",
    "OrdinalParseError",
    "compare",
    "fund",
    "parse",
    "format_ordinal",
    "ZERO",
    "ONE",
    "OMEGA",
]


class OrdinalParseError(ValueError):
    """Input text does not denote a canonical ordinal.

    ``position`` is the index into the input text where the problem was
    detected.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Ordinal:
    """Ordinal below w^w as a tuple of (exponent, coefficient) terms.

    Invariants: exponents strictly decreasing, coefficients >= 1, the empty
    tuple denotes 0.
    """

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = None
        for e, c in self.terms:
            if not (isinstance(e, int) and isinstance(c, int)):
                raise TypeError("exponents and coefficients must be ints")
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if c < 1:
                raise ValueError(f"coefficient {c} < 1")
            if prev is not None and e >= prev:
                raise ValueError("exponents must be strictly decreasing")
            prev = e

    # -- constructors ------------------------------------------------------

    @staticmethod
    def nat(n: int) -> "Ordinal":
        if n < 0:
            raise ValueError("naturals only")
        return Ordinal(((0, n),)) if n else Ordinal()

    @staticmethod
    def omega_power(e: int, c: int = 1) -> "Ordinal":
        """The ordinal w^e * c (0 when c = 0)."""
        if c == 0:
            return Ordinal()
        return Ordinal(((e, c),))

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0] == 0

    @property
    def is_limit(self) -> bool:
        return bool(self.terms) and self.terms[-1][0] != 0

    def natural_part(self) -> int:
        """Coefficient of w^0, i.e. the finite tail."""
        if self.terms and self.terms[-1][0] == 0:
            return self.terms[-1][1]
        return 0

    def max_exponent(self) -> int:
        return self.terms[0][0] if self.terms else 0

    # -- arithmetic --------------------------------------------------------

    def __add__(self, n: int) -> "Ordinal":
        """Add a natural number on the right."""
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("can only add naturals")
        if n == 0:
            return self
        if self.terms and self.terms[-1][0] == 0:
            e, c = self.terms[-1]
            return Ordinal(self.terms[:-1] + ((0, c + n),))
        return Ordinal(self.terms + ((0, n),))

    # -- ordering ----------------------------------------------------------

    def __lt__(self, other: "Ordinal") -> bool:
        return compare(self, other) < 0

    def __le__(self, other: "Ordinal") -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: "Ordinal") -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: "Ordinal") -> bool:
        return compare(self, other) >= 0

    def __str__(self) -> str:
        return format_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal({format_ordinal(self)!r})"


ZERO = Ordinal()
ONE = Ordinal.nat(1)
OMEGA = Ordinal.omega_power(1)


def compare(a: Ordinal, b: Ordinal) -> int:
    """Total order on normal forms: -1 (less), 0 (equal), +1 (greater)."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        if ea != eb:
            return -1 if ea < eb else 1
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) != len(b.terms):
        return -1 if len(a.terms) < len(b.terms) else 1
    return 0


def fund(a: Ordinal, m: int) -> Ordinal:
    """One fundamental-sequence step a[m].

    0[m] = 0; (b+1)[m] = b; (b + w^n)[m] = b + w^(n-1)*m for n >= 1.
    """
    if m < 0:
        raise ValueError("m must be a natural")
    if a.is_zero:
        return a
    e, c = a.terms[-1]
    if e == 0:
        if c == 1:
            return Ordinal(a.terms[:-1])
        return Ordinal(a.terms[:-1] + ((0, c - 1),))
    head = a.terms[:-1] if c == 1 else a.terms[:-1] + ((e, c - 1),)
    if m == 0:
        return Ordinal(head)
    return Ordinal(head + ((e - 1, m),))


def format_ordinal(a: Ordinal) -> str:
    """Canonical text form matched by :func:`parse`."""
    if a.is_zero:
        return "0"
    parts = []
    for e, c in a.terms:
        if e == 0:
            parts.append(str(c))
        elif e == 1:
            parts.append("w" if c == 1 else f"w*{c}")
        else:
            parts.append(f"w^{e}" if c == 1 else f"w^{e}*{c}")
    return "+".join(parts)


def _parse_nat(text: str, pos: int) -> tuple[int, int]:
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise OrdinalParseError("expected a decimal natural", start)
    return int(text[start:pos]), pos


def _parse_term(text: str, pos: int) -> tuple[int, int, int]:
    """Parse one term, returning (exponent, coefficient, next position)."""
    start = pos
    if pos < len(text) and text[pos] == "w":
        pos += 1
        exponent = 1
        if pos < len(text) and text[pos] == "^":
            exponent, pos = _parse_nat(text, pos + 1)
        coeff = 1
        if pos < len(text) and text[pos] == "*":
            coeff, pos = _parse_nat(text, pos + 1)
        if coeff == 0:
            raise OrdinalParseError("zero coefficient", start)
        return exponent, coeff, pos
    value, pos = _parse_nat(text, pos)
    return 0, value, pos


def parse(text: str) -> Ordinal:
    """Parse the grammar ``term ('+' term)*``, term = w^E[*C] | w[*C] | N.

    Rejects non-canonical input (non-descending exponents, zero
    coefficients) with a position-bearing :class:`OrdinalParseError`.
    """
    stripped = text.strip()
    offset = len(text) - len(text.lstrip())
    if not stripped:
        raise OrdinalParseError("empty input", 0)
    terms: list[tuple[int, int]] = []
    pos = 0
    while True:
        term_start = pos
        e, c, pos = _parse_term(stripped, pos)
        if c == 0:
            # A bare 0 is the zero ordinal, but only as the whole input.
            if term_start == 0 and pos == len(stripped):
                return Ordinal()
            raise OrdinalParseError("zero term in a sum", offset + term_start)
        if terms and e >= terms[-1][0]:
            raise OrdinalParseError(
                "non-canonical: exponents must strictly decrease",
                offset + term_start,
            )
        terms.append((e, c))
        if pos == len(stripped):
            return Ordinal(tuple(terms))
        if stripped[pos] != "+":
            raise OrdinalParseError(
                f"unexpected character {stripped[pos]!r}", offset + pos
            )
        pos += 1
