"""Partitions, skew shapes, standard Young tableaux, and their maj polynomials.

Cells are addressed (row, column), 1-based, rows drawn top-down (English
convention).  A skew tableau remembers its inner shape explicitly, so the
high restriction of a tableau keeps its anchor: two skew tableaux are equal
only if both shapes and all entries agree.

``f_poly`` sums q^maj over all standard fillings of a (possibly skew) shape
by enumeration.  ``f_poly_hook`` computes the same polynomial for straight
shapes through the hook-length product, assembled from cyclotomic factors so
every division is exact; the test suite pins it against enumeration on an
exhaustive band before it is trusted at larger sizes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .polynomial import ONE, BivarPoly

__all__ = [
    "Partition",
    "SkewShape",
    "Tableau",
    "partitions",
    "partitions_inside",
    "enumerate_syt",
    "f_poly",
    "f_poly_hook",
    "syt_count",
    "skew_syt_count",
]


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers; () is the empty partition."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"{self.parts}: parts must be positive")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"{self.parts} is not weakly decreasing")

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(tok) for tok in text.replace(",", " ").split()))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def part(self, row: int) -> int:
        """Row length, 0 beyond the last row (row is 1-based)."""
        return self.parts[row - 1] if 1 <= row <= len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        return all(self.part(r) >= other.part(r) for r in range(1, other.length + 1))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        width = self.parts[0]
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(width)))

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, row_len in enumerate(self.parts, start=1):
            for c in range(1, row_len + 1):
                yield (r, c)

    def hook_lengths(self) -> tuple[int, ...]:
        """Hook lengths of all cells, row-major."""
        conj = self.conjugate().parts
        out = []
        for r, row_len in enumerate(self.parts, start=1):
            for c in range(1, row_len + 1):
                out.append(row_len - c + conj[c - 1] - r + 1)
        return tuple(out)


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, largest-first lexicographic order."""

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    if n < 0:
        raise ValueError("n must be nonnegative")
    for parts in rec(n, n):
        yield Partition(parts)


def partitions_inside(n: int, outer: Partition) -> Iterator[Partition]:
    """Partitions of n whose diagram fits inside ``outer``."""
    for mu in partitions(n):
        if outer.contains(mu):
            yield mu


@dataclass(frozen=True)
class SkewShape:
    """The cells of ``outer`` not in ``inner``."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"inner {self.inner} does not fit inside outer {self.outer}")

    @classmethod
    def straight(cls, outer: Partition) -> "SkewShape":
        return cls(outer, Partition(()))

    @classmethod
    def parse(cls, text: str) -> "SkewShape":
        """Parse ``outer/inner`` part lists, e.g. ``4,3,2/3,2`` or ``2,2``."""
        outer_text, _, inner_text = text.partition("/")
        return cls(Partition.parse(outer_text), Partition.parse(inner_text))

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_straight(self) -> bool:
        return not self.inner.parts

    def __str__(self) -> str:
        if self.is_straight:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"

    def cells(self) -> Iterator[tuple[int, int]]:
        for r in range(1, self.outer.length + 1):
            for c in range(self.inner.part(r) + 1, self.outer.part(r) + 1):
                yield (r, c)

    def conjugate(self) -> "SkewShape":
        return SkewShape(self.outer.conjugate(), self.inner.conjugate())


@dataclass(frozen=True)
class Tableau:
    """A standard filling of a (possibly skew) shape with 1..n.

    ``rows[i]`` carries the entries of row i + 1, covering columns
    ``inner[i] + 1`` through ``outer[i]``.
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        outer, inner = self.shape.outer, self.shape.inner
        if len(self.rows) != outer.length:
            raise ValueError("row count does not match the outer shape")
        for r, row in enumerate(self.rows, start=1):
            if len(row) != outer.part(r) - inner.part(r):
                raise ValueError(f"row {r} has wrong length")
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise ValueError(f"row {r} is not strictly increasing")
        n = self.shape.size
        if sorted(self.entries().values()) != list(range(1, n + 1)):
            raise ValueError(f"entries are not a permutation of 1..{n}")
        cells = self.entries()
        for (r, c), v in cells.items():
            above = cells.get((r - 1, c))
            if above is not None and above >= v:
                raise ValueError(f"column {c} is not strictly increasing")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        """Straight tableau from its rows."""
        outer = Partition(tuple(len(r) for r in rows))
        return cls(SkewShape.straight(outer), tuple(tuple(r) for r in rows))

    @property
    def size(self) -> int:
        return self.shape.size

    @property
    def is_straight(self) -> bool:
        return self.shape.is_straight

    def entries(self) -> dict[tuple[int, int], int]:
        inner = self.shape.inner
        out = {}
        for r, row in enumerate(self.rows, start=1):
            for i, v in enumerate(row):
                out[(r, inner.part(r) + 1 + i)] = v
        return out

    def row_of(self, value: int) -> int:
        """1-based row holding the given entry."""
        for r, row in enumerate(self.rows, start=1):
            if value in row:
                return r
        raise ValueError(f"entry {value} not in tableau")

    # -- statistics -----------------------------------------------------------

    def descents(self) -> frozenset[int]:
        """Entries i whose successor i + 1 sits in a strictly lower row."""
        row_index = {}
        for r, row in enumerate(self.rows, start=1):
            for v in row:
                row_index[v] = r
        n = self.size
        return frozenset(i for i in range(1, n) if row_index[i + 1] > row_index[i])

    def maj(self) -> int:
        return sum(self.descents())

    # -- restrictions -----------------------------------------------------------

    def restrict_low(self, k: int) -> "Tableau":
        """The subtableau of entries <= k (entries increase, so a row prefix)."""
        if not 0 <= k <= self.size:
            raise ValueError(f"cut {k} out of range 0..{self.size}")
        inner = self.shape.inner
        new_rows = []
        new_parts = []
        for r, row in enumerate(self.rows, start=1):
            kept = tuple(v for v in row if v <= k)
            new_rows.append(kept)
            new_parts.append(inner.part(r) + len(kept))
        while new_parts and new_parts[-1] == 0:
            new_parts.pop()
            new_rows.pop()
        outer = Partition(tuple(new_parts))
        return Tableau(SkewShape(outer, inner), tuple(new_rows))

    def restrict_high(self, k: int) -> "Tableau":
        """Entries > k, each decreased by k, on the complementary skew shape."""
        if not 0 <= k <= self.size:
            raise ValueError(f"cut {k} out of range 0..{self.size}")
        low_outer = self.restrict_low(k).shape.outer
        new_rows = tuple(tuple(v - k for v in row if v > k) for row in self.rows)
        return Tableau(SkewShape(self.shape.outer, low_outer), new_rows)

    def conjugate(self) -> "Tableau":
        """Transpose across the main diagonal."""
        shape = self.shape.conjugate()
        cells = {(c, r): v for (r, c), v in self.entries().items()}
        inner = shape.inner
        rows = tuple(
            tuple(cells[(r, c)] for c in range(inner.part(r) + 1, shape.outer.part(r) + 1))
            for r in range(1, shape.outer.length + 1)
        )
        return Tableau(shape, rows)

    # -- formats ------------------------------------------------------------------

    def to_json(self) -> dict:
        inner = self.shape.inner
        padded = [
            [None] * inner.part(r) + list(row) for r, row in enumerate(self.rows, start=1)
        ]
        return {
            "outer": list(self.shape.outer.parts),
            "inner": list(self.shape.inner.parts),
            "rows": padded,
        }

    @classmethod
    def from_json(cls, data) -> "Tableau":
        if isinstance(data, str):
            data = json.loads(data)
        outer = Partition(tuple(data["outer"]))
        inner = Partition(tuple(data.get("inner", ())))
        rows = tuple(
            tuple(v for v in row if v is not None) for row in data["rows"]
        )
        return cls(SkewShape(outer, inner), rows)

    def pretty(self) -> str:
        """Text diagram with dots marking inner cells."""
        inner = self.shape.inner
        width = max((len(str(v)) for row in self.rows for v in row), default=1)
        lines = []
        for r, row in enumerate(self.rows, start=1):
            cells = ["." * width] * inner.part(r) + [str(v).rjust(width) for v in row]
            lines.append(" ".join(cells))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.pretty()


def enumerate_syt(shape: SkewShape) -> Iterator[Tableau]:
    """All standard fillings of a skew shape, in a deterministic order."""
    outer, inner = shape.outer, shape.inner
    nrows = outer.length
    n = shape.size
    widths = [outer.part(r) - inner.part(r) for r in range(1, nrows + 1)]
    rows: list[list[int]] = [[] for _ in range(nrows)]

    def placeable(r: int) -> bool:
        if len(rows[r]) >= widths[r]:
            return False
        col = inner.part(r + 1) + len(rows[r]) + 1
        if r == 0:
            return True
        # cell above must be outside the skew shape or already filled
        return col <= inner.part(r) or col <= inner.part(r) + len(rows[r - 1])

    def fill(value: int) -> Iterator[Tableau]:
        if value > n:
            yield Tableau(shape, tuple(tuple(row) for row in rows))
            return
        for r in range(nrows):
            if placeable(r):
                rows[r].append(value)
                yield from fill(value + 1)
                rows[r].pop()

    if n == 0:
        yield Tableau(shape, tuple(() for _ in range(nrows)))
        return
    yield from fill(1)


@lru_cache(maxsize=None)
def _f_poly_cached(outer: tuple[int, ...], inner: tuple[int, ...]) -> BivarPoly:
    shape = SkewShape(Partition(outer), Partition(inner))
    terms: dict[int, int] = {}
    for t in enumerate_syt(shape):
        m = t.maj()
        terms[m] = terms.get(m, 0) + 1
    return BivarPoly({(0, m): c for m, c in terms.items()})


def f_poly(shape: SkewShape) -> BivarPoly:
    """Generating polynomial of maj over all standard fillings of the shape."""
    return _f_poly_cached(shape.outer.parts, shape.inner.parts)


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


@lru_cache(maxsize=None)
def _cyclotomic(d: int) -> tuple[int, ...]:
    """Dense coefficients of the d-th cyclotomic polynomial."""
    if d == 1:
        return (-1, 1)
    poly = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in _divisors(d)[:-1]:
        poly = _dense_divexact(poly, list(_cyclotomic(e)))
    return tuple(poly)


def _dense_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _dense_divexact(a: list[int], b: list[int]) -> list[int]:
    while b and b[-1] == 0:
        b = b[:-1]
    rem = list(a)
    out = [0] * (len(rem) - len(b) + 1)
    lead = b[-1]
    for top in range(len(rem) - 1, len(b) - 2, -1):
        if rem[top] == 0:
            continue
        if rem[top] % lead:
            raise ValueError("inexact dense division")
        c = rem[top] // lead
        shift = top - (len(b) - 1)
        out[shift] = c
        for i, y in enumerate(b):
            rem[shift + i] -= c * y
    if any(rem):
        raise ValueError("inexact dense division")
    return out


@lru_cache(maxsize=None)
def _f_poly_hook_cached(parts: tuple[int, ...]) -> BivarPoly:
    shape = Partition(parts)
    n = shape.size
    if n == 0:
        return ONE
    shift = sum(i * p for i, p in enumerate(parts))
    exponents: dict[int, int] = {}
    for d in range(2, n + 1):
        exponents[d] = n // d
    for h in shape.hook_lengths():
        for d in _divisors(h):
            if d >= 2:
                exponents[d] -= 1
    dense = [1]
    for d in sorted(exponents):
        e = exponents[d]
        if e < 0:
            raise ValueError("hook multiset exceeds factorial multiplicities")
        cyc = list(_cyclotomic(d))
        for _ in range(e):
            dense = _dense_mul(dense, cyc)
    return BivarPoly.from_q_coefficients(dense, shift=shift)


def f_poly_hook(shape: Partition) -> BivarPoly:
    """Maj generating polynomial of a straight shape via the hook-length product.

    Exactly equals ``f_poly`` on straight shapes; assembled from cyclotomic
    factors of the q-factorial so no division ever leaves a remainder.
    """
    return _f_poly_hook_cached(shape.parts)


def syt_count(shape: Partition) -> int:
    """Number of standard fillings of a straight shape (hook-length formula)."""
    n = shape.size
    prod = 1
    for h in shape.hook_lengths():
        prod *= h
    count, rem = divmod(factorial(n), prod)
    if rem:
        raise ValueError("hook product does not divide n!")
    return count


@lru_cache(maxsize=None)
def _skew_count_cached(outer: tuple[int, ...], inner: tuple[int, ...]) -> int:
    if not inner:
        return syt_count(Partition(outer))
    return sum(1 for _ in enumerate_syt(SkewShape(Partition(outer), Partition(inner))))


def skew_syt_count(shape: SkewShape) -> int:
    """Number of standard fillings of a (possibly skew) shape."""
    return _skew_count_cached(shape.outer.parts, shape.inner.parts)
