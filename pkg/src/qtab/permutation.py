"""Permutations, descent statistics, restriction operators, and 0-1 matrices.

A permutation is stored in one-line notation with values 1..n.  Four
restriction operators act on it:

* ``restrict_low(k)``  -- the subword of values <= k (already a permutation of [k]);
* ``restrict_high(k)`` -- the subword of values > k, shifted down by k;
* ``prefix(k)``        -- the first k letters, standardized;
* ``suffix(k)``        -- the letters after position k, standardized.

The module also provides the block decomposition of a permutation matrix cut
into four submatrices by a column split at ``a`` and a row split at ``b``,
together with its inverse, and the shuffle of two permutations along a binary
word.  These are the combinatorial engines behind the exact containment
identities in :mod:`qtab.containment`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "Permutation",
    "BinaryWord",
    "ZeroOneMatrix",
    "PhiImage",
    "standardize",
    "permutations",
    "involutions",
    "matrix_of",
    "phi",
    "phi_inverse",
    "shuffle",
]


def standardize(values: Sequence[int]) -> "Permutation":
    """The permutation order-isomorphic to a sequence of distinct integers."""
    ranks = {v: r + 1 for r, v in enumerate(sorted(values))}
    return Permutation(tuple(ranks[v] for v in values))


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] in one-line notation; n = 0 is the empty permutation."""

    word: tuple[int, ...]

    def __post_init__(self):
        if tuple(sorted(self.word)) != tuple(range(1, len(self.word) + 1)):
            raise ValueError(f"{self.word} is not a permutation of 1..{len(self.word)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse one-line notation.

        Accepts space- or comma-separated values, or the compact digit form
        for n <= 9 (e.g. ``513697428``).  The empty string is the empty
        permutation.
        """
        text = text.strip()
        if not text:
            return cls(())
        if any(ch in text for ch in " ,"):
            values = tuple(int(tok) for tok in text.replace(",", " ").split())
        else:
            if not text.isdigit():
                raise ValueError(f"cannot parse permutation from {text!r}")
            values = tuple(int(ch) for ch in text)
        return cls(values)

    @property
    def size(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.word)

    def compact(self) -> str:
        """Digit string form, only valid for n <= 9."""
        if self.size > 9:
            raise ValueError("compact form requires n <= 9")
        return "".join(str(v) for v in self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, v in enumerate(self.word, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_involution(self) -> bool:
        return all(self.word[v - 1] == i + 1 for i, v in enumerate(self.word))

    # -- statistics ---------------------------------------------------------

    def descents(self) -> frozenset[int]:
        """Positions i in [n-1] where the letter drops."""
        w = self.word
        return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])

    def maj(self) -> int:
        """Major index: the sum of the descent positions."""
        w = self.word
        return sum(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])

    def imaj(self) -> int:
        """Major index of the inverse permutation."""
        return self.inverse().maj()

    # -- restriction operators ------------------------------------------------

    def _check_cut(self, k: int) -> None:
        if not 0 <= k <= self.size:
            raise ValueError(f"cut point {k} out of range 0..{self.size}")

    def restrict_low(self, k: int) -> "Permutation":
        """Subword of values <= k; already a permutation of [k]."""
        self._check_cut(k)
        return Permutation(tuple(v for v in self.word if v <= k))

    def restrict_high(self, k: int) -> "Permutation":
        """Subword of values > k, shifted down to a permutation of [n-k]."""
        self._check_cut(k)
        return Permutation(tuple(v - k for v in self.word if v > k))

    def prefix(self, k: int) -> "Permutation":
        """Standardization of the first k letters."""
        self._check_cut(k)
        return standardize(self.word[:k])

    def suffix(self, k: int) -> "Permutation":
        """Standardization of the letters after position k."""
        self._check_cut(k)
        return standardize(self.word[k:])


def permutations(n: int) -> Iterator[Permutation]:
    """All permutations of [n] in lexicographic order."""
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def involutions(n: int) -> Iterator[Permutation]:
    """All involutions of [n], in a deterministic order.

    Built directly from fixed points and 2-cycles, so the cost is the
    involution count rather than n!.
    """

    def build(remaining: tuple[int, ...], mapping: dict[int, int]) -> Iterator[dict[int, int]]:
        if not remaining:
            yield mapping
            return
        x = remaining[0]
        rest = remaining[1:]
        yield from build(rest, {**mapping, x: x})
        for idx, y in enumerate(rest):
            rest2 = rest[:idx] + rest[idx + 1 :]
            yield from build(rest2, {**mapping, x: y, y: x})

    for mapping in build(tuple(range(1, n + 1)), {}):
        yield Permutation(tuple(mapping[i] for i in range(1, n + 1)))


@dataclass(frozen=True)
class BinaryWord:
    """A word of 0s and 1s; ``weight`` counts the 1s."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"{self.bits} is not a 0/1 word")

    @classmethod
    def parse(cls, text: str) -> "BinaryWord":
        text = text.strip()
        return cls(tuple(int(ch) for ch in text))

    @property
    def length(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def binary_words(length: int, weight: int) -> Iterator[BinaryWord]:
    """All 0/1 words of the given length and weight, lexicographically."""
    for ones in itertools.combinations(range(length), weight):
        bits = [0] * length
        for i in ones:
            bits[i] = 1
        yield BinaryWord(tuple(bits))


@dataclass(frozen=True)
class ZeroOneMatrix:
    """A 0-1 matrix in which every row and column holds at most one 1."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        for row in self.entries:
            if any(x not in (0, 1) for x in row):
                raise ValueError("entries must be 0 or 1")
            if sum(row) > 1:
                raise ValueError("row with more than one 1")
        for j in range(self.ncols):
            if sum(row[j] for row in self.entries) > 1:
                raise ValueError("column with more than one 1")

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @classmethod
    def from_permutation(cls, perm: Permutation) -> "ZeroOneMatrix":
        n = perm.size
        return cls(
            tuple(tuple(1 if perm.word[i] == j + 1 else 0 for j in range(n)) for i in range(n))
        )

    def compress(self) -> Permutation:
        """The permutation left after deleting all-zero rows and columns."""
        used_cols = sorted(
            j for j in range(self.ncols) if any(row[j] for row in self.entries)
        )
        col_rank = {j: r + 1 for r, j in enumerate(used_cols)}
        word = []
        for row in self.entries:
            for j, x in enumerate(row):
                if x:
                    word.append(col_rank[j])
                    break
        return Permutation(tuple(word))

    def row_word(self) -> BinaryWord:
        return BinaryWord(tuple(sum(row) for row in self.entries))

    def col_word(self) -> BinaryWord:
        return BinaryWord(
            tuple(sum(row[j] for row in self.entries) for j in range(self.ncols))
        )


def matrix_of(perm: Permutation) -> ZeroOneMatrix:
    """Permutation matrix: entry (i, j) is 1 exactly when the i-th letter is j."""
    return ZeroOneMatrix.from_permutation(perm)


@dataclass(frozen=True)
class PhiImage:
    """Image of a permutation under the 2x2 block decomposition of its matrix.

    The matrix of a permutation of [a + m] = [b + n] is cut after column a and
    after row b.  ``p11``, ``p12``, ``p21``, ``p22`` are the compressions of
    the four blocks; ``c1`` and ``c2`` are the column words of the bottom-left
    and bottom-right blocks, ``r1`` and ``r2`` the row words of the top-right
    and bottom-right blocks.
    """

    p11: Permutation
    p12: Permutation
    p21: Permutation
    p22: Permutation
    c1: BinaryWord
    r1: BinaryWord
    c2: BinaryWord
    r2: BinaryWord
    a: int
    b: int

    def __post_init__(self):
        a, b = self.a, self.b
        m, n = len(self.c2), len(self.r2)
        if len(self.c1) != a or len(self.r1) != b:
            raise ValueError("word lengths do not match the cut sizes")
        if a + m != b + n:
            raise ValueError("block dimensions are inconsistent")
        j = self.p11.size
        k = n - a + j
        if self.p12.size != b - j or self.p21.size != a - j or self.p22.size != k:
            raise ValueError("block permutation sizes do not match")
        if (
            self.c1.weight != a - j
            or self.r1.weight != b - j
            or self.c2.weight != k
            or self.r2.weight != k
        ):
            raise ValueError("word weights do not match the block sizes")

    def as_tuple(self):
        return (self.p11, self.p12, self.p21, self.p22, self.c1, self.r1, self.c2, self.r2)


def phi(perm: Permutation, a: int, b: int) -> PhiImage:
    """Decompose a permutation along a column cut at a and a row cut at b."""
    total = perm.size
    m, n = total - a, total - b
    if a < 0 or b < 0 or m < 0 or n < 0:
        raise ValueError(f"cuts a={a}, b={b} out of range for size {total}")
    w = perm.word
    inv = perm.inverse().word  # inv[j-1] = position of value j

    def block(rows: range, cols: range) -> Permutation:
        colset = set(cols)
        return standardize([w[i - 1] for i in rows if w[i - 1] in colset])

    top, bottom = range(1, b + 1), range(b + 1, total + 1)
    left, right = range(1, a + 1), range(a + 1, total + 1)
    return PhiImage(
        p11=block(top, left),
        p12=block(top, right),
        p21=block(bottom, left),
        p22=block(bottom, right),
        c1=BinaryWord(tuple(1 if inv[j - 1] > b else 0 for j in left)),
        r1=BinaryWord(tuple(1 if w[i - 1] > a else 0 for i in top)),
        c2=BinaryWord(tuple(1 if inv[j - 1] > b else 0 for j in right)),
        r2=BinaryWord(tuple(1 if w[i - 1] > a else 0 for i in bottom)),
        a=a,
        b=b,
    )


def phi_inverse(image: PhiImage) -> Permutation:
    """Reassemble the permutation from its block decomposition."""
    a, b = image.a, image.b
    m, n = len(image.c2), len(image.r2)
    total = a + m
    word = [0] * total
    top_left_rows = [i for i in range(1, b + 1) if image.r1.bits[i - 1] == 0]
    top_right_rows = [i for i in range(1, b + 1) if image.r1.bits[i - 1] == 1]
    bottom_left_rows = [b + i for i in range(1, n + 1) if image.r2.bits[i - 1] == 0]
    bottom_right_rows = [b + i for i in range(1, n + 1) if image.r2.bits[i - 1] == 1]
    left_top_cols = [j for j in range(1, a + 1) if image.c1.bits[j - 1] == 0]
    left_bottom_cols = [j for j in range(1, a + 1) if image.c1.bits[j - 1] == 1]
    right_top_cols = [a + j for j in range(1, m + 1) if image.c2.bits[j - 1] == 0]
    right_bottom_cols = [a + j for j in range(1, m + 1) if image.c2.bits[j - 1] == 1]
    blocks = [
        (image.p11, top_left_rows, left_top_cols),
        (image.p12, top_right_rows, right_top_cols),
        (image.p21, bottom_left_rows, left_bottom_cols),
        (image.p22, bottom_right_rows, right_bottom_cols),
    ]
    for perm, rows, cols in blocks:
        if perm.size != len(rows) or perm.size != len(cols):
            raise ValueError("block does not fit its row/column slots")
        for s, v in enumerate(perm.word):
            word[rows[s] - 1] = cols[v - 1]
    return Permutation(tuple(word))


def shuffle(sigma: Permutation, tau: Permutation, word: BinaryWord) -> Permutation:
    """Interleave sigma and the shifted tau along a 0/1 word.

    The i-th 0 of the word receives the i-th letter of sigma; the j-th 1
    receives a + tau_j, where a is the size of sigma.
    """
    a, b = sigma.size, tau.size
    if word.length != a + b or word.weight != b:
        raise ValueError(
            f"word of length {word.length}, weight {word.weight} cannot shuffle "
            f"sizes {a} and {b}"
        )
    out = []
    i = j = 0
    for bit in word.bits:
        if bit == 0:
            out.append(sigma.word[i])
            i += 1
        else:
            out.append(a + tau.word[j])
            j += 1
    return Permutation(tuple(out))
