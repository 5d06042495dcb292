"""Partitions in a k x (n-k) box, 01-words, and the statistics built on them.

Everything here is immutable and pure.  Partitions are stored canonically
(weakly decreasing, no trailing zeros), so they can be used as dict keys
everywhere else in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import (
    DoesNotFitBox,
    IndexOutOfRange,
    NegativePart,
    NotWeaklyDecreasing,
    QGrassError,
)


class Partition:
    """A partition: weakly decreasing nonnegative integers, trailing zeros dropped."""

    __slots__ = ("parts",)

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise NotWeaklyDecreasing(f"parts {parts} are not weakly decreasing")
        if parts and parts[-1] < 0:
            raise NegativePart(f"parts {parts} contain a negative entry")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def size(self) -> int:
        """Number of boxes, written |.| in the docstrings below."""
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 1-based, zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        """Containment of Young diagrams."""
        return all(self.part(i) >= other.part(i) for i in range(1, len(other.parts) + 1))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts!r}"


EMPTY_PARTITION = Partition()


@dataclass(frozen=True)
class GrassContext:
    """The pair (k, n) fixing the box: k rows, n-k columns."""

    k: int
    n: int

    def __post_init__(self):
        if not (1 <= self.k < self.n):
            raise QGrassError(f"context requires 1 <= k < n, got k={self.k}, n={self.n}")

    @property
    def cols(self) -> int:
        return self.n - self.k

    @property
    def num_classes(self) -> int:
        return math.comb(self.n, self.k)

    def fits(self, lam: Partition) -> bool:
        return len(lam) <= self.k and (not lam.parts or lam.parts[0] <= self.cols)

    def require_fits(self, lam: Partition) -> None:
        if not self.fits(lam):
            raise DoesNotFitBox(f"{lam!r} does not fit the {self.k} x {self.cols} box")


@dataclass(frozen=True)
class Word01:
    """Binary boundary word of a box partition: 0 = right step, 1 = up step."""

    bits: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]


def make_partition(parts: Sequence[int]) -> Partition:
    """Validating constructor; canonicalizes trailing zeros."""
    return Partition(parts)


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text format; "" and "0" denote the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return EMPTY_PARTITION
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise QGrassError(f"cannot parse partition from {text!r}") from exc
    return Partition(parts)


def format_partition(lam: Partition) -> str:
    """Inverse of parse_partition."""
    return ",".join(str(p) for p in lam.parts) if lam.parts else "0"


@lru_cache(maxsize=None)
def _word_bits(parts: tuple[int, ...], k: int, n: int) -> tuple[int, ...]:
    bits = [0] * n
    for j in range(1, k + 1):
        row = k + 1 - j
        pos = (parts[row - 1] if row <= len(parts) else 0) + j
        bits[pos - 1] = 1
    return tuple(bits)


def _bits_to_parts(bits: Sequence[int], k: int) -> tuple[int, ...]:
    ones = [pos for pos, b in enumerate(bits, start=1) if b]
    parts = [0] * k
    for j, pos in enumerate(ones, start=1):
        parts[k - j] = pos - j
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def to_word01(lam: Partition, ctx: GrassContext) -> Word01:
    """Boundary word of lam inside the box; the j-th one sits at lam_{k+1-j} + j."""
    ctx.require_fits(lam)
    return Word01(_word_bits(lam.parts, ctx.k, ctx.n))


def from_word01(word: Word01, ctx: GrassContext) -> Partition:
    """Decode a boundary word back into a box partition."""
    bits = tuple(word.bits)
    if len(bits) != ctx.n or sum(bits) != ctx.k or any(b not in (0, 1) for b in bits):
        raise QGrassError(f"not a length-{ctx.n} word with {ctx.k} ones: {bits}")
    return Partition(_bits_to_parts(bits, ctx.k))


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam.parts:
        return EMPTY_PARTITION
    return Partition(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1))


def complement(lam: Partition, ctx: GrassContext) -> Partition:
    """Complement inside the box, rotated; reverses the boundary word."""
    ctx.require_fits(lam)
    return Partition(ctx.cols - lam.part(ctx.k + 1 - i) for i in range(1, ctx.k + 1))


def cyclic_shift(lam: Partition, ctx: GrassContext, a: int) -> Partition:
    """Partition whose boundary word is lam's rotated left by a (a may be negative)."""
    ctx.require_fits(lam)
    a %= ctx.n
    if a == 0:
        return lam
    bits = _word_bits(lam.parts, ctx.k, ctx.n)
    return Partition(_bits_to_parts(bits[a:] + bits[:a], ctx.k))


@lru_cache(maxsize=None)
def _phi_table(parts: tuple[int, ...], k: int, n: int) -> tuple[int, ...]:
    bits = _word_bits(parts, k, n)
    table = [0]
    for b in bits:
        table.append(table[-1] + b)
    return tuple(table)


def phi(lam: Partition, ctx: GrassContext, i: int) -> int:
    """Number of up steps among the first i steps of the boundary word.

    Extended to all integers i by phi(i + n) = phi(i) + k.
    """
    ctx.require_fits(lam)
    q, r = divmod(i, ctx.n)
    return _phi_table(lam.parts, ctx.k, ctx.n)[r] + q * ctx.k


def diag(lam: Partition, ctx: GrassContext, i: int) -> int:
    """Number of cells (r, c) of lam with c - r = i, for -k <= i <= n-k."""
    ctx.require_fits(lam)
    if not (-ctx.k <= i <= ctx.cols):
        raise IndexOutOfRange(f"diagonal index {i} outside [{-ctx.k}, {ctx.cols}]")
    return sum(1 for r in range(max(1, 1 - i), ctx.k + 1) if lam.part(r) >= r + i)


def graded_key(parts: tuple[int, ...]) -> tuple:
    """Sort key: by size, then lexicographic with larger first parts first."""
    return (sum(parts), tuple(-p for p in parts))


@lru_cache(maxsize=None)
def _box_partitions(k: int, cols: int) -> tuple[tuple[int, ...], ...]:
    result = []

    def grow(prefix, bound):
        result.append(tuple(prefix))
        if len(prefix) == k:
            return
        for p in range(1, bound + 1):
            prefix.append(p)
            grow(prefix, p)
            prefix.pop()

    grow([], cols)
    result.sort(key=graded_key)
    return tuple(result)


def enumerate_pkn(ctx: GrassContext) -> list[Partition]:
    """All box partitions in graded lexicographic order (by size, then parts)."""
    return [Partition(t) for t in _box_partitions(ctx.k, ctx.cols)]


@lru_cache(maxsize=None)
def _box_partitions_of_size(k: int, cols: int, m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(t for t in _box_partitions(k, cols) if sum(t) == m)


def box_partitions_by_size(ctx: GrassContext, m: int) -> list[Partition]:
    """Box partitions with exactly m cells, in lexicographic order."""
    return [Partition(t) for t in _box_partitions_of_size(ctx.k, ctx.cols, m)]
