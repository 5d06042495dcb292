"""Littlewood-Richardson arithmetic and Schur-basis expansions.

Two independent code paths compute the same structure constants:

* ``lr_coefficient`` enumerates lattice-word skew tableaux one coefficient
  at a time; it is the auditable reference rule.
* products expand a whole row of coefficients at once by growing the first
  factor through horizontal strips of the second, with the ballot condition
  enforced between consecutive strips.

The test suite checks the two against each other exhaustively on small
inputs; the product path is the one fast enough for large boxes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Mapping

from .cylindric import EMPTY, make_shape
from .errors import NotContained, VarMismatch
from .partitions import GrassContext, Partition, box_partitions_by_size, graded_key
from .tableaux import quantum_kostka


@dataclass(frozen=True)
class SchurExpansion:
    """Finite integer combination of Schur polynomials in nvars variables."""

    nvars: int
    terms: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {nu: c for nu, c in self.terms.items() if c != 0}
        for nu in clean:
            if len(nu) > self.nvars:
                raise VarMismatch(f"{nu!r} has more than {self.nvars} rows")
        object.__setattr__(self, "terms", clean)

    def coefficient(self, nu: Partition) -> int:
        return self.terms.get(nu, 0)

    def sorted_terms(self) -> list[tuple[Partition, int]]:
        return sorted(self.terms.items(), key=lambda t: graded_key(t[0].parts))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchurExpansion)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"partition": list(nu.parts), "coeff": c} for nu, c in self.sorted_terms()
            ],
        }

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for nu, c in self.sorted_terms():
            body = f"s[{','.join(str(p) for p in nu.parts)}]" if nu.parts else ""
            mag = abs(c)
            head = "" if (mag == 1 and body) else str(mag)
            text = "*".join(x for x in (head, body) if x)
            if not chunks:
                chunks.append(("-" if c < 0 else "") + text)
            else:
                chunks.append(("- " if c < 0 else "+ ") + text)
        return " ".join(chunks)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The multiplicity of s_nu in s_lam * s_mu, by the lattice-word rule.

    Counts fillings of the skew diagram nu/lam with content mu that weakly
    increase along rows, strictly increase down columns, and whose reverse
    reading word is a ballot sequence.  Returns 0 whenever sizes or
    containment rule the coefficient out.
    """
    return _lr_count(lam.parts, mu.parts, nu.parts)


@lru_cache(maxsize=None)
def _lr_count(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    rows = len(nu)
    if len(lam) > rows or any(
        (lam[i] if i < len(lam) else 0) > nu[i] for i in range(rows)
    ):
        return 0
    if not mu:
        return 1
    values = len(mu)
    # Reverse reading order: top to bottom, right to left within a row.
    cells = []
    for r in range(rows):
        lo = lam[r] if r < len(lam) else 0
        for c in range(nu[r] - 1, lo - 1, -1):
            cells.append((r, c))
    entry: dict[tuple[int, int], int] = {}
    counts = [0] * (values + 1)
    total = 0

    def fill(pos: int) -> None:
        nonlocal total
        if pos == len(cells):
            total += 1
            return
        r, c = cells[pos]
        lo = 1
        above = entry.get((r - 1, c))
        if above is not None:
            lo = above + 1
        hi = values
        right = entry.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            entry[(r, c)] = v
            counts[v] += 1
            fill(pos + 1)
            counts[v] -= 1
        entry.pop((r, c), None)

    fill(0)
    return total


_MULT_CACHE: dict[tuple, dict[tuple[int, ...], int]] = {}


def _mult_basis(
    lam: tuple[int, ...], mu: tuple[int, ...], cap: int
) -> dict[tuple[int, ...], int]:
    """Expand s_lam * s_mu keeping at most cap rows.

    Grows lam by horizontal strips of sizes mu_1, mu_2, ... subject to the
    ballot condition between consecutive strips; each completed chain is one
    lattice-word tableau, so the leaf count at nu equals the coefficient.
    """
    if len(lam) > cap:
        return {}
    key = (lam, mu, cap)
    cached = _MULT_CACHE.get(key)
    if cached is not None:
        return cached

    out: dict[tuple[int, ...], int] = {}
    p = list(lam) + [0] * (cap - len(lam))

    def place_strip(i: int, prev_cum: tuple[int, ...] | None) -> None:
        if i == len(mu):
            nu = tuple(p)
            while nu and nu[-1] == 0:
                nu = nu[:-1]
            out[nu] = out.get(nu, 0) + 1
            return
        size = mu[i]
        old = p[:]
        cur = [0] * (cap + 1)

        def fill_row(r: int, placed: int) -> None:
            if r > cap:
                if placed == size:
                    place_strip(i + 1, tuple(cur))
                return
            budget = size - placed
            a_max = budget
            if r >= 2:
                a_max = min(a_max, old[r - 2] - old[r - 1])
            if prev_cum is not None:
                a_max = min(a_max, prev_cum[r - 1] - cur[r - 1])
            for a in range(a_max + 1):
                p[r - 1] = old[r - 1] + a
                cur[r] = cur[r - 1] + a
                fill_row(r + 1, placed + a)
            p[r - 1] = old[r - 1]

        fill_row(1, 0)

    place_strip(0, None)
    _MULT_CACHE[key] = out
    return out


def _mult_basis_canonical(
    a: tuple[int, ...], b: tuple[int, ...], cap: int
) -> dict[tuple[int, ...], int]:
    # The product is symmetric; keep one cache entry per unordered pair.
    if (len(b), sum(b), b) < (len(a), sum(a), a):
        a, b = b, a
    return _mult_basis(a, b, cap)


def schur_product(
    f: SchurExpansion, g: SchurExpansion, row_cap: int | None = None
) -> SchurExpansion:
    """Bilinear product of expansions; rows beyond row_cap (or nvars) vanish."""
    if f.nvars != g.nvars:
        raise VarMismatch(f"cannot multiply expansions in {f.nvars} and {g.nvars} variables")
    cap = f.nvars if row_cap is None else min(row_cap, f.nvars)
    acc: dict[Partition, int] = {}
    for lam, a in f.terms.items():
        for mu, b in g.terms.items():
            for nu, c in _mult_basis_canonical(lam.parts, mu.parts, cap).items():
                key = Partition(nu)
                acc[key] = acc.get(key, 0) + a * b * c
    return SchurExpansion(f.nvars, acc)


@lru_cache(maxsize=None)
def _partitions_into(total: int, max_parts: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if total == 0:
        return ((),)
    if max_parts == 0 or max_part == 0:
        return ()
    found = []
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions_into(total - first, max_parts - 1, first):
            found.append((first,) + rest)
    return tuple(found)


def skew_expand(lam: Partition, mu: Partition, nvars: int) -> SchurExpansion:
    """Schur expansion of the skew polynomial for lam/mu in nvars variables."""
    if not lam.contains(mu):
        raise NotContained(f"{mu!r} is not contained in {lam!r}")
    total = lam.size - mu.size
    terms: dict[Partition, int] = {}
    for parts in _partitions_into(total, nvars, lam.part(1)):
        c = _lr_count(mu.parts, parts, lam.parts)
        if c:
            terms[Partition(parts)] = c
    return SchurExpansion(nvars, terms)


def _perm_sign(w: tuple[int, ...]) -> int:
    inv = sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
    return -1 if inv % 2 else 1


def _signed_offsets(m: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    return tuple(
        (_perm_sign(w), tuple(w[i] - (i + 1) for i in range(m)))
        for w in permutations(range(1, m + 1))
    )


def _alternating_kostka_sum(
    lam: Partition, d: int, mu: Partition, nu_parts: tuple[int, ...], ctx: GrassContext, m: int
) -> int:
    """Coefficient extraction via the signed sum of shifted Kostka counts."""
    total = 0
    nu_pad = nu_parts + (0,) * (m - len(nu_parts))
    for sign, offs in _signed_offsets(m):
        beta = tuple(nu_pad[i] + offs[i] for i in range(m))
        if any(b < 0 or b > ctx.cols for b in beta):
            continue
        count = quantum_kostka(lam, d, mu, beta, ctx)
        if count:
            total += sign * count
    return total


def toric_schur_expand(
    lam: Partition, d: int, mu: Partition, ctx: GrassContext, nvars: int
) -> SchurExpansion:
    """Schur expansion of the cylindric weight generating function in nvars variables.

    For nvars = k and a toric shape the coefficients are the structure
    constants of the quantum product; for a valid non-toric shape with
    nvars = k the expansion is identically zero.
    """
    ctx.require_fits(lam)
    ctx.require_fits(mu)
    shape = make_shape(lam, d, mu, ctx)
    if shape is EMPTY:
        return SchurExpansion(nvars, {})
    total = shape.size
    terms: dict[Partition, int] = {}
    for parts in _partitions_into(total, nvars, total):
        c = _alternating_kostka_sum(lam, d, mu, parts, ctx, nvars)
        if c:
            terms[Partition(parts)] = c
    return SchurExpansion(nvars, terms)


_GW_TABLE_CACHE: dict[tuple, dict[tuple[int, ...], int]] = {}


def toric_gw_table(
    lam: Partition, d: int, mu: Partition, ctx: GrassContext
) -> dict[tuple[int, ...], int]:
    """Structure constants read off the toric expansion, indexed by box partitions."""
    key = (ctx.k, ctx.n, lam.parts, d, mu.parts)
    cached = _GW_TABLE_CACHE.get(key)
    if cached is not None:
        return cached
    table: dict[tuple[int, ...], int] = {}
    shape = make_shape(lam, d, mu, ctx)
    if shape is not EMPTY:
        size = shape.size
        if 0 <= size <= ctx.k * ctx.cols:
            for nu in box_partitions_by_size(ctx, size):
                c = _alternating_kostka_sum(lam, d, mu, nu.parts, ctx, ctx.k)
                if c:
                    table[nu.parts] = c
    _GW_TABLE_CACHE[key] = table
    return table
