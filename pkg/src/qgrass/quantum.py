"""The quantum cohomology ring of Gr(k, n) over Z[q].

Basis classes are indexed by box partitions; a product is computed by
multiplying in the ring of symmetric polynomials in k variables and then
reducing every straggler shape modulo the quantum ideal with the rim-hook
rule.  Structure constants are exposed through three mutually independent
backends so the test suite can cross-check them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .cylindric import CylindricLoop
from .errors import ContextMismatch, IndexOutOfRange, QGrassError, TooManyRows
from .partitions import GrassContext, Partition, graded_key
from .schur import _mult_basis_canonical, toric_gw_table
from .tableaux import strip_successors

TermKey = tuple[Partition, int]


class QuantumClass:
    """Finite integer combination of q^d sigma_lambda over a fixed context.

    Negative q-degrees are admitted only on classes flagged as living in the
    localization at q.
    """

    __slots__ = ("ctx", "terms", "localized")

    def __init__(
        self,
        ctx: GrassContext,
        terms: Mapping[TermKey, int] | None = None,
        localized: bool = False,
    ):
        clean: dict[TermKey, int] = {}
        for (lam, d), c in (terms or {}).items():
            if c == 0:
                continue
            ctx.require_fits(lam)
            if d < 0 and not localized:
                raise QGrassError(f"negative q-degree {d} outside the localization")
            clean[(lam, d)] = c
        self.ctx = ctx
        self.terms = clean
        self.localized = localized

    def coefficient(self, lam: Partition, d: int) -> int:
        return self.terms.get((lam, d), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def q_degrees(self) -> set[int]:
        return {d for (_, d) in self.terms}

    def sorted_terms(self) -> list[tuple[TermKey, int]]:
        return sorted(self.terms.items(), key=lambda t: (t[0][1],) + graded_key(t[0][0].parts))

    def classical_part(self) -> "QuantumClass":
        return QuantumClass(
            self.ctx, {key: c for key, c in self.terms.items() if key[1] == 0}
        )

    def q_shift(self, m: int, localized: bool | None = None) -> "QuantumClass":
        flag = self.localized if localized is None else localized
        return QuantumClass(
            self.ctx, {(lam, d + m): c for (lam, d), c in self.terms.items()}, flag
        )

    def __add__(self, other: "QuantumClass") -> "QuantumClass":
        if self.ctx != other.ctx:
            raise ContextMismatch("classes live over different contexts")
        acc = dict(self.terms)
        for key, c in other.terms.items():
            acc[key] = acc.get(key, 0) + c
        return QuantumClass(self.ctx, acc, self.localized or other.localized)

    def __sub__(self, other: "QuantumClass") -> "QuantumClass":
        return self + other.scaled(-1)

    def scaled(self, a: int) -> "QuantumClass":
        return QuantumClass(
            self.ctx, {key: a * c for key, c in self.terms.items()}, self.localized
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuantumClass)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ctx, tuple(self.sorted_terms())))

    def to_json_dict(self) -> dict:
        return {
            "k": self.ctx.k,
            "n": self.ctx.n,
            "terms": [
                {"d": d, "partition": list(lam.parts), "coeff": c}
                for (lam, d), c in self.sorted_terms()
            ],
        }

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for (lam, d), c in self.sorted_terms():
            body = f"s[{','.join(str(p) for p in lam.parts)}]" if lam.parts else ""
            q = "" if d == 0 else "q" if d == 1 else f"q^{d}"
            mag = abs(c)
            head = "" if (mag == 1 and (body or q)) else str(mag)
            text = "*".join(x for x in (head, q, body) if x)
            if not chunks:
                chunks.append(("-" if c < 0 else "") + text)
            else:
                chunks.append(("- " if c < 0 else "+ ") + text)
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"QuantumClass({self.ctx.k},{self.ctx.n}; {self})"


def schubert_class(lam: Partition, ctx: GrassContext, d: int = 0) -> QuantumClass:
    ctx.require_fits(lam)
    return QuantumClass(ctx, {(lam, d): 1}, localized=d < 0)


def unit_class(ctx: GrassContext) -> QuantumClass:
    return QuantumClass(ctx, {(Partition(), 0): 1})


@dataclass(frozen=True)
class RimHookReduction:
    """Image of a straggler Schur polynomial modulo the quantum ideal."""

    core: Partition | None
    d: int | None
    sign: int | None
    vanished: bool


@lru_cache(maxsize=None)
def _reduce_raw(
    tau: tuple[int, ...], k: int, n: int
) -> tuple[tuple[int, ...], int, int] | None:
    """Abacus reduction: beads tau_i + k - i; one hook removal drops a bead by n.

    The height of a removal is the number of beads strictly between the old
    and the new position; the total sign is well defined even though single
    heights depend on the removal order.
    """
    beads = {(tau[i] if i < len(tau) else 0) + k - i - 1 for i in range(k)}
    d = 0
    heights = 0
    moved = True
    while moved:
        moved = False
        for b in sorted(beads, reverse=True):
            if b - n >= 0 and (b - n) not in beads:
                heights += sum(1 for x in beads if b - n < x < b)
                beads.remove(b)
                beads.add(b - n)
                d += 1
                moved = True
                break
    core = []
    for i, b in enumerate(sorted(beads, reverse=True)):
        core.append(b - (k - i - 1))
    while core and core[-1] == 0:
        core.pop()
    if core and core[0] > n - k:
        return None
    sign = -1 if (d * (k - 1) - heights) % 2 else 1
    return tuple(core), d, sign


def rimhook_reduce(tau: Partition, ctx: GrassContext) -> RimHookReduction:
    """Reduce s_tau modulo the quantum ideal of Gr(k, n)."""
    if len(tau) > ctx.k:
        raise TooManyRows(f"{tau!r} has more than {ctx.k} rows")
    raw = _reduce_raw(tau.parts, ctx.k, ctx.n)
    if raw is None:
        return RimHookReduction(None, None, None, True)
    core, d, sign = raw
    return RimHookReduction(Partition(core), d, sign, False)


_QPROD_CACHE: dict[tuple, dict[tuple[tuple[int, ...], int], int]] = {}


def _basis_qprod(
    ctx: GrassContext, a: tuple[int, ...], b: tuple[int, ...]
) -> dict[tuple[tuple[int, ...], int], int]:
    """sigma_a * sigma_b as a map (partition, q-degree) -> coefficient."""
    if (len(b), sum(b), b) < (len(a), sum(a), a):
        a, b = b, a
    key = (ctx.k, ctx.n, a, b)
    cached = _QPROD_CACHE.get(key)
    if cached is not None:
        return cached
    out: dict[tuple[tuple[int, ...], int], int] = {}
    for tau, c in _mult_basis_canonical(a, b, ctx.k).items():
        raw = _reduce_raw(tau, ctx.k, ctx.n)
        if raw is None:
            continue
        core, d, sign = raw
        k2 = (core, d)
        out[k2] = out.get(k2, 0) + sign * c
    out = {key2: c for key2, c in out.items() if c != 0}
    _QPROD_CACHE[key] = out
    return out


def quantum_product(f: QuantumClass, g: QuantumClass) -> QuantumClass:
    """Bilinear extension of the basis product; commutative and associative."""
    if f.ctx != g.ctx:
        raise ContextMismatch("classes live over different contexts")
    ctx = f.ctx
    acc: dict[TermKey, int] = {}
    for (lam, d1), a in f.terms.items():
        for (mu, d2), b in g.terms.items():
            for (nu, dd), c in _basis_qprod(ctx, lam.parts, mu.parts).items():
                key = (Partition(nu), d1 + d2 + dd)
                acc[key] = acc.get(key, 0) + a * b * c
    return QuantumClass(ctx, acc, f.localized or g.localized)


def quantum_pieri(kind: str, r: int, mu: Partition, ctx: GrassContext) -> QuantumClass:
    """Product of sigma_mu with a generator: e_r adds vertical strips, h_r horizontal."""
    if kind == "e":
        if not 1 <= r <= ctx.k:
            raise IndexOutOfRange(f"e index {r} outside 1..{ctx.k}")
        direction = "vertical"
    elif kind == "h":
        if not 1 <= r <= ctx.cols:
            raise IndexOutOfRange(f"h index {r} outside 1..{ctx.cols}")
        direction = "horizontal"
    else:
        raise QGrassError(f"kind must be 'e' or 'h', got {kind!r}")
    ctx.require_fits(mu)
    terms: dict[TermKey, int] = {}
    for loop in strip_successors(CylindricLoop(mu, 0, ctx), r, direction):
        terms[(loop.base, loop.offset)] = 1
    return QuantumClass(ctx, terms)


def _class_times_h(f: QuantumClass, c: int, ctx: GrassContext) -> QuantumClass:
    if c == 0:
        return f
    if c < 0 or c > ctx.cols:
        return QuantumClass(ctx)
    acc: dict[TermKey, int] = {}
    for (lam, d), a in f.terms.items():
        for (mu, dd), b in quantum_pieri("h", c, lam, ctx).terms.items():
            key = (mu, d + dd)
            acc[key] = acc.get(key, 0) + a * b
    return QuantumClass(ctx, acc, f.localized)


def giambelli_class(lam: Partition, ctx: GrassContext) -> QuantumClass:
    """Evaluate det(h_{lam_i + j - i}) in the ring; the result is sigma_lam.

    Laplace expansion row by row, sharing the partial products of
    permutations that use the same column set.
    """
    ctx.require_fits(lam)
    k = ctx.k
    states: dict[int, QuantumClass] = {0: unit_class(ctx)}
    for i in range(1, k + 1):
        nxt: dict[int, QuantumClass] = {}
        for mask, cls in states.items():
            for j in range(1, k + 1):
                bit = 1 << (j - 1)
                if mask & bit:
                    continue
                term = _class_times_h(cls, lam.part(i) + j - i, ctx)
                if term.is_zero():
                    continue
                used_above = bin(mask >> j).count("1")
                signed = term.scaled(-1 if used_above % 2 else 1)
                key = mask | bit
                nxt[key] = nxt[key] + signed if key in nxt else signed
        states = nxt
    full = (1 << k) - 1
    return states.get(full, QuantumClass(ctx))


def gw_invariant(
    mu: Partition,
    nu: Partition,
    lam: Partition,
    d: int,
    ctx: GrassContext,
    backend: str = "bcf",
) -> int:
    """The structure constant of q^d sigma_lam in sigma_mu * sigma_nu.

    Zero whenever the degree condition |lam| = |mu| + |nu| - d*n fails.
    Backends: "bcf" (ring product and rim-hook reduction), "toric" (signed
    Kostka sums), "niltl" (operator determinant).
    """
    for p in (mu, nu, lam):
        ctx.require_fits(p)
    if d < 0 or lam.size != mu.size + nu.size - d * ctx.n:
        return 0
    if backend == "bcf":
        return _basis_qprod(ctx, mu.parts, nu.parts).get((lam.parts, d), 0)
    if backend == "toric":
        return toric_gw_table(lam, d, mu, ctx).get(nu.parts, 0)
    if backend == "niltl":
        from .niltl import schubert_op

        op = schubert_op(nu, ctx)
        return op.entry_by_partition(lam, mu).coefficient(d)
    raise QGrassError(f"unknown backend {backend!r}")
