"""Command line front end: products, invariants, expansions, verification.

Exit codes: 0 success, 1 invalid input, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from itertools import permutations

from .errors import QGrassError
from .niltl import verify_relations
from .partitions import (
    GrassContext,
    box_partitions_by_size,
    enumerate_pkn,
    parse_partition,
)
from .quantum import (
    giambelli_class,
    gw_invariant,
    quantum_product,
    rimhook_reduce,
    schubert_class,
)
from .schur import lr_coefficient, toric_schur_expand
from .symmetry import (
    check_strange_duality_pair,
    dmin_dmax,
    gw_triple,
    hidden_symmetry_check,
    q_power_set,
    strange_duality,
)
from .tableaux import quantum_kostka

BACKENDS = ("bcf", "toric", "niltl")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _context(args) -> GrassContext:
    return GrassContext(args.k, args.n)


def _add_common(sub, *, nvars=False, d=False, nu=False, beta=False, backend=False):
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--lambda", dest="lam", type=parse_partition, required=True)
    if nu or backend:
        sub.add_argument("--nu", type=parse_partition, required=nu)
    if d:
        sub.add_argument("--d", type=int, default=None)
    if nvars:
        sub.add_argument("--nvars", type=int, required=True)
    if beta:
        sub.add_argument("--beta", type=str, required=True,
                         help="weight composition, comma separated")
    if backend:
        sub.add_argument("--backend", choices=BACKENDS + ("all",), default="bcf")


def _cmd_qprod(args) -> int:
    ctx = _context(args)
    result = quantum_product(
        schubert_class(args.lam, ctx), schubert_class(args.mu, ctx)
    )
    if args.format == "json":
        _emit_json(result.to_json_dict())
    else:
        print(result)
    return 0


def _cmd_gw(args) -> int:
    ctx = _context(args)
    mu, nu, lam = args.mu, args.nu, args.lam
    if args.d is not None:
        degrees = [args.d]
    else:
        num = mu.size + nu.size - lam.size
        q, r = divmod(num, ctx.n)
        degrees = [q] if (r == 0 and q >= 0) else []
    rows = []
    for d in degrees:
        if args.backend == "all":
            values = {b: gw_invariant(mu, nu, lam, d, ctx, b) for b in BACKENDS}
            rows.append({"d": d, **values})
        else:
            rows.append({"d": d, "value": gw_invariant(mu, nu, lam, d, ctx, args.backend)})
    if args.format == "json":
        _emit_json({
            "k": ctx.k, "n": ctx.n,
            "lambda": list(lam.parts), "mu": list(mu.parts), "nu": list(nu.parts),
            "values": rows,
        })
    else:
        for row in rows:
            detail = " ".join(f"{key}={row[key]}" for key in row if key != "d")
            print(f"d={row['d']}: {detail}")
    return 0


def _cmd_toric_schur(args) -> int:
    ctx = _context(args)
    if args.d is None or args.d < 0:
        raise QGrassError("toric-schur requires --d >= 0")
    expansion = toric_schur_expand(args.lam, args.d, args.mu, ctx, args.nvars)
    if args.format == "json":
        _emit_json(expansion.to_json_dict())
    else:
        print(expansion)
    return 0


def _cmd_kostka(args) -> int:
    ctx = _context(args)
    if args.d is None or args.d < 0:
        raise QGrassError("kostka requires --d >= 0")
    try:
        beta = tuple(int(tok) for tok in args.beta.split(",")) if args.beta else ()
    except ValueError as exc:
        raise QGrassError(f"cannot parse weight {args.beta!r}") from exc
    value = quantum_kostka(args.lam, args.d, args.mu, beta, ctx)
    if args.format == "json":
        _emit_json({"value": value})
    else:
        print(value)
    return 0


def _cmd_qpowers(args) -> int:
    ctx = _context(args)
    interval = dmin_dmax(args.lam, args.mu, ctx)
    powers = q_power_set(args.lam, args.mu, ctx)
    if powers != set(interval.members()):
        print(
            f"error: product powers {sorted(powers)} disagree with interval "
            f"[{interval.dmin}, {interval.dmax}]",
            file=sys.stderr,
        )
        return 2
    if args.format == "json":
        _emit_json(interval.to_json_dict())
    else:
        print(f"[{', '.join(str(d) for d in interval.members())}]")
    return 0


def _cmd_reduce(args) -> int:
    ctx = _context(args)
    red = rimhook_reduce(args.lam, ctx)
    if args.format == "json":
        _emit_json({
            "vanished": red.vanished,
            "core": None if red.vanished else list(red.core.parts),
            "d": red.d,
            "sign": red.sign,
        })
    else:
        if red.vanished:
            print("0")
        else:
            q = "" if red.d == 0 else "q" if red.d == 1 else f"q^{red.d}"
            body = f"s[{','.join(str(p) for p in red.core.parts)}]" if red.core.parts else ""
            text = "*".join(x for x in (q, body) if x) or "1"
            print(("-" if red.sign < 0 else "") + text)
    return 0


def _feasible_degrees(ctx, total: int) -> list[int]:
    degrees = []
    for d in range(total // ctx.n + 1):
        if 0 <= total - d * ctx.n <= ctx.k * ctx.cols:
            degrees.append(d)
    return degrees


def _check_backends(ctx, jobs: int) -> bool:
    basis = enumerate_pkn(ctx)

    def pair_ok(pair) -> bool:
        mu, nu = pair
        for d in _feasible_degrees(ctx, mu.size + nu.size):
            for lam in box_partitions_by_size(ctx, mu.size + nu.size - d * ctx.n):
                values = [gw_invariant(mu, nu, lam, d, ctx, b) for b in BACKENDS]
                if len(set(values)) != 1 or values[0] < 0:
                    return False
        return True

    pairs = [(mu, nu) for i, mu in enumerate(basis) for nu in basis[i:]]
    return _all_ok(pair_ok, pairs, jobs)


def _check_s3(ctx, jobs: int) -> bool:
    basis = enumerate_pkn(ctx)

    def triple_ok(triple) -> bool:
        base = gw_triple(*triple, ctx)
        return all(
            gw_triple(*perm, ctx) == base for perm in permutations(triple)
        )

    triples = [
        (a, b, c)
        for i, a in enumerate(basis)
        for j, b in enumerate(basis[i:], start=i)
        for c in basis[j:]
    ]
    return _all_ok(triple_ok, triples, jobs)


def _check_hidden(ctx, jobs: int) -> bool:
    basis = enumerate_pkn(ctx)

    def triple_ok(triple) -> bool:
        lam, mu, nu = triple
        return all(
            hidden_symmetry_check(lam, mu, nu, a, b, -a - b, ctx)
            for a in range(ctx.n)
            for b in range(ctx.n)
        )

    triples = [(a, b, c) for a in basis for b in basis for c in basis]
    return _all_ok(triple_ok, triples, jobs)


def _check_strange(ctx, jobs: int) -> bool:
    basis = enumerate_pkn(ctx)
    pairs = [(lam, mu) for i, lam in enumerate(basis) for mu in basis[i:]]
    return _all_ok(lambda p: check_strange_duality_pair(*p, ctx), pairs, jobs)


def _check_dtilde(ctx, jobs: int) -> bool:
    basis = enumerate_pkn(ctx)

    def pair_ok(pair) -> bool:
        a, b = (schubert_class(p, ctx) for p in pair)
        return strange_duality(quantum_product(a, b)) == quantum_product(
            strange_duality(a), strange_duality(b)
        )

    pairs = [(lam, mu) for i, lam in enumerate(basis) for mu in basis[i:]]
    return _all_ok(pair_ok, pairs, jobs)


def _check_intervals(ctx, jobs: int) -> bool:
    basis = enumerate_pkn(ctx)

    def pair_ok(pair) -> bool:
        try:
            interval = dmin_dmax(*pair, ctx)
        except QGrassError:
            return False
        powers = q_power_set(*pair, ctx)
        return bool(powers) and powers == set(interval.members())

    pairs = [(lam, mu) for i, lam in enumerate(basis) for mu in basis[i:]]
    return _all_ok(pair_ok, pairs, jobs)


def _check_classical(ctx, jobs: int) -> bool:
    basis = enumerate_pkn(ctx)

    def pair_ok(pair) -> bool:
        lam, mu = pair
        product = quantum_product(schubert_class(lam, ctx), schubert_class(mu, ctx))
        for nu in box_partitions_by_size(ctx, lam.size + mu.size):
            if product.coefficient(nu, 0) != lr_coefficient(lam, mu, nu):
                return False
        return all(c >= 0 for c in product.terms.values())

    pairs = [(lam, mu) for i, lam in enumerate(basis) for mu in basis[i:]]
    return _all_ok(pair_ok, pairs, jobs)


def _check_giambelli(ctx, jobs: int) -> bool:
    return _all_ok(
        lambda lam: giambelli_class(lam, ctx) == schubert_class(lam, ctx),
        enumerate_pkn(ctx),
        jobs,
    )


def _all_ok(fn, items, jobs: int) -> bool:
    if jobs <= 1:
        return all(fn(item) for item in items)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return all(pool.map(fn, items))


def _cmd_verify(args) -> int:
    ctx = _context(args)
    if ctx.num_classes > args.cap:
        raise QGrassError(
            f"basis has {ctx.num_classes} elements, above the cap {args.cap}"
        )
    report: list[dict[str, str]] = []
    if args.scope in ("relations", "all"):
        report.extend(verify_relations(ctx))
    suites = {
        "backends": [("backend_agreement_and_nonnegativity", _check_backends)],
        "symmetries": [
            ("s3_symmetry", _check_s3),
            ("hidden_cyclic_symmetry", _check_hidden),
            ("strange_duality_transport", _check_strange),
            ("strange_duality_multiplicative", _check_dtilde),
        ],
        "intervals": [("q_power_interval", _check_intervals)],
        "classical": [
            ("classical_limit", _check_classical),
            ("giambelli", _check_giambelli),
        ],
    }
    selected: list[tuple[str, object]] = []
    if args.scope == "all":
        for group in suites.values():
            selected.extend(group)
    elif args.scope in suites:
        selected.extend(suites[args.scope])
    for name, fn in selected:
        ok = fn(ctx, args.jobs)
        report.append({"check": name, "status": "pass" if ok else "fail"})
    failed = any(entry["status"] != "pass" for entry in report)
    if args.format == "json":
        _emit_json(report)
    else:
        for entry in report:
            print(f"{'PASS' if entry['status'] == 'pass' else 'FAIL'} {entry['check']}")
    return 2 if failed else 0


def build_parser() -> _Parser:
    parser = _Parser(prog="qgrass", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("qprod", help="quantum product of two basis classes")
    _add_common(sub)
    sub.add_argument("--mu", type=parse_partition, required=True)
    sub.set_defaults(func=_cmd_qprod)

    sub = subs.add_parser("gw", help="structure constant of a triple")
    _add_common(sub, d=True, nu=True, backend=True)
    sub.add_argument("--mu", type=parse_partition, required=True)
    sub.set_defaults(func=_cmd_gw)

    sub = subs.add_parser("toric-schur", help="Schur expansion of a cylindric shape")
    _add_common(sub, d=True, nvars=True)
    sub.add_argument("--mu", type=parse_partition, required=True)
    sub.set_defaults(func=_cmd_toric_schur)

    sub = subs.add_parser("kostka", help="cylindric tableau count for a weight")
    _add_common(sub, d=True, beta=True)
    sub.add_argument("--mu", type=parse_partition, required=True)
    sub.set_defaults(func=_cmd_kostka)

    sub = subs.add_parser("qpowers", help="q-power interval of a product")
    _add_common(sub)
    sub.add_argument("--mu", type=parse_partition, required=True)
    sub.set_defaults(func=_cmd_qpowers)

    sub = subs.add_parser("reduce", help="rim-hook reduction of one shape")
    _add_common(sub)
    sub.set_defaults(func=_cmd_reduce)

    sub = subs.add_parser("verify", help="run identity suites exhaustively")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument(
        "--scope",
        choices=("relations", "symmetries", "backends", "intervals", "classical", "all"),
        default="all",
    )
    sub.add_argument("--cap", type=int, default=500)
    sub.add_argument("--jobs", type=int, default=1)
    sub.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except QGrassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
