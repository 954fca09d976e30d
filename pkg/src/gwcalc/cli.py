"""Batch command-line interface.

Every computation in the library is reachable through a subcommand, with
plain, CSV (header row included) and JSON output.  JSON records validate
against the schema shipped at ``gwcalc/data/output_schema.json``.  Exit
codes are a stable contract: 0 on success, 1 when a verification command
finds a violated identity, 2 on usage errors.

Outputs are deterministic byte-for-byte; a timing field is only attached
when explicitly requested with ``--timing``.

If the environment variable ``GW_CACHE`` names a file, the memoized curve
counts are loaded from it on startup and written back (merged) on exit,
one ``key<TAB>value`` pair per line with keys ``nd:<d>`` and
``nde:<d>,<e>``.  Without the variable all memoization is in-memory only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import surfaces
from .exact import is_integer
from .gw import collected_invariant, gw_invariant
from .partitions import MarkSet, enumerate_partitions
from .potentials import (classical_potential, gw_potential_p1,
                         quantum_potential_p1x1,
                         quantum_potential_p2_reduced, wdvv_residual_p1x1,
                         wdvv_residual_p2)
from .rings import BigQuantumElement, RingElement, big_qmul, small_qmul
from .series import TruncatedSeries
from .targets import (InvariantKey, P1XP1, ProjectiveSpace, TargetSpace,
                      exponents_from_classes, parse_basis_class)


class UsageError(Exception):
    """Bad arguments or violated preconditions; maps to exit code 2."""


class VerificationError(Exception):
    """A checked identity failed to hold; maps to exit code 1."""


def _parse_target(text: str) -> TargetSpace:
    name = text.strip().lower()
    if name in ("p1xp1", "p1x1"):
        return P1XP1
    if name.startswith("p") and name[1:].isdigit():
        r = int(name[1:])
        if r >= 1:
            return ProjectiveSpace(r)
    raise UsageError(f"unknown target {text!r} (use p1, p2, ..., or p1xp1)")


def _parse_degree(target: TargetSpace, text: str):
    parts = text.split(",")
    try:
        if isinstance(target, ProjectiveSpace):
            if len(parts) != 1:
                raise ValueError
            return int(parts[0])
        if len(parts) != 2:
            raise ValueError
        return (int(parts[0]), int(parts[1]))
    except ValueError:
        kind = "d" if isinstance(target, ProjectiveSpace) else "d,e"
        raise UsageError(
            f"degree {text!r} does not match the target (expected {kind})")


def _parse_classes(target: TargetSpace, text: str) -> list[int]:
    classes: list[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, _, count = chunk.partition(":")
        try:
            idx = parse_basis_class(target, name)
        except ValueError as exc:
            raise UsageError(str(exc))
        try:
            repeat = int(count) if count else 1
        except ValueError:
            raise UsageError(f"bad class count in {chunk!r}")
        if repeat < 0:
            raise UsageError(f"class count must be >= 0 in {chunk!r}")
        classes.extend([idx] * repeat)
    return classes


def _scalar_value(value) -> dict:
    frac = Fraction(value)
    record = {"rational": f"{frac.numerator}/{frac.denominator}"}
    if is_integer(frac):
        record["decimal"] = str(frac.numerator)
    return record


def _scalar_text(value) -> str:
    frac = Fraction(value)
    return str(frac.numerator) if is_integer(frac) else str(frac)


# -- cache persistence ----------------------------------------------------

def _load_cache(path: str) -> None:
    if not os.path.exists(path):
        return
    nd: dict[int, int] = {}
    nde: dict[tuple[int, int], int] = {}
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            key, _, value = line.partition("\t")
            try:
                if key.startswith("nd:"):
                    nd[int(key[3:])] = int(value)
                elif key.startswith("nde:"):
                    d, e = key[4:].split(",")
                    nde[(int(d), int(e))] = int(value)
            except ValueError:
                continue  # ignore malformed lines rather than fail a run
    surfaces.seed_caches(nd, nde)


def _save_cache(path: str) -> None:
    nd, nde = surfaces.cache_snapshot()
    lines = [f"nd:{d}\t{value}" for d, value in sorted(nd.items())]
    lines += [f"nde:{d},{e}\t{value}" for (d, e), value in sorted(nde.items())]
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + ("\n" if lines else ""))


# -- subcommands -----------------------------------------------------------

def _cmd_nd(args) -> dict:
    if args.d < 1:
        raise UsageError(f"--d must be >= 1, got {args.d}")
    if args.upto:
        rows = [(d, surfaces.n_d(d)) for d in range(1, args.d + 1)]
        return {
            "inputs": {"d": args.d, "upto": True},
            "values": [_scalar_value(v) for _, v in rows],
            "plain": "\n".join(f"{d}\t{v}" for d, v in rows),
            "csv": ["d,N_d"] + [f"{d},{v}" for d, v in rows],
        }
    value = surfaces.n_d(args.d)
    return {
        "inputs": {"d": args.d, "upto": False},
        "values": [_scalar_value(value)],
        "plain": str(value),
        "csv": ["d,N_d", f"{args.d},{value}"],
    }


def _cmd_nde(args) -> dict:
    if args.upto is not None:
        bound = args.upto
        if bound < 0:
            raise UsageError(f"--upto must be >= 0, got {bound}")
        matrix = [["x" if d == e == 0 else str(surfaces.n_de(d, e))
                   for e in range(bound + 1)] for d in range(bound + 1)]
        header = "d\\e," + ",".join(str(e) for e in range(bound + 1))
        return {
            "inputs": {"upto": bound},
            "values": [{"matrix": matrix}],
            "plain": "\n".join(" ".join(row) for row in matrix),
            "csv": [header] + [f"{d}," + ",".join(matrix[d])
                               for d in range(bound + 1)],
        }
    if args.d is None or args.e is None:
        raise UsageError("provide --d and --e, or --upto")
    if args.d < 0 or args.e < 0 or args.d + args.e < 1:
        raise UsageError(
            f"bidegree ({args.d}, {args.e}) is not defined (need d+e >= 1)")
    value = surfaces.n_de(args.d, args.e)
    return {
        "inputs": {"d": args.d, "e": args.e},
        "values": [_scalar_value(value)],
        "plain": str(value),
        "csv": ["d,e,N_de", f"{args.d},{args.e},{value}"],
    }


def _cmd_gw(args) -> dict:
    target = _parse_target(args.target)
    classes = _parse_classes(target, args.classes)
    key_classes = InvariantKey.from_classes
    if args.collected:
        if args.degree is not None:
            raise UsageError("--collected solves for the degree; "
                             "drop --degree")
        value = collected_invariant(
            target, exponents_from_classes(target, classes))
        inputs = {"target": args.target, "collected": True,
                  "classes": args.classes}
    else:
        if args.degree is None:
            raise UsageError("provide --degree, or use --collected")
        degree = _parse_degree(target, args.degree)
        try:
            value = gw_invariant(key_classes(target, degree, classes))
        except ValueError as exc:
            raise UsageError(str(exc))
        inputs = {"target": args.target, "degree": args.degree,
                  "classes": args.classes}
    return {
        "inputs": inputs,
        "values": [_scalar_value(value)],
        "plain": _scalar_text(value),
        "csv": ["value", _scalar_text(value)],
    }


def _cmd_qmul(args) -> dict:
    target = _parse_target(args.target)
    if len(args.operands) != 2:
        raise UsageError("qmul expects exactly two basis class operands")
    try:
        i = parse_basis_class(target, args.operands[0])
        j = parse_basis_class(target, args.operands[1])
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.big:
        order = args.order if args.order is not None else 4
        if order < 0:
            raise UsageError(f"--order must be >= 0, got {order}")
        product = big_qmul(BigQuantumElement.basis(target, i, order),
                           BigQuantumElement.basis(target, j, order))
        text = product.render()
        inputs = {"target": args.target, "big": True, "order": order,
                  "operands": list(args.operands)}
        return {
            "inputs": inputs,
            "values": [{"element": text}],
            "plain": text,
            "csv": ["value", text],
        }
    product = small_qmul(RingElement.basis(target, i),
                         RingElement.basis(target, j))
    text = product.render()
    return {
        "inputs": {"target": args.target, "small": True,
                   "operands": list(args.operands)},
        "values": [{"element": text}],
        "plain": text,
        "csv": ["value", text],
    }


def _cmd_wdvv(args) -> dict:
    target = _parse_target(args.target)
    if args.order < 0:
        raise UsageError(f"--order must be >= 0, got {args.order}")
    if isinstance(target, ProjectiveSpace):
        if target.r != 2:
            raise UsageError("wdvv verification covers p2 and p1xp1")
        residual = wdvv_residual_p2(args.order)
        names = ["x"]
    else:
        residual = wdvv_residual_p1x1(args.order)
        names = ["x1", "x2", "x3"]
    if residual.is_zero():
        text = f"ZERO up to order {args.order}"
        return {
            "inputs": {"target": args.target, "order": args.order},
            "values": [{"text": text}],
            "plain": text,
            "csv": ["value", text],
        }
    exps, coeff = residual.leading_term()
    term = TruncatedSeries(residual.nvars, residual.order,
                           {exps: coeff}).render(names)
    raise VerificationError(f"NONZERO first term {term}")


def _cmd_potential(args) -> dict:
    target = _parse_target(args.target)
    if args.order is not None and args.order < 0:
        raise UsageError(f"--order must be >= 0, got {args.order}")
    if args.quantum:
        order = args.order if args.order is not None else 6
        if isinstance(target, ProjectiveSpace) and target.r == 1:
            series = gw_potential_p1(order)
            text = series.render()
        elif isinstance(target, ProjectiveSpace) and target.r == 2:
            family = quantum_potential_p2_reduced(order)
            text = "\n".join(
                f"G{''.join(map(str, ijk))}: {s.render(['x'])}"
                for ijk, s in sorted(family.items()))
        elif isinstance(target, ProjectiveSpace):
            raise UsageError(
                "closed-form quantum potentials cover p1, p2 and p1xp1")
        else:
            series = quantum_potential_p1x1(order)
            text = series.render(["x1", "x2", "x3"])
    else:
        try:
            series = classical_potential(target)
        except ValueError as exc:
            raise UsageError(str(exc))
        if args.order is not None:
            series = series.truncate(min(args.order, series.order))
        text = series.render()
    return {
        "inputs": {"target": args.target, "order": args.order,
                   "quantum": bool(args.quantum)},
        "values": [{"series": line} for line in text.split("\n")],
        "plain": text,
        "csv": ["value"] + text.split("\n"),
    }


def _cmd_partitions(args) -> dict:
    if args.marks < 4:
        raise UsageError(f"--marks must be >= 4 to pin two pairs, "
                         f"got {args.marks}")
    marks = MarkSet.standard(args.marks)
    parts = args.degree.split(",")
    try:
        degree = int(parts[0]) if len(parts) == 1 else \
            (int(parts[0]), int(parts[1]))
    except ValueError:
        raise UsageError(f"bad degree {args.degree!r}")
    try:
        left, right = args.pins.split(":")
        pin_a = tuple(s.strip() for s in left.split(","))
        pin_b = tuple(s.strip() for s in right.split(","))
        if len(pin_a) != 2 or len(pin_b) != 2:
            raise ValueError
    except ValueError:
        raise UsageError(f"--pins must look like m1,m2:p1,p2, "
                         f"got {args.pins!r}")
    try:
        partitions = enumerate_partitions(marks, degree, (pin_a, pin_b))
    except ValueError as exc:
        raise UsageError(str(exc))
    inputs = {"marks": args.marks, "degree": args.degree, "pins": args.pins,
              "count": bool(args.count)}
    if args.count:
        value = len(partitions)
        return {
            "inputs": inputs,
            "values": [_scalar_value(value)],
            "plain": str(value),
            "csv": ["count", str(value)],
        }
    records = [p.to_json() for p in partitions]
    bidegree = records and "eA" in records[0]
    header = "A,B,dA,dB" + (",eA,eB" if bidegree else "")
    csv_rows = [header]
    for rec in records:
        row = ["|".join(rec["A"]), "|".join(rec["B"]),
               str(rec["dA"]), str(rec["dB"])]
        if bidegree:
            row += [str(rec["eA"]), str(rec["eB"])]
        csv_rows.append(",".join(row))
    return {
        "inputs": inputs,
        "values": [{"partition": rec} for rec in records],
        "plain": "\n".join(json.dumps(rec, sort_keys=True)
                           for rec in records),
        "csv": csv_rows,
    }


_COMMANDS = {
    "nd": _cmd_nd,
    "nde": _cmd_nde,
    "gw": _cmd_gw,
    "qmul": _cmd_qmul,
    "wdvv": _cmd_wdvv,
    "potential": _cmd_potential,
    "partitions": _cmd_partitions,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gwcalc",
        description="Exact rational curve counts, Gromov-Witten invariants "
                    "and quantum cohomology for P^r and P1xP1.")
    parser.add_argument("--format", choices=("plain", "json", "csv"),
                        default="plain", help="output format")
    parser.add_argument("--timing", action="store_true", default=False,
                        help="attach elapsed milliseconds to JSON output")
    # The shared flags are also accepted after the subcommand; SUPPRESS
    # keeps the subparser from clobbering a value parsed before it.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"),
                        default=argparse.SUPPRESS)
    common.add_argument("--timing", action="store_true",
                        default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nd", help="rational plane curve counts N_d",
                       parents=[common])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--upto", action="store_true",
                   help="print the whole table 1..d")

    p = sub.add_parser("nde", help="bidegree curve counts N_(d,e) on P1xP1",
                       parents=[common])
    p.add_argument("--d", type=int)
    p.add_argument("--e", type=int)
    p.add_argument("--upto", type=int,
                   help="print the full matrix up to this bound")

    p = sub.add_parser("gw", help="genus-0 Gromov-Witten invariants",
                       parents=[common])
    p.add_argument("--target", required=True,
                   help="p1, p2, p3, ..., or p1xp1")
    p.add_argument("--degree", help="integer, or d,e for p1xp1")
    p.add_argument("--classes", required=True,
                   help="e.g. h2:4 or T3:3,T1:1")
    p.add_argument("--collected", action="store_true",
                   help="sum over the degree the dimension gate selects")

    p = sub.add_parser("qmul", help="quantum products",
                       parents=[common])
    p.add_argument("--target", required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--small", action="store_true", default=True)
    group.add_argument("--big", action="store_true")
    p.add_argument("--order", type=int, help="truncation order for --big")
    p.add_argument("operands", nargs=2, help="two basis classes, e.g. h1 h2")

    p = sub.add_parser("wdvv", help="verify a WDVV residual vanishes",
                       parents=[common])
    p.add_argument("--target", required=True, help="p2 or p1xp1")
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("potential", help="classical or quantum potentials",
                       parents=[common])
    p.add_argument("--target", required=True)
    p.add_argument("--order", type=int)
    p.add_argument("--quantum", action="store_true")

    p = sub.add_parser("partitions",
                       help="stable weighted partitions for pinned boundary "
                            "divisors",
                       parents=[common])
    p.add_argument("--marks", type=int, required=True)
    p.add_argument("--degree", required=True, help="d or d,e")
    p.add_argument("--pins", required=True, help="i,j:k,l")
    p.add_argument("--count", action="store_true")
    return parser


def _emit(record: dict, command: str, fmt: str, elapsed_ms: int | None) -> None:
    if fmt == "json":
        payload = {"command": command, "inputs": record["inputs"],
                   "values": record["values"]}
        if elapsed_ms is not None:
            payload["elapsed_ms"] = elapsed_ms
        print(json.dumps(payload, sort_keys=True))
    elif fmt == "csv":
        print("\n".join(record["csv"]))
    else:
        print(record["plain"])


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_path = os.environ.get("GW_CACHE")
    if cache_path:
        _load_cache(cache_path)
    started = time.monotonic()
    try:
        record = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        if cache_path:
            _save_cache(cache_path)
        return 1
    elapsed_ms = int((time.monotonic() - started) * 1000)
    _emit(record, args.command, args.format,
          elapsed_ms if args.timing else None)
    if cache_path:
        _save_cache(cache_path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
