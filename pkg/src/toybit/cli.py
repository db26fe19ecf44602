"""Command-line front end: run the verification suite, enumerate groups
and states, simulate measurements, run correlation tests, and export
machine-readable artifacts.

Exit codes: 0 success / all claims verified, 1 refuted claim or failed
check, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
from fractions import Fraction

import numpy as np

from . import analysis, clifford, states, toyops
from .groups import (FiniteGroup, Perm, ScaledMat, closure,
                     conjugacy_classes, element_order_histogram)
from .rng import derive_seed
from .states import (EpistemicState, MeasurementPartition, ToyError,
                     enumerate_partitions, make_epistemic, measure,
                     outcome_probability, pure_states, sample_state)

DEFAULT_SEED = 0x5EED_70B1


def _seed_from_env() -> int:
    raw = os.environ.get("TOYBIT_SEED")
    return int(raw, 0) if raw else DEFAULT_SEED


GROUP_BUILDERS = {
    "s4": lambda: closure([Perm.from_cycles([(0, 1)], 4),
                           Perm.from_cycles([(0, 1, 2, 3)], 4)]),
    "a4": lambda: closure([Perm.from_cycles([(0, 1, 2)], 4),
                           Perm.from_cycles([(1, 2, 3)], 4)]),
    "tg1": toyops.single_bit_group,
    "tg2": toyops.two_bit_group,
    "spekkens2": analysis._spekkens_two_bit_group,
    "c1": lambda: clifford.build_group(1, extended=False),
    "ec1": lambda: clifford.build_group(1, extended=True),
    "c2": lambda: clifford.build_group(2, extended=False),
    "ec2": lambda: clifford.build_group(2, extended=True),
}


def _element_json(elem) -> object:
    if isinstance(elem, Perm):
        return {"perm": list(elem.images)}
    if isinstance(elem, ScaledMat):
        return {"denom_exp": elem.denom_exp,
                "matrix": elem.arr.tolist()}
    return elem.to_json()


def _write_out(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


# ------------------------------------------------------------ verify

def cmd_verify(args) -> int:
    try:
        ids = None if args.all or not args.claim else args.claim
        reports = analysis.run_all(ids)
    except analysis.UnknownClaim as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        text = json.dumps([r.to_json() for r in reports], indent=2,
                          default=str)
    else:
        lines = []
        for r in reports:
            lines.append(f"{r.claim_id:<28} {r.status.upper():<9} "
                         f"({r.wall_time_ms} ms)")
            if r.status != "verified":
                lines.append(f"    expected: {r.expected}")
                lines.append(f"    computed: {r.computed}")
                if r.witness is not None:
                    lines.append(f"    witness:  {r.witness}")
        text = "\n".join(lines)
    _write_out(text, args.out)
    return 0 if all(r.status == "verified" for r in reports) else 1


# --------------------------------------------------------- enumerate

def cmd_enumerate(args) -> int:
    group = GROUP_BUILDERS[args.group]()
    payload = {"order": group.order,
               "generators": [_element_json(g) for g in group.generators]}
    if args.histogram:
        payload["element_order_histogram"] = {
            str(k): v for k, v in element_order_histogram(group).items()}
    if args.classes:
        payload["class_sizes"] = sorted(
            s for _, s in conjugacy_classes(group))
    _write_out(json.dumps(payload, indent=2), args.out)
    return 0


# ----------------------------------------------------------- measure

def _parse_state(raw: str) -> EpistemicState:
    return EpistemicState.from_json(json.loads(raw))


def _parse_partition(raw: str, n_bits: int) -> MeasurementPartition:
    obj = json.loads(raw)
    cells = []
    for cell in obj["cells"]:
        if isinstance(cell, dict):
            cells.append(EpistemicState.from_json(cell))
        else:
            cells.append(make_epistemic(n_bits, cell))
    return MeasurementPartition.of(cells)


def cmd_measure(args) -> int:
    state = _parse_state(args.state)
    partition = _parse_partition(args.partition, state.n_bits)
    if partition.n_bits != state.n_bits:
        raise ToyError("state and partition sizes differ")
    counts = [0] * len(partition.cells)
    repeat_matches = 0
    for shot in range(args.shots):
        sample = sample_state(state, derive_seed(args.seed, shot))
        outcome, after = measure(partition, sample)
        outcome2, _ = measure(partition, after)
        counts[outcome] += 1
        repeat_matches += outcome == outcome2
    lines = [f"shots: {args.shots}  seed: {args.seed:#x}",
             f"repeat consistency: {repeat_matches}/{args.shots}",
             "outcome  exact      empirical  deviation"]
    for k, cell in enumerate(partition.cells):
        p = outcome_probability(cell, state)
        emp = Fraction(counts[k], args.shots)
        sigma = math.sqrt(float(p) * (1 - float(p)) / args.shots)
        dev = (float(emp) - float(p)) / sigma if sigma else 0.0
        lines.append(f"{k:>7}  {str(p):<9}  {float(emp):<9.4f} "
                     f"{dev:+7.2f} sigma")
    _write_out("\n".join(lines), None)
    return 0


# --------------------------------------------------------- correlate

def cmd_correlate(args) -> int:
    state = _parse_state(args.state)
    witness = analysis.detect_perfect_correlation(state)
    if witness is None:
        _write_out("not perfectly correlated", None)
        return 0
    perm = witness.as_permutation()
    if perm is not None:
        rendered = f"ontic permutation {perm.images}"
    else:
        rendered = (f"matrix (denominator 2**{witness.denom_exp}):\n"
                    f"{witness.arr}")
    _write_out("perfectly correlated; invalidating one-sided extension "
               f"witness: {rendered}", None)
    return 0


# -------------------------------------------------------------- euler

_CYCLES_RE = re.compile(r"\(([^()]*)\)")

ANGLE_NAMES = {-1: "-pi/2", 0: "0", 1: "pi/2", 2: "pi"}


def parse_cycles(text: str) -> Perm:
    """Parse one-line cycle notation over cells 1..4, e.g. "(123)(4)"."""
    chunks = _CYCLES_RE.findall(text.replace(" ", ""))
    if not chunks or _CYCLES_RE.sub("", text.replace(" ", "")):
        raise ValueError(f"cannot parse cycles: {text!r}")
    cycles = []
    for chunk in chunks:
        pts = [int(c) - 1 for c in chunk if c.strip()]
        if any(p not in range(4) for p in pts):
            raise ValueError("cells must be 1..4")
        cycles.append(tuple(pts))
    return Perm.from_cycles(cycles, 4)


def cmd_euler(args) -> int:
    perm = parse_cycles(args.perm)
    rot = clifford.bloch_action(perm)
    if not rot.is_rotation:
        _write_out(f"{args.perm}: reflection (determinant -1), "
                   "no Euler decomposition", None)
        return 1
    theta, phi, psi = clifford.euler_decompose(rot)
    _write_out(f"{args.perm}: theta={ANGLE_NAMES[theta]} "
               f"phi={ANGLE_NAMES[phi]} psi={ANGLE_NAMES[psi]}", None)
    return 0


# ------------------------------------------------------------- export

def _states_payload(n_bits: int):
    rows = []
    toy_states = pure_states(n_bits)
    if n_bits == 2:
        toy_states = toy_states + states.mixed_catalog()
    for s in toy_states:
        rows.append({"n": s.n_bits, "support": list(s.support),
                     "size": s.size, "pure": s.is_pure})
    return rows


def _csv_text(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]))
    writer.writeheader()
    for row in rows:
        writer.writerow({k: (" ".join(map(str, v))
                             if isinstance(v, list) else v)
                         for k, v in row.items()})
    return buf.getvalue()


def _cayley_dot(name: str, group: FiniteGroup) -> str:
    ids = {e.key(): i for i, e in enumerate(group)}
    lines = [f'digraph "{name}" {{']
    for e in group:
        lines.append(f'  n{ids[e.key()]};')
    for e in group:
        for gi, g in enumerate(group.generators):
            tgt = ids[e.mul(g).key()]
            lines.append(f'  n{ids[e.key()]} -> n{tgt} [label="g{gi}"];')
    lines.append("}")
    return "\n".join(lines)


def cmd_export(args) -> int:
    if args.what == "cayley":
        if args.format != "dot":
            print("error: cayley export requires --format dot",
                  file=sys.stderr)
            return 2
        text = _cayley_dot(args.group, GROUP_BUILDERS[args.group]())
    elif args.what == "states":
        rows = _states_payload(args.bits)
        if args.format == "csv":
            text = _csv_text(rows)
        elif args.format == "json":
            text = json.dumps(rows, indent=2)
        else:
            grids = [EpistemicState(r["n"], sum(1 << i for i in r["support"]))
                     .render() for r in rows]
            text = "\n\n".join(grids)
    else:  # partitions
        parts = enumerate_partitions()
        rows = [{"index": i,
                 "cells": [list(c.support) for c in p.cells]}
                for i, p in enumerate(parts)]
        if args.format == "csv":
            flat = [{"index": r["index"],
                     **{f"cell{k}": " ".join(map(str, cell))
                        for k, cell in enumerate(r["cells"])}}
                    for r in rows]
            text = _csv_text(flat)
        else:
            text = json.dumps(rows, indent=2)
    _write_out(text, args.out)
    return 0


# ----------------------------------------------------------- dispatch

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toybit",
        description="Exact engine for the toy-bit model: verification "
                    "suite, group enumeration, measurement simulation, "
                    "correlation tests, exports.")
    parser.add_argument("--seed", type=lambda s: int(s, 0),
                        default=_seed_from_env(),
                        help="RNG seed (default: TOYBIT_SEED or builtin)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run claim verifications")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true",
                       help="run every claim (default)")
    group.add_argument("--claim", action="append",
                       help="claim id, repeatable")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="build a group and report on it")
    p.add_argument("--group", required=True, choices=sorted(GROUP_BUILDERS))
    p.add_argument("--histogram", action="store_true")
    p.add_argument("--classes", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("measure", help="simulate a seeded measurement")
    p.add_argument("--state", required=True, help="state JSON")
    p.add_argument("--partition", required=True, help="partition JSON")
    p.add_argument("--shots", type=int, default=10_000)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("correlate", help="perfect-correlation test")
    p.add_argument("--state", required=True, help="state JSON")
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("euler", help="Euler angles of an ontic permutation")
    p.add_argument("--perm", required=True,
                   help="cycles over cells 1..4, e.g. '(123)(4)'")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("export", help="export states/partitions/graphs")
    p.add_argument("--what", required=True,
                   choices=("states", "partitions", "cayley"))
    p.add_argument("--group", default="tg1", choices=sorted(GROUP_BUILDERS))
    p.add_argument("--bits", type=int, default=1, choices=(1, 2))
    p.add_argument("--format", choices=("json", "csv", "dot"),
                   default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ToyError, ValueError, KeyError, TypeError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc!r}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(dispatch())


if __name__ == "__main__":
    main()
