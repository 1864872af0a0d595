"""Command-line front end.

Examples::

    kneading knead 2,2,3,6 --cycle
    kneading reduce 44,114,17
    kneading psi 44,114,17 --a 100 --s 0
    kneading verify formula --max 20

Default bounds come from the environment: ``KNEADING_N_MAX`` (26),
``KNEADING_A_MAX`` (60), ``KNEADING_D_MAX`` (500) and ``KNEADING_WORKERS`` (1).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import census as cz
from .classgroup import class_list, class_of, compose
from .continuants import alternant, cf_expand
from .correspondence import DiscSpec, phi, psi
from .errors import DiscriminantMismatch, KneadingError
from .forms import (
    enumerate_reduced,
    format_form,
    is_zagier_reduced,
    parse_form,
    reduce_step,
    reduce_to_reduced,
    reduction_cycle,
)
from .pell import pell4, reduce_via_kneading
from .sequences import format_sequence, knead, kneading_cycle, parse_sequence

INT64_MAX = 2**63 - 1


def env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    value = int(raw)
    if value < 1:
        raise ValueError(f"{name} must be positive")
    return value


def json_int(x: int):
    """Integers beyond 64 bits are written as decimal strings."""
    return x if -INT64_MAX - 1 <= x <= INT64_MAX else str(x)


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


class Output:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def line(self, text: str) -> None:
        self.stream.write(text + "\n")

    def seqs(self, seqs) -> None:
        if self.fmt == "json":
            self.json([list(s) for s in seqs])
        else:
            for s in seqs:
                self.line(format_sequence(s))

    def forms(self, forms) -> None:
        if self.fmt == "json":
            self.json([[json_int(c) for c in f] for f in forms])
        else:
            for f in forms:
                self.line(format_form(f))

    def json(self, obj) -> None:
        self.line(json.dumps(obj))


def cmd_knead(args, out: Output) -> int:
    seq = parse_sequence(args.seq)
    if args.cycle:
        cyc = kneading_cycle(seq)
        out.seqs(cyc[1:] + cyc[:1])
        return 0
    chain = []
    for _ in range(args.steps):
        seq = knead(seq)
        chain.append(seq)
    out.seqs(chain)
    return 0


def cmd_alternant(args, out: Output) -> int:
    value = alternant(parse_sequence(args.seq))
    if out.fmt == "json":
        out.json(json_int(value))
    else:
        out.line(str(value))
    return 0


def cmd_cf(args, out: Output) -> int:
    out.seqs([cf_expand(args.num, args.den, args.parity)])
    return 0


def cmd_phi(args, out: Output) -> int:
    out.forms([phi(parse_sequence(args.seq))])
    return 0


def cmd_psi(args, out: Output) -> int:
    out.seqs([psi(parse_form(args.form), DiscSpec(args.a, args.s))])
    return 0


def cmd_reduce(args, out: Output) -> int:
    f = parse_form(args.form)
    if not is_zagier_reduced(f):
        # a non-reduced input prints the first reduced form it reaches
        f, steps = reduce_to_reduced(f)
        print(f"reached a reduced form after {steps} steps", file=sys.stderr)
        if not args.cycle:
            out.forms([f])
            return 0
    step = reduce_via_kneading if args.via_kneading else reduce_step
    n_steps = len(reduction_cycle(f)) if args.cycle else args.steps
    chain = []
    for _ in range(n_steps):
        f = step(f)
        chain.append(f)
    out.forms(chain)
    return 0


def cmd_enumerate(args, out: Output) -> int:
    out.forms(enumerate_reduced(args.d))
    return 0


def cmd_classes(args, out: Output) -> int:
    classes = class_list(args.d)
    if out.fmt == "json":
        out.json([{"representative": [json_int(c) for c in cls.representative],
                   "caliber": cls.caliber} for cls in classes])
    else:
        out.forms([cls.representative for cls in classes])
    return 0


def cmd_compose(args, out: Output) -> int:
    f, g = parse_form(args.f1), parse_form(args.f2)
    for h in (f, g):
        if h.discriminant != args.d:
            raise DiscriminantMismatch(f"{h} has discriminant {h.discriminant}, not {args.d}")
    out.forms([compose(class_of(f), class_of(g)).representative])
    return 0


def cmd_pell(args, out: Output) -> int:
    x, y = pell4(args.d)
    if out.fmt == "json":
        out.json({"x": json_int(x), "y": json_int(y)})
    else:
        out.line(f"{x},{y}")
    return 0


def _emit_records(records, out: Output) -> None:
    if out.fmt == "csv":
        cz.write_csv(records, out.stream)
    elif out.fmt == "json":
        out.json([cz.record_to_json(r) for r in records])
    else:
        for r in records:
            form = "-" if r.primitive_form is None else f"{r.d}*({format_form(r.primitive_form)})"
            out.line(f"sum={r.sum} caliber={r.caliber} parity={r.parity} "
                     f"alternant={r.alternant} form={form} rep={format_sequence(r.representative)}")


def cmd_census(args, out: Output) -> int:
    _emit_records(cz.cycle_census(args.n, args.parity, args.workers), out)
    return 0


def cmd_short_cycles(args, out: Output) -> int:
    records = cz.short_cycle_table(args.max_sum, args.workers)
    if out.fmt == "text":
        for r in records:
            s1, cal, d, A, B, C = r.table_row()
            out.line(f"{s1} | {cal} | {d} | ({A},{B},{C})")
    else:
        _emit_records(records, out)
    return 0


def cmd_verify(args, out: Output) -> int:
    kind = args.kind
    if kind == "divisor":
        rep = cz.verify_divisor_conjecture(args.max or env_int("KNEADING_N_MAX", 26), args.workers)
    elif kind == "formula":
        rep = cz.verify_formula_conjecture(args.max or env_int("KNEADING_N_MAX", 26), args.workers)
    elif kind == "composition":
        rep = cz.verify_composition_conjecture(args.max or env_int("KNEADING_A_MAX", 60))
    elif kind == "sum-bound":
        rep = cz.sum_bound_check(args.max or env_int("KNEADING_A_MAX", 60))
    else:
        rep = cz.verify_pell_path(args.max or env_int("KNEADING_D_MAX", 500))
    if out.fmt == "json":
        out.json(rep.to_json())
    else:
        status = "ok" if rep.ok else f"{len(rep.violations)} violations"
        out.line(f"{rep.conjecture} {json.dumps(rep.range)}: {status} ({rep.elapsed:.2f}s)")
        for key, value in rep.observations.items():
            out.line(f"  {key}: {json.dumps(value)}")
        for v in rep.violations:
            out.line(f"  violation: {json.dumps(v)}")
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--workers", type=positive_int, default=None,
                        help="worker processes for census and verify (env KNEADING_WORKERS)")

    parser = argparse.ArgumentParser(prog="kneading", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("knead", cmd_knead, "knead a sequence")
    p.add_argument("seq")
    p.add_argument("--steps", type=positive_int, default=1)
    p.add_argument("--cycle", action="store_true", help="print the whole kneading cycle")

    p = add("alternant", cmd_alternant, "alternant of a sequence")
    p.add_argument("seq")

    p = add("cf", cmd_cf, "continued fraction of num/den with given length parity")
    p.add_argument("num", type=int)
    p.add_argument("den", type=int)
    p.add_argument("--parity", type=int, choices=(0, 1), default=0)

    p = add("phi", cmd_phi, "reduced form of a sequence")
    p.add_argument("seq")

    p = add("psi", cmd_psi, "sequence of a reduced form")
    p.add_argument("form")
    p.add_argument("--a", type=positive_int, required=True)
    p.add_argument("--s", type=int, choices=(0, 1), required=True)

    p = add("reduce", cmd_reduce, "Zagier reduction steps")
    p.add_argument("form")
    p.add_argument("--steps", type=positive_int, default=1)
    p.add_argument("--cycle", action="store_true")
    p.add_argument("--via-kneading", action="store_true",
                   help="reduce by kneading after rescaling with a Pell solution")

    p = add("enumerate", cmd_enumerate, "all reduced forms of a discriminant")
    p.add_argument("--d", type=positive_int, required=True)

    p = add("classes", cmd_classes, "primitive classes of a discriminant")
    p.add_argument("--d", type=positive_int, required=True)

    p = add("compose", cmd_compose, "compose two primitive classes")
    p.add_argument("f1")
    p.add_argument("f2")
    p.add_argument("--d", type=positive_int, required=True)

    p = add("pell", cmd_pell, "solve x^2 - D y^2 = 4")
    p.add_argument("--d", type=positive_int, required=True)

    p = add("census", cmd_census, "kneading cycles of all compositions of n")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--parity", type=int, choices=(0, 1), default=None)

    p = add("short-cycles", cmd_short_cycles, "table of short even cycles")
    p.add_argument("--max-sum", type=positive_int, required=True)

    p = add("verify", cmd_verify, "check a conjecture or lemma over a range")
    p.add_argument("kind", choices=("divisor", "formula", "composition", "sum-bound", "pell"))
    p.add_argument("--max", type=positive_int, default=None)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.workers is None:
            args.workers = env_int("KNEADING_WORKERS", 1)
        return args.func(args, Output(args.format))
    except (KneadingError, ValueError) as exc:
        print(f"kneading {args.command}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
