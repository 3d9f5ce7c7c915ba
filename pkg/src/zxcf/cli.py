"""Command-line entry point.

Exit codes: 0 success, 1 domain failure (unequal codes, rule violations,
failed self checks), 2 usage or format errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .canonical import (
    DiagramError,
    ZxcfDiagram,
    canonicalize,
    decompile,
    enumerate_zxcf,
    from_json,
    to_json,
    validate_zxcf,
)
from .circuit import CircuitError, EncoderCircuit, format_circuit, parse_circuit, synthesize_encoder
from .counting import CountQuery, count_tableaus, count_zxcf_closed, count_zxcf_recursive
from .oracle import OracleSizeError, images_equal, zxcf_to_isometry
from .render import render_dot
from .selftest import SelfTestConfig, run_selftest
from .tableau import StabilizerTableau, TableauError, check_tableau, format_tableau, parse_tableau

ORACLE_MAX_N = 10


class UsageError(Exception):
    """Bad input files or arguments; maps to exit code 2."""


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def load_source(path: str) -> StabilizerTableau | EncoderCircuit:
    """A circuit file if it has a ``wires=`` header, otherwise a tableau."""
    text = _read(path)
    is_circuit = any(line.split("#", 1)[0].strip().startswith("wires=") for line in text.splitlines())
    try:
        if is_circuit:
            return parse_circuit(text)
        t = parse_tableau(text)
        check_tableau(t)
        return t
    except (TableauError, CircuitError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def load_diagram(path: str, strict: bool = True) -> ZxcfDiagram:
    text = _read(path)
    try:
        if strict:
            return from_json(text)
        obj = json.loads(text)
        return ZxcfDiagram(int(obj["n"]), int(obj["k"]), obj["m"], obj["a"], obj["phase"], obj["had"])
    except (json.JSONDecodeError, DiagramError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_compile(args) -> int:
    d = canonicalize(load_source(args.input))
    _write(args.output, to_json(d) + "\n")
    if args.dot:
        _write(args.dot, render_dot(d))
    return 0


def cmd_decompile(args) -> int:
    d = load_diagram(args.input)
    bad = validate_zxcf(d)
    if bad:
        for v in bad:
            print(v, file=sys.stderr)
        return 1
    _write(args.output, format_tableau(decompile(d)))
    return 0


def cmd_synth(args) -> int:
    src = load_source(args.input)
    if not isinstance(src, StabilizerTableau):
        raise UsageError(f"{args.input}: synth needs a tableau, got a circuit")
    _write(args.output, format_circuit(synthesize_encoder(src)))
    return 0


def cmd_eq(args) -> int:
    d1 = canonicalize(load_source(args.a))
    d2 = canonicalize(load_source(args.b))
    same = d1 == d2
    if args.oracle:
        if d1.n != d2.n or d1.k != d2.k:
            oracle_same = False
        else:
            if d1.n > ORACLE_MAX_N:
                raise UsageError(f"--oracle supports at most {ORACLE_MAX_N} qubits, got {d1.n}")
            oracle_same = images_equal(zxcf_to_isometry(d1), zxcf_to_isometry(d2))
        if oracle_same != same:
            print(f"oracle disagrees: canonical={same} oracle={oracle_same}", file=sys.stderr)
            return 1
    print("equal" if same else "unequal")
    return 0 if same else 1


def cmd_validate(args) -> int:
    bad = validate_zxcf(load_diagram(args.input, strict=False))
    if not bad:
        print("valid")
        return 0
    for v in bad:
        print(v)
    return 1


def cmd_count(args) -> int:
    if args.n < 0 or not 0 <= args.k <= args.n:
        raise UsageError(f"need 0 <= k <= n, got n={args.n} k={args.k}")
    q = CountQuery(args.n, args.k)
    print(count_tableaus(args.n, args.k), count_zxcf_recursive(q), count_zxcf_closed(q))
    return 0


def cmd_enumerate(args) -> int:
    if args.n < 0 or not 0 <= args.k <= args.n:
        raise UsageError(f"need 0 <= k <= n, got n={args.n} k={args.k}")
    out = sys.stdout
    for i, d in enumerate(enumerate_zxcf(args.n, args.k)):
        if args.limit is not None and i >= args.limit:
            break
        out.write(to_json(d) + "\n")
    return 0


def cmd_render(args) -> int:
    _write(args.output, render_dot(load_diagram(args.input, strict=False)))
    return 0


def cmd_selftest(args) -> int:
    cfg = SelfTestConfig(max_n=args.max_n, seed=args.seed, trials=args.trials)
    results = run_selftest(cfg)
    for r in results:
        print(r.line())
        for f in r.failures[:5]:
            print(f"  {f}")
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zxcf", description="ZX canonical forms of Clifford encoders")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compile", help="tableau or circuit file -> canonical JSON")
    c.add_argument("input")
    c.add_argument("-o", "--output")
    c.add_argument("--dot", help="also write a DOT drawing here")
    c.set_defaults(func=cmd_compile)

    c = sub.add_parser("decompile", help="canonical JSON -> tableau text")
    c.add_argument("input")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_decompile)

    c = sub.add_parser("synth", help="tableau -> encoder circuit")
    c.add_argument("input")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_synth)

    c = sub.add_parser("eq", help="compare two codes via their canonical forms")
    c.add_argument("a")
    c.add_argument("b")
    c.add_argument("--oracle", action="store_true", help="cross-check with dense images (small n)")
    c.set_defaults(func=cmd_eq)

    c = sub.add_parser("validate", help="report rule violations of a JSON diagram")
    c.add_argument("input")
    c.set_defaults(func=cmd_validate)

    c = sub.add_parser("count", help="tableau count, recursion and closed form")
    c.add_argument("n", type=int)
    c.add_argument("k", type=int)
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("enumerate", help="stream every canonical form as JSON lines")
    c.add_argument("n", type=int)
    c.add_argument("k", type=int)
    c.add_argument("--limit", type=int)
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("render", help="JSON diagram -> DOT")
    c.add_argument("input")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_render)

    c = sub.add_parser("selftest", help="run the correctness checks")
    c.add_argument("--max-n", type=int, default=3)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--trials", type=int, default=100)
    c.set_defaults(func=cmd_selftest)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, OracleSizeError) as exc:
        print(f"zxcf: error: {exc}", file=sys.stderr)
        return 2
    except (DiagramError, TableauError, CircuitError) as exc:
        print(f"zxcf: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
