"""Compile the bundled codes and write their canonical JSON and DOT drawings."""

import argparse
from pathlib import Path

from zxcf.canonical import canonicalize, to_json
from zxcf.codes import CODES, code, cyclic_invariant, is_cube, output_sectors
from zxcf.render import render_dot


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", default="figures", help="output directory")
    args = p.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name in CODES:
        d = canonicalize(code(name))
        (out / f"{name}.json").write_text(to_json(d) + "\n")
        (out / f"{name}.dot").write_text(render_dot(d))
        print(f"{name}: n={d.n} k={d.k} pivots={d.pivots} edges={len(d.a)}")
    print("shor sectors:", output_sectors(canonicalize(code("shor"))))
    print("steane is a cube:", is_cube(canonicalize(code("steane"))))
    print("five-qubit cyclic:", cyclic_invariant(canonicalize(code("five"))))


if __name__ == "__main__":
    main()
