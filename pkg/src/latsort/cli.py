"""``latsort`` command line: sort, compare, bench and check.

Exit codes: 0 success, 1 mismatch or non-distributive lattice, 2 parse or
usage error, 3 lattice validation failure, 4 distributivity checks disagree.
"""

from __future__ import annotations

import argparse
import itertools
import random
import sys
from pathlib import Path

from . import latfile
from .analysis import is_distributive_direct, pascal_identity_holds
from .bench import ALGORITHMS, medians, random_sequence, run_bench, run_sort, write_csv
from .lattice import (
    BoundedLattice,
    DivisibilityLattice,
    FiniteLattice,
    LatticeError,
    PowersetLattice,
    TotalOrderLattice,
)
from .pascal import LITERAL, MODES, OPTIMIZED

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_DISAGREE = 4

COMPARE_MAX_N = 20


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_PARSE):
        self.code = code
        super().__init__(message)


def lattice_from_selector(selector: str) -> BoundedLattice:
    """``div``, ``order``, ``powerset:<u>`` or ``finite:<file>``."""
    kind, _, arg = selector.partition(":")
    if kind == "div" and not arg:
        return DivisibilityLattice()
    if kind == "order" and not arg:
        return TotalOrderLattice()
    if kind == "powerset":
        try:
            return PowersetLattice(int(arg))
        except ValueError:
            raise CliError(f"bad powerset universe size {arg!r} (expected 0..64)") from None
    if kind == "finite" and arg:
        return load_lattice_file(arg)
    raise CliError(f"unknown lattice {selector!r}; use div, order, powerset:<u> or finite:<file>")


def load_lattice_file(path: str) -> FiniteLattice:
    try:
        return latfile.load(path)
    except OSError as exc:
        raise CliError(f"cannot read lattice file {path}: {exc.strerror}") from None
    except latfile.LatticeFormatError as exc:
        raise CliError(f"{path}: {exc}") from None
    except (LatticeError, ValueError) as exc:
        raise CliError(f"{path}: not a bounded lattice: {exc}", EXIT_INVALID) from None


def read_tokens(args) -> list[str]:
    if args.input is not None:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            try:
                text = Path(args.input).read_text()
            except OSError as exc:
                raise CliError(f"cannot read {args.input}: {exc.strerror}") from None
        tokens = text.split()
    elif args.values:
        tokens = [t for v in args.values for t in v.split()]
    else:
        tokens = sys.stdin.read().split()
    return tokens


def parse_sequence(lattice: BoundedLattice, tokens: list[str]) -> list:
    values = []
    for tok in tokens:
        try:
            values.append(lattice.parse(tok))
        except ValueError:
            raise CliError(f"bad token {tok!r} for lattice {lattice.name}") from None
    return values


def fmt(lattice: BoundedLattice, seq) -> str:
    return " ".join(lattice.format(v) for v in seq)


def cmd_sort(args) -> int:
    lattice = lattice_from_selector(args.lattice)
    x = parse_sequence(lattice, read_tokens(args))
    result = run_sort(args.algo, lattice, x, args.mode)
    print(fmt(lattice, result))
    return EXIT_OK


def _compare_inputs(args, lattice):
    if args.exhaustive:
        if not isinstance(lattice, FiniteLattice):
            raise CliError("--exhaustive needs a finite:<file> lattice")
        print(f"inputs: all {len(lattice)}^{args.n} sequences of length {args.n}")
        return itertools.product(lattice.elements, repeat=args.n)
    rng = random.Random(args.seed)
    print(f"inputs: {args.trials} sequences of length {args.n} from random.Random (MT19937), seed {args.seed}")
    return (random_sequence(lattice, args.n, rng) for _ in range(args.trials))


def cmd_compare(args) -> int:
    if args.n < 0:
        raise CliError("--n must be nonnegative")
    if args.n > COMPARE_MAX_N and not args.force:
        raise CliError(f"--n {args.n} exceeds {COMPARE_MAX_N}; the oracle is exponential (use --force)")
    lattice = lattice_from_selector(args.lattice)
    matched = total = 0
    for trial, x in enumerate(_compare_inputs(args, lattice), start=1):
        x = list(x)
        fast = run_sort("pascal", lattice, x, LITERAL)
        spec = run_sort("spec", lattice, x)
        total += 1
        if all(lattice.eq(a, b) for a, b in zip(fast, spec)):
            matched += 1
            if args.verbose:
                print(f"trial {trial}: match")
        else:
            print(f"trial {trial}: MISMATCH input=({fmt(lattice, x)}) pascal=({fmt(lattice, fast)}) spec=({fmt(lattice, spec)})")
    print(f"{matched}/{total} match")
    return EXIT_OK if matched == total else EXIT_MISMATCH


def parse_sizes(text: str) -> list[int]:
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise CliError(f"bad --sizes {text!r}; expected comma-separated integers") from None
    if not sizes or any(n < 0 for n in sizes):
        raise CliError(f"bad --sizes {text!r}")
    return sizes


def cmd_bench(args) -> int:
    sizes = parse_sizes(args.sizes)
    lattice = lattice_from_selector(args.lattice)
    try:
        fh = open(args.csv, "w", newline="")
    except OSError as exc:
        raise CliError(f"cannot write {args.csv}: {exc.strerror}") from None
    with fh:
        try:
            records = run_bench(args.algo, lattice, sizes, args.reps, args.mode, args.count, args.lattice)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        write_csv(records, fh)
    print(f"{'n':>8}  {'median s':>12}  {'ratio':>6}")
    prev = None
    for n, t in medians(records).items():
        ratio = f"{t / prev:6.2f}" if prev else ""
        print(f"{n:>8}  {t:12.6f}  {ratio:>6}")
        prev = t
    print(f"wrote {len(records)} rows to {args.csv}")
    return EXIT_OK


def _describe(lattice: FiniteLattice, seq) -> str:
    return "(" + ", ".join(lattice.format(v) for v in seq) + ")"


def cmd_check(args) -> int:
    lattice = load_lattice_file(args.file)
    direct = is_distributive_direct(lattice)
    identity = pascal_identity_holds(lattice, args.max_len)
    print(f"lattice: {lattice.name} ({len(lattice)} elements)")
    print(f"distributive law: {direct.verdict.value}")
    if direct.law_witness:
        a, b, c = (lattice.format(v) for v in direct.law_witness)
        m, j = lattice.meet, lattice.join
        x, y, z = direct.law_witness
        lhs, rhs = lattice.format(m(x, j(y, z))), lattice.format(j(m(x, y), m(x, z)))
        print(f"  witness: {a} ^ ({b} v {c}) = {lhs} but ({a} ^ {b}) v ({a} ^ {c}) = {rhs}")
    print(f"pascal identity: {identity.verdict.value}")
    w = identity.identity_witness
    if w:
        print(
            f"  witness: x = {_describe(lattice, w.sequence)}: pascal {_describe(lattice, w.pascal)}"
            f" vs spec {_describe(lattice, w.spec)} at position {w.position}"
        )
    if direct.verdict != identity.verdict:
        print("DISAGREE")
        return EXIT_DISAGREE
    print("AGREE")
    return EXIT_OK if direct.distributive else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latsort", description="Sorting sequences in bounded lattices.")
    sub = parser.add_subparsers(dest="command", required=True)
    lattice_help = "div, order, powerset:<u> or finite:<file>"

    p = sub.add_parser("sort", help="sort a sequence and print it")
    p.add_argument("--lattice", required=True, help=lattice_help)
    p.add_argument("--algo", choices=ALGORITHMS, default="pascal")
    p.add_argument("--mode", choices=MODES, default=OPTIMIZED, help="pascal sentinel handling")
    p.add_argument("--input", metavar="FILE", help="read tokens from FILE ('-' for stdin)")
    p.add_argument("values", nargs="*", help="sequence tokens (stdin when omitted)")
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("compare", help="check the pascal sort against the subset oracle")
    p.add_argument("--lattice", required=True, help=lattice_help)
    p.add_argument("--n", type=int, required=True, help="sequence length")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true", help="try every sequence (finite lattices)")
    p.add_argument("--force", action="store_true", help=f"allow --n above {COMPARE_MAX_N}")
    p.add_argument("-v", "--verbose", action="store_true", help="print matching trials too")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("bench", help="time sorting (1, ..., n) and write CSV")
    p.add_argument("--algo", choices=ALGORITHMS, required=True)
    p.add_argument("--lattice", required=True, help=lattice_help)
    p.add_argument("--sizes", required=True, help="comma-separated lengths")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--mode", choices=MODES, default=OPTIMIZED)
    p.add_argument("--count", action="store_true", help="record meet/join counts")
    p.add_argument("--csv", default="bench.csv")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("check", help="decide distributivity of a lattice file two ways")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, default=3)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"latsort {args.command}: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
