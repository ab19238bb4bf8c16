"""Command-line front end.

Subcommands: concepts, entropy, relevance, select, experiment, clarify,
reduce, scale, transpose. Exit codes: 0 success, 1 usage, 2 parse error,
3 degenerate entropy/relevance, 4 size or capacity guard violation.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import io as cio
from .context import make_scale
from .entropy import object_entropy, shannon_object_entropy
from .errors import (
    ConceptCapacityError,
    DegenerateContextError,
    FormatError,
    SelectionSizeError,
)
from .experiment import (
    DEFAULT_METHODS,
    METHODS,
    plot_records,
    records_to_csv,
    run_experiment,
)
from .lattice import enumerate_concepts
from .relevance import relative_relevance
from .selection import select_era, select_exhaustive, select_imrs, select_random

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_GUARD = 4


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; we reserve 2 for parse
    errors, so remap usage problems to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit_(EXIT_USAGE, f"{self.prog}: error: {message}")


class SystemExit_(Exception):
    def __init__(self, code: int, message: str = ""):
        super().__init__(message)
        self.code = code
        self.message = message


def _build_parser() -> _Parser:
    parser = _Parser(prog="fcarel", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def ctx_command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("context_file", help="path to a context file")
        p.add_argument(
            "--format",
            choices=("cxt", "csv"),
            default=None,
            help="input format (default: by file extension)",
        )
        p.add_argument("--out", default=None, help="write output to this path")
        return p

    p = ctx_command("concepts", "enumerate the formal concepts of a context")
    p.add_argument("--count-only", action="store_true", help="print only the count")

    p = ctx_command("entropy", "print context entropies")
    p.add_argument(
        "--kind", choices=("se", "oe"), default=None, help="which entropy (default both)"
    )
    p.add_argument(
        "--normalized",
        action="store_true",
        help="divide the Shannon value by the number of objects",
    )

    p = ctx_command("relevance", "relative relevance of attributes")
    p.add_argument(
        "--all",
        action="store_true",
        help="tabulate every attribute (default when --attributes is absent)",
    )
    p.add_argument(
        "--attributes",
        default=None,
        help="comma-separated attribute names: relevance of that set",
    )

    p = ctx_command("select", "pick an attribute subset")
    p.add_argument("--size", type=int, required=True, help="subset size n")
    p.add_argument("--method", choices=METHODS, default="imrs")
    p.add_argument("--objective", choices=("max", "min"), default="max")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=None)

    p = ctx_command("experiment", "selection sweep over sizes, CSV output")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument(
        "--method",
        action="append",
        default=None,
        help="method to run (repeatable or comma-separated; "
        "default imrs,era-se,era-oe,random)",
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--plot", default=None, help="also write a line chart (SVG etc.)")

    ctx_command("clarify", "merge identical rows and columns")
    ctx_command("reduce", "drop attributes expressible as column intersections")
    ctx_command("transpose", "swap objects and attributes")

    p = sub.add_parser("scale", help="emit a standard scale context")
    p.add_argument(
        "--kind", choices=("ordinal", "nominal", "contranominal"), required=True
    )
    p.add_argument("--n", type=int, required=True, help="scale size")
    p.add_argument(
        "--format", choices=("cxt", "csv"), default="cxt", help="output format"
    )
    p.add_argument("--out", default=None)

    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(args):
    fmt = args.format or cio.guess_format(args.context_file)
    with open(args.context_file, "rb") as fh:
        return cio.parse_context(fh.read(), fmt), fmt


def _run(args) -> int:
    if args.command == "scale":
        ctx = make_scale(args.kind, args.n)
        _emit(cio.write_context(ctx, args.format).decode("utf-8"), args.out)
        return EXIT_OK

    ctx, fmt = _load(args)

    if args.command == "concepts":
        concepts = enumerate_concepts(ctx)
        if args.count_only:
            _emit(f"{len(concepts)}\n", args.out)
        else:
            _emit(concepts.to_text(), args.out)
        return EXIT_OK

    if args.command == "entropy":
        lines = []
        if args.kind in (None, "se"):
            lines.append(f"se\t{shannon_object_entropy(ctx, normalized=args.normalized)!r}")
        if args.kind in (None, "oe"):
            lines.append(f"oe\t{object_entropy(ctx)!r}")
        _emit("".join(f"{line}\n" for line in lines), args.out)
        return EXIT_OK

    if args.command == "relevance":
        if args.attributes:
            names = [n.strip() for n in args.attributes.split(",") if n.strip()]
            attrs = ctx.attribute_indices(names)
            value = relative_relevance(ctx, attrs).value
            _emit(f"{','.join(names)}\t{value}\n", args.out)
        else:
            lines = []
            for m, name in enumerate(ctx.attributes):
                value = relative_relevance(ctx, [m]).value
                lines.append(f"{name}\t{value}")
            _emit("".join(f"{line}\n" for line in lines), args.out)
        return EXIT_OK

    if args.command == "select":
        if args.method == "random":
            baseline = select_random(ctx, args.size, trials=args.trials, seed=args.seed)
            _emit(
                f"random n={baseline.size} trials={baseline.trials} "
                f"mean={baseline.mean_relevance!r} std={baseline.std_relevance!r}\n",
                args.out,
            )
        else:
            if args.method == "exhaustive":
                result = select_exhaustive(ctx, args.size)
            elif args.method == "imrs":
                result = select_imrs(ctx, args.size)
            else:
                kind = "se" if args.method == "era-se" else "oe"
                result = select_era(ctx, args.size, kind=kind, objective=args.objective)
            _emit(
                f"{','.join(result.chosen_names)} r={result.relevance.value}\n",
                args.out,
            )
        return EXIT_OK

    if args.command == "experiment":
        methods = []
        for chunk in args.method or []:
            methods.extend(m.strip() for m in chunk.split(",") if m.strip())
        methods = tuple(methods) or DEFAULT_METHODS
        for method in methods:
            if method not in METHODS:
                raise SystemExit_(EXIT_USAGE, f"unknown method {method!r}")
        records = run_experiment(
            ctx,
            context_name=args.context_file,
            max_size=args.max_size,
            methods=methods,
            seed=args.seed,
            trials=args.trials,
        )
        _emit(records_to_csv(records), args.out)
        if args.plot:
            plot_records(records, args.plot)
        for record in records:
            if record.error:
                return (
                    EXIT_GUARD if record.error.startswith("size-guard") else EXIT_DEGENERATE
                )
        return EXIT_OK

    if args.command in ("clarify", "reduce", "transpose"):
        if args.command == "clarify":
            result, _ = ctx.clarify()
        elif args.command == "reduce":
            result = ctx.reduce()
        else:
            result = ctx.transpose()
        _emit(cio.write_context(result, fmt).decode("utf-8"), args.out)
        return EXIT_OK

    raise SystemExit_(EXIT_USAGE, f"unknown command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI; returns the exit code instead of raising SystemExit."""
    parser = _build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help and friends
            return int(exc.code or 0)
        return _run(args)
    except SystemExit_ as exc:
        if exc.message:
            print(exc.message, file=sys.stderr)
        return exc.code
    except FormatError as exc:
        print(f"fcarel: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"fcarel: cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DegenerateContextError as exc:
        print(f"fcarel: degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (SelectionSizeError, ConceptCapacityError) as exc:
        print(f"fcarel: guard violation: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (KeyError, ValueError) as exc:
        print(f"fcarel: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
