"""Command-line surface: single-weight queries, rewriting, and grid comparison.

Commands
--------
mult     multiplicity of one weight by a selected method
rewrite  left-normed rewriting of a bracket expression
compare  grid report comparing every method; disagreement between the
         closed form and the oracles is recorded as data, never a failure;
         disagreement between the two oracles aborts with an error
witt     free Lie algebra dimension of a multidegree
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterable

from .formula import FormulaParams, Variant, closed_form_dim
from .freelie import (
    ParseError,
    expand_combination,
    expand_tensor,
    free_lie_dim,
    parse_bracket,
    to_standard_form,
)
from .gcm import WeightVector, rank3_chain
from .peterson import MultiplicityTable, RecurrenceError
from .serre import DEFAULT_HEIGHT_CAP, OracleScaleError, SerreQuotient
from .tuples import count_canonical

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_COMPUTE = 3

CSV_HEADER = (
    "a1,a2,n1,n2,n3,formula_section44,formula_lemma410,formula_guarded,"
    "tuples_canonical,peterson,quotient,agree_guarded_peterson"
)


class OracleDisagreement(RuntimeError):
    """The two independent oracles returned different values: a hard failure."""


@dataclass(frozen=True)
class ComparisonRow:
    a1: int
    a2: int
    n1: int
    n2: int
    n3: int
    formula_section44: int | str
    formula_lemma410: int | str
    formula_guarded: int | str
    tuples_canonical: int | str
    peterson: int
    quotient: int | str
    agree_guarded_peterson: bool | str

    def csv_line(self) -> str:
        def cell(v: object) -> str:
            if isinstance(v, bool):
                return "true" if v else "false"
            return str(v)

        return ",".join(
            cell(v)
            for v in (
                self.a1,
                self.a2,
                self.n1,
                self.n2,
                self.n3,
                self.formula_section44,
                self.formula_lemma410,
                self.formula_guarded,
                self.tuples_canonical,
                self.peterson,
                self.quotient,
                self.agree_guarded_peterson,
            )
        )

    def json_line(self) -> str:
        return json.dumps(
            {
                "a1": self.a1,
                "a2": self.a2,
                "n1": self.n1,
                "n2": self.n2,
                "n3": self.n3,
                "formula_section44": self.formula_section44,
                "formula_lemma410": self.formula_lemma410,
                "formula_guarded": self.formula_guarded,
                "tuples_canonical": self.tuples_canonical,
                "peterson": self.peterson,
                "quotient": self.quotient,
                "agree_guarded_peterson": self.agree_guarded_peterson,
            },
            sort_keys=False,
        )


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'a1,a2', got {text!r}")
    try:
        a1, a2 = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers in {text!r}") from None
    return a1, a2


def _parse_weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _parse_range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'LO..HI', got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers in {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    if lo < 0:
        raise argparse.ArgumentTypeError("weight coefficients are nonnegative")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootmult",
        description="Exact root multiplicities of rank-3 chain Kac-Moody algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    mult = sub.add_parser("mult", help="multiplicity of a single weight")
    mult.add_argument("--gcm", type=_parse_pair, required=True, metavar="a1,a2")
    mult.add_argument("--weight", type=_parse_weight, required=True, metavar="n1,n2,n3")
    mult.add_argument(
        "--method",
        choices=("formula", "peterson", "quotient", "tuples"),
        required=True,
    )
    mult.add_argument(
        "--variant",
        choices=tuple(v.value for v in Variant),
        default=Variant.GUARDED.value,
    )
    mult.add_argument("--height-cap", type=int, default=DEFAULT_HEIGHT_CAP)

    rewrite = sub.add_parser("rewrite", help="rewrite a bracket expression")
    rewrite.add_argument("expression")
    rewrite.add_argument("--verify", action="store_true")

    compare = sub.add_parser("compare", help="grid comparison report")
    compare.add_argument("--gcm", type=_parse_pair, required=True, metavar="a1,a2")
    compare.add_argument(
        "--range",
        type=_parse_range,
        required=True,
        metavar="LO..HI",
        help="inclusive bounds applied to each coefficient; the zero weight is omitted",
    )
    compare.add_argument("--format", choices=("csv", "json"), default="csv")
    compare.add_argument("--out", default=None, metavar="PATH")
    compare.add_argument("--height-cap", type=int, default=DEFAULT_HEIGHT_CAP)
    compare.add_argument("--workers", type=int, default=4)

    witt = sub.add_parser("witt", help="free Lie algebra dimension of a multidegree")
    witt.add_argument("--weight", type=_parse_weight, required=True, metavar="n1,...,nr")

    return parser


def _cmd_mult(args: argparse.Namespace, out: IO[str]) -> int:
    a1, a2 = args.gcm
    try:
        algebra = rank3_chain(a1, a2)
        weight = WeightVector.of(args.weight)
        if len(weight) != 3:
            raise ValueError(f"expected a rank-3 weight, got {weight.coeffs}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.method in ("formula", "tuples"):
        try:
            params = FormulaParams(a1, a2, *weight.coeffs)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if args.method == "formula":
            value = closed_form_dim(params, args.variant).dim
        else:
            value = count_canonical(params).canonical
        print(value, file=out)
        return EXIT_OK

    try:
        if args.method == "peterson":
            value = MultiplicityTable(algebra).multiplicity(weight)
        else:
            value = SerreQuotient(algebra, height_cap=args.height_cap).multiplicity(weight)
    except (OracleScaleError, RecurrenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    print(value, file=out)
    return EXIT_OK


def _cmd_rewrite(args: argparse.Namespace, out: IO[str]) -> int:
    try:
        expr = parse_bracket(args.expression)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    combo = to_standard_form(expr)
    for t, c in combo.terms():
        print(f"{'+' if c > 0 else '-'}{abs(c)}*[{','.join(map(str, t))}]", file=out)
    if args.verify:
        if expand_tensor(expr) == expand_combination(combo):
            print("VERIFIED", file=out)
        else:
            print("MISMATCH", file=out)
            return EXIT_COMPUTE
    return EXIT_OK


def _compare_row(
    a1: int,
    a2: int,
    weight: tuple[int, int, int],
    table: MultiplicityTable,
    engine: SerreQuotient,
) -> ComparisonRow:
    n1, n2, n3 = weight
    lam = WeightVector(weight)
    formulas: dict[Variant, int | str]
    if min(weight) >= 2:
        params = FormulaParams(a1, a2, n1, n2, n3)
        formulas = {v: closed_form_dim(params, v).dim for v in Variant}
        canonical: int | str = count_canonical(params).canonical
    else:
        formulas = {v: "n/a" for v in Variant}
        canonical = "n/a"
    mult = table.multiplicity(lam)
    quotient: int | str
    if lam.height <= engine.height_cap:
        quotient = engine.multiplicity(lam)
        if quotient != mult:
            raise OracleDisagreement(
                f"oracle disagreement at weight {weight}: quotient {quotient}, "
                f"recurrence {mult}"
            )
    else:
        quotient = "skipped"
    guarded = formulas[Variant.GUARDED]
    agree: bool | str = guarded == mult if isinstance(guarded, int) else "n/a"
    return ComparisonRow(
        a1=a1,
        a2=a2,
        n1=n1,
        n2=n2,
        n3=n3,
        formula_section44=formulas[Variant.SECTION44],
        formula_lemma410=formulas[Variant.LEMMA410],
        formula_guarded=formulas[Variant.GUARDED],
        tuples_canonical=canonical,
        peterson=mult,
        quotient=quotient,
        agree_guarded_peterson=agree,
    )


def compare_rows(
    a1: int,
    a2: int,
    lo: int,
    hi: int,
    height_cap: int = DEFAULT_HEIGHT_CAP,
    workers: int = 4,
) -> Iterable[ComparisonRow]:
    """Rows in grid order (n1, n2, n3 lexicographic over [lo..hi]^3).

    The recurrence table and quotient engine are shared; both are
    internally locked, and memoized values do not depend on evaluation
    order, so the output is deterministic regardless of scheduling.
    """
    algebra = rank3_chain(a1, a2)
    table = MultiplicityTable(algebra)
    engine = SerreQuotient(algebra, height_cap=height_cap)
    grid = [
        (n1, n2, n3)
        for n1 in range(lo, hi + 1)
        for n2 in range(lo, hi + 1)
        for n3 in range(lo, hi + 1)
        if n1 + n2 + n3 >= 1  # the zero weight is not a weight of anything
    ]
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        yield from pool.map(lambda w: _compare_row(a1, a2, w, table, engine), grid)


def _cmd_compare(args: argparse.Namespace, out: IO[str]) -> int:
    a1, a2 = args.gcm
    try:
        algebra = rank3_chain(a1, a2)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if algebra.finite_type:
        print(
            "note: (a1, a2) = (1, 1) is finite type; the closed-form counts "
            "assume max(a1, a2) >= 2",
            file=sys.stderr,
        )
    lo, hi = args.range

    sink = open(args.out, "w", encoding="utf-8") if args.out else out
    try:
        if args.format == "csv":
            print(CSV_HEADER, file=sink)
        try:
            for row in compare_rows(
                a1, a2, lo, hi, height_cap=args.height_cap, workers=args.workers
            ):
                print(row.csv_line() if args.format == "csv" else row.json_line(), file=sink)
        except (OracleScaleError, RecurrenceError, OracleDisagreement) as exc:
            # leave a partial report with an explicit truncation marker
            if args.format == "csv":
                print(f"# truncated: {exc}", file=sink)
            else:
                print(json.dumps({"truncated": str(exc)}), file=sink)
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_COMPUTE
    finally:
        if args.out:
            sink.close()
    return EXIT_OK


def _cmd_witt(args: argparse.Namespace, out: IO[str]) -> int:
    try:
        value = free_lie_dim(args.weight)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(value, file=out)
    return EXIT_OK


def main(argv: list[str] | None = None, out: IO[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    if args.command == "mult":
        return _cmd_mult(args, out)
    if args.command == "rewrite":
        return _cmd_rewrite(args, out)
    if args.command == "compare":
        return _cmd_compare(args, out)
    if args.command == "witt":
        return _cmd_witt(args, out)
    parser.error(f"unknown command {args.command!r}")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
