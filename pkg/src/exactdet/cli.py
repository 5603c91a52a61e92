"""Command-line front end: determinants, identity sweeps, Pfaffians, fuzzing.

Exit codes: 0 all checks pass, 1 a residual or engine differential failed
(which would mean an implementation bug, the identities are theorems), and
2 for usage, parse, or dimension errors.  Diagnostics go to stderr only.

Sweep policy (fixed constants, also shown in --help): index choices are
enumerated exhaustively for matrices of order <= 6 and sampled with the
seeded generator beyond that; the Laplace engine joins the differential
only up to order 7.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, Sequence

from .core import Matrix, format_scalar, submatrix_delete
from .engines import (
    complementary_minor,
    det_bareiss,
    det_dodgson,
    det_laplace,
    first_minor,
)
from .jacobi import (
    generalized_pluecker_residual,
    jacobi_residual,
    minor_three_term_residual,
    verify_all_jacobi,
)
from .matfile import emit_matrix_json, emit_matrix_text, parse_matrix
from .pfaffian import (
    antisymmetric_from_matrix,
    determinant_embedding,
    embedded_minor,
    jacobi_recurrence_residual,
    pfaffian,
)
from .pluecker import pluecker_sum, three_term_residual
from .randgen import SplitMix64, random_matrix, trial_stream

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

EXHAUSTIVE_LIMIT = 6  # sweep all index choices up to this order, sample beyond
SAMPLE_COUNT = 60  # sampled index choices per identity and splitting order
VERIFY_SAMPLE_SEED = 0  # fixed stream seed for sampled verify sweeps
LAPLACE_LIMIT = 7  # largest order fed to the Laplace oracle

IDENTITY_NAMES = ("jacobi", "three-term", "generalized", "pluecker")

Witness = tuple[str, Fraction]


def _read_matrix(path: str) -> Matrix:
    if path == "-":
        return parse_matrix(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as handle:
        return parse_matrix(handle.read())


def _record(
    check: str,
    operands: str,
    *,
    value: str | None = None,
    residual: str | None = None,
    passed: bool,
) -> dict:
    rec: dict = {"check": check, "operands": operands}
    if value is not None:
        rec["value"] = value
    if residual is not None:
        rec["residual"] = residual
    rec["pass"] = passed
    return rec


def _report(command: dict, records: list[dict], seed: int | None = None) -> dict:
    failures = sum(1 for rec in records if not rec["pass"])
    report: dict = {"command": command}
    if seed is not None:
        report["seed"] = seed
    report["results"] = records
    report["summary"] = {
        "checks": len(records),
        "failures": failures,
        "pass": failures == 0,
    }
    return report


def _print_report(report: dict, as_json: bool, stream=None) -> None:
    out = stream or sys.stdout
    if as_json:
        out.write(json.dumps(report, indent=2) + "\n")
        return
    for rec in report["results"]:
        detail = (
            f"value {rec['value']}" if "value" in rec else f"residual {rec['residual']}"
        )
        status = "pass" if rec["pass"] else "FAIL"
        out.write(f"{rec['check']} [{rec['operands']}]: {detail}: {status}\n")
    summary = report["summary"]
    status = "pass" if summary["pass"] else "FAIL"
    out.write(f"overall: {status} ({summary['checks']} checks, {summary['failures']} failures)\n")


def _exit_code(report: dict) -> int:
    return EXIT_OK if report["summary"]["pass"] else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# identity sweeps


def _sampled_index_set(gen: SplitMix64, n: int, size: int) -> tuple[int, ...]:
    chosen: set[int] = set()
    while len(chosen) < size:
        chosen.add(gen.next_int(1, n))
    return tuple(sorted(chosen))


def _row_col_choices(
    n: int, row_size: int, col_size: int, gen: SplitMix64
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    if n <= EXHAUSTIVE_LIMIT:
        for rows in combinations(range(1, n + 1), row_size):
            for cols in combinations(range(1, n + 1), col_size):
                yield rows, cols
    else:
        for _ in range(SAMPLE_COUNT):
            yield _sampled_index_set(gen, n, row_size), _sampled_index_set(gen, n, col_size)


def _restricted_columns(
    matrix: Matrix, del_rows: Sequence[int], cols: Sequence[int]
) -> tuple[Matrix, list[tuple[Fraction, ...]]]:
    """Delete rows and chosen columns; return the core block plus the
    chosen columns restricted to the surviving rows (ascending order)."""
    core = submatrix_delete(matrix, del_rows, cols)
    dropped = set(del_rows)
    vectors = [
        tuple(v for i, v in enumerate(matrix.column_values(c), start=1) if i not in dropped)
        for c in cols
    ]
    return core, vectors


def _sweep_jacobi(matrix: Matrix, gen: SplitMix64) -> tuple[int, list[Witness]]:
    if matrix.rows < 2:
        return 0, []
    report = verify_all_jacobi(matrix)
    witnesses = [(f"i={i} j={j}", res) for (i, j), res in report.witnesses]
    return report.residuals_checked, witnesses


def _sweep_three_term(matrix: Matrix, gen: SplitMix64) -> tuple[int, list[Witness]]:
    n = matrix.rows
    checked = 0
    witnesses: list[Witness] = []
    if n >= 4:
        for rows, cols in _row_col_choices(n, 2, 4, gen):
            res = minor_three_term_residual(matrix, rows, cols)
            checked += 1
            if res != 0:
                witnesses.append((f"rows={rows} cols={cols}", res))
    return checked, witnesses


def _sweep_generalized(matrix: Matrix, gen: SplitMix64) -> tuple[int, list[Witness]]:
    n = matrix.rows
    checked = 0
    witnesses: list[Witness] = []
    for r in (1, 2, 3):
        if 2 * r > n:
            break
        for rows, cols in _row_col_choices(n, r, 2 * r, gen):
            res = generalized_pluecker_residual(matrix, rows, cols)
            checked += 1
            if res != 0:
                witnesses.append((f"r={r} rows={rows} cols={cols}", res))
    return checked, witnesses


def _sweep_pluecker(matrix: Matrix, gen: SplitMix64) -> tuple[int, list[Witness]]:
    """Column-splitting relations on the delete-and-restrict construction:
    splitting order 1 through the full signed sum, order 2 through the fixed
    three-term formula."""
    n = matrix.rows
    checked = 0
    witnesses: list[Witness] = []
    if n >= 2:
        for rows, cols in _row_col_choices(n, 1, 2, gen):
            core, vectors = _restricted_columns(matrix, rows, cols)
            res = pluecker_sum(core, vectors)
            checked += 1
            if res != 0:
                witnesses.append((f"r=1 rows={rows} cols={cols}", res))
    if n >= 4:
        for rows, cols in _row_col_choices(n, 2, 4, gen):
            core, vectors = _restricted_columns(matrix, rows, cols)
            res = three_term_residual(core, *vectors)
            checked += 1
            if res != 0:
                witnesses.append((f"r=2 rows={rows} cols={cols}", res))
    return checked, witnesses


_SWEEPS: dict[str, Callable[[Matrix, SplitMix64], tuple[int, list[Witness]]]] = {
    "jacobi": _sweep_jacobi,
    "three-term": _sweep_three_term,
    "generalized": _sweep_generalized,
    "pluecker": _sweep_pluecker,
}


def _sweep_record(name: str, matrix: Matrix, checked: int, witnesses: list[Witness]) -> dict:
    n = matrix.rows
    if witnesses:
        shown = "; ".join(
            f"{where} residual {format_scalar(res)}" for where, res in witnesses[:10]
        )
        suffix = f" (+{len(witnesses) - 10} more)" if len(witnesses) > 10 else ""
        return _record(
            name,
            f"n={n} residuals={checked} nonzero={len(witnesses)} "
            f"witnesses: {shown}{suffix}",
            residual=format_scalar(witnesses[0][1]),
            passed=False,
        )
    return _record(name, f"n={n} residuals={checked}", residual="0", passed=True)


def _selected_identities(selection: str) -> tuple[str, ...]:
    return IDENTITY_NAMES if selection == "all" else (selection,)


# ---------------------------------------------------------------------------
# commands


def _cmd_det(args: argparse.Namespace) -> int:
    matrix = _read_matrix(args.file)
    if not matrix.is_square:
        raise ValueError(f"determinant requires a square matrix, got {matrix.rows}x{matrix.cols}")
    n = matrix.rows
    engines = ("laplace", "bareiss", "dodgson") if args.engine == "all" else (args.engine,)
    records = []
    values: dict[str, Fraction] = {}
    for engine in engines:
        if engine == "laplace":
            values[engine] = det_laplace(matrix)
            operands = f"n={n}"
        elif engine == "bareiss":
            values[engine] = det_bareiss(matrix)
            operands = f"n={n}"
        else:
            result = det_dodgson(matrix)
            values[engine] = result.value
            operands = f"n={n} fallback={str(result.fallback_used).lower()}"
            if result.fallback_used:
                operands += f" depth={result.fallback_depth}"
        records.append(
            _record(engine, operands, value=format_scalar(values[engine]), passed=True)
        )
    if args.engine == "all":
        agree = len(set(values.values())) == 1
        records.append(
            _record(
                "engines-agree",
                f"n={n} engines={len(values)}",
                value=format_scalar(values["bareiss"]),
                passed=agree,
            )
        )
    report = _report({"name": "det", "file": args.file, "engine": args.engine}, records)
    _print_report(report, args.json)
    return _exit_code(report)


def _parse_indices(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed index list {text!r}") from None


def _cmd_verify(args: argparse.Namespace) -> int:
    matrix = _read_matrix(args.file)
    if not matrix.is_square:
        raise ValueError(f"verify requires a square matrix, got {matrix.rows}x{matrix.cols}")
    has_selection = args.pair or args.rows or args.cols
    records = []
    if has_selection:
        if args.identity == "all":
            raise ValueError("index selections require a specific identity")
        records.append(_verify_selection(matrix, args))
    else:
        gen = trial_stream(VERIFY_SAMPLE_SEED, 0)
        for name in _selected_identities(args.identity):
            checked, witnesses = _SWEEPS[name](matrix, gen)
            records.append(_sweep_record(name, matrix, checked, witnesses))
    command = {"name": "verify", "file": args.file, "identity": args.identity}
    if args.pair:
        command["pair"] = args.pair
    if args.rows:
        command["rows"] = args.rows
    if args.cols:
        command["cols"] = args.cols
    report = _report(command, records)
    _print_report(report, args.json)
    return _exit_code(report)


def _verify_selection(matrix: Matrix, args: argparse.Namespace) -> dict:
    name = args.identity
    if name == "jacobi":
        if not args.pair or args.rows or args.cols:
            raise ValueError("jacobi selection takes --pair i,j")
        pair = _parse_indices(args.pair)
        if len(pair) != 2:
            raise ValueError("--pair needs exactly two indices")
        res = jacobi_residual(matrix, pair[0], pair[1])
        operands = f"n={matrix.rows} i={pair[0]} j={pair[1]}"
    else:
        if args.pair or not (args.rows and args.cols):
            raise ValueError(f"{name} selection takes --rows and --cols")
        rows = _parse_indices(args.rows)
        cols = _parse_indices(args.cols)
        operands = f"n={matrix.rows} rows={rows} cols={cols}"
        if name == "three-term":
            res = minor_three_term_residual(matrix, rows, cols)
        elif name == "generalized":
            res = generalized_pluecker_residual(matrix, rows, cols)
        else:  # pluecker
            if len(cols) != 2 * len(rows) or len(rows) not in (1, 2):
                raise ValueError("pluecker selection needs r rows and 2r columns, r in {1, 2}")
            core, vectors = _restricted_columns(matrix, sorted(rows), sorted(cols))
            if len(rows) == 1:
                res = pluecker_sum(core, vectors)
            else:
                res = three_term_residual(core, *vectors)
    return _record(name, operands, residual=format_scalar(res), passed=res == 0)


def _cmd_pfaffian(args: argparse.Namespace) -> int:
    matrix = _read_matrix(args.file)
    skew = antisymmetric_from_matrix(matrix)
    pf = pfaffian(skew)
    records = [
        _record("pfaffian", f"order={skew.order}", value=format_scalar(pf), passed=True)
    ]
    if args.check == "square":
        det = det_bareiss(matrix)
        records.append(
            _record(
                "pfaffian-square",
                f"order={skew.order} det={format_scalar(det)}",
                residual=format_scalar(pf * pf - det),
                passed=pf * pf == det,
            )
        )
    elif args.check == "recurrence":
        res = jacobi_recurrence_residual(skew)
        records.append(
            _record(
                "pfaffian-recurrence",
                f"order={skew.order}",
                residual=format_scalar(res),
                passed=res == 0,
            )
        )
    report = _report(
        {"name": "pfaffian", "file": args.file, "check": args.check}, records
    )
    _print_report(report, args.json)
    return _exit_code(report)


def _cmd_embed(args: argparse.Namespace) -> int:
    matrix = _read_matrix(args.file)
    if not matrix.is_square:
        raise ValueError(f"embed requires a square matrix, got {matrix.rows}x{matrix.cols}")
    n = matrix.rows
    embedded = determinant_embedding(matrix)
    full = embedded.to_matrix()
    sys.stdout.write(
        emit_matrix_json(full) if args.format == "json" else emit_matrix_text(full)
    )
    det = det_bareiss(matrix)
    pf = pfaffian(embedded)
    records = [
        _record(
            "embedding",
            f"n={n} det={format_scalar(det)} pf={format_scalar(pf)}",
            residual=format_scalar(pf - det),
            passed=pf == det,
        )
    ]
    if args.minors:
        mismatch: tuple[str, Fraction] | None = None
        checked = 0
        cases: list[tuple[str, set[str], Fraction]] = []
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                cases.append(
                    (f"minor ({i},{j})", {f"{i}", f"{j}*"}, first_minor(matrix, i, j))
                )
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                cases.append(
                    (
                        f"double minor ({i},{j})",
                        {f"{i}", f"{j}", f"{i}*", f"{j}*"},
                        complementary_minor(matrix, (i, j), (i, j)),
                    )
                )
        for label, removal, expected in cases:
            got = embedded_minor(matrix, removal)
            checked += 1
            if got != expected and mismatch is None:
                mismatch = (label, got - expected)
        operands = f"n={n} correspondences={checked}"
        if mismatch is not None:
            operands += f" first-mismatch {mismatch[0]}"
        records.append(
            _record(
                "embedded-minors",
                operands,
                residual="0" if mismatch is None else format_scalar(mismatch[1]),
                passed=mismatch is None,
            )
        )
    report = _report(
        {"name": "embed", "file": args.file, "minors": bool(args.minors)}, records
    )
    _print_report(report, as_json=False, stream=sys.stderr)
    return _exit_code(report)


def _cmd_fuzz(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise ValueError("--trials must be >= 1")
    if args.size_max < 2:
        raise ValueError("--size-max must be >= 2")
    if args.entry_bound < 1:
        raise ValueError("--entry-bound must be >= 1")
    identities = _selected_identities(args.identity)
    records = []
    for trial in range(args.trials):
        gen = trial_stream(args.seed, trial)
        n = gen.next_int(2, args.size_max)
        matrix = random_matrix(gen, n, n, args.entry_bound)
        value = det_bareiss(matrix)
        dodgson = det_dodgson(matrix)
        agree = dodgson.value == value
        engines = 2
        if n <= LAPLACE_LIMIT:
            agree = agree and det_laplace(matrix) == value
            engines = 3
        records.append(
            _record(
                "engines",
                f"trial={trial} n={n} engines={engines} "
                f"fallback={str(dodgson.fallback_used).lower()}",
                value=format_scalar(value),
                passed=agree,
            )
        )
        for name in identities:
            checked, witnesses = _SWEEPS[name](matrix, gen)
            rec = _sweep_record(name, matrix, checked, witnesses)
            rec["operands"] = f"trial={trial} " + rec["operands"]
            records.append(rec)
    command = {
        "name": "fuzz",
        "seed": args.seed,
        "trials": args.trials,
        "size_max": args.size_max,
        "entry_bound": args.entry_bound,
        "identity": args.identity,
    }
    report = _report(command, records, seed=args.seed)
    _print_report(report, as_json=True)
    return _exit_code(report)


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactdet",
        description=(
            "Exact rational determinants, minors, Pfaffians, and "
            "determinant-identity verification. Matrix files are text "
            "('rows cols' header then scalar rows) or the JSON equivalent; "
            "pass '-' to read standard input. Scalars are 'p' or 'p/q'."
        ),
        epilog=(
            f"Sweeps enumerate all index choices exhaustively for n <= "
            f"{EXHAUSTIVE_LIMIT} and sample {SAMPLE_COUNT} seeded choices per "
            f"identity beyond; the Laplace engine joins differentials up to "
            f"n = {LAPLACE_LIMIT}. Exit codes: 0 pass, 1 violation, 2 usage/parse."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    det = sub.add_parser("det", help="compute a determinant")
    det.add_argument("file", help="matrix file, or - for stdin")
    det.add_argument(
        "--engine",
        choices=("laplace", "bareiss", "dodgson", "all"),
        default="all",
        help="engine selection; 'all' cross-checks every engine (default)",
    )
    det.add_argument("--json", action="store_true", help="emit the JSON run report")
    det.set_defaults(func=_cmd_det)

    verify = sub.add_parser("verify", help="verify determinant identities")
    verify.add_argument("file", help="matrix file, or - for stdin")
    verify.add_argument(
        "--identity",
        choices=IDENTITY_NAMES + ("all",),
        default="all",
        help="which identity family to sweep (default: all)",
    )
    verify.add_argument("--pair", help="jacobi only: single pair 'i,j'")
    verify.add_argument("--rows", help="row index list 'i,j' for a single check")
    verify.add_argument("--cols", help="column index list 'k,l,...' for a single check")
    verify.add_argument("--json", action="store_true", help="emit the JSON run report")
    verify.set_defaults(func=_cmd_verify)

    pf = sub.add_parser("pfaffian", help="Pfaffian of an antisymmetric matrix")
    pf.add_argument("file", help="matrix file, or - for stdin")
    pf.add_argument(
        "--check",
        choices=("none", "square", "recurrence"),
        default="none",
        help="also check pf^2 = det, or the minor recurrence",
    )
    pf.add_argument("--json", action="store_true", help="emit the JSON run report")
    pf.set_defaults(func=_cmd_pfaffian)

    embed = sub.add_parser(
        "embed", help="emit the Pfaffian embedding of a determinant"
    )
    embed.add_argument("file", help="matrix file, or - for stdin")
    embed.add_argument(
        "--minors",
        action="store_true",
        help="also verify the minor correspondences for every index pair",
    )
    embed.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="matrix output format on stdout (default text)",
    )
    embed.set_defaults(func=_cmd_embed)

    fuzz = sub.add_parser("fuzz", help="seeded differential fuzzing")
    fuzz.add_argument("--seed", type=int, required=True, help="generator seed")
    fuzz.add_argument("--trials", type=int, required=True, help="number of trials (>= 1)")
    fuzz.add_argument("--size-max", type=int, default=6, help="largest matrix order (>= 2)")
    fuzz.add_argument(
        "--entry-bound", type=int, default=9, help="entries drawn from [-bound, bound]"
    )
    fuzz.add_argument(
        "--identity",
        choices=IDENTITY_NAMES + ("all",),
        default="all",
        help="identity families to sweep per trial (default: all)",
    )
    fuzz.set_defaults(func=_cmd_fuzz)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, IndexError, OSError) as exc:
        print(f"exactdet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
