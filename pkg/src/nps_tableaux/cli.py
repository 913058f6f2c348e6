"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 validation error, 4 verification failure.
``NPS_JOBS`` and ``NPS_OUT`` supply defaults for ``--jobs`` and ``--out``.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from pathlib import Path
from typing import Any, Sequence

from . import bijections as bij
from . import formats, formulas, oracle, verify
from .engine import nps_decode, nps_encode, nps_sort
from .shapes import Cell, Partition, ShapeError, cell_order_from_tableau
from .tableaux import FillingError, GridError, HookTableau, Tabloid, f_census, format_grid, parse_grid, pretty_grid

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_VERIFY = 4

_INT_LIST = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")
_GRID = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*(\s*;\s*-?\d+(\s*,\s*-?\d+)*)*\s*$")


class ParseError(ValueError):
    pass


def _shape(text: str | None, required: bool = True) -> Partition | None:
    if text is None:
        if required:
            raise ParseError("--shape is required")
        return None
    if text.strip() and not _INT_LIST.match(text):
        raise ParseError(f"malformed partition {text!r}; expected e.g. '4,4,3'")
    return Partition(tuple(int(t) for t in text.split(",")) if text.strip() else ())


def _grid(text: str | None, flag: str):
    if text is None:
        raise ParseError(f"{flag} is required")
    if not _GRID.match(text):
        raise ParseError(f"malformed grid {text!r} for {flag}; expected e.g. '2,1;3'")
    return parse_grid(text)


def _cell(text: str | None) -> Cell:
    if text is None:
        raise ParseError("--x is required")
    if not re.match(r"^\s*\d+\s*,\s*\d+\s*$", text):
        raise ParseError(f"malformed cell {text!r}; expected 'i,j'")
    return Cell(*(int(t) for t in text.split(",")))


def _required(value: Any, flag: str) -> Any:
    if value is None:
        raise ParseError(f"{flag} is required")
    return value


def _tabloid(args: argparse.Namespace, flag: str = "--tabloid") -> Tabloid:
    t = Tabloid(_grid(args.tabloid, flag))
    shape = _shape(args.shape, required=False)
    if shape is not None and shape != t.shape:
        raise FillingError(f"tabloid has shape {t.shape}, --shape says {shape}")
    return t


def _hook_and_syt(args: argparse.Namespace) -> tuple[HookTableau, Tabloid]:
    u = Tabloid.standard(_grid(args.syt, "--syt"))
    h = HookTableau(_grid(args.hook, "--hook"))
    if h.shape != u.shape:
        raise FillingError(f"hook tableau shape {h.shape} differs from tableau shape {u.shape}")
    return h, u


def _emit(args: argparse.Namespace, text: str) -> None:
    out = args.out or os.environ.get("NPS_OUT")
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _grids_text(pairs: Sequence[tuple[str, Any]]) -> str:
    lines = []
    for name, value in pairs:
        if isinstance(value, (Tabloid, HookTableau)):
            lines += [f"{name}:", pretty_grid(value.rows)]
        else:
            lines.append(f"{name}: {value}")
    return "\n".join(lines)


def cmd_sort(args: argparse.Namespace) -> int:
    t = _tabloid(args)
    order = cell_order_from_tableau(Tabloid.standard(_grid(args.syt, "--syt"), t.shape)) if args.syt else None
    trace = nps_sort(t, order)
    if args.format == "json":
        _emit(args, formats.dumps(formats.trace_json(trace)))
    elif args.format == "csv":
        rows = [["cell", "cycle", "path"]] + [[s.cell, str(s), " ".join(f"({c})" for c in s.path)] for s in trace.slides]
        _emit(args, formats.csv_text(rows).rstrip("\n"))
    else:
        _emit(args, formats.trace_text(trace))
    return EXIT_OK


def cmd_encode(args: argparse.Namespace) -> int:
    t = _tabloid(args)
    h, u = nps_encode(t)
    if args.format == "json":
        _emit(args, formats.dumps({"schema": "nps-code/1", "tabloid": t, "hook": h, "syt": u}))
    elif args.format == "csv":
        _emit(args, formats.csv_text([["tabloid", "hook", "syt"], [t, h, u]]).rstrip("\n"))
    else:
        _emit(args, _grids_text([("H", h), ("U", u), ("hook", format_grid(h.rows)), ("syt", format_grid(u.rows))]))
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    h, u = _hook_and_syt(args)
    t = nps_decode(h, u)
    if args.format == "json":
        _emit(args, formats.dumps({"schema": "nps-code/1", "tabloid": t, "hook": h, "syt": u}))
    else:
        _emit(args, _grids_text([("T", t), ("tabloid", format_grid(t.rows))]))
    return EXIT_OK


def _formula_tables(shape: Partition, args: argparse.Namespace) -> dict[str, Any]:
    census = f_census(shape, args.census)
    variant = "comp1" if args.comp2_variant is None else f"comp2-{args.comp2_variant}"
    return {
        "complexity": formulas.complexity_formula(shape, variant, census),
        "complexity_variant": variant,
        "drop": formulas.drop_table(shape, census),
        "exchange": formulas.exchange_table(shape, census),
        "exit": formulas.exit_table(shape, census),
        "census": census,
    }


def _table_text(shape: Partition, title: str, table: dict, ks: range) -> list[str]:
    cells = shape.cells
    header = ["k"] + [str(c) for c in cells]
    body = [[str(k)] + [str(table.get((k, c), 0)) for c in cells] for k in ks]
    width = max(len(v) for row in [header, *body] for v in row)
    return [title] + ["  " + " ".join(v.rjust(width) for v in row) for row in [header, *body]]


def cmd_stats(args: argparse.Namespace) -> int:
    shape = _shape(args.shape)
    n = shape.n
    status = EXIT_OK
    if args.backend == "both":
        comp2 = args.comp2_variant or "corrected"
        reports = formulas.formula_vs_oracle(shape, args.census, comp2)
        if any(not r.equal for r in reports):
            status = EXIT_VERIFY
        if args.format == "json":
            doc = {"schema": formats.REPORT_SCHEMA, "shape": str(shape), "reports": [r.to_json() for r in reports]}
            _emit(args, formats.dumps(doc))
        elif args.format == "csv":
            _emit(args, formats.reports_csv(reports).rstrip("\n"))
        else:
            lines = [f"shape {shape}"]
            for r in reports:
                mark = "equal" if r.equal else "DIFFERS"
                value = f" ({r.lhs} vs oracle {r.rhs})" if not isinstance(r.lhs, (dict, bool)) else ""
                lines.append(f"  {r.formula:<22} {mark}{value}")
            if comp2 == "paper":
                lines.append("  note: comp2-paper sums k up to n-1; the k = n term is omitted")
            _emit(args, "\n".join(lines))
        return status

    if args.backend == "oracle":
        tables = oracle.stat_tables(shape)
        complexity, drop, exchange, exit_ = tables.complexity, tables.drop, tables.exchange, tables.exit
        extra: dict[str, Any] = {"backend": "oracle"}
    else:
        ft = _formula_tables(shape, args)
        complexity, drop, exchange, exit_ = ft["complexity"], ft["drop"], ft["exchange"], ft["exit"]
        tables = oracle.StatTables(shape, drop, {}, exchange, exit_, complexity)
        extra = {"backend": "formula", "complexity_variant": ft["complexity_variant"], "census": ft["census"].table}

    if args.format == "json":
        _emit(args, formats.dumps(formats.stats_json(tables, extra)))
    elif args.format == "csv":
        docs = formats.stats_csv(tables)
        if args.backend == "formula":
            docs.pop("local_exchange")
        out = args.out or os.environ.get("NPS_OUT")
        if out:
            directory = Path(out)
            directory.mkdir(parents=True, exist_ok=True)
            for stem, text in docs.items():
                (directory / f"{stem}.csv").write_text(text)
        else:
            print("\n".join(f"# {stem}\n{text}" for stem, text in docs.items()).rstrip("\n"))
    else:
        lines = [
            f"shape {shape} ({extra['backend']})",
            f"C = {complexity}",
            "exchange = [" + ",".join(str(exchange[k]) for k in range(1, n)) + "]",
        ]
        lines += _table_text(shape, "drop d(k,x):", drop, range(1, n + 1))
        lines += _table_text(shape, "signed exit Δ(k,x):", exit_, range(1, n))
        _emit(args, "\n".join(lines))
    return status


def cmd_verify(args: argparse.Namespace) -> int:
    max_n = _required(args.max_n, "--max-n")
    if max_n < 1:
        raise ParseError("--max-n must be at least 1")
    suites = args.suites.split(",") if args.suites else None
    if suites:
        unknown = [s for s in suites if s not in verify.SUITES]
        if unknown:
            raise ParseError(f"unknown suites {unknown}; choose from {', '.join(verify.SUITES)}")
    jobs = args.jobs if args.jobs is not None else int(os.environ.get("NPS_JOBS", "1"))
    results = verify.verify(max_n, suites, jobs)
    names = suites or list(verify.SUITES)
    shapes = list(dict.fromkeys(r.shape for r in results))
    outcome = {(str(r.shape), r.suite): r.passed for r in results}
    failed = [r for r in results if not r.passed]
    if args.format == "csv":
        _emit(args, formats.matrix_csv(shapes, names, outcome).rstrip("\n"))
    elif args.format == "json":
        doc = {
            "schema": formats.MATRIX_SCHEMA,
            "max_n": max_n,
            "results": [
                {"suite": r.suite, "shape": str(r.shape), "passed": r.passed, "detail": r.detail} for r in results
            ],
        }
        _emit(args, formats.dumps(doc))
    else:
        lines = [f"{r.suite:<17} {str(r.shape):<12} {'pass' if r.passed else 'FAIL'}  {r.detail}" for r in results]
        lines.append(f"{len(results) - len(failed)}/{len(results)} passed")
        _emit(args, "\n".join(lines))
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_counterexample(args: argparse.Namespace) -> int:
    max_n = _required(args.max_n, "--max-n")
    if args.kind == "local-conjugation":
        w = verify.find_local_conjugation(max_n)
        doc = None if w is None else {
            "shape": w.shape,
            "k": w.k,
            "x": w.x,
            "y": w.y,
            "count": w.count,
            "conjugate_shape": w.shape.conjugate(),
            "conjugate_count": w.conjugate_count,
        }
        text = "none found" if w is None else (
            f"shape {w.shape}, k={w.k}, x={w.x}, y={w.y}: "
            f"ε_λ(k,x,y) = {w.count}, ε_λ'(k,x',y') = {w.conjugate_count} on {w.shape.conjugate()}"
        )
    else:
        w = verify.find_nonuniform_order(max_n)
        doc = None if w is None else {
            "shape": w.shape,
            "order_tableau": w.order_tableau,
            "expected": w.expected,
            "histogram": {format_grid(u.rows): c for u, c in w.histogram.items()},
        }
        if w is None:
            text = "none found"
        else:
            lines = [f"shape {w.shape}, order from U = {w.order_tableau}, uniform count would be {w.expected}"]
            lines += [f"  {u}: {c}" for u, c in w.histogram.items()]
            text = "\n".join(lines)
    if args.format == "json":
        _emit(args, formats.dumps({"schema": "nps-counterexample/1", "kind": args.kind, "witness": doc}))
    else:
        _emit(args, text)
    return EXIT_OK


def _witness_args(args: argparse.Namespace) -> tuple[Partition, int, Cell]:
    k = _required(args.k, "--k")
    x = _cell(args.x)
    return _shape(args.shape, required=False), k, x


def cmd_bijection(args: argparse.Namespace) -> int:
    op = args.op
    result: dict[str, Any]
    trajectory = None
    if op in ("psi", "involution"):
        t = _tabloid(args)
        _, k, x = _witness_args(args)
        w = bij.DropWitness(t, _required(args.label, "--label"))
        if op == "psi":
            h, u = bij.psi_forward(t.shape, k, x, w)
            result = {"hook": h, "syt": u}
        else:
            v = bij.drop_involution(t.shape, k, x, w)
            result = {"tabloid": v.tabloid, "label": v.label, "cell": x.conjugate()}
    elif op == "psi-inverse":
        h, u = _hook_and_syt(args)
        _, k, x = _witness_args(args)
        w = bij.psi_inverse(u.shape, k, x, h, u)
        result = {"tabloid": w.tabloid, "label": w.label}
    elif op == "psi-exchange":
        t = _tabloid(args)
        k = _required(args.k, "--k")
        b = bij.psi_exchange(t.shape, k, bij.AElement(t, _required(args.index, "--index")))
        result = {"hook": b.hook, "syt": b.tableau, "index": b.index}
    elif op == "psi-exchange-inverse":
        h, u = _hook_and_syt(args)
        k = _required(args.k, "--k")
        a = bij.psi_exchange_inverse(u.shape, k, bij.BElement(h, u, _required(args.index, "--index")))
        result = {"tabloid": a.tabloid, "index": a.index}
    else:
        t = _tabloid(args)
        k = _required(args.k, "--k")
        e = bij.exchange_at(t, k, _required(args.index, "--index"))
        label = _required(args.label, "--label")
        if op == "pingpong":
            r = bij.pingpong(t.shape, k, e, label)
        else:
            # the input lives on the conjugate shape
            r = bij.pingpong_inverse(t.shape.conjugate(), k, e, label)
        result = {
            "tabloid": r.witness.tabloid,
            "partner": r.witness.partner,
            "index": r.witness.index,
            "label": r.label,
            "steps": r.steps,
        }
        trajectory = r.trajectory
    if args.format == "json":
        doc = {"schema": "nps-bijection/1", "op": op, "result": result}
        if trajectory is not None and args.trajectory:
            doc["trajectory"] = trajectory
        _emit(args, formats.dumps(doc))
    else:
        lines = [_grids_text(list(result.items()))]
        if trajectory is not None and args.trajectory:
            for i, step in enumerate(trajectory, 1):
                b, bc = step["b"], step["b_conjugate"]
                lines.append(
                    f"step {i}: B(λ') ({format_grid(bc['hook'])} | {format_grid(bc['tableau'])} | {bc['index']})"
                    f" -> B(λ) ({format_grid(b['hook'])} | {format_grid(b['tableau'])} | {b['index']}), label {step['label']}"
                )
        _emit(args, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--shape", help="partition, e.g. 4,4,3")
    common.add_argument("--tabloid", help="grid, rows separated by ';', e.g. 2,1;3")
    common.add_argument("--hook", help="hook tableau grid")
    common.add_argument("--syt", help="standard Young tableau grid (for sort: the tableau inducing the cell order)")
    common.add_argument("--k", type=int)
    common.add_argument("--x", help="cell i,j")
    common.add_argument("--label", type=int, help="auxiliary label l with k <= l <= n")
    common.add_argument("--index", type=int, help="index i of an element of A(λ,k) or B(λ,k)")
    common.add_argument("--max-n", type=int)
    common.add_argument("--backend", choices=["oracle", "formula", "both"], default="oracle")
    common.add_argument("--census", choices=["enumeration", "determinant"], default="enumeration",
                        help="how f_λ(k,x) is tabulated for formula evaluation")
    common.add_argument("--comp2-variant", choices=["corrected", "paper"],
                        help="evaluate the second complexity form (upper limit n, or n-1)")
    common.add_argument("--format", choices=["human", "json", "csv"], default="human")
    common.add_argument("--jobs", type=int, help="worker processes (env NPS_JOBS)")
    common.add_argument("--out", help="output file, or directory for csv stats (env NPS_OUT)")
    common.add_argument("--suites", help="comma-separated verify suites (default: all)")
    common.add_argument("--trajectory", action="store_true", help="dump ping-pong steps")

    parser = argparse.ArgumentParser(prog="nps", description="Novelli-Pak-Stoyanovskii sorting, statistics and bijections")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("sort", parents=[common], help="sort a tabloid and print the slides").set_defaults(func=cmd_sort)
    sub.add_parser("encode", parents=[common], help="tabloid -> (hook tableau, SYT)").set_defaults(func=cmd_encode)
    sub.add_parser("decode", parents=[common], help="(hook tableau, SYT) -> tabloid").set_defaults(func=cmd_decode)
    sub.add_parser("stats", parents=[common], help="drop, exchange, exit and complexity tables").set_defaults(
        func=cmd_stats
    )
    sub.add_parser("verify", parents=[common], help="run verification suites").set_defaults(func=cmd_verify)
    ce = sub.add_parser("counterexample", parents=[common], help="search for the smallest counterexample")
    ce.add_argument("kind", choices=["local-conjugation", "nonuniform-order"])
    ce.set_defaults(func=cmd_counterexample)
    bj = sub.add_parser("bijection", parents=[common], help="apply or invert a bijection")
    bj.add_argument(
        "op",
        choices=["psi", "psi-inverse", "involution", "psi-exchange", "psi-exchange-inverse", "pingpong", "pingpong-inverse"],
    )
    bj.set_defaults(func=cmd_bijection)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, GridError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (FillingError, ShapeError, bij.BijectionError, ValueError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
