"""Text, JSON and CSV renderings of traces, statistics and reports.

Rationals are written as ``"p/q"`` (or ``"p"``), cells as ``"i,j"`` and
grids as ``"a,b;c"``.  Every JSON document carries a ``schema`` tag.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

from .engine import SortTrace
from .oracle import ExchangeWitness, StatTables
from .shapes import Cell, Partition
from .tableaux import FCensus, HookTableau, Tabloid, format_grid, pretty_grid

TRACE_SCHEMA = "nps-trace/1"
STATS_SCHEMA = "nps-stats/1"
REPORT_SCHEMA = "nps-report/1"
MATRIX_SCHEMA = "nps-verify/1"


def jsonable(value: Any) -> Any:
    """Convert cells, fillings, rationals and keyed tables to plain JSON values."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Cell):
        return str(value)
    if isinstance(value, (Tabloid, HookTableau)):
        return format_grid(value.rows)
    if isinstance(value, Partition):
        return str(value)
    if isinstance(value, Mapping):
        return {_key(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def _key(key: Any) -> str:
    if isinstance(key, tuple) and not isinstance(key, Cell):
        return "|".join(str(part) for part in key)
    return str(key)


def dumps(doc: Any) -> str:
    return json.dumps(jsonable(doc), indent=2, sort_keys=False)


def trace_json(trace: SortTrace) -> dict[str, Any]:
    order: Any = "colmajor"
    if trace.order.name != "colmajor":
        # record the inducing tableau: rank + 1 at each cell
        rows = [[0] * p for p in trace.input.shape.parts]
        for r, c in enumerate(trace.order.cells):
            rows[c.row - 1][c.col - 1] = r + 1
        order = {"tableau": format_grid(rows)}
    return {
        "schema": TRACE_SCHEMA,
        "input": format_grid(trace.input.rows),
        "order": order,
        "slides": [
            {"cell": str(s.cell), "cycle": list(s.cycle), "path": [str(c) for c in s.path]}
            for s in trace.slides
        ],
        "exchanges": [[k, l, str(a), str(b)] for k, l, a, b in trace.exchanges],
        "output": format_grid(trace.output.rows),
    }


def trace_text(trace: SortTrace) -> str:
    lines = ["input:", pretty_grid(trace.input.rows), "slides:"]
    nontrivial = [s for s in trace.slides if s.length]
    for s in nontrivial:
        lines.append(f"  at {s.cell}: {s}")
    if not nontrivial:
        lines.append("  none")
    lines.append(f"{trace.total_exchanges} exchanges")
    for k, l, a, b in trace.exchanges:
        lines.append(f"  ({k} {l}): {k} moves {a} -> {b}")
    lines += ["output:", pretty_grid(trace.output.rows)]
    return "\n".join(lines)


def stats_json(tables: StatTables, extra: Mapping[str, Any] | None = None) -> dict[str, Any]:
    doc = {
        "schema": STATS_SCHEMA,
        "shape": str(tables.shape),
        "complexity": str(tables.complexity),
        "drop": tables.drop,
        "local_exchange": tables.local_exchange,
        "exchange": tables.exchange,
        "exit": tables.exit,
    }
    if extra:
        doc.update(extra)
    return jsonable(doc)


def csv_text(rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow([jsonable(v) for v in row])
    return buf.getvalue()


def cell_table_csv(shape: Partition, table: Mapping[tuple[int, Cell], Any], ks: Iterable[int]) -> str:
    """Rows indexed by ``k``, one column per cell in row-major order."""
    cells = shape.cells
    rows: list[list[Any]] = [["k", *map(str, cells)]]
    for k in ks:
        rows.append([k, *(table.get((k, c), 0) for c in cells)])
    return csv_text(rows)


def stats_csv(tables: StatTables) -> dict[str, str]:
    """One CSV document per statistic, keyed by a file stem."""
    n = tables.shape.n
    local_rows: list[list[Any]] = [["k", "x", "y", "count"]]
    for (k, x, y), v in sorted(tables.local_exchange.items()):
        local_rows.append([k, x, y, v])
    return {
        "drop": cell_table_csv(tables.shape, tables.drop, range(1, n + 1)),
        "exchange": csv_text([["k", "exchange"], *sorted(tables.exchange.items())]),
        "exit": cell_table_csv(tables.shape, tables.exit, range(1, n)),
        "local_exchange": csv_text(local_rows),
        "complexity": csv_text([["shape", "complexity"], [tables.shape, tables.complexity]]),
    }


def census_csv(census: FCensus) -> str:
    return cell_table_csv(census.shape, census.table, range(1, census.shape.n + 1))


def reports_csv(reports: Iterable[Any]) -> str:
    rows: list[list[Any]] = [["shape", "formula", "equal", "lhs", "rhs"]]
    for r in reports:
        rows.append([r.shape, r.formula, r.equal, _scalar(r.lhs), _scalar(r.rhs)])
    return csv_text(rows)


def _scalar(value: Any) -> str:
    value = jsonable(value)
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def matrix_csv(shapes: Sequence[Partition], suites: Sequence[str], outcome: Mapping[tuple[str, str], bool]) -> str:
    """Pass/fail matrix: one row per partition, one column per suite; blank when not run."""
    rows: list[list[Any]] = [["shape", *suites]]
    for lam in shapes:
        row: list[Any] = [lam]
        for s in suites:
            v = outcome.get((str(lam), s))
            row.append("" if v is None else ("pass" if v else "FAIL"))
        rows.append(row)
    return csv_text(rows)


def witness_json(w: ExchangeWitness) -> dict[str, Any]:
    return {"tabloid": format_grid(w.tabloid.rows), "partner": w.partner, "index": w.index}
