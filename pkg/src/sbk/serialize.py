"""JSON formats for groups, braces and reports.

Group files:  {"order": n, "table": [[...]]}
Brace files:  {"order": n, "add": [[...]], "mul": [[...]]}

Tables are 0-based and row-major with table[i][j] = i o j; the identity
may sit at any index on input and is normalized to index 0 on load. All
emitted JSON is canonical (sorted keys, two-space indent, trailing
newline) so identical inputs produce byte-identical files.
"""

from __future__ import annotations

import json
from typing import Any

from .bitset import members
from .braces import BraceFlags, SkewBrace, make_skew_brace
from .cauchy import CauchyReport, SurveyRow
from .errors import BadInput
from .groups import FiniteGroup, make_group
from .ybe import SolutionReport, YBEMap


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _require_table(obj: Any, key: str, n: int) -> list[list[int]]:
    table = obj.get(key)
    if not isinstance(table, list) or len(table) != n:
        raise BadInput(f"field {key!r} must be a {n}x{n} array")
    out = []
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise BadInput(f"row {i} of {key!r} must have length {n}")
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise BadInput(f"entry {x!r} in row {i} of {key!r} out of range")
        out.append(list(row))
    return out


def _require_order(obj: Any) -> int:
    if not isinstance(obj, dict):
        raise BadInput("top-level JSON value must be an object")
    n = obj.get("order")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise BadInput("field 'order' must be a positive integer")
    return n


def group_from_obj(obj: Any, name: str = "") -> FiniteGroup:
    n = _require_order(obj)
    table = _require_table(obj, "table", n)
    return make_group(table, name=name)


def group_to_obj(G: FiniteGroup) -> dict[str, Any]:
    return {"order": G.n, "table": [list(row) for row in G.table]}


def brace_from_obj(obj: Any) -> SkewBrace:
    n = _require_order(obj)
    add = _require_table(obj, "add", n)
    mul = _require_table(obj, "mul", n)
    return make_skew_brace(add, mul)


def brace_to_obj(B: SkewBrace) -> dict[str, Any]:
    return {
        "order": B.n,
        "add": [list(row) for row in B.add.table],
        "mul": [list(row) for row in B.mul.table],
    }


def load_brace(path: str) -> SkewBrace:
    return brace_from_obj(_load_json(path))


def load_group(path: str) -> FiniteGroup:
    return group_from_obj(_load_json(path))


def _load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise BadInput(f"cannot read JSON from {path}: {exc}") from exc


def flags_to_obj(flags: BraceFlags) -> dict[str, bool]:
    return flags.as_dict()


def cauchy_report_to_obj(report: CauchyReport) -> dict[str, Any]:
    return {
        "order": report.order,
        "all_primes_witnessed": report.all_primes_witnessed,
        "primes": [
            {
                "p": e.prime,
                "witness": members(e.witness) if e.witness is not None else None,
                "strategy": e.strategy,
            }
            for e in report.entries
        ],
    }


def survey_rows_to_obj(rows: list[SurveyRow]) -> list[dict[str, Any]]:
    return [
        {
            "order": row.order,
            "iso_index": row.index,
            "flags": row.flags.as_dict(),
            "all_primes_witnessed": row.all_primes_witnessed,
        }
        for row in rows
    ]


def ybe_to_obj(r: YBEMap, report: SolutionReport) -> dict[str, Any]:
    return {
        "order": r.n,
        "r": [[[u, v] for (u, v) in row] for row in r.pairs],
        "braid_ok": report.braid_ok,
        "nondegenerate": report.nondegenerate,
    }
