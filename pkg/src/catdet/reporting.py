"""Report serialization: json, csv and aligned text.

Field order is fixed and rationals are serialized as "p/q" strings, so
two runs with the same seed and parameters produce byte-identical
output.  Timings are therefore excluded unless explicitly requested
(``include_timing``); elapsed_ms is the only floating-point field that
can ever appear.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Mapping

from .rationals import format_rational
from .registry import (PARAM_ORDER, STATUS_FAIL, STATUS_PASS,
                       STATUS_RHS_UNDEFINED, STATUS_SKIPPED,
                       VerificationReport, format_param_value)

FORMATS = ("text", "json", "csv")


def _params_object(params: Mapping) -> dict:
    out = {}
    for key in PARAM_ORDER:
        if key not in params:
            continue
        value = params[key]
        if key in ("alpha", "x", "aterms", "bterms") or isinstance(value, Fraction):
            out[key] = format_param_value(key, value)
        else:
            out[key] = value
    return out


def _params_text(params: Mapping) -> str:
    obj = _params_object(params)
    return " ".join(f"{k}={v}" for k, v in obj.items())


def _value_text(v: Fraction | None) -> str:
    return "" if v is None else format_rational(v)


def summarize(reports: Iterable[VerificationReport]) -> dict:
    counts = {STATUS_PASS: 0, STATUS_FAIL: 0, STATUS_RHS_UNDEFINED: 0,
              STATUS_SKIPPED: 0}
    total = 0
    for r in reports:
        counts[r.status] += 1
        total += 1
    return {"cases": total, **counts}


def emit_report(reports: list[VerificationReport], fmt: str = "text",
                run_meta: Mapping | None = None,
                include_timing: bool = False) -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown report format {fmt!r}; choose from {FORMATS}")
    if fmt == "json":
        return _emit_json(reports, run_meta, include_timing)
    if fmt == "csv":
        return _emit_csv(reports, include_timing)
    return _emit_text(reports, run_meta, include_timing)


def _emit_json(reports, run_meta, include_timing) -> str:
    meta = dict(run_meta or {})
    meta.update(summarize(reports))
    cases = []
    for r in reports:
        obj = {
            "id": r.case.identity,
            "params": _params_object(r.case.params),
            "lhs": _value_text(r.lhs) or None,
            "rhs": _value_text(r.rhs) or None,
            "status": r.status,
            "engine": r.engine,
        }
        if r.detail:
            obj["detail"] = r.detail
        if include_timing:
            obj["elapsed_ms"] = round(r.elapsed_s * 1000.0, 3)
        cases.append(obj)
    return json.dumps({"run_meta": meta, "cases": cases}, indent=2) + "\n"


def _emit_csv(reports, include_timing) -> str:
    buf = io.StringIO()
    fields = ["id", "params", "lhs", "rhs", "status", "engine"]
    if include_timing:
        fields.append("elapsed_ms")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for r in reports:
        row = [r.case.identity, _params_text(r.case.params),
               _value_text(r.lhs), _value_text(r.rhs),
               r.status, r.engine or ""]
        if include_timing:
            row.append(f"{r.elapsed_s * 1000.0:.3f}")
        writer.writerow(row)
    return buf.getvalue()


def _emit_text(reports, run_meta, include_timing) -> str:
    lines = []
    if run_meta:
        lines.append("# " + " ".join(f"{k}={v}" for k, v in run_meta.items()))
    for r in reports:
        bits = [f"{r.case.identity:<18}", f"{_params_text(r.case.params):<40}",
                f"{r.status:<13}"]
        if r.status in (STATUS_PASS, STATUS_FAIL):
            bits.append(f"lhs={_value_text(r.lhs)} rhs={_value_text(r.rhs)}")
        elif r.lhs is not None:
            bits.append(f"lhs={_value_text(r.lhs)}")
        if r.detail:
            bits.append(f"[{r.detail}]")
        if include_timing:
            bits.append(f"{r.elapsed_s * 1000.0:.3f}ms")
        lines.append(" ".join(bits).rstrip())
    s = summarize(reports)
    lines.append(f"summary: {s['cases']} cases, {s[STATUS_PASS]} pass, "
                 f"{s[STATUS_FAIL]} fail, {s[STATUS_RHS_UNDEFINED]} rhs-undefined, "
                 f"{s[STATUS_SKIPPED]} skipped")
    return "\n".join(lines) + "\n"
