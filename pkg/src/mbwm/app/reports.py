"""Plain-text report rendering.

Tables print at 4 decimal places, rounded half away from zero; JSON output
is the place for full precision.
"""

from __future__ import annotations

import decimal
from typing import Any, Mapping

from ..oracle import OracleResult


def fmt4(x: float) -> str:
    """Render at 4 decimals, ties away from zero (so 1.00005 -> '1.0001')."""
    q = decimal.Decimal(repr(float(x))).quantize(
        decimal.Decimal("0.0001"), rounding=decimal.ROUND_HALF_UP
    )
    return f"{q:.4f}"


def _table(rows: list[list[str]], indent: str = "  ") -> list[str]:
    widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
    return [
        indent + "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    ]


def _eps_lines(check: Mapping[str, Any]) -> list[str]:
    lines = ["eps table:"]
    rows = [[f"eps[{name}]", "=", fmt4(value)] for name, value in check["eps_i"].items()]
    rows += [
        [f"eps[{entry['pair'][0]},{entry['pair'][1]}]", "=", fmt4(entry["value"])]
        for entry in check["eps_ij"]
    ]
    if rows:
        lines += _table(rows)
    else:
        lines.append("  (no non-reference criteria)")
    return lines


def _consistency_lines(check: Mapping[str, Any]) -> list[str]:
    case = check["case"]
    extremes = []
    if check["i0"] is not None:
        extremes.append(f"i0: {check['i0']}")
    if check["j0"] is not None:
        extremes.append(f"j0: {check['j0']}")
    case_line = f"case: {case}" + (f"   ({', '.join(extremes)})" if extremes else "")
    cr_suffix = " (consistent)" if check["consistent"] else ""
    if check.get("tied_cases"):
        case_line += f"   [tied: {', '.join(check['tied_cases'])}]"
    lines = [
        case_line,
        f"eps_star: {fmt4(check['eps_star'])}",
        f"ci: {fmt4(check['ci'])}",
        f"cr: {fmt4(check['cr'])}{cr_suffix}"
        + (" [normalized]" if check.get("cr_normalized") else ""),
    ]
    lines += _eps_lines(check)
    for warning in check.get("warnings", ()):
        lines.append(f"warning: {warning}")
    return lines


def render_check(check: Mapping[str, Any]) -> str:
    return "\n".join(_consistency_lines(check)) + "\n"


def render_evaluation(response: Mapping[str, Any]) -> str:
    request = response["request"]
    lines = [
        f"criteria: {', '.join(request['criteria'])}"
        f"   (best: {request['best']}, worst: {request['worst']})"
    ]
    check = dict(response["diagnostics"])
    check.update(response["consistency"])
    check["warnings"] = ()
    lines += _consistency_lines(check)

    lines.append("weights:")
    rows = [["criterion", "weight", "low", "high", "eta"]]
    for name in request["criteria"]:
        lo, hi = response["interval_weights"][name]
        rows.append(
            [
                name,
                fmt4(response["best_weights"][name]),
                fmt4(lo),
                fmt4(hi),
                fmt4(response["deviations"][name]),
            ]
        )
    lines += _table(rows)

    lines.append("best modified system:")
    rows = [["criterion", "best_to_other", "other_to_worst"]]
    modified = response["best_modified_pcs"]
    for name in request["criteria"]:
        rows.append(
            [
                name,
                fmt4(modified["best_to_other"][name]),
                fmt4(modified["other_to_worst"][name]),
            ]
        )
    lines += _table(rows)
    for warning in response.get("warnings", ()):
        lines.append(f"warning: {warning}")
    return "\n".join(lines) + "\n"


def render_oracle(
    analytic_eps: float, result: OracleResult, delta: float
) -> str:
    lines = [
        f"analytic eps_star: {fmt4(analytic_eps)}",
        f"oracle eta_star: {fmt4(result.eta_star)}",
        f"absolute delta: {delta:.3e}",
        f"bisection iterations: {result.iterations}",
        f"tolerance: {result.tolerance_used:g}",
    ]
    return "\n".join(lines) + "\n"


def render_hierarchy(ranking: Mapping[str, Any]) -> str:
    lines = ["category weights:"]
    rows = [["category", "weight"]]
    rows += [
        [name, fmt4(value)] for name, value in ranking["category_weights"].items()
    ]
    lines += _table(rows)
    lines.append("leaves:")
    rows = [["category", "leaf", "local", "global", "rank"]]
    for leaf in ranking["leaves"]:
        rows.append(
            [
                leaf["category"],
                leaf["leaf"],
                fmt4(leaf["local_weight"]),
                fmt4(leaf["global_weight"]),
                str(leaf["rank"]),
            ]
        )
    lines += _table(rows)
    total = sum(leaf["global_weight"] for leaf in ranking["leaves"])
    lines.append(f"global weight sum: {fmt4(total)}")
    return "\n".join(lines) + "\n"
