"""Text, JSON and CSV rendering of command results.

JSON output is deterministic: sorted keys, no timings, rows ordered by degree.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Sequence
from typing import Any

from quiver_cohomology.application.dtos.cohomology_dtos import (
    TABLE_COLUMNS,
    DimensionRow,
    DimensionTable,
)
from quiver_cohomology.application.dtos.product_dtos import ProductTable, RingCheckReport
from quiver_cohomology.application.dtos.verification_dtos import VerificationSummary
from quiver_cohomology.presentation.schemas.requests import OutputFormat
from quiver_cohomology.presentation.utils.error_formatter import format_success_response


def _status(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def _agree_text(agree: bool | None) -> str:
    match agree:
        case None:
            return "-"
        case True:
            return "AGREE"
        case _:
            return "DISAGREE"


def _csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _aligned(header: Sequence[str], rows: Sequence[Sequence[str]]) -> list[str]:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row, strict=True)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths, strict=True))]
    lines.extend("  ".join(c.rjust(w) for c, w in zip(row, widths, strict=True)) for row in rows)
    return lines


# -- dimension tables -----------------------------------------------------------


def row_payload(row: DimensionRow) -> dict[str, Any]:
    return {
        "n": row.n,
        "dim_hom": row.dim_hom,
        "dim_ker": row.dim_ker,
        "dim_im": row.dim_im,
        "dim_hh_computed": row.dim_hh_computed,
        "dim_hh_formula": row.dim_hh_formula,
        "agree": row.agree,
        "branch": row.branch,
        "provenance": row.provenance.value,
        "dim_im_formula": row.dim_im_formula,
        "dim_ker_formula": row.dim_ker_formula,
    }


def dimension_payload(table: DimensionTable) -> dict[str, Any]:
    return {
        "command": "dims",
        "s": table.s,
        "characteristic": table.characteristic,
        "field": table.field,
        "max_degree": table.max_degree,
        "formula_checked": table.formula_checked,
        "all_agree": table.all_agree,
        "columns": list(TABLE_COLUMNS),
        "rows": [row_payload(row) for row in table.rows],
        "euler_windows": [
            {**window.model_dump(), "holds": window.holds} for window in table.euler_windows()
        ],
    }


def render_dimension_table(table: DimensionTable, output_format: OutputFormat) -> str:
    match output_format:
        case "json":
            return format_success_response(dimension_payload(table))
        case "csv":
            return _csv(
                TABLE_COLUMNS,
                [
                    [
                        row.n,
                        row.dim_hom,
                        row.dim_ker,
                        row.dim_im,
                        row.dim_hh_computed,
                        "" if row.dim_hh_formula is None else row.dim_hh_formula,
                        "" if row.agree is None else str(row.agree).lower(),
                    ]
                    for row in table.rows
                ],
            )
        case _:
            return _dimension_text(table)


def _dimension_text(table: DimensionTable) -> str:
    if table.formula_checked:
        header = [*TABLE_COLUMNS, "branch"]
        cells = [
            [
                str(row.n),
                str(row.dim_hom),
                str(row.dim_ker),
                str(row.dim_im),
                str(row.dim_hh_computed),
                str(row.dim_hh_formula),
                _agree_text(row.agree),
                row.branch or "",
            ]
            for row in table.rows
        ]
    else:
        header = list(TABLE_COLUMNS[:5])
        cells = [
            [str(v) for v in (row.n, row.dim_hom, row.dim_ker, row.dim_im, row.dim_hh_computed)]
            for row in table.rows
        ]
    lines = [f"HH^n of the algebra with s={table.s} over {table.field}, n = 0..{table.max_degree}"]
    lines.extend(_aligned(header, cells))
    for window in table.euler_windows():
        lines.append(
            f"euler window [{window.start}, {window.end}]: "
            f"{window.alternating_hh} vs {window.alternating_corrected} {_status(window.holds)}"
        )
    if table.formula_checked:
        lines.append("all degrees AGREE" if table.all_agree else "closed form DISAGREES")
    else:
        lines.append("closed forms need s >= 3; computed dimensions only")
    return "\n".join(lines) + "\n"


# -- verification summaries -----------------------------------------------------


def render_verification(summary: VerificationSummary, output_format: OutputFormat) -> str:
    match output_format:
        case "json":
            return format_success_response(
                {**summary.model_dump(mode="json"), "passed": summary.passed}
            )
        case "csv":
            return _csv(
                ["name", "passed", "detail"],
                [[c.name, str(c.passed).lower(), c.detail] for c in summary.checks],
            )
        case _:
            lines = [
                f"{summary.command} s={summary.s} char={summary.characteristic} "
                f"N={summary.max_degree}"
            ]
            lines.extend(f"{_status(c.passed)}  {c.name}: {c.detail}" for c in summary.checks)
            lines.extend(summary.notes)
            lines.append(f"overall: {_status(summary.passed)}")
            return "\n".join(lines) + "\n"


# -- products and ring checks ---------------------------------------------------


def render_product_table(table: ProductTable, output_format: OutputFormat) -> str:
    match output_format:
        case "json":
            return format_success_response(
                {"command": "yoneda", **table.model_dump(mode="json"), "passed": table.passed}
            )
        case "csv":
            return _csv(
                ["k", "l", "degree", "class_coordinates", "matches", "theta_agrees"],
                [
                    [
                        e.k,
                        e.l,
                        e.degree,
                        " ".join(e.class_coordinates),
                        str(e.matches).lower(),
                        "" if e.theta_agrees is None else str(e.theta_agrees).lower(),
                    ]
                    for e in table.entries
                ],
            )
        case _:
            lines = [
                f"Yoneda products z_k x z_l, s={table.s} char={table.characteristic}, "
                f"case ({table.case}), D={table.generator_degree}"
            ]
            lines.extend(
                _aligned(
                    ["k", "l", "degree", "class", "matches", "theta"],
                    [
                        [
                            str(e.k),
                            str(e.l),
                            str(e.degree),
                            "[" + ", ".join(e.class_coordinates) + "]",
                            _status(e.matches),
                            "-" if e.theta_agrees is None else _status(e.theta_agrees),
                        ]
                        for e in table.entries
                    ],
                )
            )
            lines.append(f"overall: {_status(table.passed)}")
            return "\n".join(lines) + "\n"


def render_ring_check(report: RingCheckReport, output_format: OutputFormat) -> str:
    match output_format:
        case "json":
            return format_success_response(
                {
                    "command": "ring-check",
                    **report.model_dump(mode="json"),
                    "relation_matrix": report.relation_matrix,
                    "passed": report.passed,
                }
            )
        case "csv":
            matrix = report.relation_matrix
            return _csv(
                ["k", "l", "index"],
                [[k, col, value] for k, row in enumerate(matrix) for col, value in enumerate(row)],
            )
        case _:
            presentation = report.presentation
            lines = [
                f"ring-check s={report.s} char={report.characteristic}: case ({report.case}), "
                f"D={report.generator_degree}, {report.generator_count} generators"
            ]
            lines.append("relation matrix (index of z_k z_l, -1 if undetected):")
            lines.extend("  " + " ".join(f"{v:>3}" for v in row) for row in report.relation_matrix)
            for t in sorted(presentation.span_dimensions):
                lines.append(
                    f"power {t}: span {presentation.span_dimensions[t]}, "
                    f"dim HH^{report.generator_degree * t} "
                    f"{presentation.cohomology_dimensions.get(t)}"
                )
            lines.append(f"commutative: {presentation.commutative}")
            for sample in report.nilpotence.samples:
                lines.append(
                    f"nilpotent {sample.label} (degree {sample.degree}): "
                    f"{_status(sample.passed)}, vanishing power {sample.vanishing_power}"
                )
            lines.append(f"presentation: {_status(presentation.passed)}")
            lines.append(f"overall: {_status(report.passed)}")
            return "\n".join(lines) + "\n"
