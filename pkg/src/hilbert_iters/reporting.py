"""Trace serialization, rate fitting, and the aggregate certification report.

CSV traces carry exactly the columns ``t, dh_step, dh_to_ref, objective,
empirical_ratio`` with 17 significant digits and LF line endings, so a parsed
file reproduces the run bit for bit.  The SVG chart is a self-contained
semilog plot of the reference distances with the theoretical guide line.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .trace import IterationTrace

__all__ = [
    "trace_columns",
    "write_trace_csv",
    "read_trace_csv",
    "write_convergence_svg",
    "fitted_rate",
    "TrialSummary",
    "RateRecord",
    "RateReport",
    "report_to_json",
]

CSV_HEADER = ["t", "dh_step", "dh_to_ref", "objective", "empirical_ratio"]

# Distances below this are treated as converged-to-reference noise: they are
# excluded from rate fits and clipped on the log axis of the chart.
DISTANCE_FLOOR = 1e-16


def _fmt(value: float | None) -> str:
    if value is None:
        return ""
    return format(float(value), ".17g")


def trace_columns(trace: IterationTrace) -> dict[str, list]:
    """Column view of a trace; undefined leading entries are ``None``.

    Rows are indexed by the one-based iterate counter, so the initial point
    is row ``t = 1`` and a one-step run yields two rows.
    """
    count = len(trace.iterates)
    ratios = trace.step_ratios()
    return {
        "t": list(range(1, count + 1)),
        "dh_step": [None] + list(trace.step_distances),
        "dh_to_ref": list(trace.to_reference) if trace.to_reference is not None else [None] * count,
        "objective": list(trace.objectives),
        "empirical_ratio": [None, None] + ratios,
    }


def write_trace_csv(columns: dict[str, list], path) -> None:
    rows = len(columns["t"])
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for i in range(rows):
            writer.writerow(
                [str(columns["t"][i])]
                + [_fmt(columns[name][i]) for name in CSV_HEADER[1:]]
            )


def read_trace_csv(path) -> dict[str, list]:
    """Parse a trace CSV back into columns; empty cells become ``None``."""
    columns: dict[str, list] = {name: [] for name in CSV_HEADER}
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        if header != CSV_HEADER:
            raise ValueError(f"unexpected header {header}")
        for row in reader:
            columns["t"].append(int(row[0]))
            for name, cell in zip(CSV_HEADER[1:], row[1:]):
                columns[name].append(float(cell) if cell else None)
    return columns


def fitted_rate(to_reference: list[float] | None) -> float | None:
    """Geometric rate fitted to the tail of the reference distances.

    Least-squares slope of ``log d_H(x_t, ref)`` over the last half of the
    usable points (those above the noise floor); ``None`` when fewer than two
    points remain.  Per-step inequalities are the assertions; this fit is a
    diagnostic summary.
    """
    if not to_reference:
        return None
    points = [
        (t, math.log(d))
        for t, d in enumerate(to_reference)
        if d is not None and math.isfinite(d) and d > DISTANCE_FLOOR
    ]
    tail = points[len(points) // 2 :]
    if len(tail) < 2:
        return None
    ts = np.array([p[0] for p in tail])
    logs = np.array([p[1] for p in tail])
    slope = np.polyfit(ts, logs, 1)[0]
    return float(math.exp(slope))


def _svg_polyline(points: list[tuple[float, float]], color: str, dashed: bool = False) -> str:
    coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
    dash = ' stroke-dasharray="6,4"' if dashed else ""
    return (
        f'<polyline fill="none" stroke="{color}" stroke-width="1.5"{dash} '
        f'points="{coords}"/>'
    )


def write_convergence_svg(
    series: list[tuple[str, list[float]]],
    path,
    guide_rate: float | None = None,
) -> None:
    """Semilog chart of reference distances, one polyline per trace.

    Distances at or below the floor are clipped to it for the log axis.
    Raises when no series carries distances (a trace without a reference
    point cannot be charted).
    """
    cleaned: list[tuple[str, list[float]]] = []
    for label, values in series:
        usable = [max(v, DISTANCE_FLOOR) for v in values if v is not None and math.isfinite(v)]
        if usable:
            cleaned.append((label, usable))
    if not cleaned:
        raise ValueError("no trace with reference distances to chart")

    width, height = 720.0, 480.0
    left, right, top, bottom = 70.0, 20.0, 30.0, 50.0
    plot_w = width - left - right
    plot_h = height - top - bottom

    t_max = max(len(values) for _, values in cleaned)
    y_values = [v for _, values in cleaned for v in values]
    y_lo = math.floor(math.log10(min(y_values)))
    y_hi = math.ceil(math.log10(max(y_values)))
    if guide_rate is not None and guide_rate > 0:
        start = max(values[0] for _, values in cleaned)
        guide_end = max(start * guide_rate ** (t_max - 1), DISTANCE_FLOOR)
        y_lo = min(y_lo, math.floor(math.log10(guide_end)))
    if y_hi == y_lo:
        y_hi = y_lo + 1

    def sx(t: float) -> float:
        return left + (t - 1.0) / max(t_max - 1, 1) * plot_w

    def sy(value: float) -> float:
        frac = (math.log10(value) - y_lo) / (y_hi - y_lo)
        return top + (1.0 - frac) * plot_h

    palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<rect width="{width:.0f}" height="{height:.0f}" fill="white"/>',
        f'<rect x="{left:.1f}" y="{top:.1f}" width="{plot_w:.1f}" height="{plot_h:.1f}" '
        'fill="none" stroke="#333333" stroke-width="1"/>',
    ]
    # decade ticks on the log axis
    decades = range(int(y_lo), int(y_hi) + 1)
    step = max(1, (len(list(decades)) - 1) // 8)
    for exponent in range(int(y_lo), int(y_hi) + 1, step):
        y = sy(10.0**exponent)
        parts.append(
            f'<line x1="{left - 4:.1f}" y1="{y:.2f}" x2="{left:.1f}" y2="{y:.2f}" '
            'stroke="#333333" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{left - 8:.1f}" y="{y + 4:.2f}" text-anchor="end" '
            f'font-family="monospace" font-size="11">1e{exponent}</text>'
        )
    x_tick_step = max(1, (t_max - 1) // 10 or 1)
    for t in range(1, t_max + 1, x_tick_step):
        x = sx(t)
        parts.append(
            f'<line x1="{x:.2f}" y1="{top + plot_h:.1f}" x2="{x:.2f}" '
            f'y2="{top + plot_h + 4:.1f}" stroke="#333333" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{top + plot_h + 18:.1f}" text-anchor="middle" '
            f'font-family="monospace" font-size="11">{t}</text>'
        )
    parts.append(
        f'<text x="{left + plot_w / 2:.1f}" y="{height - 12:.1f}" text-anchor="middle" '
        'font-family="monospace" font-size="12">iteration t</text>'
    )
    parts.append(
        f'<text x="16" y="{top + plot_h / 2:.1f}" text-anchor="middle" '
        f'font-family="monospace" font-size="12" '
        f'transform="rotate(-90 16 {top + plot_h / 2:.1f})">distance to reference</text>'
    )

    if guide_rate is not None and guide_rate > 0:
        start = max(values[0] for _, values in cleaned)
        guide = [
            (sx(t), sy(max(start * guide_rate ** (t - 1), DISTANCE_FLOOR)))
            for t in range(1, t_max + 1)
        ]
        parts.append(_svg_polyline(guide, "#888888", dashed=True))
        parts.append(
            f'<text x="{left + plot_w - 4:.1f}" y="{top + 14:.1f}" text-anchor="end" '
            f'font-family="monospace" font-size="11" fill="#888888">'
            f"guide rate {guide_rate:.6g}</text>"
        )

    for index, (label, values) in enumerate(cleaned):
        color = palette[index % len(palette)]
        points = [(sx(t + 1), sy(v)) for t, v in enumerate(values)]
        parts.append(_svg_polyline(points, color))
        parts.append(
            f'<text x="{left + 6:.1f}" y="{top + 14 + 14 * index:.1f}" '
            f'font-family="monospace" font-size="11" fill="{color}">{label}</text>'
        )
    parts.append("</svg>")
    with open(path, "w", newline="\n") as handle:
        handle.write("\n".join(parts) + "\n")


@dataclass
class TrialSummary:
    """One solver run inside a sweep cell."""

    trial: int
    iterations: int
    converged: bool
    boundary_attracted: bool
    final_step: float
    final_residual: float
    final_objective: float
    fitted_rate: float | None


@dataclass
class RateRecord:
    """Certification outcome for one (kind, alpha, dimension) cell."""

    kind: str
    alpha: float | None
    dim: object
    theoretical: float
    empirical: float
    guaranteed: bool
    slack: float
    passed: bool
    trials: list[TrialSummary]
    details: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)


@dataclass
class RateReport:
    """All records of one experiment plus the aggregate verdict."""

    kind: str
    seed: int
    records: list[RateRecord]
    passed: bool
    warnings: list[str] = field(default_factory=list)


def _jsonable(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None if math.isnan(value) else ("inf" if value > 0 else "-inf")
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def report_to_json(report: RateReport) -> str:
    """Deterministic JSON rendering; non-finite floats become strings."""
    return json.dumps(_jsonable(asdict(report)), indent=2) + "\n"
