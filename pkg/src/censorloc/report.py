"""File formats: instance files (JSON), sweep CSV, and SVG line charts."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from .errors import InvalidInput
from .geometry import Point
from .simulation import SweepRecord

CSV_HEADER = (
    "variable", "value", "estimator", "trials_total", "trials_detecting",
    "mse", "mean_err_x", "mean_err_y", "stderr_mse",
)


@dataclass(frozen=True)
class Instance:
    sensors: tuple[Point, ...]
    radius: float | None = None
    target: Point | None = None


def _num(v: float) -> str:
    return "%.17g" % v


def dump_instance(inst: Instance) -> str:
    """JSON text with one sensor per line; floats keep 17 significant digits."""
    lines = ["{"]
    if inst.radius is not None:
        lines.append(f'  "radius": {_num(inst.radius)},')
    if inst.target is not None:
        lines.append(f'  "target": [{_num(inst.target.x)}, {_num(inst.target.y)}],')
    body = ",\n".join(f"    [{_num(p.x)}, {_num(p.y)}]" for p in inst.sensors)
    lines.append('  "sensors": [\n' + body + "\n  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> Instance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"instance file is not valid JSON: {exc}") from None
    if not isinstance(data, dict) or "sensors" not in data:
        raise InvalidInput("instance file needs a 'sensors' list")
    try:
        sensors = tuple(Point(*_pair(s)) for s in data["sensors"])
        radius = data.get("radius")
        radius = None if radius is None else float(radius)
        target = data.get("target")
        target = None if target is None else Point(*_pair(target))
    except (TypeError, ValueError) as exc:
        raise InvalidInput(f"bad instance field: {exc}") from None
    if not sensors:
        raise InvalidInput("instance has no sensors")
    if radius is not None and not (math.isfinite(radius) and radius > 0):
        raise InvalidInput("instance radius must be positive")
    return Instance(sensors, radius, target)


def _pair(v) -> tuple[float, float]:
    if not isinstance(v, (list, tuple)) or len(v) != 2:
        raise ValueError(f"expected an [x, y] pair, got {v!r}")
    return float(v[0]), float(v[1])


def load_instance(path: str | Path) -> Instance:
    return parse_instance(Path(path).read_text())


def save_instance(inst: Instance, path: str | Path) -> None:
    Path(path).write_text(dump_instance(inst))


def _cell(v: float | None) -> str:
    return "" if v is None else repr(float(v))


def write_sweep_csv(records: Sequence[SweepRecord], out: TextIO, meta: Iterable[str] = ()) -> None:
    """Write sweep rows sorted by (value, estimator id), after '#' metadata lines."""
    for line in meta:
        out.write(f"# {line}\n")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in sorted(records, key=lambda r: (r.value, r.estimator.value)):
        ex, ey = r.mean_error if r.mean_error is not None else (None, None)
        w.writerow([
            r.variable, repr(float(r.value)), r.estimator.value, r.trials_total,
            r.trials_detecting, _cell(r.mse), _cell(ex), _cell(ey), _cell(r.stderr_mse),
        ])


def sweep_csv_text(records: Sequence[SweepRecord], meta: Iterable[str] = ()) -> str:
    buf = io.StringIO()
    write_sweep_csv(records, buf, meta)
    return buf.getvalue()


def read_sweep_csv(text: str) -> list[dict]:
    """Parse sweep CSV text; empty numeric cells come back as ``None``."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise InvalidInput("CSV has no header")
    reader = csv.reader(lines)
    header = tuple(next(reader))
    if header != CSV_HEADER:
        raise InvalidInput(f"unexpected CSV header: {','.join(header)}")
    rows = []
    for lineno, raw in enumerate(reader, start=2):
        if len(raw) != len(CSV_HEADER):
            raise InvalidInput(f"CSV row {lineno} has {len(raw)} fields")
        try:
            row = dict(zip(CSV_HEADER, raw))
            row["value"] = float(row["value"])
            row["trials_total"] = int(row["trials_total"])
            row["trials_detecting"] = int(row["trials_detecting"])
            for k in ("mse", "mean_err_x", "mean_err_y", "stderr_mse"):
                row[k] = float(row[k]) if row[k] != "" else None
        except ValueError as exc:
            raise InvalidInput(f"CSV row {lineno}: {exc}") from None
        rows.append(row)
    return rows


_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf", "#7f7f7f")


def render_svg(rows: Sequence[dict], title: str | None = None,
               width: int = 640, height: int = 420) -> str:
    """Line chart of MSE (log scale) against the sweep value, one series per estimator.

    Rows without a positive MSE are skipped; at least one must remain.
    """
    series: dict[str, list[tuple[float, float]]] = {}
    for r in rows:
        if r["mse"] is not None and r["mse"] > 0:
            series.setdefault(r["estimator"], []).append((r["value"], r["mse"]))
    if not series:
        raise InvalidInput("no rows with a positive MSE to plot")
    variable = rows[0]["variable"]

    left, right, top, bottom = 70, 150, 40, 50
    pw, ph = width - left - right, height - top - bottom
    xs = [x for pts in series.values() for x, _ in pts]
    ys = [math.log10(y) for pts in series.values() for _, y in pts]
    x0, x1 = min(xs), max(xs)
    if x0 == x1:
        x0, x1 = x0 - 0.5, x1 + 0.5
    y0, y1 = math.floor(min(ys)), math.ceil(max(ys))
    if y0 == y1:
        y1 = y0 + 1

    def sx(x):
        return left + (x - x0) / (x1 - x0) * pw

    def sy(ly):
        return top + (y1 - ly) / (y1 - y0) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    if title:
        out.append(f'<text x="{left + pw / 2:.2f}" y="{top - 15}" text-anchor="middle">{_esc(title)}</text>')
    for d in range(y0, y1 + 1):
        y = sy(d)
        out.append(f'<line x1="{left}" y1="{y:.2f}" x2="{left + pw}" y2="{y:.2f}" stroke="#dddddd"/>')
        out.append(f'<text x="{left - 6}" y="{y + 4:.2f}" text-anchor="end">1e{d}</text>')
    for x in sorted(set(xs)):
        px = sx(x)
        out.append(f'<line x1="{px:.2f}" y1="{top + ph}" x2="{px:.2f}" y2="{top + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{px:.2f}" y="{top + ph + 18}" text-anchor="middle">{x:g}</text>')
    out.append(f'<text x="{left + pw / 2:.2f}" y="{height - 10}" text-anchor="middle">{_esc(variable)}</text>')
    out.append(f'<text x="16" y="{top + ph / 2:.2f}" text-anchor="middle" '
               f'transform="rotate(-90 16 {top + ph / 2:.2f})">MSE (m^2)</text>')

    for k, name in enumerate(sorted(series)):
        color = _COLORS[k % len(_COLORS)]
        pts = sorted(series[name])
        coords = [(sx(x), sy(math.log10(y))) for x, y in pts]
        if len(coords) > 1:
            path = " ".join(f"{px:.2f},{py:.2f}" for px, py in coords)
            out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{path}"/>')
        for px, py in coords:
            out.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="3" fill="{color}"/>')
        ly = top + 14 + 18 * k
        out.append(f'<line x1="{left + pw + 10}" y1="{ly - 4}" x2="{left + pw + 30}" y2="{ly - 4}" '
                   f'stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{left + pw + 35}" y="{ly}">{_esc(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
