"""Deterministic figure rendering from the pipeline's CSV contracts.

Four figure kinds, one per file contract:

  zeros-circle   zeros.csv  (k, theta, re, im, circle_deviation)
  ids-staircase  ids.csv    (theta, value)
  gap-histogram  hist.csv   (bin_left, bin_right, count, proportion)
  sparsity       matrix.csv (row, col, re, im)

Rendering is read-only on its inputs and pinned for reproducibility: Agg
backend, fixed canvas and DPI, PNG metadata stripped, so the same request
yields byte-identical output.
"""
from __future__ import annotations

import csv
import json
import math
import os
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

FIGURE_KINDS = ("zeros-circle", "ids-staircase", "gap-histogram", "sparsity")

# inner bound on the main spectral gap about z = 1 used by the standard
# examples; requests may override or disable the arc
DEFAULT_ARC_HALF_ANGLE = 2.0 * math.asin(1.0 / 6.0)

_CANVAS = {"figsize": (6.0, 6.0), "dpi": 150}

_EXPECTED_HEADERS = {
    "zeros-circle": ["k", "theta", "re", "im", "circle_deviation"],
    "ids-staircase": ["theta", "value"],
    "gap-histogram": ["bin_left", "bin_right", "count", "proportion"],
    "sparsity": ["row", "col", "re", "im"],
}


class PlotkitError(Exception):
    """Base error for figure rendering."""


class RequestError(PlotkitError, ValueError):
    """Malformed figure request."""


class InputError(PlotkitError, ValueError):
    """Missing or malformed input CSV."""


@dataclass(frozen=True)
class FigureRequest:
    kind: str
    input_path: str
    output_path: str
    arc_half_angle: float | None = None     # zeros-circle only; None = no arc
    zoom: tuple | None = None               # ids-staircase inset window
    title: str | None = None

    def __post_init__(self):
        if self.kind not in FIGURE_KINDS:
            raise RequestError(f"unknown figure kind {self.kind!r}; choose from {FIGURE_KINDS}")
        if self.zoom is not None:
            lo, hi = self.zoom
            if not (0.0 <= lo < hi <= 1.0):
                raise RequestError(f"zoom window must satisfy 0 <= lo < hi <= 1, got {self.zoom}")
            object.__setattr__(self, "zoom", (float(lo), float(hi)))
        if self.arc_half_angle is not None and not (0.0 < self.arc_half_angle < math.pi):
            raise RequestError(f"arc half-angle must be in (0, pi), got {self.arc_half_angle}")

    @classmethod
    def from_dict(cls, data: dict) -> "FigureRequest":
        arc = data.get("arc_half_angle")
        if arc == "default":
            arc = DEFAULT_ARC_HALF_ANGLE
        zoom = data.get("zoom")
        return cls(kind=data["kind"], input_path=data["input"],
                   output_path=data["output"],
                   arc_half_angle=arc, zoom=tuple(zoom) if zoom else None,
                   title=data.get("title"))

    @classmethod
    def from_json_file(cls, path: str) -> "FigureRequest":
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise RequestError(f"cannot read request {path}: {exc}") from exc
        if "kind" not in data or "input" not in data or "output" not in data:
            raise RequestError("request needs 'kind', 'input' and 'output' fields")
        return cls.from_dict(data)


def read_table(path: str, expected_header: list) -> np.ndarray:
    """Numeric CSV rows under a validated header; empty tables are allowed."""
    if not os.path.exists(path):
        raise InputError(f"input file {path} does not exist")
    with open(path, encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise InputError(f"{path} is empty") from None
        if header != expected_header:
            raise InputError(f"{path}: header {header} does not match expected {expected_header}")
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                rows.append([float(v) for v in row])
            except ValueError as exc:
                raise InputError(f"{path}:{lineno}: non-numeric field ({exc})") from exc
    if not rows:
        return np.empty((0, len(expected_header)))
    table = np.asarray(rows, dtype=float)
    if table.shape[1] != len(expected_header):
        raise InputError(f"{path}: expected {len(expected_header)} columns, got {table.shape[1]}")
    return table


def _new_axes(title: str | None):
    fig = plt.figure(figsize=_CANVAS["figsize"], dpi=_CANVAS["dpi"])
    ax = fig.add_subplot(111)
    if title:
        ax.set_title(title)
    return fig, ax


def _draw_zeros_circle(ax, table: np.ndarray, arc_half_angle: float | None):
    ring = np.linspace(0.0, 2.0 * np.pi, 720)
    ax.plot(np.cos(ring), np.sin(ring), color="0.82", linewidth=0.8, zorder=1)
    if table.size:
        ax.plot(table[:, 2], table[:, 3], linestyle="none", marker=".",
                markersize=3.0, color="#1f3d7a", zorder=3)
    if arc_half_angle is not None:
        arc = np.linspace(-arc_half_angle, arc_half_angle, 256)
        ax.plot(np.cos(arc), np.sin(arc), color="red", linewidth=2.4, zorder=2)
    ax.set_aspect("equal")
    ax.set_xlim(-1.12, 1.12)
    ax.set_ylim(-1.12, 1.12)
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")


def _staircase(table: np.ndarray):
    # right-continuous staircase pinned at (0, 0) and extended to theta = 1
    thetas = np.concatenate([[0.0], table[:, 0], [1.0]])
    values = np.concatenate([[0.0], table[:, 1], table[-1:, 1] if table.size else [0.0]])
    return thetas, values


def _draw_ids(ax, table: np.ndarray, zoom: tuple | None):
    if table.size == 0:
        raise InputError("counting-function table has no jump points")
    thetas, values = _staircase(table)
    ax.step(thetas, values, where="post", color="#1f3d7a", linewidth=1.1)
    ax.set_xlim(0.0, 1.0)
    ax.set_ylim(0.0, values[-1] * 1.02)
    ax.set_xlabel("phase")
    ax.set_ylabel("counting function")
    if zoom is not None:
        lo, hi = zoom
        inset = ax.inset_axes([0.08, 0.58, 0.38, 0.33])
        inset.step(thetas, values, where="post", color="#1f3d7a", linewidth=1.0)
        inside = values[(thetas >= lo) & (thetas <= hi)]
        inset.set_xlim(lo, hi)
        if inside.size:
            pad = 0.02 * max(values[-1], 1e-12)
            inset.set_ylim(max(inside.min() - pad, 0.0), inside.max() + pad)
        inset.tick_params(labelsize=6)
        ax.indicate_inset_zoom(inset, edgecolor="0.4")


def _draw_histogram(ax, table: np.ndarray):
    if table.size == 0:
        raise InputError("histogram table has no bins")
    widths = table[:, 1] - table[:, 0]
    ax.bar(table[:, 0], table[:, 3], width=widths, align="edge",
           color="#4a6fb0", edgecolor="white", linewidth=0.4)
    ax.set_xlabel("spacing")
    ax.set_ylabel("proportion")
    ax.set_xlim(0.0, float(table[-1, 1]))


def _draw_sparsity(ax, table: np.ndarray):
    if table.size == 0:
        raise InputError("matrix table has no nonzero entries")
    dim = int(max(table[:, 0].max(), table[:, 1].max())) + 1
    ax.plot(table[:, 1], table[:, 0], linestyle="none", marker="s",
            markersize=max(1.5, 120.0 / dim), color="#1f3d7a")
    ax.set_xlim(-0.5, dim - 0.5)
    ax.set_ylim(dim - 0.5, -0.5)
    ax.set_aspect("equal")
    ax.set_xlabel("column")
    ax.set_ylabel("row")


def render(request: FigureRequest) -> str:
    """Render one figure; returns the output path."""
    table = read_table(request.input_path, _EXPECTED_HEADERS[request.kind])
    fig, ax = _new_axes(request.title)
    try:
        if request.kind == "zeros-circle":
            _draw_zeros_circle(ax, table, request.arc_half_angle)
        elif request.kind == "ids-staircase":
            _draw_ids(ax, table, request.zoom)
        elif request.kind == "gap-histogram":
            _draw_histogram(ax, table)
        else:
            _draw_sparsity(ax, table)
        out_dir = os.path.dirname(os.path.abspath(request.output_path))
        os.makedirs(out_dir, exist_ok=True)
        fig.savefig(request.output_path, metadata={"Software": None})
    finally:
        plt.close(fig)
    return request.output_path
