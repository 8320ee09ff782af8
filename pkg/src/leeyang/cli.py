"""Command-line driver for the zeros pipeline.

Subcommands: coeffs, zeros, ids, gaps, labels, hist, bandwidth, verify.
Every run is a pure function of its config (plus the seed for the Markov
model), so reruns with the same config produce byte-identical CSV files.
Failures are reported as a machine-readable JSON object on stdout with a
nonzero exit code.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field, replace

import numpy as np

from . import verify as verify_mod
from .cmv import band_permutation, bandwidth_offsets, floquet_matrix, reorder
from .csvio import matrix_triplets, write_rows
from .dynamics.models import MODEL_KINDS, ModelSpec, Realization, realize
from .errors import DomainError, LeeYangError
from .ising import interleave_with_zeros
from .spectral import (EigenphaseList, circular_distance, detect_gaps,
                       eigenphases, gap_histogram, ids, label_gaps,
                       lee_yang_zeros, zeros_of_discriminant)

_DEFAULT_TOLERANCES = {
    "trace_formula": 1e-10,
    "zero_phase": 1e-7,
    "unit_circle": 1e-10,
    "det_identity": 1e-9,
}


@dataclass(frozen=True)
class RunConfig:
    model: ModelSpec
    out: str = "out"
    normalization: str | None = None    # None = per-route default
    gap_mult: float = 5.0
    m_max: int = 30
    bins: int = 40
    theta: float = math.pi / 2
    seed: int | None = None
    tolerances: dict = field(default_factory=lambda: dict(_DEFAULT_TOLERANCES))

    def __post_init__(self):
        if self.normalization not in (None, "paper", "operator"):
            raise DomainError(f"normalization must be 'paper' or 'operator', got {self.normalization!r}")
        if self.gap_mult <= 0 or self.bins < 1 or self.m_max < 0:
            raise DomainError("gap_mult must be > 0, bins >= 1, m_max >= 0")
        for name, value in self.tolerances.items():
            if not value > 0:
                raise DomainError(f"tolerance {name!r} must be positive")

    def to_dict(self) -> dict:
        return {"model": self.model.to_dict(), "out": self.out,
                "normalization": self.normalization, "gap_mult": self.gap_mult,
                "m_max": self.m_max, "bins": self.bins, "theta": self.theta,
                "seed": self.seed, "tolerances": self.tolerances}

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        known = {f for f in cls.__dataclass_fields__ if f != "model"}
        extra = {k: v for k, v in data.items() if k in known}
        return cls(model=ModelSpec.from_dict(data["model"]), **extra)


def _rng(config: RunConfig):
    return None if config.seed is None else np.random.default_rng(config.seed)


def _zeros(config: RunConfig, realization: Realization) -> EigenphaseList:
    if realization.route == "ising":
        return lee_yang_zeros(realization.couplings)
    return zeros_of_discriminant(realization.alphas)


def _normalization(config: RunConfig, realization: Realization) -> str:
    if config.normalization is not None:
        return config.normalization
    return "paper" if realization.route == "ising" else "operator"


def _path(config: RunConfig, name: str) -> str:
    return os.path.join(config.out, name)


def cmd_coeffs(config: RunConfig) -> list:
    real = realize(config.model, _rng(config))
    a = real.alphas.alphas
    written = [write_rows(_path(config, "coeffs.csv"), ["n", "re_alpha", "im_alpha"],
                          [(k, float(v.real), float(v.imag)) for k, v in enumerate(a)])]
    if real.couplings is not None:
        rows = [(k, float(p), float(a[k].real))
                for k, p in enumerate(real.couplings.ps)]
        written.append(write_rows(_path(config, "couplings.csv"),
                                  ["n", "p_n", "alpha_n"], rows))
    return written


def _zero_rows(phases: EigenphaseList) -> list:
    devs = phases.circle_deviations()
    rows = []
    for k, theta in enumerate(phases.phases):
        z = np.exp(2j * np.pi * theta)
        rows.append((k, float(theta), float(z.real), float(z.imag), float(devs[k])))
    return rows


def cmd_zeros(config: RunConfig) -> list:
    real = realize(config.model, _rng(config))
    phases = _zeros(config, real)
    return [write_rows(_path(config, "zeros.csv"),
                       ["k", "theta", "re", "im", "circle_deviation"],
                       _zero_rows(phases))]


def cmd_ids(config: RunConfig) -> list:
    real = realize(config.model, _rng(config))
    curve = ids(_zeros(config, real), _normalization(config, real))
    return [write_rows(_path(config, "ids.csv"), ["theta", "value"],
                       curve.jump_points())]


def _gap_rows(report) -> list:
    rows = []
    for g in report.gaps:
        if g.match is None:
            rows.append((float(g.left), float(g.right), float(g.length),
                         float(g.label), "", "", ""))
        else:
            rows.append((float(g.left), float(g.right), float(g.length),
                         float(g.label), g.match.n, g.match.m, float(g.match.residual)))
    return rows


def cmd_gaps(config: RunConfig) -> list:
    real = realize(config.model, _rng(config))
    report = detect_gaps(_zeros(config, real), config.gap_mult,
                         _normalization(config, real))
    if real.group is not None:
        report = label_gaps(report, real.group, config.m_max)
    return [write_rows(_path(config, "gaps.csv"),
                       ["left_theta", "right_theta", "length", "label", "n", "m", "residual"],
                       _gap_rows(report))]


def cmd_labels(config: RunConfig) -> list:
    real = realize(config.model, _rng(config))
    if real.group is None:
        raise DomainError(f"model kind {config.model.kind!r} has no known label group")
    report = label_gaps(detect_gaps(_zeros(config, real), config.gap_mult,
                                    _normalization(config, real)),
                        real.group, config.m_max)
    ordered = report.widest(len(report.gaps))
    group_info = {"kind": real.group.kind, "gamma": real.group.gamma,
                  "generators": list(real.group.generators)}
    out = _path(config, "group.json")
    os.makedirs(config.out, exist_ok=True)
    with open(out, "w", encoding="utf-8") as fh:
        json.dump(group_info, fh, indent=2, sort_keys=True)
    written = [write_rows(_path(config, "labels.csv"),
                          ["left_theta", "right_theta", "length", "label", "n", "m", "residual"],
                          _gap_rows(replace(report, gaps=tuple(ordered)))), out]
    return written


def cmd_hist(config: RunConfig) -> list:
    real = realize(config.model, _rng(config))
    hist = gap_histogram(_zeros(config, real), config.bins)
    props = hist.proportions()
    rows = [(float(hist.edges[i]), float(hist.edges[i + 1]),
             int(hist.counts[i]), float(props[i])) for i in range(hist.counts.size)]
    return [write_rows(_path(config, "hist.csv"),
                       ["bin_left", "bin_right", "count", "proportion"], rows)]


def cmd_bandwidth(config: RunConfig) -> list:
    real = realize(config.model, _rng(config))
    alphas = real.alphas
    if real.route == "ising":
        alphas = interleave_with_zeros(alphas)
    if len(alphas) % 2 != 0:
        raise DomainError("bandwidth demo needs an even-dimensional matrix")
    fl = floquet_matrix(alphas, config.theta)
    tilde = reorder(fl, band_permutation(fl.dim))
    residual = float(np.max(circular_distance(eigenphases(fl).phases,
                                              eigenphases(tilde).phases)))
    written = [
        write_rows(_path(config, "matrix.csv"), ["row", "col", "re", "im"],
                   matrix_triplets(fl.matrix)),
        write_rows(_path(config, "matrix_reordered.csv"), ["row", "col", "re", "im"],
                   matrix_triplets(tilde)),
    ]
    summary = {"dim": fl.dim, "theta": config.theta,
               "max_offset_before": bandwidth_offsets(fl.matrix),
               "max_offset_after": bandwidth_offsets(tilde),
               "eigenphase_residual": residual}
    out = _path(config, "bandwidth.json")
    with open(out, "w", encoding="utf-8") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
    written.append(out)
    return written


def cmd_verify(config: RunConfig, quick: bool = False) -> tuple:
    report = verify_mod.run_suite(seed=config.seed if config.seed is not None else 42,
                                  quick=quick)
    os.makedirs(config.out, exist_ok=True)
    out = _path(config, "verify.json")
    with open(out, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
    return [out], report


_THETA_NAMES = {"pi/2": math.pi / 2, "pi": math.pi}


def _parse_theta(text: str) -> float:
    if text.strip().lower() in _THETA_NAMES:
        return _THETA_NAMES[text.strip().lower()]
    return float(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="leeyang",
                                     description="Partition-function zeros via unitary matrices")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("coeffs", "write the model's coefficient (and coupling) tables"),
        ("zeros", "compute zero phases on the unit circle"),
        ("ids", "integrated counting function at its jump points"),
        ("gaps", "detected spectral gaps with plateau labels"),
        ("labels", "gap labels matched against the model's label group"),
        ("hist", "histogram of consecutive zero spacings"),
        ("bandwidth", "band-reduction demo; matrix sparsity exports"),
        ("verify", "run the cross-route verification suite"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--model", choices=MODEL_KINDS, help="model kind (or use --config)")
        p.add_argument("--config", help="path to a RunConfig JSON file")
        p.add_argument("--n", type=int, help="model size parameter")
        p.add_argument("--theta", type=_parse_theta, help="boundary phase (radians, or pi/2, pi)")
        p.add_argument("--precision-bits", type=int, dest="precision_bits")
        p.add_argument("--normalization", choices=["paper", "operator"])
        p.add_argument("--gap-mult", type=float, dest="gap_mult")
        p.add_argument("--m-max", type=int, dest="m_max")
        p.add_argument("--bins", type=int)
        p.add_argument("--out", help="output directory (default: out)")
        p.add_argument("--seed", type=int)
        if name == "verify":
            p.add_argument("--quick", action="store_true",
                           help="reduced sweeps for interactive use")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            config = RunConfig.from_dict(json.load(fh))
    elif args.model:
        config = RunConfig(model=ModelSpec(args.model, args.n if args.n else 1))
    elif args.command == "verify":
        config = RunConfig(model=ModelSpec("explicit-list", 0, {"couplings": [1.0]}))
    else:
        raise DomainError("provide --model or --config")

    model = config.model
    if args.model and args.config:
        model = replace(model, kind=args.model)
    if args.n is not None:
        model = replace(model, n=args.n)
    if args.precision_bits is not None:
        model = replace(model, precision_bits=args.precision_bits)
    updates = {"model": model}
    for name in ("normalization", "gap_mult", "m_max", "bins", "theta", "seed", "out"):
        value = getattr(args, name, None)
        if value is not None:
            updates[name] = value
    return replace(config, **updates)


_COMMANDS = {
    "coeffs": cmd_coeffs, "zeros": cmd_zeros, "ids": cmd_ids, "gaps": cmd_gaps,
    "labels": cmd_labels, "hist": cmd_hist, "bandwidth": cmd_bandwidth,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
        if args.command == "verify":
            written, report = cmd_verify(config, quick=getattr(args, "quick", False))
            print(json.dumps({"written": written, "all_passed": report["all_passed"]}))
            return 0 if report["all_passed"] else 1
        written = _COMMANDS[args.command](config)
        print(json.dumps({"written": written}))
        return 0
    except LeeYangError as exc:
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return 1
    except (OSError, KeyError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
