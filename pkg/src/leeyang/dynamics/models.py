"""Model specifications: reproducible recipes for coefficient sequences.

A ModelSpec is a JSON-serializable description of one of the supported
generators plus its size parameter `n`. The meaning of `n` is per kind:

  fibonacci      substitution iteration count k; the realized chain is the
                 full word u_k of length F_{k+2} (not a truncation)
  substitution   prefix length of the substitution fixed point
  sft            chain length (sampled Markov path; needs an RNG seed)
  cat-map        number of sampled orbit points (iterates 0..n-1)
  skew-shift     number of sampled orbit points (iterates 0..n-1)
  uamo           coefficient sequence length
  explicit-list  ignored (the listed values are used as-is)

Word-based, sft, and explicit-coupling models realize an Ising chain and
take the partition-function route downstream (2N zeros); torus-sampled and
uamo models realize Verblunsky coefficients directly and take the
discriminant route (N zeros). Defaults for every kind mirror the standard
demonstration parameters.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import DomainError
from ..sequences import CoefficientSequence, CouplingSequence
from ..spectral import LabelGroup, fibonacci_label_group, markov_label_group
from ..ising import couplings_to_verblunsky
from . import highprec
from .highprec import FixedFraction, constant
from .orbits import (CosineSampler, cat_map_orbit, cat_map_precision_bits,
                     pure_cosine, sample_orbit, shifted_cosine,
                     skew_shift_orbit, skew_shift_precision_bits,
                     uamo_coefficients)
from .words import couplings_from_word, fibonacci_word, substitution_fixed_point

MODEL_KINDS = ("fibonacci", "substitution", "sft", "cat-map", "skew-shift",
               "uamo", "explicit-list")

_DEFAULT_PARAMS = {
    "fibonacci": {"p_a": 2.0 / 3.0, "p_b": 0.01},
    "substitution": {"rules": {"a": "ab", "b": "a"}, "seed": "a",
                     "couplings": {"a": 2.0 / 3.0, "b": 0.01}},
    "sft": {"transition": [[0.5, 0.5], [0.5, 0.5]],
            "couplings": [2.0 / 3.0, 0.01], "max_word_len": 4},
    "cat-map": {"x": "1/sqrt2", "y": "1/sqrt3", "sampler": {"kind": "shifted-cosine"}},
    "skew-shift": {"gamma": "1/sqrt2", "x": "gamma/2", "y": "0",
                   "sampler": {"kind": "shifted-cosine"}},
    "uamo": {"lam1": 0.9, "lam2": 1.0 / math.sqrt(2.0), "gamma": "1/sqrt2", "x": "0"},
    "explicit-list": {},
}


def _sampler_from_dict(spec: dict) -> CosineSampler:
    kind = spec.get("kind", "shifted-cosine")
    if kind == "shifted-cosine":
        return shifted_cosine()
    if kind == "pure-cosine":
        return pure_cosine(float(spec["lam"]))
    if kind == "cosine":
        return CosineSampler(float(spec["offset"]), float(spec["amplitude"]))
    raise DomainError(f"unknown sampler kind {kind!r}")


@dataclass(frozen=True)
class ModelSpec:
    kind: str
    n: int
    params: dict = field(default_factory=dict)
    precision_bits: int | None = None

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise DomainError(f"unknown model kind {self.kind!r}; choose from {MODEL_KINDS}")
        if self.kind != "explicit-list" and self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        if self.precision_bits is not None and self.precision_bits < highprec.MIN_BITS:
            raise DomainError(f"precision_bits must be >= {highprec.MIN_BITS}")
        merged = dict(_DEFAULT_PARAMS[self.kind])
        merged.update(self.params)
        object.__setattr__(self, "params", merged)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "n": self.n, "params": self.params,
                "precision_bits": self.precision_bits}

    @classmethod
    def from_dict(cls, data: dict) -> "ModelSpec":
        return cls(kind=data["kind"], n=int(data.get("n", 1)),
                   params=dict(data.get("params", {})),
                   precision_bits=data.get("precision_bits"))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ModelSpec":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Realization:
    """A model's coefficients, plus the chain couplings when there is one."""

    alphas: CoefficientSequence
    couplings: CouplingSequence | None
    route: str                     # "ising" (partition zeros) or "cmv" (discriminant zeros)
    group: LabelGroup | None
    precision_bits: int | None = None


def _letters_of(couplings) -> dict:
    if isinstance(couplings, dict):
        return {str(k): float(v) for k, v in couplings.items()}
    return {chr(ord("a") + i): float(v) for i, v in enumerate(couplings)}


def _realize_word_model(spec: ModelSpec) -> Realization:
    if spec.kind == "fibonacci":
        word = fibonacci_word(spec.n)
        mapping = {"a": float(spec.params["p_a"]), "b": float(spec.params["p_b"])}
        group = fibonacci_label_group()
    else:
        word = substitution_fixed_point(spec.params["rules"], spec.params["seed"], spec.n)
        mapping = _letters_of(spec.params["couplings"])
        group = None
    ps = couplings_from_word(word, mapping)
    return Realization(couplings_to_verblunsky(ps), ps, "ising", group)


def _realize_sft(spec: ModelSpec, rng: np.random.Generator) -> Realization:
    P = np.asarray(spec.params["transition"], dtype=float)
    mapping = _letters_of(spec.params["couplings"])
    letters = sorted(mapping)
    if P.shape != (len(letters), len(letters)):
        raise DomainError("transition matrix size must match the coupling alphabet")
    group = markov_label_group(P, int(spec.params.get("max_word_len", 4)))
    from ..spectral import stationary_vector

    p = stationary_vector(P)
    state = int(rng.choice(len(letters), p=p))
    path = [state]
    for _ in range(spec.n - 1):
        state = int(rng.choice(len(letters), p=P[state]))
        path.append(state)
    ps = CouplingSequence(np.array([mapping[letters[s]] for s in path]))
    return Realization(couplings_to_verblunsky(ps), ps, "ising", group)


def _seed_pair(spec: ModelSpec, bits: int) -> tuple:
    params = spec.params
    if spec.kind == "cat-map":
        return constant(params["x"], bits), constant(params["y"], bits)
    gamma = constant(params["gamma"], bits)
    x_spec = params["x"]
    x = gamma.half() if isinstance(x_spec, str) and x_spec.strip().lower() == "gamma/2" \
        else constant(x_spec, bits)
    return gamma, x


def _realize_torus(spec: ModelSpec) -> Realization:
    steps = spec.n - 1
    sampler = _sampler_from_dict(spec.params["sampler"])
    if spec.kind == "cat-map":
        bits = max(spec.precision_bits or 0, cat_map_precision_bits(steps))
        x, y = _seed_pair(spec, bits)
        orbit = cat_map_orbit(x, y, steps)
        group = LabelGroup.integers()
    else:
        bits = max(spec.precision_bits or 0, skew_shift_precision_bits(steps))
        gamma, x = _seed_pair(spec, bits)
        y = constant(spec.params["y"], bits)
        orbit = skew_shift_orbit(gamma, x, y, steps)
        group = LabelGroup.rank2(constant(spec.params["gamma"], 128).to_float())
    alphas = sample_orbit(orbit, sampler)
    return Realization(alphas, None, "cmv", group, bits)


def _realize_uamo(spec: ModelSpec) -> Realization:
    params = spec.params
    alphas = uamo_coefficients(float(params["lam1"]), float(params["lam2"]),
                               params["gamma"], params["x"], spec.n)
    return Realization(alphas, None, "cmv", None)


def _realize_explicit(spec: ModelSpec) -> Realization:
    params = spec.params
    if "couplings" in params and "alphas" in params:
        raise DomainError("explicit-list takes either couplings or alphas, not both")
    if "couplings" in params:
        ps = CouplingSequence(np.asarray(params["couplings"], dtype=float))
        return Realization(couplings_to_verblunsky(ps), ps, "ising", None)
    if "alphas" in params:
        raw = params["alphas"]
        values = np.array([complex(v[0], v[1]) if isinstance(v, (list, tuple)) else complex(v)
                           for v in raw])
        return Realization(CoefficientSequence(values), None, "cmv", None)
    raise DomainError("explicit-list needs a 'couplings' or 'alphas' parameter")


def realize(spec: ModelSpec, rng: np.random.Generator | None = None) -> Realization:
    """Produce the model's sequences; `rng` is consulted only by 'sft'."""
    if spec.kind in ("fibonacci", "substitution"):
        return _realize_word_model(spec)
    if spec.kind == "sft":
        if rng is None:
            raise DomainError("sft realization needs an RNG (set a seed)")
        return _realize_sft(spec, rng)
    if spec.kind in ("cat-map", "skew-shift"):
        return _realize_torus(spec)
    if spec.kind == "uamo":
        return _realize_uamo(spec)
    return _realize_explicit(spec)
