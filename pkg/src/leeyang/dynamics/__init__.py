"""Coefficient-sequence generators: substitution words, exact torus orbits,
alternating almost-Mathieu coefficients, and the model-spec layer."""

from .highprec import (FixedFraction, constant, golden_mean_inverse, inv_sqrt,
                       frac_sqrt, precision_cap, MIN_BITS)
from .words import (SymbolicWord, FIBONACCI_RULES, fibonacci_numbers,
                    fibonacci_word, substitution_fixed_point, couplings_from_word)
from .orbits import (CosineSampler, shifted_cosine, pure_cosine,
                     cat_map_orbit, cat_map_orbit_float64, skew_shift_orbit,
                     cat_map_precision_bits, skew_shift_precision_bits,
                     sample_orbit, uamo_coefficients)
from .models import ModelSpec, Realization, realize, MODEL_KINDS

__all__ = [
    "FixedFraction", "constant", "golden_mean_inverse", "inv_sqrt", "frac_sqrt",
    "precision_cap", "MIN_BITS",
    "SymbolicWord", "FIBONACCI_RULES", "fibonacci_numbers", "fibonacci_word",
    "substitution_fixed_point", "couplings_from_word",
    "CosineSampler", "shifted_cosine", "pure_cosine", "cat_map_orbit",
    "cat_map_orbit_float64", "skew_shift_orbit", "cat_map_precision_bits",
    "skew_shift_precision_bits", "sample_orbit", "uamo_coefficients",
    "ModelSpec", "Realization", "realize", "MODEL_KINDS",
]
