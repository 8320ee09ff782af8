"""Partition-function zeros of 1D ferromagnetic Ising chains computed as
eigenvalues of unitary CMV-type Floquet matrices, with counting measures,
spectral-gap detection, and gap-label matching."""

from .errors import (LeeYangError, DomainError, ResourceCapError,
                     PrecisionCapError, NonUnitaryError, PairingError,
                     ConvergenceError)
from .sequences import CoefficientSequence, CouplingSequence
from .ising import (energy, partition_bruteforce, partition_polynomial,
                    partition_via_trace, ising_transfer,
                    couplings_to_verblunsky, interleave_with_zeros)
from .cmv import (theta_block, FloquetMatrix, floquet_matrix, lm_factors,
                  floquet_matrix_doubled, BandPermutation, band_permutation,
                  reorder, bandwidth_offsets, extended_cmv_section)
from .szego import (szego_matrix, transfer_product, trace_discriminant,
                    discriminant, interleaved_discriminant,
                    ising_szego_conjugation, det_discriminant_residual)
from .spectral import (EigenphaseList, eigenphases, lee_yang_zeros,
                       zeros_of_discriminant, IDSCurve, ids, Gap, GapReport,
                       detect_gaps, LabelGroup, LabelMatch, match_label,
                       label_gaps, fibonacci_label_group, markov_label_group,
                       stationary_vector, gap_histogram, SpacingHistogram,
                       circular_distance)
from . import dynamics

__version__ = "0.1.0"
