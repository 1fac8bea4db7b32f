"""Spectral OTOC toolkit.

Truncated propagators, Chebyshev moments of their singular-value phases and
quantum-signal-processing echoes for small spin chains.
"""

from ._core import (
    ModelFamily,
    ModelSpec,
    OtocspecError,
    WeightKind,
    build_hamiltonian,
    build_hopping_matrix,
    chebyshev_moment,
    eigendecompose,
    evolve,
    free_fermion_spectrum,
    haar_unitary,
    harmonic_phases,
    otoc_k,
    qsp_otoc,
    qsp_response,
    run_haar_baseline,
    run_moment_sweep,
    run_theorem_check,
    singular_spectrum,
    synthesize_bandpass,
    truncated_propagator,
)

__version__ = "0.1.0"
