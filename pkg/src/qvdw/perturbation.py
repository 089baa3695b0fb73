"""Rayleigh-Schrodinger perturbation engine for diagonal H0 plus H_int.

Second order in the coupling (first order is reported as well; it vanishes
identically for excitation-changing interactions).  Degenerate denominators
coupled by the perturbation abort the computation instead of producing a
silently huge shift.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegeneracyError
from .operators import as_matrix

DEGENERACY_TOL = 1e-9


@dataclass(frozen=True)
class PerturbationResult:
    """Energy corrections for one unperturbed basis state."""

    state_index: int
    first_order: float
    second_order: float
    terms_used: int
    min_denominator: float


def second_order_shift(h0_diag, h_int, i: int, tol_degeneracy: float = DEGENERACY_TOL) -> PerturbationResult:
    """Second-order energy shift of basis state ``i``.

    second_order = sum over n != i of |<n|H_int|i>|^2 / (E_i - E_n),
    first_order = <i|H_int|i>, where E are the entries of ``h0_diag``
    (the diagonal of H0 in its eigenbasis).

    Terms with an exactly zero numerator are skipped before the degeneracy
    check, so accidental degeneracies between uncoupled sectors do not
    abort valid computations.

    Raises
    ------
    DegeneracyError
        If some coupled state n has |E_i - E_n| < tol_degeneracy.
    """
    energies = np.asarray(h0_diag, dtype=float)
    mat = as_matrix(h_int)
    dim = energies.shape[0]
    if mat.shape != (dim, dim):
        raise ValueError(f"h_int shape {mat.shape} does not match h0_diag length {dim}")
    if not 0 <= i < dim:
        raise ValueError(f"state index {i} out of range for dimension {dim}")
    if tol_degeneracy <= 0:
        raise ValueError("tol_degeneracy must be positive")

    amplitudes = mat[:, i]
    coupled = np.abs(amplitudes) > 0
    coupled[i] = False
    denominators = energies[i] - energies[coupled]

    too_close = np.abs(denominators) < tol_degeneracy
    if np.any(too_close):
        n_bad = np.nonzero(coupled)[0][too_close][0]
        raise DegeneracyError(
            f"states {i} and {n_bad} are coupled but near-degenerate "
            f"(|E_i - E_n| = {abs(energies[i] - energies[n_bad]):.3e} < {tol_degeneracy})"
        )

    # index order is preserved by the boolean mask, keeping the sum deterministic
    second = float(np.sum(np.abs(amplitudes[coupled]) ** 2 / denominators))
    terms = int(np.count_nonzero(coupled))
    min_den = float(np.min(np.abs(denominators))) if terms else np.inf
    return PerturbationResult(
        state_index=i,
        first_order=float(mat[i, i].real),
        second_order=second,
        terms_used=terms,
        min_denominator=min_den,
    )


def transition_shift(h0_diag, h_int, i_excited: int, i_ground: int,
                     tol_degeneracy: float = DEGENERACY_TOL) -> float:
    """Second-order shift of the transition energy E_excited - E_ground."""
    if i_excited == i_ground:
        raise ValueError("excited and ground indices must differ")
    upper = second_order_shift(h0_diag, h_int, i_excited, tol_degeneracy)
    lower = second_order_shift(h0_diag, h_int, i_ground, tol_degeneracy)
    return upper.second_order - lower.second_order
