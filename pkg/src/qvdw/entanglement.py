"""Entanglement measures for the coupled-oscillator and two-qubit settings.

Gaussian route: the ground state of the dipole-coupled oscillator pair is
Gaussian, so its 4x4 covariance matrix (ordering x1, p1, x2, p2; vacuum
variance 1/2 with hbar = 1) determines the logarithmic negativity through
the smallest symplectic eigenvalue of the partial transpose.  A Fock-basis
partial-transpose oracle provides an independent check.  E_N uses the
natural logarithm in both routes.

Two-qubit route: Wootters concurrence and the maximal CHSH value (the
Horodecki criterion), quantifying the Bell-test program for verifying
entanglement between a qubit and the body it is coupled to.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidStateError, UncertaintyViolationError
from .operators import pauli
from .vdw import ConvergedValue, VdwConfig, coupled_hamiltonian_fock, normal_modes

SYMPLECTIC_TOL = 1e-10
STATE_ATOL = 1e-12
EIGENVALUE_FLOOR = -1e-10

# one-mode symplectic form [[0, 1], [-1, 0]], stacked for two modes
SYMPLECTIC_FORM = np.kron(np.eye(2), np.array([[0.0, 1.0], [-1.0, 0.0]]))


@dataclass(frozen=True)
class GaussianTwoModeState:
    """Two-mode Gaussian state given by its covariance matrix.

    Ordering (x1, p1, x2, p2); vacuum is diag(1/2, 1/2, 1/2, 1/2).
    Physicality (the uncertainty relation) is enforced at construction via
    the symplectic eigenvalues.
    """

    cov: np.ndarray

    def __post_init__(self):
        cov = np.array(self.cov, dtype=float)
        if cov.shape != (4, 4):
            raise ValueError(f"covariance must be 4x4, got {cov.shape}")
        if not np.allclose(cov, cov.T, atol=STATE_ATOL):
            raise UncertaintyViolationError("covariance matrix is not symmetric")
        if np.min(symplectic_eigenvalues(cov)) < 0.5 - SYMPLECTIC_TOL:
            raise UncertaintyViolationError(
                "covariance violates the uncertainty relation "
                f"(symplectic eigenvalues {symplectic_eigenvalues(cov)})"
            )
        cov.setflags(write=False)
        object.__setattr__(self, "cov", cov)


@dataclass(frozen=True)
class TwoQubitState:
    """Two-qubit density matrix, validated at construction."""

    rho: np.ndarray

    def __post_init__(self):
        rho = np.array(self.rho, dtype=complex)
        if rho.shape != (4, 4):
            raise ValueError(f"density matrix must be 4x4, got {rho.shape}")
        if np.max(np.abs(rho - rho.conj().T)) > STATE_ATOL:
            raise InvalidStateError("density matrix is not Hermitian")
        if abs(np.trace(rho).real - 1.0) > STATE_ATOL:
            raise InvalidStateError(f"trace is {np.trace(rho).real!r}, expected 1")
        if np.min(np.linalg.eigvalsh(rho)) < EIGENVALUE_FLOOR:
            raise InvalidStateError("density matrix has a negative eigenvalue")
        rho.setflags(write=False)
        object.__setattr__(self, "rho", rho)


def symplectic_eigenvalues(cov: np.ndarray) -> np.ndarray:
    """Symplectic spectrum of a 4x4 covariance matrix, sorted ascending.

    The eigenvalues of i Omega cov come in pairs +-nu; the two positive
    members are returned.  Physical states have all nu >= 1/2.
    """
    ev = np.abs(np.linalg.eigvals(1.0j * SYMPLECTIC_FORM @ cov))
    return np.sort(ev)[::2]


def ground_state_covariance(cfg: VdwConfig) -> GaussianTwoModeState:
    """Exact Gaussian ground state of the coupled oscillator pair.

    In the symmetric/antisymmetric coordinates the ground state is a
    product of vacua at omega_minus and omega_plus (see the vdw module
    for the labeling convention).  Transforming back:

      <x1^2> = (1/4m)(1/w+ + 1/w-)     <x1 x2> = (1/4m)(1/w- - 1/w+)
      <p1^2> = (m/4)(w+ + w-)          <p1 p2> = (m/4)(w- - w+)

    so for attractive coupling (lambda < 0, w- the softened symmetric
    mode) positions correlate and momenta anticorrelate.  All x-p cross
    covariances vanish.
    """
    modes = normal_modes(cfg)
    wp, wm = modes.omega_plus, modes.omega_minus
    m = cfg.mass
    xx = (1.0 / wp + 1.0 / wm) / (4.0 * m)
    xy = (1.0 / wm - 1.0 / wp) / (4.0 * m)
    pp = m * (wp + wm) / 4.0
    pq = m * (wm - wp) / 4.0
    cov = np.array([
        [xx, 0.0, xy, 0.0],
        [0.0, pp, 0.0, pq],
        [xy, 0.0, xx, 0.0],
        [0.0, pq, 0.0, pp],
    ])
    return GaussianTwoModeState(cov)


def log_negativity_gaussian(state: GaussianTwoModeState) -> float:
    """E_N = max(0, -ln(2 nu)) with nu the smallest symplectic eigenvalue
    of the partially transposed covariance (p2 -> -p2)."""
    flip = np.diag([1.0, 1.0, 1.0, -1.0])
    nu_min = float(symplectic_eigenvalues(flip @ state.cov @ flip)[0])
    return max(0.0, -np.log(2.0 * nu_min))


def negativity_fock_oracle(cfg: VdwConfig, n_max: int = 24) -> ConvergedValue:
    """Log-negativity of the coupled ground state via a Fock-basis partial
    transpose, independent of the covariance route.

    Diagonalizes the truncated two-mode Hamiltonian, partially transposes
    the ground-state projector on mode 2 and sums the negative eigenvalues
    N; returns ln(2N + 1) to match the Gaussian convention.  The converged
    flag compares against the n_max - 2 truncation.
    """
    if n_max < 12:
        raise ValueError(f"n_max must be >= 12 for a meaningful oracle, got {n_max}")

    def log_neg(n):
        _, vectors = np.linalg.eigh(coupled_hamiltonian_fock(cfg, n))
        psi = vectors[:, 0].reshape(n, n)
        # rho[(i,k),(j,l)] = psi[i,k] psi[j,l]; transpose mode 2 swaps k <-> l
        rho = np.einsum("ik,jl->ikjl", psi, psi)
        rho_pt = rho.transpose(0, 3, 2, 1).reshape(n * n, n * n)
        ev = np.linalg.eigvalsh(rho_pt)
        negativity = -float(np.sum(ev[ev < 0]))
        return np.log(2.0 * negativity + 1.0)

    value = log_neg(n_max)
    converged = abs(value - log_neg(n_max - 2)) <= 1e-8
    return ConvergedValue(value=value, converged=converged)


def concurrence(state: TwoQubitState) -> float:
    """Wootters concurrence of a two-qubit density matrix, in [0, 1]."""
    rho = state.rho
    sy2 = np.kron(pauli("y").entries, pauli("y").entries)
    rho_tilde = sy2 @ rho.conj() @ sy2
    ev = np.linalg.eigvals(rho @ rho_tilde)
    # eigenvalues are real and nonnegative up to roundoff
    lam = np.sqrt(np.clip(np.real(ev), 0.0, None))
    lam = np.sort(lam)[::-1]
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def correlation_matrix(state: TwoQubitState) -> np.ndarray:
    """3x3 Pauli correlation matrix T_ab = Tr[rho sigma_a x sigma_b]."""
    axes = ("x", "y", "z")
    t = np.empty((3, 3))
    for i, a in enumerate(axes):
        for j, b in enumerate(axes):
            op = np.kron(pauli(a).entries, pauli(b).entries)
            t[i, j] = float(np.trace(state.rho @ op).real)
    return t


def chsh_max(state: TwoQubitState) -> float:
    """Maximal CHSH value over all measurement settings.

    2 sqrt(m1 + m2) with m1 >= m2 the two largest eigenvalues of T^T T.
    Exceeding 2 certifies that local complementary measurements on the two
    subsystems can violate the Bell inequality; 2 sqrt(2) is the quantum
    ceiling.
    """
    t = correlation_matrix(state)
    ev = np.sort(np.linalg.eigvalsh(t.T @ t))
    return float(2.0 * np.sqrt(ev[-1] + ev[-2]))


_BELL_KETS = {
    "phi+": np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2.0),
    "phi-": np.array([1.0, 0.0, 0.0, -1.0]) / np.sqrt(2.0),
    "psi+": np.array([0.0, 1.0, 1.0, 0.0]) / np.sqrt(2.0),
    "psi-": np.array([0.0, 1.0, -1.0, 0.0]) / np.sqrt(2.0),
}


def bell_state(kind: str) -> TwoQubitState:
    """Density matrix of a Bell state: 'phi+', 'phi-', 'psi+' or 'psi-'."""
    try:
        ket = _BELL_KETS[kind]
    except KeyError:
        raise ValueError(
            f"kind must be one of {sorted(_BELL_KETS)}, got {kind!r}"
        ) from None
    return TwoQubitState(np.outer(ket, ket))
