"""Truncated number-basis (Fock) representation of single-mode pure states.

Everything here works on plain real coefficient vectors c_n over the number
states |n>, with the oscillator taken dimensionless (hbar = omega = m = 1), so
the energy of |n> is n + 1/2. Real amplitudes suffice: every family in scope
has nonnegative amplitudes once phases are aligned, and phase alignment is
what maximizes the pairwise fidelity in the first place.

All operations are pure functions of immutable values; the coefficient array
is frozen at construction so vectors can be shared between threads.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

#: Missing probability mass allowed in a stored vector.
TAIL_TOLERANCE = 1e-12

#: Default hard cap on the largest number-state index.
DEFAULT_MAX_CUTOFF = 4096

#: Environment variable overriding the cap.
CUTOFF_ENV_VAR = "FIDBOUND_MAX_CUTOFF"

# Rounding slack for a stored squared norm marginally above 1.
_NORM_EXCESS = 1e-13


def max_cutoff() -> int:
    """Largest allowed number-state index (FIDBOUND_MAX_CUTOFF overrides)."""
    raw = os.environ.get(CUTOFF_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_CUTOFF
    value = int(raw)
    if value < 1:
        raise DomainError(f"{CUTOFF_ENV_VAR} must be a positive integer, got {value}")
    return value


@dataclass(frozen=True)
class FockVector:
    """Real amplitudes c_0 .. c_N of a unit vector in the number basis.

    The squared norm must lie in [1 - TAIL_TOLERANCE, 1] (up to rounding of
    the sum itself), i.e. at most TAIL_TOLERANCE of probability mass may have
    been truncated away.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=np.float64, copy=True)
        if arr.ndim != 1 or arr.size == 0:
            raise DomainError("coefficients must form a non-empty 1-D array")
        if not np.all(np.isfinite(arr)):
            raise DomainError("coefficients must be finite")
        norm = float(arr @ arr)
        if norm < 1.0 - TAIL_TOLERANCE or norm > 1.0 + _NORM_EXCESS:
            raise DomainError(
                f"squared norm {norm!r} outside [1 - {TAIL_TOLERANCE:g}, 1]"
            )
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    @property
    def cutoff(self) -> int:
        """Largest number-state index stored."""
        return self.coeffs.size - 1


def basis_state(n: int) -> FockVector:
    """The number state |n>."""
    if n < 0:
        raise DomainError(f"number-state index must be >= 0, got {n}")
    coeffs = np.zeros(n + 1)
    coeffs[n] = 1.0
    return FockVector(coeffs)


def fidelity_fock(a: FockVector, b: FockVector) -> float:
    """Squared overlap (sum_n a_n b_n)^2, clipped into [0, 1].

    Symmetric in its arguments; the shorter vector counts as zero beyond its
    cutoff, so vectors with different cutoffs compare directly.
    """
    k = min(a.coeffs.size, b.coeffs.size)
    overlap = float(a.coeffs[:k] @ b.coeffs[:k])
    return min(overlap * overlap, 1.0)


def mean_energy(a: FockVector) -> float:
    """Mean energy 1/2 + <n> in dimensionless oscillator units."""
    mean_n, _ = photon_moments(a)
    return 0.5 + mean_n


def photon_moments(a: FockVector) -> tuple[float, float]:
    """Mean and variance of the photon (quantum) number."""
    n = np.arange(a.coeffs.size, dtype=np.float64)
    p = a.coeffs * a.coeffs
    mean = float(n @ p)
    var = float((n * n) @ p) - mean * mean
    return mean, max(var, 0.0)


def mandel_q(a: FockVector) -> float:
    """Mandel Q = var(n)/<n> - 1; zero for Poissonian statistics.

    Raises DomainError for states with <n> = 0 (vacuum), where Q is undefined.
    """
    mean, var = photon_moments(a)
    if mean == 0.0:
        raise DomainError("Mandel Q is undefined for zero mean occupation")
    return var / mean - 1.0


def is_hyper_poissonian(a: FockVector) -> bool:
    """True iff Q > 1 + 2<n>.

    Above that line, removing a quantum raises the mean occupation more than
    adding one does; squeezed-vacuum statistics sit exactly on the line.
    """
    mean, var = photon_moments(a)
    if mean == 0.0:
        raise DomainError("Mandel Q is undefined for zero mean occupation")
    q = var / mean - 1.0
    return q > 1.0 + 2.0 * mean
