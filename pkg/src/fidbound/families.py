"""Parametric state families: constructors, closed-form fidelities, energies.

Five families, all with real nonnegative amplitudes (phases aligned, which is
what maximizes any pairwise fidelity in scope):

* ``Coherent(alpha)``   -- c_n = e^{-a^2/2} a^n / sqrt(n!), Poissonian counts
* ``Squeezed(zeta)``    -- even components only, 0 <= zeta < 1
* ``NegBin(zeta, mu)``  -- negative-binomial counts; mu = 1 is the geometric
                           (Planck) profile of the coherent phase states
* ``Binomial(p, big_m)``-- finite, interpolates number <-> coherent states
* ``FockPair(n, m, beta)`` -- sqrt(1-beta^2)|n> + beta|m>

Closed pairwise forms exist for the first four; ``FockPair`` is served by
:func:`fock_pair_tradeoff`. Coefficient products are evaluated in log-Gamma
form so factorials never overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.special import gammaln

from . import fock
from .errors import CutoffExceeded, DomainError, FamilyMismatch, HyperParamError
from .fock import FockVector, basis_state, fidelity_fock, mean_energy

# Closed-form operations stay finite right up to this zeta; the number-basis
# expansion stops converging (within the cutoff cap) much earlier.
ZETA_CLOSED_LIMIT = 1.0 - 1e-15
ZETA_BUILD_LIMIT = 1.0 - 1e-9

# Builder target, tighter than the stored FockVector invariant (1e-12) but
# loose enough that float summation of the occupation probabilities (each
# carrying log-Gamma rounding) reliably reaches it for wide distributions.
_BUILD_TAIL = 1e-13

# Entries are also kept down to this occupation probability (amplitude 1e-15):
# cross overlaps pair one state's tail amplitudes with the *other* state's
# O(1) amplitudes, so the squared-tail rule alone would lose ~sqrt(tail).
_PROB_FLOOR = 1e-30


@dataclass(frozen=True)
class Coherent:
    alpha: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha >= 0.0):
            raise DomainError(f"coherent amplitude must be finite and >= 0, got {self.alpha!r}")


@dataclass(frozen=True)
class Squeezed:
    zeta: float

    def __post_init__(self):
        if not (0.0 <= self.zeta <= ZETA_CLOSED_LIMIT):
            raise DomainError(f"squeezing parameter must lie in [0, 1), got {self.zeta!r}")


@dataclass(frozen=True)
class NegBin:
    zeta: float
    mu: float

    def __post_init__(self):
        if not (0.0 <= self.zeta <= ZETA_CLOSED_LIMIT):
            raise DomainError(f"negbin zeta must lie in [0, 1), got {self.zeta!r}")
        if not (math.isfinite(self.mu) and self.mu > 0.0):
            raise HyperParamError(f"negbin mu must be positive, got {self.mu!r}")


@dataclass(frozen=True)
class Binomial:
    p: float
    big_m: int

    def __post_init__(self):
        if not (isinstance(self.big_m, int) and self.big_m >= 1):
            raise HyperParamError(f"binomial M must be an integer >= 1, got {self.big_m!r}")
        if not (0.0 <= self.p <= 1.0):
            raise DomainError(f"binomial p must lie in [0, 1], got {self.p!r}")


@dataclass(frozen=True)
class FockPair:
    n: int
    m: int
    beta: float

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise DomainError("number-state indices must be >= 0")
        if self.n == self.m:
            raise DomainError("the two number-state indices must differ")
        if not (math.isfinite(self.beta) and abs(self.beta) <= 1.0):
            raise DomainError(f"mixing amplitude beta must lie in [-1, 1], got {self.beta!r}")


FamilyParam = Union[Coherent, Squeezed, NegBin, Binomial, FockPair]


# --------------------------------------------------------------------------
# construction in the number basis


def _truncate_probs(log_prob, cap: int) -> np.ndarray:
    """Grow the index range until the tail is negligible, then truncate.

    ``log_prob(n)`` maps an index array to log occupation probabilities
    (-inf allowed). The kept range must cover mass 1 - _BUILD_TAIL and, as
    far as the cap allows, every entry above _PROB_FLOOR. Raises
    CutoffExceeded if the mass target cannot be met within the cap.
    """
    size = 64
    while True:
        size = min(size, cap)
        probs = np.exp(log_prob(np.arange(size + 1, dtype=np.float64)))
        k_tail = int(np.searchsorted(np.cumsum(probs), 1.0 - _BUILD_TAIL))
        floor_done = probs[size] < _PROB_FLOOR
        if k_tail <= size and (floor_done or size >= cap):
            above = np.nonzero(probs >= _PROB_FLOOR)[0]
            k = min(max(k_tail, int(above[-1]) if above.size else 0), size)
            return np.sqrt(probs[: k + 1])
        if size >= cap:
            raise CutoffExceeded(
                f"tail mass does not reach {_BUILD_TAIL:g} within cutoff {cap};"
                " use the closed-form operations instead"
            )
        size *= 2


def build_state(param: FamilyParam) -> FockVector:
    """Expand a family member in the number basis.

    The cutoff is grown adaptively until the truncated tail mass is
    negligible, up to the hard cap from :func:`fidbound.fock.max_cutoff`.
    Raises CutoffExceeded when the parameter is too extreme for the cap
    (coherent amplitudes with alpha^2 near the cap, zeta close to 1).
    """
    cap = fock.max_cutoff()

    if isinstance(param, Coherent):
        if param.alpha == 0.0:
            return basis_state(0)
        log_a2 = 2.0 * math.log(param.alpha)
        a2 = param.alpha * param.alpha

        def log_prob(n):
            return -a2 + n * log_a2 - gammaln(n + 1.0)

        return FockVector(_truncate_probs(log_prob, cap))

    if isinstance(param, Squeezed):
        if param.zeta == 0.0:
            return basis_state(0)
        if param.zeta >= ZETA_BUILD_LIMIT:
            raise CutoffExceeded(
                f"zeta = {param.zeta!r} is too close to 1 for a number-basis expansion"
            )
        z2 = param.zeta * param.zeta
        log_ratio = 2.0 * math.log(param.zeta) - math.log(4.0)
        prefactor = 0.5 * math.log1p(-z2)

        def log_prob(n):
            # even indices carry p_{2m} = sqrt(1-z^2) C(2m, m) (z^2/4)^m
            out = np.full(n.shape, -np.inf)
            even = (n.astype(np.int64) % 2) == 0
            m = n[even] / 2.0
            out[even] = (
                prefactor
                + gammaln(2.0 * m + 1.0)
                - 2.0 * gammaln(m + 1.0)
                + m * log_ratio
            )
            return out

        return FockVector(_truncate_probs(log_prob, cap))

    if isinstance(param, NegBin):
        if param.zeta == 0.0:
            return basis_state(0)
        if param.zeta >= ZETA_BUILD_LIMIT:
            raise CutoffExceeded(
                f"zeta = {param.zeta!r} is too close to 1 for a number-basis expansion"
            )
        mu, zeta = param.mu, param.zeta
        log_zeta = math.log(zeta)
        prefactor = mu * math.log1p(-zeta) - gammaln(mu)

        def log_prob(n):
            return prefactor + gammaln(mu + n) - gammaln(n + 1.0) + n * log_zeta

        return FockVector(_truncate_probs(log_prob, cap))

    if isinstance(param, Binomial):
        m_tot, p = param.big_m, param.p
        if m_tot > cap:
            raise CutoffExceeded(f"binomial M = {m_tot} exceeds the cutoff cap {cap}")
        if p == 0.0:
            return basis_state(0)
        if p == 1.0:
            return basis_state(m_tot)
        n = np.arange(m_tot + 1, dtype=np.float64)
        log_probs = (
            gammaln(m_tot + 1.0)
            - gammaln(n + 1.0)
            - gammaln(m_tot - n + 1.0)
            + n * math.log(p)
            + (m_tot - n) * math.log1p(-p)
        )
        probs = np.exp(log_probs)
        k_tail = int(np.searchsorted(np.cumsum(probs), 1.0 - _BUILD_TAIL))
        above = np.nonzero(probs >= _PROB_FLOOR)[0]
        k = min(max(k_tail, int(above[-1]) if above.size else 0), m_tot)
        return FockVector(np.sqrt(probs[: k + 1]))

    if isinstance(param, FockPair):
        top = max(param.n, param.m)
        if top > cap:
            raise CutoffExceeded(f"number-state index {top} exceeds the cutoff cap {cap}")
        coeffs = np.zeros(top + 1)
        coeffs[param.n] = math.sqrt((1.0 - param.beta) * (1.0 + param.beta))
        coeffs[param.m] = param.beta
        return FockVector(coeffs)

    raise DomainError(f"unknown family parameter {param!r}")


# --------------------------------------------------------------------------
# closed forms


def _one_minus_product(z1: float, z2: float) -> float:
    # 1 - z1*z2 without cancellation near the zeta -> 1 boundary
    return (1.0 - z1) + z1 * (1.0 - z2)


def fidelity_closed(a: FamilyParam, b: FamilyParam) -> float:
    """Closed-form pairwise fidelity for two members of the same family.

    Coherent:  exp(-(a2 - a1)^2)
    Squeezed:  sqrt((1 - z1^2)(1 - z2^2)) / (1 - z1 z2)
    NegBin:    [(1 - z)(1 - z')]^mu / (1 - sqrt(z z'))^(2 mu), same mu
    Binomial:  [sqrt(p p') + sqrt((1-p)(1-p'))]^M, same M

    Raises FamilyMismatch when the tags or shared hyper-parameters differ
    (FockPair has no closed pairwise form in scope).
    """
    if isinstance(a, FockPair) or isinstance(b, FockPair):
        raise FamilyMismatch("no closed pairwise fidelity for two-term superpositions")
    if type(a) is not type(b):
        raise FamilyMismatch(
            f"cannot compare {type(a).__name__} with {type(b).__name__}"
        )
    if a == b:
        return 1.0

    if isinstance(a, Coherent):
        d = b.alpha - a.alpha
        return math.exp(-d * d)

    if isinstance(a, Squeezed):
        z1, z2 = a.zeta, b.zeta
        num = (1.0 - z1) * (1.0 + z1) * (1.0 - z2) * (1.0 + z2)
        return math.sqrt(num) / _one_minus_product(z1, z2)

    if isinstance(a, NegBin):
        if a.mu != b.mu:
            raise FamilyMismatch(f"negbin mu differs: {a.mu!r} vs {b.mu!r}")
        z1, z2 = a.zeta, b.zeta
        root = math.sqrt(z1 * z2)
        one_minus_root = _one_minus_product(z1, z2) / (1.0 + root)
        log_f = a.mu * (
            math.log1p(-z1) + math.log1p(-z2) - 2.0 * math.log(one_minus_root)
        )
        return math.exp(log_f)

    if isinstance(a, Binomial):
        if a.big_m != b.big_m:
            raise FamilyMismatch(f"binomial M differs: {a.big_m} vs {b.big_m}")
        p1, p2 = a.p, b.p
        base = math.sqrt(p1 * p2) + math.sqrt((1.0 - p1) * (1.0 - p2))
        return min(base, 1.0) ** a.big_m

    raise DomainError(f"unknown family parameter {a!r}")


def energy_closed(param: FamilyParam) -> float:
    """Closed-form mean energy 1/2 + <n> of a family member.

    Coherent: 1/2 + alpha^2; squeezed: (1 + z^2)/(2(1 - z^2));
    negbin: 1/2 + mu z/(1 - z); binomial: 1/2 + M p;
    two-term superposition: n + 1/2 + beta^2 (m - n).
    """
    if isinstance(param, Coherent):
        return 0.5 + param.alpha * param.alpha
    if isinstance(param, Squeezed):
        z = param.zeta
        return (1.0 + z * z) / (2.0 * (1.0 - z) * (1.0 + z))
    if isinstance(param, NegBin):
        return 0.5 + param.mu * param.zeta / (1.0 - param.zeta)
    if isinstance(param, Binomial):
        return 0.5 + param.big_m * param.p
    if isinstance(param, FockPair):
        return param.n + 0.5 + param.beta * param.beta * (param.m - param.n)
    raise DomainError(f"unknown family parameter {param!r}")


def fock_pair_tradeoff(n: int, m: int, beta: float) -> tuple[float, float]:
    """Fidelity and energy gap between |n> and sqrt(1-beta^2)|n> + beta|m>.

    Both numbers come from the explicit coefficient vectors: the fidelity is
    the squared overlap 1 - beta^2 (independent of m), and the gap is the
    mean-energy difference beta^2 (m - n). No shortcut formula is trusted
    here; a linear-in-beta gap would be inconsistent with the superposition
    as written.
    """
    pair = FockPair(n=n, m=m, beta=beta)
    psi2 = build_state(pair)
    psi1 = basis_state(n)
    fidelity = fidelity_fock(psi1, psi2)
    delta_e = mean_energy(psi2) - mean_energy(psi1)
    return fidelity, delta_e
