"""NumPy implementation of the oracle sweep objective.

For each family, ``objective_grid`` evaluates the pairwise fidelity between a
first state with the given parameter and the partner that realizes the
requested relative energy difference ``rel``, with the partner eliminated
analytically. Infeasible points (no partner inside the family domain) come
back as NaN.

The forms used here are the cancellation-free composed expressions (partner
substituted symbolically), so they stay accurate arbitrarily close to the
zeta -> 1 boundary. The compiled extension `_kernels.pyx` mirrors this module
operation for operation; the backend-parity tests keep the two in lockstep.
"""

from __future__ import annotations

import math

import numpy as np

COHERENT, SQUEEZED, NEGBIN, BINOMIAL = 0, 1, 2, 3


def objective_grid(code: int, params, rel: float, hyper: float = 0.0) -> np.ndarray:
    x = np.asarray(params, dtype=np.float64)
    out = np.full(x.shape, np.nan)

    if code == COHERENT:
        s = x * x * (1.0 + rel) + 0.5 * rel
        ok = s >= 0.0
        d = np.sqrt(s[ok]) - x[ok]
        out[ok] = np.exp(-d * d)
    elif code == SQUEEZED:
        z = x * x
        t = 0.5 * rel * (1.0 + z)
        nu = z + t
        den = 1.0 + t
        ok = (den > 0.0) & (nu >= 0.0)
        out[ok] = (np.sqrt(den[ok]) + np.sqrt(z[ok] * nu[ok])) / (1.0 + nu[ok])
    elif code == NEGBIN:
        mu = hyper
        t = (rel / (2.0 * mu)) * (1.0 + (2.0 * mu - 1.0) * x)
        nu = x + t
        den = 1.0 + t
        ok = (den > 0.0) & (nu >= 0.0)
        base = (np.sqrt(den[ok]) + np.sqrt(x[ok] * nu[ok])) / (1.0 + nu[ok])
        out[ok] = base ** (2.0 * mu)
    elif code == BINOMIAL:
        m = hyper
        pp = x * (1.0 + rel) + rel / (2.0 * m)
        ok = (pp >= 0.0) & (pp <= 1.0)
        base = np.sqrt(x[ok] * pp[ok]) + np.sqrt((1.0 - x[ok]) * (1.0 - pp[ok]))
        out[ok] = base**m
    else:
        raise ValueError(f"unknown family code {code}")
    return out


def objective_at(code: int, x: float, rel: float, hyper: float = 0.0) -> float:
    nan = float("nan")

    if code == COHERENT:
        s = x * x * (1.0 + rel) + 0.5 * rel
        if s < 0.0:
            return nan
        d = math.sqrt(s) - x
        return math.exp(-d * d)
    if code == SQUEEZED:
        z = x * x
        t = 0.5 * rel * (1.0 + z)
        nu = z + t
        den = 1.0 + t
        if den <= 0.0 or nu < 0.0:
            return nan
        return (math.sqrt(den) + math.sqrt(z * nu)) / (1.0 + nu)
    if code == NEGBIN:
        mu = hyper
        t = (rel / (2.0 * mu)) * (1.0 + (2.0 * mu - 1.0) * x)
        nu = x + t
        den = 1.0 + t
        if den <= 0.0 or nu < 0.0:
            return nan
        base = (math.sqrt(den) + math.sqrt(x * nu)) / (1.0 + nu)
        return base ** (2.0 * mu)
    if code == BINOMIAL:
        m = hyper
        pp = x * (1.0 + rel) + rel / (2.0 * m)
        if pp < 0.0 or pp > 1.0:
            return nan
        base = math.sqrt(x * pp) + math.sqrt((1.0 - x) * (1.0 - pp))
        return base**m
    raise ValueError(f"unknown family code {code}")
