"""Closed-form maximal-fidelity bounds at a fixed relative energy difference.

Two energy measures are used throughout. For mean energies E1, E2 (ground
state included), the relative difference is E = (E2 - E1)/E1 > -1, and the
symmetric relative difference is Y = |E2 - E1| / sqrt(E1 E2) >= 0. They are
linked by Y = |E| / sqrt(1 + E) and its inverse E^2 = Y^2 (1 + E).

Every bound is keyed on Y, the measure in which the final formulas are
simplest and sign-free:

    coherent    exp(-Y^2 / 2)
    squeezed    (1 + Y^2/4)^(-1/2)                       (supremum at zeta -> 1)
    negbin      (1 + (2mu-1) Y^2 / (4 mu^2))^(-mu)       for mu >= 1
                (1 + Y^2/4)^(-mu)                        for mu <= 1 (zeta -> 1)
    phase       negbin with mu = 1: (1 + Y^2/4)^(-1)
    binomial    (1 - (2M+1) Y^2 / (4 M^2))^M,  Y <= 2M / sqrt(2M+1)

Entry points taking E convert through :func:`y_from_e`. The extremal
first-state parameters and the quadratic-equation machinery behind the
negative-binomial maximization live here too.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError, HyperParamError

FAMILY_TAGS = ("coherent", "squeezed", "negbin", "binomial", "phase")

# Relative slack for domain checks at exact float endpoints.
_EDGE_SLACK = 1e-12


class Branch(enum.Enum):
    """Where the maximum sits: a stationary interior parameter, or a supremum
    approached only as the parameter tends to the open end of its domain."""

    INTERIOR = "interior"
    BOUNDARY_SUPREMUM = "boundary-supremum"


def normalize_family(family_tag: str, hyper=None) -> tuple[str, float | int | None]:
    """Validate a family tag / hyper-parameter pair.

    Resolves the ``phase`` alias to negbin with mu = 1 and checks that mu / M
    are present exactly when required. Returns ``(tag, hyper)`` with the tag
    in {coherent, squeezed, negbin, binomial}.
    """
    if family_tag == "phase":
        if hyper is not None:
            raise HyperParamError("family 'phase' takes no hyper-parameter")
        return "negbin", 1.0
    if family_tag in ("coherent", "squeezed"):
        if hyper is not None:
            raise HyperParamError(f"family '{family_tag}' takes no hyper-parameter")
        return family_tag, None
    if family_tag == "negbin":
        if hyper is None:
            raise HyperParamError("family 'negbin' requires mu")
        mu = float(hyper)
        if not (math.isfinite(mu) and mu > 0.0):
            raise HyperParamError(f"mu must be positive and finite, got {hyper!r}")
        return "negbin", mu
    if family_tag == "binomial":
        if hyper is None:
            raise HyperParamError("family 'binomial' requires M")
        big_m = hyper
        if isinstance(big_m, float):
            if not big_m.is_integer():
                raise HyperParamError(f"M must be an integer, got {hyper!r}")
            big_m = int(big_m)
        if not isinstance(big_m, int) or big_m < 1:
            raise HyperParamError(f"M must be an integer >= 1, got {hyper!r}")
        return "binomial", big_m
    raise DomainError(f"unknown family tag {family_tag!r}")


# --------------------------------------------------------------------------
# energy-measure conversions


def y_from_e(rel: float) -> float:
    """Symmetric relative difference Y = |E| / sqrt(1 + E) for E > -1."""
    if not (math.isfinite(rel) and rel > -1.0):
        raise DomainError(f"relative energy difference must be finite and > -1, got {rel!r}")
    return abs(rel) / math.sqrt(1.0 + rel)


def e_from_y(sym: float, sign: int = 1) -> float:
    """Relative difference E recovered from Y and a sign.

    Positive branch: E = Y sqrt(1 + Y^2/4) + Y^2/2. Negative branch: the
    other root of E^2 = Y^2 (1 + E), computed through the rationalized form
    1 + E = (sqrt(1 + Y^2/4) - Y/2)^2 so it stays accurate (and provably
    > -1) for large Y.
    """
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign!r}")
    if not (math.isfinite(sym) and sym >= 0.0):
        raise DomainError(f"symmetric energy difference must be >= 0, got {sym!r}")
    root = math.sqrt(1.0 + 0.25 * sym * sym)
    if sign == 1:
        return sym * root + 0.5 * sym * sym
    t = 1.0 / (root + 0.5 * sym)
    rel = (t - 1.0) * (t + 1.0)
    assert rel > -1.0  # 1 + rel = t^2 > 0 by construction
    return rel


@dataclass(frozen=True)
class EnergyGap:
    """A relative energy difference in both measures, plus the sign of E."""

    rel: float
    sym: float
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign!r}")
        if not (math.isfinite(self.rel) and self.rel > -1.0):
            raise DomainError(f"rel must be finite and > -1, got {self.rel!r}")
        if self.sym < 0.0:
            raise DomainError(f"sym must be >= 0, got {self.sym!r}")
        expected = y_from_e(self.rel)
        if abs(self.sym - expected) > 1e-14 * max(1.0, expected):
            raise DomainError(
                f"sym = {self.sym!r} inconsistent with rel = {self.rel!r}"
                f" (expected {expected!r})"
            )
        if self.rel > 0 and self.sign != 1 or self.rel < 0 and self.sign != -1:
            raise DomainError("sign inconsistent with rel")

    @classmethod
    def from_rel(cls, rel: float) -> "EnergyGap":
        return cls(rel=rel, sym=y_from_e(rel), sign=1 if rel >= 0 else -1)

    @classmethod
    def from_sym(cls, sym: float, sign: int = 1) -> "EnergyGap":
        rel = e_from_y(sym, sign)
        return cls(rel=rel, sym=sym, sign=1 if rel >= 0 else -1)

    def delta_e(self, e1: float) -> float:
        """Absolute energy difference for a given first-state energy."""
        return self.rel * e1


@dataclass(frozen=True)
class BoundResult:
    """A maximal fidelity, the first-state parameter achieving it, and the
    branch tag saying whether that parameter is an interior stationary point
    or the open-boundary value the supremum is approached at."""

    f_max: float
    extremal_param: float
    branch: Branch

    def __post_init__(self):
        if not (0.0 <= self.f_max <= 1.0):
            raise DomainError(f"f_max must lie in [0, 1], got {self.f_max!r}")


# --------------------------------------------------------------------------
# bounds and their inverses


def binomial_y_limit(big_m: int) -> float:
    """Largest symmetric difference reachable by binomial states: 2M/sqrt(2M+1)."""
    _, m = normalize_family("binomial", big_m)
    return 2.0 * m / math.sqrt(2.0 * m + 1.0)


def negbin_bound_expression(mu: float, sym: float) -> float:
    """The analytic negbin bound (1 + (2mu-1) Y^2/(4 mu^2))^(-mu), as written.

    Valid as the family bound for mu >= 1; evaluating it at mu = -M
    formally reproduces the binomial bound, which the identity tests use.
    """
    arg = (2.0 * mu - 1.0) * sym * sym / (4.0 * mu * mu)
    if arg <= -1.0:
        return 0.0
    return math.exp(-mu * math.log1p(arg))


def fmax(family_tag: str, sym: float, hyper=None, *, sign: int = 1) -> BoundResult:
    """Maximal fidelity within a family at symmetric energy difference Y.

    The bound itself is sign-free; ``sign`` only selects which branch of E
    the extremal parameter is reported for (positive by default). Raises
    DomainError when Y is negative or beyond the binomial reach, and
    HyperParamError for a bad mu / M.
    """
    fam, h = normalize_family(family_tag, hyper)
    if not (math.isfinite(sym) and sym >= 0.0):
        raise DomainError(f"symmetric energy difference must be >= 0, got {sym!r}")
    y2 = sym * sym

    if fam == "coherent":
        f = math.exp(-0.5 * y2)
    elif fam == "squeezed":
        f = math.exp(-0.5 * math.log1p(0.25 * y2))
    elif fam == "negbin":
        if h >= 1.0:
            arg = (2.0 * h - 1.0) * y2 / (4.0 * h * h)
        else:
            arg = 0.25 * y2
        f = math.exp(-h * math.log1p(arg))
    else:  # binomial
        limit = 2.0 * h / math.sqrt(2.0 * h + 1.0)
        if sym > limit * (1.0 + _EDGE_SLACK):
            raise DomainError(
                f"Y = {sym!r} exceeds the binomial limit 2M/sqrt(2M+1) = {limit!r}"
            )
        arg = (2.0 * h + 1.0) * y2 / (4.0 * h * h)
        f = 0.0 if arg >= 1.0 else math.exp(h * math.log1p(-arg))

    value, branch = extremal_param(fam, e_from_y(sym, sign), h)
    return BoundResult(f_max=f, extremal_param=value, branch=branch)


def ymax_for_fidelity(family_tag: str, f: float, hyper=None) -> float:
    """Largest symmetric energy difference compatible with fidelity >= f.

    Exact algebraic inverse of :func:`fmax` per family; f must lie in (0, 1].
    """
    fam, h = normalize_family(family_tag, hyper)
    if not (math.isfinite(f) and 0.0 < f <= 1.0):
        raise DomainError(f"fidelity must lie in (0, 1], got {f!r}")
    neg_log_f = -math.log(f)

    if fam == "coherent":
        return math.sqrt(2.0 * neg_log_f)
    if fam == "squeezed":
        # f^(-2) - 1, kept accurate near f = 1
        return 2.0 * math.sqrt(math.expm1(2.0 * neg_log_f))
    if fam == "negbin":
        t = math.expm1(neg_log_f / h)
        if h >= 1.0:
            return 2.0 * h * math.sqrt(t / (2.0 * h - 1.0))
        return 2.0 * math.sqrt(t)
    # binomial: 1 - f^(1/M)
    u = -math.expm1(-neg_log_f / h)
    return 2.0 * h * math.sqrt(u / (2.0 * h + 1.0))


def extremal_param(family_tag: str, rel: float, hyper=None) -> tuple[float, Branch]:
    """First-state parameter maximizing fidelity at fixed relative difference E.

    coherent    alpha* = 1 / sqrt(2 (1 + E))                      (interior)
    squeezed    supremum approached at zeta -> 1                  (boundary)
    negbin mu>1 zeta* = (1 + E_mu) / (kappa (1 + E_mu kappa)),
                E_mu = E/(2 mu), kappa = 2 mu - 1                 (interior)
    negbin mu=1 the same formula collapses to exactly 1           (interior)
    negbin mu<1 supremum approached at zeta -> 1                  (boundary)
    binomial    p* = (2M - E) / (4 M (M+1) (1 + E))               (interior)
    """
    fam, h = normalize_family(family_tag, hyper)
    if not (math.isfinite(rel) and rel > -1.0):
        raise DomainError(f"relative energy difference must be finite and > -1, got {rel!r}")

    if fam == "coherent":
        return 1.0 / math.sqrt(2.0 * (1.0 + rel)), Branch.INTERIOR
    if fam == "squeezed":
        return 1.0, Branch.BOUNDARY_SUPREMUM
    if fam == "negbin":
        if h < 1.0:
            return 1.0, Branch.BOUNDARY_SUPREMUM
        if h == 1.0:
            return 1.0, Branch.INTERIOR
        e_mu = rel / (2.0 * h)
        kappa = 2.0 * h - 1.0
        zeta_star = (1.0 + e_mu) / (kappa * (1.0 + e_mu * kappa))
        return zeta_star, Branch.INTERIOR
    # binomial
    lo = -2.0 * h / (2.0 * h + 1.0)
    hi = 2.0 * h
    if rel < lo - _EDGE_SLACK or rel > hi * (1.0 + _EDGE_SLACK):
        raise DomainError(
            f"E = {rel!r} outside the binomial range [{lo!r}, {hi!r}] for M = {h}"
        )
    p_star = (2.0 * h - rel) / (4.0 * h * (h + 1.0) * (1.0 + rel))
    return min(max(p_star, 0.0), 1.0), Branch.INTERIOR


# --------------------------------------------------------------------------
# quadratic machinery behind the negative-binomial maximization


@dataclass(frozen=True)
class NegbinQuadratic:
    """Coefficients of A^2 z^2 + 2 B z + C^2 = 0, the equation locating the
    parameters where the negbin objective takes a chosen bracket value beta.

    The discriminant vanishes (unique solution, i.e. the extremum) when
    B = -AC, which pins beta at :func:`negbin_extremal_beta_sq`; the root is
    then z = C/A.
    """

    a: float
    b: float
    c: float

    def residual_at(self, zeta: float) -> float:
        return self.a * self.a * zeta * zeta + 2.0 * self.b * zeta + self.c * self.c


def negbin_quadratic(beta: float, e_mu: float, kappa: float) -> NegbinQuadratic:
    """Quadratic coefficients for bracket value beta at reduced gap E_mu.

    A = beta^2 (1 + E_mu kappa) - 1
    C = beta^2 (1 + E_mu) - 1
    B = beta^4 (1 + E_mu kappa)(1 + E_mu) - beta^2 E_mu (1 + kappa) - 1
    """
    if not (0.0 < beta <= 1.0):
        raise DomainError(f"beta must lie in (0, 1], got {beta!r}")
    if not (math.isfinite(e_mu) and e_mu >= 0.0):
        raise DomainError(f"e_mu must be >= 0, got {e_mu!r}")
    b2 = beta * beta
    u = 1.0 + e_mu * kappa
    v = 1.0 + e_mu
    return NegbinQuadratic(
        a=b2 * u - 1.0,
        b=b2 * b2 * u * v - b2 * e_mu * (1.0 + kappa) - 1.0,
        c=b2 * v - 1.0,
    )


def negbin_extremal_beta_sq(e_mu: float, kappa: float) -> float:
    """beta*^2 = (1 + E_mu (1 + kappa)) / ((1 + E_mu)(1 + E_mu kappa)),
    the bracket value at which the quadratic degenerates (B = -AC)."""
    if not (math.isfinite(e_mu) and e_mu >= 0.0):
        raise DomainError(f"e_mu must be >= 0, got {e_mu!r}")
    return (1.0 + e_mu * (1.0 + kappa)) / ((1.0 + e_mu) * (1.0 + e_mu * kappa))
