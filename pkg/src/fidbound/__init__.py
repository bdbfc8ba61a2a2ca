"""Fidelity vs. energy-difference trade-off bounds for oscillator states.

The package answers, for several standard single-mode state families, how
large the relative mean-energy difference of two states can be at a fixed
fidelity (and vice versa). Closed-form bounds live in :mod:`fidbound.bounds`;
:mod:`fidbound.search` re-derives every one of them by brute force, and
:mod:`fidbound.fock` checks the family closed forms against truncated
number-basis arithmetic.
"""

from .bounds import (
    BoundResult,
    Branch,
    EnergyGap,
    e_from_y,
    extremal_param,
    fmax,
    negbin_extremal_beta_sq,
    negbin_quadratic,
    normalize_family,
    y_from_e,
    ymax_for_fidelity,
)
from .errors import (
    CutoffExceeded,
    DomainError,
    FamilyMismatch,
    FidboundError,
    HyperParamError,
    NoFeasiblePoint,
    PartnerOutOfDomain,
)
from .families import (
    Binomial,
    Coherent,
    FamilyParam,
    FockPair,
    NegBin,
    Squeezed,
    build_state,
    energy_closed,
    fidelity_closed,
    fock_pair_tradeoff,
)
from .fock import (
    FockVector,
    basis_state,
    fidelity_fock,
    is_hyper_poissonian,
    mandel_q,
    max_cutoff,
    mean_energy,
    photon_moments,
)
from .search import (
    GridSpec,
    TradeoffPoint,
    VerifyReport,
    constrained_partner,
    oracle_max_fidelity,
    scan_tradeoff,
)

__version__ = "0.1.0"
