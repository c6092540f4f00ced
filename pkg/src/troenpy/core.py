"""Classical certainty-information quantities on finite distributions.

Entropy H(X) = -sum_i p_i log(p_i) measures the uncertainty of a
distribution; its dual, troenpy

    T(X) = -sum_i p_i log(1 - p_i),

measures certainty (commonness).  Troenpy is *minimized* at the uniform
distribution, mirroring entropy's maximum there, and relates to a cross
entropy: with q_i = (1 - p_i)/(K - 1),

    -sum_i p_i log(q_i) = T(X) + log(K - 1).

Conditioning raises certainty on average; the troenpy gained about X by
knowing Y is the pure positive information

    PPI(X; Y) = T(X | Y) - T(X),

which, unlike mutual information, is not symmetric in its arguments.

The per-term factor -log(1 - p) diverges as p -> 1.  Every log argument of
that form is floored at ``LogConfig.clamp_epsilon`` first, so a point mass
contributes the finite cap -log(clamp_epsilon) (about 27.63 nats at the
default 1e-12) instead of overflowing.  Terms with p_i = 0 contribute 0,
as does 0*log(0) in entropy.

All functions are pure and share a single convention: natural log by
default, configurable base via LogConfig.  Sums use math.fsum, so every
quantity is exactly invariant under permutations of the outcome labels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ValidationError

#: Absolute tolerance for "sums to one" checks.
SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class LogConfig:
    """Logarithm settings shared by every quantity in the toolkit.

    base: logarithm base, a real > 1 (natural log by default).
    clamp_epsilon: floor applied to log arguments of the form 1 - p so the
        p -> 1 singularity of -log(1 - p) stays finite; must lie in
        (0, 1e-3].
    """

    base: float = math.e
    clamp_epsilon: float = 1e-12
    _scale: float = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.base) and self.base > 1.0):
            raise DomainError(f"log base must be a finite real > 1, got {self.base!r}")
        if not (0.0 < self.clamp_epsilon <= 1e-3):
            raise DomainError(
                f"clamp_epsilon must lie in (0, 1e-3], got {self.clamp_epsilon!r}"
            )
        scale = 1.0 if self.base == math.e else 1.0 / math.log(self.base)
        object.__setattr__(self, "_scale", scale)

    def log(self, x: float) -> float:
        """log of x in the configured base."""
        return math.log(x) * self._scale


DEFAULT_LOG = LogConfig()


@dataclass(frozen=True)
class Distribution:
    """A validated probability mass function over K >= 1 outcomes.

    Entries must lie in [0, 1] and sum to 1 within 1e-9.  Inputs are never
    silently rescaled; use :meth:`normalized` to renormalize raw
    nonnegative weights explicitly.
    """

    probs: np.ndarray

    def __post_init__(self) -> None:
        p = np.asarray(self.probs, dtype=np.float64)
        if p.ndim != 1 or p.size < 1:
            raise ValidationError("distribution must be a non-empty 1-d vector")
        if not np.all(np.isfinite(p)):
            raise ValidationError("distribution entries must be finite")
        if np.any(p < 0.0) or np.any(p > 1.0):
            raise ValidationError("distribution entries must lie in [0, 1]")
        total = float(p.sum())
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise ValidationError(
                f"distribution must sum to 1 within {SUM_TOLERANCE}, got {total!r}"
            )
        p = p.copy()
        p.flags.writeable = False
        object.__setattr__(self, "probs", p)

    @classmethod
    def normalized(cls, values) -> "Distribution":
        """Build a distribution by explicitly rescaling nonnegative weights."""
        v = np.asarray(values, dtype=np.float64)
        if v.ndim != 1 or v.size < 1:
            raise ValidationError("need a non-empty 1-d vector of weights")
        if not np.all(np.isfinite(v)) or np.any(v < 0.0):
            raise ValidationError("weights must be finite and nonnegative")
        total = float(v.sum())
        if total <= 0.0:
            raise ValidationError("weights sum to zero; cannot normalize")
        return cls(v / total)

    @property
    def size(self) -> int:
        return int(self.probs.size)

    def __len__(self) -> int:
        return self.size


@dataclass(frozen=True)
class JointDistribution:
    """A validated joint pmf p(x, y) as a K_x x K_y table.

    Convention: rows index X (the predicted variable), columns index Y
    (the conditioning variable).  Entries are nonnegative and the table
    sums to 1 within 1e-9; both marginals are then valid distributions.
    """

    table: np.ndarray

    def __post_init__(self) -> None:
        t = np.asarray(self.table, dtype=np.float64)
        if t.ndim != 2 or t.shape[0] < 1 or t.shape[1] < 1:
            raise ValidationError("joint table must be a non-empty 2-d matrix")
        if not np.all(np.isfinite(t)):
            raise ValidationError("joint entries must be finite")
        if np.any(t < 0.0) or np.any(t > 1.0):
            raise ValidationError("joint entries must lie in [0, 1]")
        total = float(t.sum())
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise ValidationError(
                f"joint table must sum to 1 within {SUM_TOLERANCE}, got {total!r}"
            )
        t = t.copy()
        t.flags.writeable = False
        object.__setattr__(self, "table", t)

    def row_marginal(self) -> Distribution:
        """Marginal of X (row sums)."""
        return Distribution(self.table.sum(axis=1))

    def col_marginal(self) -> Distribution:
        """Marginal of Y (column sums)."""
        return Distribution(self.table.sum(axis=0))

    def transposed(self) -> "JointDistribution":
        """The same joint with the roles of X and Y swapped."""
        return JointDistribution(self.table.T)


def _clamped_complement(p: np.ndarray, cfg: LogConfig) -> np.ndarray:
    return np.maximum(1.0 - p, cfg.clamp_epsilon)


def entropy(d: Distribution, cfg: LogConfig = DEFAULT_LOG) -> float:
    """Shannon entropy -sum_i p_i log(p_i), with 0*log(0) := 0."""
    nz = d.probs[d.probs > 0.0]
    return math.fsum(-nz * np.log(nz)) * cfg._scale


def troenpy(d: Distribution, cfg: LogConfig = DEFAULT_LOG) -> float:
    """Troenpy -sum_i p_i log(max(1 - p_i, clamp_epsilon)).

    The certainty dual of entropy: 0 for nothing-at-stake outcomes
    (p_i = 0 terms contribute nothing), minimal at the uniform
    distribution, and capped at -log(clamp_epsilon) per unit mass when a
    point mass drives 1 - p_i under the clamp floor.
    """
    nz = d.probs[d.probs > 0.0]
    return math.fsum(-nz * np.log(_clamped_complement(nz, cfg))) * cfg._scale


def self_information(p: float, cfg: LogConfig = DEFAULT_LOG) -> float:
    """Negative information log(1/p) of one outcome, floored at the clamp."""
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"probability must lie in [0, 1], got {p!r}")
    return -cfg.log(max(p, cfg.clamp_epsilon))


def positive_information(p: float, cfg: LogConfig = DEFAULT_LOG) -> float:
    """Positive information log(1/(1 - p)) of one outcome.

    Measures the commonness (non-surpriseness) of an outcome of
    probability p; dual to the self-information log(1/p).  The argument
    1 - p is floored at the clamp.
    """
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"probability must lie in [0, 1], got {p!r}")
    return -cfg.log(max(1.0 - p, cfg.clamp_epsilon))


def troenpy_min(k: int, cfg: LogConfig = DEFAULT_LOG) -> float:
    """Troenpy of the uniform distribution on k outcomes: log(k/(k - 1)).

    This is the global minimum of troenpy over all distributions of size
    k; requires k >= 2 (k = 1 is the singular all-mass case).
    """
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool):
        raise DomainError(f"k must be an integer, got {k!r}")
    if k < 2:
        raise DomainError(f"troenpy_min requires k >= 2, got {k}")
    return math.log1p(1.0 / (k - 1)) * cfg._scale


def dual_cross_entropy(d: Distribution, cfg: LogConfig = DEFAULT_LOG) -> float:
    """Cross entropy of d against its complement distribution.

    With q_i = (1 - p_i)/(K - 1) (a valid distribution for K >= 2), returns
    -sum_i p_i log(q_i), which equals troenpy(d) + log(K - 1).  The
    complement 1 - p_i is clamped exactly as in :func:`troenpy`, so the
    identity holds even for clamp-dominated inputs.
    """
    k = d.size
    if k < 2:
        raise DomainError(f"dual_cross_entropy requires K >= 2 outcomes, got {k}")
    nz = d.probs[d.probs > 0.0]
    q = _clamped_complement(nz, cfg) / (k - 1)
    return math.fsum(-nz * np.log(q)) * cfg._scale


def conditional_troenpy(j: JointDistribution, cfg: LogConfig = DEFAULT_LOG) -> float:
    """Conditional troenpy T(X | Y) = sum_y p(y) T(X | Y = y).

    Equivalently -sum_{x,y} p(x,y) log(max(1 - p(x|y), clamp_epsilon)).
    Columns with p(y) = 0 contribute nothing.
    """
    t = j.table
    col_sums = t.sum(axis=0)
    terms: list[np.ndarray] = []
    for y in range(t.shape[1]):
        p_y = col_sums[y]
        if p_y <= 0.0:
            continue
        joint_col = t[:, y]
        nz = joint_col[joint_col > 0.0]
        cond = nz / p_y
        terms.append(-nz * np.log(_clamped_complement(cond, cfg)))
    if not terms:
        return 0.0
    return math.fsum(np.concatenate(terms)) * cfg._scale


def ppi(j: JointDistribution, cfg: LogConfig = DEFAULT_LOG) -> float:
    """Pure positive information PPI(X; Y) = T(X | Y) - T(X).

    The troenpy gained about X (rows) by conditioning on Y (columns).
    Zero when X and Y are independent; in general PPI(X; Y) != PPI(Y; X).
    """
    return conditional_troenpy(j, cfg) - troenpy(j.row_marginal(), cfg)
