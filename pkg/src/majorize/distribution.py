"""Canonical probability distributions, Lorenz curves, and seeded samplers.

Everything downstream operates on the canonical form: entries sorted in
non-increasing order and summing to one. The permutation back to the
caller's input order is kept alongside so results can be mapped back.
Distances are l1 distances between canonical vectors (maximum 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .config import DEFAULT_TAU_NORM
from .errors import (
    DimensionMismatchError,
    EmptyInputError,
    InvalidDeltaError,
    NegativeEntryError,
    NotNormalizedError,
    ZeroDimensionError,
    ZeroSumError,
)

ArrayLike = Union[Sequence[float], np.ndarray]
SeedLike = Union[int, np.random.Generator]

# Structural slack for validating internally constructed vectors; inputs go
# through make_distribution, which applies the caller's tau_norm first.
_STRUCT_TOL = DEFAULT_TAU_NORM


def _as_generator(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def check_delta(delta: float) -> float:
    """Validate a smoothing radius against [0, 2] and return it as float."""
    delta = float(delta)
    if not (0.0 <= delta <= 2.0):
        raise InvalidDeltaError(f"delta must lie in [0, 2], got {delta}")
    return delta


@dataclass(frozen=True, eq=False)
class Distribution:
    """A probability vector in canonical (non-increasing) order.

    Attributes
    ----------
    values : ndarray
        Probabilities sorted non-increasingly; nonnegative, sum within
        1e-7 of one.
    perm : ndarray
        Maps canonical index to the position the entry occupied in the
        caller's original vector: ``values[i] == original[perm[i]]``.
    """

    values: np.ndarray
    perm: np.ndarray

    def __post_init__(self) -> None:
        values = np.ascontiguousarray(self.values, dtype=np.float64)
        perm = np.ascontiguousarray(self.perm, dtype=np.intp)
        if values.ndim != 1 or values.size == 0:
            raise EmptyInputError("distribution needs at least one entry")
        if values[-1] < 0.0 or not np.all(values[:-1] >= values[1:]):
            raise ValueError("values must be non-increasing and nonnegative")
        if abs(float(values.sum()) - 1.0) > _STRUCT_TOL:
            raise NotNormalizedError(f"values sum to {values.sum()!r}")
        if perm.shape != values.shape or not np.array_equal(
            np.sort(perm), np.arange(values.size)
        ):
            raise ValueError("perm is not a permutation of 0..k-1")
        values.setflags(write=False)
        perm.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "perm", perm)

    @property
    def k(self) -> int:
        return self.values.size

    def to_original_order(self) -> np.ndarray:
        """Return the entries permuted back to the caller's input order."""
        out = np.empty(self.k)
        out[self.perm] = self.values
        return out

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        body = ", ".join(f"{v:.6g}" for v in self.values)
        return f"Distribution([{body}])"


@dataclass(frozen=True, eq=False)
class LorenzCurve:
    """Prefix-sum polyline of a canonical distribution.

    ``cumulative[l]`` is the mass of the l largest entries, for
    l = 0..k; the origin point (0, 0) is always included.
    """

    cumulative: np.ndarray

    def __post_init__(self) -> None:
        cum = np.ascontiguousarray(self.cumulative, dtype=np.float64)
        if cum.ndim != 1 or cum.size < 2:
            raise EmptyInputError("curve needs at least the origin and one point")
        if cum[0] != 0.0:
            raise ValueError("curve must start at (0, 0)")
        steps = np.diff(cum)
        if np.any(steps < -1e-12):
            raise ValueError("cumulative mass must be non-decreasing")
        # concavity comes for free from sortedness; slack covers cumsum noise
        if np.any(np.diff(steps) > 1e-9):
            raise ValueError("increments must be non-increasing")
        if abs(float(cum[-1]) - 1.0) > _STRUCT_TOL:
            raise NotNormalizedError(f"curve ends at {cum[-1]!r}, expected 1")
        cum.setflags(write=False)
        object.__setattr__(self, "cumulative", cum)

    @property
    def k(self) -> int:
        return self.cumulative.size - 1

    @property
    def points(self) -> list[tuple[int, float]]:
        return [(l, float(c)) for l, c in enumerate(self.cumulative)]


def make_distribution(
    raw: ArrayLike,
    policy: str = "reject",
    *,
    tau_norm: float = DEFAULT_TAU_NORM,
) -> Distribution:
    """Build a canonical distribution from an arbitrary probability vector.

    Parameters
    ----------
    raw : array-like
        Nonnegative entries; values in [-tau_norm, 0) are treated as float
        noise and clamped to zero.
    policy : {"reject", "renormalize"}
        "reject" fails unless the sum is within `tau_norm` of one;
        "renormalize" divides by the sum.
    tau_norm : float
        Acceptance tolerance for the reject policy and the negative-entry
        clamp.

    Returns
    -------
    Distribution
        Stably sorted in descending order; ties keep input order, so the
        recorded permutation is deterministic. Stored values are divided
        by the sum, so they sum to one at float precision.

    Raises
    ------
    EmptyInputError, NegativeEntryError, NotNormalizedError, ZeroSumError
    """
    arr = np.asarray(raw, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError("expected a flat vector of probabilities")
    if arr.size == 0:
        raise EmptyInputError("empty probability vector")
    if not np.all(np.isfinite(arr)):
        raise ValueError("entries must be finite")
    lowest = float(arr.min())
    if lowest < -tau_norm:
        raise NegativeEntryError(f"entry {lowest} below -{tau_norm}")
    if lowest < 0.0:
        arr = np.where(arr > 0.0, arr, 0.0)
    total = float(arr.sum())
    if policy == "reject":
        if abs(total - 1.0) > tau_norm:
            raise NotNormalizedError(f"sum {total} not within {tau_norm} of 1")
    elif policy == "renormalize":
        if total <= 0.0:
            raise ZeroSumError("cannot renormalize a zero vector")
    else:
        raise ValueError(f"unknown policy: {policy!r}")
    order = np.argsort(-arr, kind="stable")
    return Distribution(arr[order] / total, order)


def uniform(k: int) -> Distribution:
    """The flat distribution on k outcomes."""
    if k < 1:
        raise ZeroDimensionError("k must be >= 1")
    return Distribution(np.full(k, 1.0 / k), np.arange(k))


def point_mass(k: int) -> Distribution:
    """The distribution (1, 0, ..., 0) on k outcomes."""
    if k < 1:
        raise ZeroDimensionError("k must be >= 1")
    values = np.zeros(k)
    values[0] = 1.0
    return Distribution(values, np.arange(k))


def l1_distance(p: Distribution, q: Distribution) -> float:
    """l1 distance between canonical (sorted) vectors; lies in [0, 2]."""
    if p.k != q.k:
        raise DimensionMismatchError(f"k mismatch: {p.k} vs {q.k}")
    return float(np.abs(p.values - q.values).sum())


def lorenz(p: Distribution) -> LorenzCurve:
    """Lorenz curve of p: points (l, mass of the l largest entries)."""
    cum = np.empty(p.k + 1)
    cum[0] = 0.0
    np.cumsum(p.values, out=cum[1:])
    return LorenzCurve(cum)


def sample_delta_ball(p: Distribution, delta: float, seed: SeedLike) -> Distribution:
    """Draw a distribution within l1 distance `delta` of p.

    The sample is ``p + t * (u - p)`` for a random distribution u, with the
    step size t chosen so the l1 move is at most delta; sorting to canonical
    form can only shrink the distance further. Deterministic for a fixed
    integer seed; passing a Generator advances it in place.
    """
    delta = check_delta(delta)
    rng = _as_generator(seed)
    u = rng.dirichlet(np.ones(p.k))
    step = u - p.values
    width = float(np.abs(step).sum())
    t = 1.0 if width <= delta else (delta / width) * (1.0 - 1e-12)
    vals = p.values + t * step
    # rounding in p + t*step can overshoot the budget by ulps; retighten
    # against the measured distance (clamping and sorting below only shrink it)
    for _ in range(4):
        moved = float(np.abs(vals - p.values).sum())
        if moved <= delta:
            break
        t *= (delta / moved) * (1.0 - 1e-12)
        vals = p.values + t * step
    else:
        vals = p.values.copy()
    vals = np.where(vals > 0.0, vals, 0.0)
    order = np.argsort(-vals, kind="stable")
    return Distribution(vals[order], order)


def sample_majorized_pair(k: int, seed: SeedLike) -> tuple[Distribution, Distribution]:
    """Draw (p, q) with q a doubly-stochastic image of p, so p majorizes q.

    q is a probabilistic mixture of random permutations of p (the identity
    is always one component), which is exactly the Hardy-Littlewood-Polya
    characterization of the pairs below p in the majorization order.
    """
    if k < 1:
        raise ZeroDimensionError("k must be >= 1")
    rng = _as_generator(seed)
    p_raw = rng.dirichlet(np.ones(k))
    order = np.argsort(-p_raw, kind="stable")
    p = Distribution(p_raw[order], order)

    n_parts = k + 1
    weights = rng.dirichlet(np.ones(n_parts))
    q_raw = weights[0] * p.values
    for w in weights[1:]:
        q_raw = q_raw + w * p.values[rng.permutation(k)]
    q_order = np.argsort(-q_raw, kind="stable")
    return p, Distribution(q_raw[q_order], q_order)
