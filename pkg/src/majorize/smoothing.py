"""Extremal perturbations of a distribution within an l1 budget.

Two constructions, both operating on the canonical sorted vector:

* steepest: the most concentrated distribution reachable by moving at
  most `delta` of mass; it majorizes everything else in the budget ball.
* flattest: the most spread-out one; everything else in the ball
  majorizes it.

Both come with closed-form Lorenz curves and report the construction
internals (cut position, water-filling levels, block boundaries).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .config import DEFAULT_TAU
from .distribution import (
    Distribution,
    LorenzCurve,
    check_delta,
    l1_distance,
    lorenz,
    point_mass,
    uniform,
)
from .errors import BudgetOutOfRangeError


@dataclass(frozen=True)
class SteepestMeta:
    """Construction internals of a steepest result.

    head_count is the number of leading entries that survive the tail
    cut (the first of them enlarged by delta/2); tail_value is the
    remainder mass placed right after them (0 when nothing remains).
    """

    head_count: int
    tail_value: float


@dataclass(frozen=True)
class FlattestMeta:
    """Construction internals of a flattest result.

    Entries at or above upper_level are cut down to it; entries at or
    below lower_level are raised up to it. upper_count is the size of
    the leveled top block, lower_start the 1-based canonical index where
    the raised bottom block begins.
    """

    upper_level: float
    lower_level: float
    upper_count: int
    lower_start: int


@dataclass(frozen=True, eq=False)
class SmoothedResult:
    """An extremal perturbation plus how it was built.

    clamped means the budget already covered the distance to the
    absolute extreme (point mass or uniform), which is returned as is;
    meta fields are None except the one matching `kind` on an
    unclamped result.
    """

    result: Distribution
    kind: str
    delta: float
    clamped: bool
    meta_steepest: Optional[SteepestMeta] = None
    meta_flattest: Optional[FlattestMeta] = None

    def __post_init__(self) -> None:
        if self.kind not in ("steepest", "flattest"):
            raise ValueError(f"unknown kind: {self.kind!r}")


def steepest(
    p: Distribution, delta: float, *, tau: float = DEFAULT_TAU
) -> SmoothedResult:
    """Most concentrated distribution within l1 distance delta of p.

    Adds delta/2 to the largest entry and removes delta/2 from the end
    of the sorted vector: entries whose running total fits under 1 stay,
    the next entry receives the remainder, the rest become 0. If the
    point mass (1, 0, ..., 0) is already within delta, it is returned
    directly with clamped=True. The result majorizes every distribution
    within delta of p.
    """
    delta = check_delta(delta)
    k = p.k
    top = point_mass(k)
    if l1_distance(p, top) <= delta:
        return SmoothedResult(top, "steepest", delta, True)
    if delta == 0.0:
        return SmoothedResult(
            p, "steepest", delta, False, meta_steepest=SteepestMeta(k, 0.0)
        )
    half = delta / 2.0
    prefix = np.cumsum(p.values)
    # ulp slack keeps exact-boundary cuts (prefix + half == 1) inclusive
    keep = np.flatnonzero(prefix <= 1.0 - half + 1e-12)
    if keep.size == 0:
        # float disagreement between the distance check and p1 + half >= 1;
        # only reachable within ulps of the clamp boundary
        return SmoothedResult(top, "steepest", delta, True)
    head = int(keep[-1]) + 1
    vals = np.zeros(k)
    vals[:head] = p.values[:head]
    vals[0] += half
    if head < k:
        tail = 1.0 - (float(prefix[head - 1]) + half)
        # mathematically 0 <= tail <= next entry; clamp off float noise
        tail = min(max(tail, 0.0), float(p.values[head]))
        vals[head] = tail
    else:
        # delta below the float resolution of the prefix sums: take the
        # overshoot out of the last entry instead of a nonexistent slot
        tail = 0.0
        vals[-1] = max(vals[-1] - half, 0.0)
    return SmoothedResult(
        Distribution(vals, p.perm),
        "steepest",
        delta,
        False,
        meta_steepest=SteepestMeta(head, float(tail)),
    )


def flattest(
    p: Distribution, delta: float, *, tau: float = DEFAULT_TAU
) -> SmoothedResult:
    """Most spread-out distribution within l1 distance delta of p.

    Levels the largest entries down to an upper water level and the
    smallest up to a lower one, each side spending delta/2, leaving the
    middle untouched. If the uniform distribution is already within
    delta, it is returned directly with clamped=True. Every distribution
    within delta of p majorizes the result.
    """
    delta = check_delta(delta)
    k = p.k
    flat = uniform(k)
    if l1_distance(p, flat) <= delta:
        return SmoothedResult(flat, "flattest", delta, True)
    half = delta / 2.0
    if half == 0.0:  # covers subnormal delta whose half underflows
        v = p.values
        meta = FlattestMeta(
            upper_level=float(v[0]),
            lower_level=float(v[-1]),
            upper_count=int(np.sum(v >= v[0] - tau)),
            lower_start=k - int(np.sum(v <= v[-1] + tau)) + 1,
        )
        return SmoothedResult(p, "flattest", delta, False, meta_flattest=meta)
    upper_level, upper_count = solve_upper_level(p, half, tau=tau)
    lower_level, lower_start = solve_lower_level(p, half, tau=tau)
    if upper_level <= lower_level:
        # only reachable within ulps of the uniform clamp boundary
        return SmoothedResult(flat, "flattest", delta, True)
    vals = np.clip(p.values, lower_level, upper_level)
    meta = FlattestMeta(upper_level, lower_level, upper_count, lower_start)
    return SmoothedResult(
        Distribution(vals, p.perm), "flattest", delta, False, meta_flattest=meta
    )


def solve_upper_level(
    p: Distribution, budget: float, *, tau: float = DEFAULT_TAU
) -> tuple[float, int]:
    """Water level from above: cutting entries down to it removes `budget`.

    The removed-mass function is piecewise linear in the level with
    breakpoints at the sorted entries, so a single O(k) scan finds the
    segment: with the top m entries cut to level x the removal is
    (sum of top m) - m*x. Returns the level and the size of the leveled
    block, counting entries within tau of the level as members (they
    join at zero cost).

    The budget must be positive and at most the total mass (the removal
    when the level reaches 0, tau slack); outside that range raises
    BudgetOutOfRangeError. Callers that keep the level above 1/k stay
    well inside this domain.
    """
    v = p.values
    k = p.k
    budget = float(budget)
    cap = float(v.sum())
    if not 0.0 < budget <= cap + tau:
        raise BudgetOutOfRangeError(f"budget {budget} outside (0, {cap}]")
    prefix = np.cumsum(v)
    counts = np.arange(1.0, k + 1.0)
    levels = (prefix - budget) / counts
    # first segment whose solved level stays above the next breakpoint
    ok = np.empty(k, dtype=bool)
    np.greater_equal(levels[:-1], v[1:], out=ok[:-1])
    ok[-1] = True
    level = float(levels[np.argmax(ok)])
    return level, int(np.sum(v >= level - tau))


def solve_lower_level(
    p: Distribution, budget: float, *, tau: float = DEFAULT_TAU
) -> tuple[float, int]:
    """Water level from below: raising entries up to it adds `budget`.

    Mirror image of solve_upper_level over the smallest entries. Returns
    the level and the 1-based canonical index where the raised block
    begins; entries within tau of the level count as block members. The
    budget may not push the level past the largest entry, so the domain
    is (0, k*p_1 - 1].
    """
    v = p.values
    k = p.k
    budget = float(budget)
    cap = float(k * v[0] - v.sum())
    if not 0.0 < budget <= cap + tau:
        raise BudgetOutOfRangeError(f"budget {budget} outside (0, {cap}]")
    w = v[::-1]  # ascending
    prefix = np.cumsum(w)
    counts = np.arange(1.0, k + 1.0)
    levels = (prefix + budget) / counts
    ok = np.empty(k, dtype=bool)
    np.less_equal(levels[:-1], w[1:], out=ok[:-1])
    ok[-1] = True
    level = float(levels[np.argmax(ok)])
    block = int(np.sum(v <= level + tau))
    return level, k - block + 1


def lorenz_steepest(
    p: Distribution, delta: float, *, tau: float = DEFAULT_TAU
) -> LorenzCurve:
    """Lorenz curve of steepest(p, delta) without building the vector.

    Every prefix sum shifts up by delta/2, capped at 1; agrees pointwise
    with lorenz() of the constructed result, clamped cases included.
    """
    delta = check_delta(delta)
    cum = np.empty(p.k + 1)
    cum[0] = 0.0
    np.cumsum(p.values, out=cum[1:])
    cum[1:] = np.minimum(cum[1:] + delta / 2.0, 1.0)
    return LorenzCurve(cum)


def lorenz_flattest(
    p: Distribution, delta: float, *, tau: float = DEFAULT_TAU
) -> LorenzCurve:
    """Lorenz curve of flattest(p, delta) without building the vector.

    Straight chord of slope upper_level across the leveled top block,
    the original curve shifted down by delta/2 in the middle, and a
    chord of slope lower_level into the endpoint (1 at l = k) across
    the raised bottom block.
    """
    delta = check_delta(delta)
    k = p.k
    half = delta / 2.0
    if l1_distance(p, uniform(k)) <= delta or half == 0.0:
        return lorenz(flattest(p, delta, tau=tau).result)
    upper_level, _ = solve_upper_level(p, half, tau=tau)
    lower_level, _ = solve_lower_level(p, half, tau=tau)
    if upper_level <= lower_level:
        return lorenz(uniform(k))
    # strict counts make the three formulas exact at the block edges
    top = int(np.sum(p.values > upper_level))
    bottom = int(np.sum(p.values < lower_level))
    l = np.arange(1.0, k + 1.0)
    prefix = np.cumsum(p.values)
    cum = np.empty(k + 1)
    cum[0] = 0.0
    cum[1:] = np.select(
        [l <= top, l <= k - bottom],
        [l * upper_level, prefix - half],
        default=1.0 - (k - l) * lower_level,
    )
    return LorenzCurve(cum)
