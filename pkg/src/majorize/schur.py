"""Order-monotone functionals and their exact extrema over l1 balls.

A Schur-convex function grows along the majorization order, a
Schur-concave one shrinks; either way its maximum and minimum over the
ball of radius delta around p are attained at the two extremal
perturbations, so smooth_max/smooth_min are single evaluations rather
than searches. A sampling oracle is included for verification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .config import DEFAULT_TAU
from .distribution import (
    Distribution,
    SeedLike,
    check_delta,
    sample_delta_ball,
    sample_majorized_pair,
)
from .errors import AlphaOutOfRangeError, NegativeAlphaError, UnknownFunctionError
from .smoothing import flattest, steepest

SCHUR_CONVEX = "schur_convex"
SCHUR_CONCAVE = "schur_concave"


@dataclass(frozen=True)
class SchurFunction:
    """A named functional with its declared monotonicity direction.

    The direction is trusted metadata, validated statistically by
    direction_violations in the test suite, not proven here.
    """

    name: str
    direction: str
    fn: Callable[[Distribution], float]

    def __post_init__(self) -> None:
        if self.direction not in (SCHUR_CONVEX, SCHUR_CONCAVE):
            raise ValueError(f"unknown direction: {self.direction!r}")

    def __call__(self, p: Distribution) -> float:
        return self.fn(p)


def _check_base(base: float) -> float:
    base = float(base)
    if base <= 1.0:
        raise ValueError(f"log base must exceed 1, got {base}")
    return base


def shannon(base: float = 2.0) -> SchurFunction:
    """Shannon entropy; zero entries contribute nothing (0 log 0 = 0)."""
    log_base = math.log(_check_base(base))

    def fn(p: Distribution) -> float:
        pos = p.values[p.values > 0.0]
        return float(-(pos * np.log(pos)).sum() / log_base)

    return SchurFunction("shannon", SCHUR_CONCAVE, fn)


def renyi_entropy(
    alpha: float, base: float = 2.0, *, support_tau: float = DEFAULT_TAU
) -> SchurFunction:
    """The one-parameter entropy family, Schur-concave for every alpha.

    alpha=0 counts the support (entries above support_tau, which only
    guards float noise since tail cuts produce exact zeros); alpha=1 and
    anything within 1e-6 of it routes to the Shannon formula to avoid
    the 1/(1-alpha) blowup; alpha=inf is -log of the largest entry.
    """
    alpha = float(alpha)
    if alpha < 0.0 or math.isnan(alpha):
        raise NegativeAlphaError(f"alpha must be >= 0, got {alpha}")
    log_base = math.log(_check_base(base))
    name = "renyi:inf" if math.isinf(alpha) else f"renyi:{alpha:g}"

    if math.isinf(alpha):

        def fn(p: Distribution) -> float:
            return float(-math.log(p.values[0]) / log_base)

    elif alpha == 0.0:

        def fn(p: Distribution) -> float:
            return float(math.log(int(np.sum(p.values > support_tau))) / log_base)

    elif abs(alpha - 1.0) <= 1e-6:
        return SchurFunction(name, SCHUR_CONCAVE, shannon(base).fn)

    else:

        def fn(p: Distribution) -> float:
            power_sum = float(np.power(p.values, alpha).sum())
            return math.log(power_sum) / (1.0 - alpha) / log_base

    return SchurFunction(name, SCHUR_CONCAVE, fn)


def sum_of_powers(alpha: float) -> SchurFunction:
    """p -> sum of p_i^alpha, Schur-convex for alpha > 1."""
    alpha = float(alpha)
    if not alpha > 1.0:
        raise AlphaOutOfRangeError(f"alpha must exceed 1, got {alpha}")

    def fn(p: Distribution) -> float:
        return float(np.power(p.values, alpha).sum())

    return SchurFunction(f"sum_powers:{alpha:g}", SCHUR_CONVEX, fn)


def _extremal_argument(direction: str, mode: str) -> str:
    # growing functions peak at the concentrated end, shrinking ones at
    # the flat end; minima swap the two
    if direction == SCHUR_CONVEX:
        return "steepest" if mode == "max" else "flattest"
    return "flattest" if mode == "max" else "steepest"


def extremal_point(
    f: SchurFunction, p: Distribution, delta: float, mode: str, *, tau: float = DEFAULT_TAU
) -> tuple[str, Distribution]:
    """The ball element where f attains its `mode` extremum, with its kind."""
    if mode not in ("max", "min"):
        raise ValueError(f"mode must be 'max' or 'min', got {mode!r}")
    kind = _extremal_argument(f.direction, mode)
    build = steepest if kind == "steepest" else flattest
    return kind, build(p, delta, tau=tau).result


def smooth_max(
    f: SchurFunction, p: Distribution, delta: float, *, tau: float = DEFAULT_TAU
) -> float:
    """Exact maximum of f over distributions within l1 distance delta of p."""
    check_delta(delta)
    return f(extremal_point(f, p, delta, "max", tau=tau)[1])


def smooth_min(
    f: SchurFunction, p: Distribution, delta: float, *, tau: float = DEFAULT_TAU
) -> float:
    """Exact minimum of f over distributions within l1 distance delta of p."""
    check_delta(delta)
    return f(extremal_point(f, p, delta, "min", tau=tau)[1])


def brute_force_extremum(
    f: SchurFunction,
    p: Distribution,
    delta: float,
    n: int,
    seed: SeedLike,
    mode: str,
    *,
    tau: float = DEFAULT_TAU,
) -> float:
    """Extremum of f over n ball samples plus both extremal perturbations.

    Independent check of smooth_max/smooth_min: sampling alone can only
    fall short of the true extremum, but the extremal points are in the
    candidate set, so the result matches the closed form exactly.
    """
    delta = check_delta(delta)
    if n < 1:
        raise ValueError(f"need at least one sample, got {n}")
    if mode not in ("max", "min"):
        raise ValueError(f"mode must be 'max' or 'min', got {mode!r}")
    rng = np.random.default_rng(seed) if isinstance(seed, int) else seed
    values = [f(sample_delta_ball(p, delta, rng)) for _ in range(n)]
    values.append(f(steepest(p, delta, tau=tau).result))
    values.append(f(flattest(p, delta, tau=tau).result))
    return max(values) if mode == "max" else min(values)


def direction_violations(
    f: SchurFunction,
    trials: int,
    seed: SeedLike,
    *,
    tau: float = DEFAULT_TAU,
    k_range: tuple[int, int] = (2, 8),
) -> int:
    """Count declared-direction failures on random ordered pairs.

    Draws p majorizing q and checks f moves the declared way (slack tau);
    a nonzero count means the declared direction is wrong.
    """
    rng = np.random.default_rng(seed) if isinstance(seed, int) else seed
    lo, hi = k_range
    bad = 0
    for _ in range(trials):
        k = int(rng.integers(lo, hi + 1))
        p, q = sample_majorized_pair(k, rng)
        fp, fq = f(p), f(q)
        if f.direction == SCHUR_CONVEX:
            bad += fp < fq - tau
        else:
            bad += fp > fq + tau
    return bad


def parse_function_spec(spec: str, base: float = 2.0) -> SchurFunction:
    """Build a registered function from a CLI spec string.

    Accepted forms: "shannon", "renyi:<alpha>" (with "inf" allowed),
    "sum_powers:<alpha>".
    """
    spec = spec.strip()
    if spec == "shannon":
        return shannon(base)
    head, sep, arg = spec.partition(":")
    if not sep:
        raise UnknownFunctionError(f"unknown function: {spec!r}")
    try:
        alpha = math.inf if arg.lower() in ("inf", "infinity") else float(arg)
    except ValueError:
        raise UnknownFunctionError(f"bad alpha in function spec: {spec!r}") from None
    if head == "renyi":
        return renyi_entropy(alpha, base)
    if head == "sum_powers":
        return sum_of_powers(alpha)
    raise UnknownFunctionError(f"unknown function: {spec!r}")


def default_functions(base: float = 2.0) -> tuple[SchurFunction, ...]:
    """The stock registry: Shannon, a spread of Renyi orders, one convex."""
    return (
        shannon(base),
        renyi_entropy(0.0, base),
        renyi_entropy(0.5, base),
        renyi_entropy(2.0, base),
        renyi_entropy(math.inf, base),
        sum_of_powers(2.0),
    )
