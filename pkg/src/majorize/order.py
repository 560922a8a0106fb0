"""Majorization predicates, the majorization distance, and transfer plans."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_TAU
from .distribution import ArrayLike, Distribution
from .errors import DimensionMismatchError, EmptyInputError, NotMajorizedError


def _sorted_desc(values: ArrayLike) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise EmptyInputError("expected a nonempty vector")
    return -np.sort(-arr)


def weakly_majorizes(p: ArrayLike, q: ArrayLike, *, tau: float = DEFAULT_TAU) -> bool:
    """Prefix-sum dominance of sorted p over sorted q, up to tau per prefix.

    Works on raw vectors (they are sorted here) and does not require the
    totals to match, so it applies to subprobability vectors too.
    """
    ps = _sorted_desc(p)
    qs = _sorted_desc(q)
    if ps.size != qs.size:
        raise DimensionMismatchError(f"k mismatch: {ps.size} vs {qs.size}")
    return bool(np.all(np.cumsum(ps) >= np.cumsum(qs) - tau))


def majorizes(p: Distribution, q: Distribution, *, tau: float = DEFAULT_TAU) -> bool:
    """True when every prefix sum of p dominates the same prefix of q.

    Both arguments are already canonical, so this is a single cumsum
    comparison; the final prefixes agree by normalization.
    """
    if p.k != q.k:
        raise DimensionMismatchError(f"k mismatch: {p.k} vs {q.k}")
    return bool(np.all(np.cumsum(p.values) >= np.cumsum(q.values) - tau))


def first_failing_prefix(
    p: Distribution, q: Distribution, *, tau: float = DEFAULT_TAU
) -> int | None:
    """Smallest prefix length (1-based) where dominance of p over q fails.

    Returns None when p majorizes q at tolerance tau.
    """
    if p.k != q.k:
        raise DimensionMismatchError(f"k mismatch: {p.k} vs {q.k}")
    bad = np.cumsum(p.values) < np.cumsum(q.values) - tau
    if not bad.any():
        return None
    return int(np.argmax(bad)) + 1


def majorization_distance(p: Distribution, q: Distribution) -> float:
    """Least delta such that some delta-perturbation of p majorizes q.

    Equals twice the worst prefix-sum deficit of p against q, clamped at
    zero; it is also the least delta such that p majorizes some
    delta-perturbation of q, and it never exceeds 2.
    """
    if p.k != q.k:
        raise DimensionMismatchError(f"k mismatch: {p.k} vs {q.k}")
    deficit = float(np.max(np.cumsum(q.values - p.values)))
    return max(0.0, 2.0 * deficit)


@dataclass(frozen=True)
class TTransform:
    """One Robin Hood step: move mass t * (c[i] - c[j]) from entry i to j.

    Equivalent to replacing (c[i], c[j]) with their t-interpolation toward
    the common mean; t lies in [0, 1/2] so the pair keeps its order.
    """

    i: int
    j: int
    t: float

    def __post_init__(self) -> None:
        if self.i == self.j:
            raise ValueError("transfer endpoints must differ")
        if not (0.0 <= self.t <= 1.0):
            raise ValueError(f"t must lie in [0, 1], got {self.t}")

    def apply(self, values: np.ndarray) -> np.ndarray:
        out = values.copy()
        ci, cj = out[self.i], out[self.j]
        out[self.i] = (1.0 - self.t) * ci + self.t * cj
        out[self.j] = self.t * ci + (1.0 - self.t) * cj
        return out

    def matrix(self, k: int) -> np.ndarray:
        m = np.eye(k)
        m[self.i, self.i] = m[self.j, self.j] = 1.0 - self.t
        m[self.i, self.j] = m[self.j, self.i] = self.t
        return m


@dataclass(frozen=True)
class TransferPlan:
    """A sequence of T-transforms carrying p onto q, with their product.

    The product matrix is doubly stochastic; validation allows slack 1e-9
    on row and column sums.
    """

    steps: tuple[TTransform, ...]
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        m = np.ascontiguousarray(self.matrix, dtype=np.float64)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("matrix must be square")
        if m.size == 0:
            raise EmptyInputError("matrix must be nonempty")
        if float(m.min()) < -1e-9:
            raise ValueError("matrix entries must be nonnegative")
        if np.abs(m.sum(axis=0) - 1.0).max() > 1e-9 or (
            np.abs(m.sum(axis=1) - 1.0).max() > 1e-9
        ):
            raise ValueError("matrix must be doubly stochastic")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "steps", tuple(self.steps))

    @property
    def k(self) -> int:
        return self.matrix.shape[0]

    def apply(self, values: np.ndarray) -> np.ndarray:
        return self.matrix @ np.asarray(values, dtype=np.float64)


def transfer_plan(
    p: Distribution, q: Distribution, *, tau: float = DEFAULT_TAU
) -> TransferPlan:
    """Construct at most k-1 T-transforms carrying p onto q.

    Classic Robin Hood argument: while the current vector differs from q,
    transfer mass from the first coordinate holding surplus to the first
    holding deficit, sized to finish one of the two exactly. Prefix
    dominance puts the first surplus before the first deficit, each step
    fixes at least one coordinate for good, and finished coordinates are
    never touched again, which bounds the step count by k - 1.

    Raises NotMajorizedError unless p majorizes q at tolerance tau.
    """
    if p.k != q.k:
        raise DimensionMismatchError(f"k mismatch: {p.k} vs {q.k}")
    if not majorizes(p, q, tau=tau):
        raise NotMajorizedError("p does not majorize q")

    k = p.k
    current = p.values.copy()
    target = q.values
    steps: list[TTransform] = []
    matrix = np.eye(k)
    # residual differences below this are float noise, not real mass
    eps = 1e-12

    for _ in range(k - 1):
        diff = current - target
        surplus = np.flatnonzero(diff > eps)
        deficit = np.flatnonzero(diff < -eps)
        if surplus.size == 0 or deficit.size == 0:
            break
        i = int(surplus[0])
        j = int(deficit[0])
        if j < i:
            # dominance puts every deficit after the first surplus
            raise NotMajorizedError("deficit precedes surplus; p !>= q")
        give = diff[i]
        need = -diff[j]
        amount = min(give, need)
        gap = current[i] - current[j]
        # gap >= amount > 0: prefix dominance keeps donor above recipient
        t = amount / gap
        step = TTransform(i, j, float(min(t, 0.5)))
        steps.append(step)
        current = step.apply(current)
        # pin the finished coordinate to kill accumulated rounding
        if give <= need:
            current[i] = target[i]
        if need <= give:
            current[j] = target[j]
        matrix = step.matrix(k) @ matrix

    if float(np.abs(current - target).max()) > 1e-9:
        raise NotMajorizedError("transfer plan failed to reach the target")
    return TransferPlan(tuple(steps), matrix)
