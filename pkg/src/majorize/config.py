"""Shared tolerance and output configuration."""

from __future__ import annotations

from dataclasses import dataclass

# Comparison tolerance: prefix-dominance checks, level-solver breakpoints,
# witness verification. Strict inequalities become ">= -tau" to absorb
# float noise.
DEFAULT_TAU = 1e-9

# Normalization acceptance: how far an input sum may sit from 1, and how
# negative an entry may be before it is an error rather than clamped noise.
DEFAULT_TAU_NORM = 1e-7

POLICIES = ("reject", "renormalize")


@dataclass(frozen=True)
class Config:
    """Run-wide knobs shared by the CLI and the file readers.

    `tau` drives every ordering comparison, `tau_norm` the acceptance of an
    input vector as normalized; `tau` must not exceed `tau_norm`. `base` is
    the logarithm base for entropies (2 for bits, e for nats).
    """

    tau: float = DEFAULT_TAU
    tau_norm: float = DEFAULT_TAU_NORM
    base: float = 2.0
    input_policy: str = "reject"

    def __post_init__(self) -> None:
        if not (self.tau > 0.0 and self.tau_norm > 0.0):
            raise ValueError("tolerances must be positive")
        if self.tau > self.tau_norm:
            raise ValueError("tau must not exceed tau_norm")
        if self.base <= 1.0:
            raise ValueError("log base must be > 1")
        if self.input_policy not in POLICIES:
            raise ValueError(f"unknown input policy: {self.input_policy!r}")
