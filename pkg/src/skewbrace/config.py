"""Run settings shared by the command line and the experiment scripts."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class NumericConfig:
    samples: int = 1000
    tol: float = 1e-8          # residual tolerance for sampled identities
    seed: int = 42
    max_den: int = 64          # largest denominator accepted when rationalising
    rational_tol: float = 1e-6  # distance allowed between a derivative and its rational value


@dataclass(frozen=True)
class FiniteConfig:
    max_order: int = 60


NUMERIC = NumericConfig()
FINITE = FiniteConfig()
