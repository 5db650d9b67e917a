"""Graded pieces of HH_0 of a path algebra and the power maps on cycle classes."""

from __future__ import annotations

from typing import Sequence

from .cycles import CycleClass, canonicalize, enumerate_cycle_classes


def hh0_graded_dim(Q, d: Sequence[int]) -> int:
    return len(enumerate_cycle_classes(Q, d))


def hh0_primitive_dim(Q, d: Sequence[int]) -> int:
    return sum(1 for c in enumerate_cycle_classes(Q, d) if c.primitive)


def power_map(c: CycleClass, p: int) -> CycleClass:
    if p < 1:
        raise ValueError("power must be positive")
    return canonicalize(c.arrows * p)


def primitive_root(c: CycleClass) -> tuple[CycleClass, int]:
    """The unique primitive class c' and exponent p with power_map(c', p) == c."""
    root = canonicalize(c.arrows[: c.period])
    return root, c.length // c.period
