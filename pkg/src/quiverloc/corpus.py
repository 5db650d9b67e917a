"""Small quivers and dimension vectors used for exhaustive checks."""

from __future__ import annotations

import itertools
from typing import Iterator

from .quiver import Quiver, canonical_form, loop_quiver


def small_quivers(max_vertices: int = 3, max_arrows: int = 4) -> list[Quiver]:
    """One quiver per isomorphism class with 1..max_vertices vertices and <= max_arrows arrows."""
    out = []
    for n in range(1, max_vertices + 1):
        pairs = [(i, j) for i in range(n) for j in range(n)]
        seen = set()
        for k in range(max_arrows + 1):
            for arrows in itertools.combinations_with_replacement(pairs, k):
                Q = Quiver.build(n, arrows)
                key = canonical_form(Q)
                if key not in seen:
                    seen.add(key)
                    out.append(Q)
    return out


def dimension_vectors(n: int, max_degree: int, min_degree: int = 1) -> Iterator[tuple[int, ...]]:
    """All d in N^n with min_degree <= |d| <= max_degree."""
    for total in range(min_degree, max_degree + 1):
        for bars in itertools.combinations(range(total + n - 1), n - 1):
            d, prev = [], -1
            for b in bars:
                d.append(b - prev - 1)
                prev = b
            d.append(total + n - 2 - prev)
            yield tuple(d)


def main_theorem_corpus() -> Iterator[tuple[Quiver, tuple[int, ...]]]:
    """(Q, d) pairs: small quivers with |d| <= 5, then loop quivers m <= 3 with d <= 6."""
    for Q in small_quivers(3, 4):
        for d in dimension_vectors(Q.n_vertices, 5):
            yield Q, d
    for m in (1, 2, 3):
        for d in range(1, 7):
            yield loop_quiver(m), (d,)
