"""Cycles in a quiver and their classes up to rotation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .quiver import ArrowVector, DimVector, Quiver, QuiverError


@dataclass(frozen=True)
class Cycle:
    quiver: Quiver
    arrows: tuple[int, ...]

    def __post_init__(self):
        Q, seq = self.quiver, self.arrows
        if not seq:
            raise QuiverError("empty cycles are not supported")
        for k, a in enumerate(seq):
            if not 0 <= a < Q.n_arrows:
                raise QuiverError(f"arrow index {a} out of range")
            nxt = seq[(k + 1) % len(seq)]
            if Q.target(a) != Q.source(nxt):
                raise QuiverError(
                    f"arrows {Q.arrows[a].label!r} and {Q.arrows[nxt].label!r} do not compose"
                )

    @classmethod
    def from_labels(cls, Q: Quiver, labels: Iterable[str]) -> "Cycle":
        return cls(Q, tuple(Q.arrow_index(x) for x in labels))

    @property
    def base(self) -> int:
        return self.quiver.source(self.arrows[0])

    def __len__(self):
        return len(self.arrows)

    @property
    def weight(self) -> ArrowVector:
        return weight(self.quiver, self.arrows)

    @property
    def dim(self) -> DimVector:
        return dimension_vector(self.quiver, self.arrows)

    def rotate(self, k: int) -> "Cycle":
        k %= len(self.arrows)
        return Cycle(self.quiver, self.arrows[k:] + self.arrows[:k])


@dataclass(frozen=True, order=True)
class CycleClass:
    """Rotation class of a cycle, stored as its least rotation."""

    arrows: tuple[int, ...]
    period: int

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def primitive(self) -> bool:
        return self.period == len(self.arrows)

    def sort_key(self):
        return (len(self.arrows), self.arrows)


def weight(Q: Quiver, arrows: Sequence[int]) -> ArrowVector:
    w = [0] * Q.n_arrows
    for a in arrows:
        w[a] += 1
    return tuple(w)


def dimension_vector(Q: Quiver, arrows: Sequence[int]) -> DimVector:
    d = [0] * Q.n_vertices
    for a in arrows:
        d[Q.source(a)] += 1
    return tuple(d)


def least_rotation(seq: Sequence) -> int:
    """Booth's algorithm: start index of the lexicographically least rotation."""
    s = list(seq) * 2
    n = len(s)
    f = [-1] * n
    k = 0
    for j in range(1, n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def period(seq: Sequence) -> int:
    """Smallest p > 0 with seq invariant under rotation by p."""
    n = len(seq)
    fail = [0] * (n + 1)
    fail[0] = -1
    k = -1
    for i in range(n):
        while k >= 0 and seq[k] != seq[i]:
            k = fail[k]
        k += 1
        fail[i + 1] = k
    p = n - fail[n]
    return p if n % p == 0 else n


def canonicalize(c: Cycle | Sequence[int]) -> CycleClass:
    seq = tuple(c.arrows if isinstance(c, Cycle) else c)
    k = least_rotation(seq)
    rep = seq[k:] + seq[:k]
    return CycleClass(rep, period(rep))


def _walk(Q: Quiver, base: int, budget: list[int], close_anywhere: bool, out: set):
    """DFS over closed walks at ``base`` spending per-vertex visit budgets."""
    path: list[int] = []

    def step(v: int):
        done = not any(budget)
        for a in Q.out_arrows(v):
            t = Q.target(a)
            path.append(a)
            if t == base and (close_anywhere or done):
                out.add(canonicalize(path))
            if budget[t] > 0:
                budget[t] -= 1
                step(t)
                budget[t] += 1
            path.pop()

    budget[base] -= 1
    step(base)
    budget[base] += 1


def enumerate_cycle_classes(Q: Quiver, d: Sequence[int]) -> list[CycleClass]:
    """All rotation classes of cycles with dimension vector exactly ``d``."""
    d = Q.dimvec(d)
    supp = [i for i, x in enumerate(d) if x]
    if not supp:
        return []
    found: set[CycleClass] = set()
    _walk(Q, supp[0], list(d), False, found)
    return sorted(found, key=CycleClass.sort_key)


def enumerate_cycles_bounded(Q: Quiver, dmax: Sequence[int]) -> list[CycleClass]:
    """All rotation classes of cycles whose dimension vector is <= ``dmax``."""
    dmax = Q.dimvec(dmax)
    found: set[CycleClass] = set()
    for b in range(Q.n_vertices):
        if dmax[b] > 0:
            _walk(Q, b, list(dmax), True, found)
    return sorted(found, key=CycleClass.sort_key)


def enumerate_cycles_by_length(Q: Quiver, max_length: int) -> list[CycleClass]:
    """All rotation classes of cycles with 1 <= length <= ``max_length``."""
    found: set[CycleClass] = set()
    path: list[int] = []

    def step(base: int, v: int):
        for a in Q.out_arrows(v):
            path.append(a)
            t = Q.target(a)
            if t == base:
                found.add(canonicalize(path))
            if len(path) < max_length:
                step(base, t)
            path.pop()

    for b in range(Q.n_vertices):
        step(b, b)
    return sorted(found, key=CycleClass.sort_key)


def count_primitive_classes(Q: Quiver, d: Sequence[int]) -> int:
    return sum(1 for c in enumerate_cycle_classes(Q, d) if c.primitive)


def class_dim(Q: Quiver, c: CycleClass) -> DimVector:
    return dimension_vector(Q, c.arrows)


def class_weight(Q: Quiver, c: CycleClass) -> ArrowVector:
    return weight(Q, c.arrows)


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for positive integers")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def necklace_count(m: int, d: int) -> int:
    """Number of primitive necklaces of length ``d`` over ``m`` colours."""
    if m < 1 or d < 1:
        raise ValueError("necklace_count needs m >= 1 and d >= 1")
    total = sum(mobius(d // r) * m**r for r in range(1, d + 1) if d % r == 0)
    q, rem = divmod(total, d)
    assert rem == 0
    return q
