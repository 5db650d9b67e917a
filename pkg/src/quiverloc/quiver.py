"""Finite quivers, dimension vectors and the Euler form.

Vertices and arrows are addressed by dense integer indices; labels are kept
only for input and output. Dimension vectors and arrow vectors are plain
tuples of ints indexed the same way.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Mapping, Sequence

DimVector = tuple[int, ...]
ArrowVector = tuple[int, ...]


class QuiverError(ValueError):
    """Malformed quiver or a vector that does not fit the quiver."""


@dataclass(frozen=True)
class Arrow:
    label: str
    source: int
    target: int


@dataclass(frozen=True)
class CoverData:
    """Links a finite piece of a covering quiver back to its base quiver.

    ``vertex_base[v]`` / ``vertex_residue[v]`` give the base vertex and the
    residue class of covering vertex ``v``; ``arrow_base[a]`` is the base
    arrow that covering arrow ``a`` lies over.
    """

    base: "Quiver"
    nu: ArrowVector
    vertex_base: tuple[int, ...]
    vertex_residue: tuple[tuple[int, ...], ...]
    arrow_base: tuple[int, ...]


@dataclass(frozen=True)
class Quiver:
    vertex_labels: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    cover: CoverData | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        n = len(self.vertex_labels)
        if len(set(self.vertex_labels)) != n:
            raise QuiverError("duplicate vertex labels")
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise QuiverError("duplicate arrow labels")
        for a in self.arrows:
            if not (0 <= a.source < n and 0 <= a.target < n):
                raise QuiverError(f"arrow {a.label!r} references an undeclared vertex")

    @classmethod
    def build(cls, vertices: int | Sequence[str], arrows: Iterable[Sequence]) -> "Quiver":
        """Build from a vertex count or label list and ``(src, tgt)`` or
        ``(label, src, tgt)`` tuples; endpoints may be indices or labels."""
        if isinstance(vertices, int):
            vlabels = tuple(str(i) for i in range(vertices))
        else:
            vlabels = tuple(str(v) for v in vertices)
        index = {v: i for i, v in enumerate(vlabels)}

        def resolve(x):
            if isinstance(x, int) and not isinstance(x, bool):
                return x
            if x not in index:
                raise QuiverError(f"unknown vertex {x!r}")
            return index[x]

        out = []
        for k, item in enumerate(arrows):
            if len(item) == 2:
                label, (s, t) = f"a{k}", item
            else:
                label, s, t = item
            out.append(Arrow(str(label), resolve(s), resolve(t)))
        return cls(vlabels, tuple(out))

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_labels)

    @property
    def n_arrows(self) -> int:
        return len(self.arrows)

    def source(self, a: int) -> int:
        return self.arrows[a].source

    def target(self, a: int) -> int:
        return self.arrows[a].target

    @cached_property
    def _out(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for k, a in enumerate(self.arrows):
            out[a.source].append(k)
        return tuple(tuple(x) for x in out)

    @cached_property
    def _in(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for k, a in enumerate(self.arrows):
            inc[a.target].append(k)
        return tuple(tuple(x) for x in inc)

    def out_arrows(self, i: int) -> tuple[int, ...]:
        return self._out[i]

    def in_arrows(self, i: int) -> tuple[int, ...]:
        return self._in[i]

    def vertex_index(self, label: str) -> int:
        try:
            return self.vertex_labels.index(label)
        except ValueError:
            raise QuiverError(f"unknown vertex {label!r}") from None

    def arrow_index(self, label: str) -> int:
        for k, a in enumerate(self.arrows):
            if a.label == label:
                return k
        raise QuiverError(f"unknown arrow {label!r}")

    def dimvec(self, d: Sequence[int] | Mapping[str, int]) -> DimVector:
        """Validate ``d`` (sequence in vertex order, or label -> int map)."""
        if isinstance(d, Mapping):
            vec = [0] * self.n_vertices
            for k, v in d.items():
                vec[self.vertex_index(k)] = int(v)
        else:
            vec = [int(x) for x in d]
            if len(vec) != self.n_vertices:
                raise QuiverError(
                    f"dimension vector has {len(vec)} entries, quiver has {self.n_vertices} vertices"
                )
        if any(x < 0 for x in vec):
            raise QuiverError("dimension vector entries must be nonnegative")
        return tuple(vec)

    def __str__(self):
        arrows = ", ".join(
            f"{a.label}:{self.vertex_labels[a.source]}->{self.vertex_labels[a.target]}"
            for a in self.arrows
        )
        return f"Quiver({', '.join(self.vertex_labels)} | {arrows})"


def degree(v: Sequence[int]) -> int:
    return sum(v)


def is_indivisible(nu: Sequence[int]) -> bool:
    return gcd(*nu) == 1 if len(nu) else False


def primitive_part(w: Sequence[int]) -> ArrowVector:
    g = gcd(*w)
    if g == 0:
        raise ValueError("zero vector has no primitive part")
    return tuple(x // g for x in w)


def euler_form(Q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    if len(d) != Q.n_vertices or len(e) != Q.n_vertices:
        raise QuiverError("dimension vectors do not match the quiver's vertex set")
    value = sum(x * y for x, y in zip(d, e))
    for a in Q.arrows:
        value -= d[a.source] * e[a.target]
    return value


def unit(Q: Quiver, i: int) -> DimVector:
    return tuple(int(k == i) for k in range(Q.n_vertices))


def full_subquiver(Q: Quiver, keep: Iterable[int]) -> Quiver:
    keep = sorted(set(keep))
    new = {v: k for k, v in enumerate(keep)}
    arrows = tuple(
        Arrow(a.label, new[a.source], new[a.target])
        for a in Q.arrows
        if a.source in new and a.target in new
    )
    return Quiver(tuple(Q.vertex_labels[v] for v in keep), arrows)


def support_vertices(d: Sequence[int]) -> list[int]:
    return [i for i, x in enumerate(d) if x > 0]


def support(Q: Quiver, d: Sequence[int]) -> Quiver:
    """Full subquiver on the vertices where ``d`` is nonzero."""
    if len(d) != Q.n_vertices:
        raise QuiverError("dimension vector does not match the quiver")
    return full_subquiver(Q, support_vertices(d))


def restrict(Q: Quiver, d: Sequence[int]) -> tuple[Quiver, DimVector]:
    """``support(Q, d)`` together with ``d`` restricted to it."""
    keep = support_vertices(d)
    return full_subquiver(Q, keep), tuple(d[i] for i in keep)


def _reachable(Q: Quiver, start: int, forward: bool = True) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        nbrs = (Q.target(a) for a in Q.out_arrows(v)) if forward else (Q.source(a) for a in Q.in_arrows(v))
        for w in nbrs:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_strongly_connected(Q: Quiver) -> bool:
    n = Q.n_vertices
    if n == 0:
        return False
    return len(_reachable(Q, 0)) == n and len(_reachable(Q, 0, forward=False)) == n


def is_connected(Q: Quiver) -> bool:
    n = Q.n_vertices
    if n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for a in Q.out_arrows(v) + Q.in_arrows(v):
            for w in (Q.source(a), Q.target(a)):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return len(seen) == n


def is_single_cycle(Q: Quiver) -> bool:
    if Q.n_vertices == 0:
        return False
    if any(len(Q.out_arrows(i)) != 1 or len(Q.in_arrows(i)) != 1 for i in range(Q.n_vertices)):
        return False
    return is_connected(Q)


def canonical_form(Q: Quiver, d: Sequence[int] | None = None,
                   arrow_colors: Sequence | None = None) -> tuple:
    """Isomorphism-invariant encoding of ``Q`` (optionally decorated).

    Minimum over vertex relabelings of the sorted arrow list; only
    permutations preserving a cheap vertex invariant are tried, which is
    plenty at the sizes this package works with.
    """
    n = Q.n_vertices
    d = tuple(d) if d is not None else (0,) * n
    colors = tuple(arrow_colors) if arrow_colors is not None else (0,) * Q.n_arrows

    def invariant(i):
        outs = sorted((colors[a], Q.target(a) == i) for a in Q.out_arrows(i))
        ins = sorted((colors[a], Q.source(a) == i) for a in Q.in_arrows(i))
        return (d[i], tuple(outs), tuple(ins))

    order = sorted(range(n), key=invariant)
    groups = [list(g) for _, g in itertools.groupby(order, key=invariant)]
    best = None
    for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
        perm = [v for block in choice for v in block]
        pos = {v: k for k, v in enumerate(perm)}
        enc = tuple(sorted((pos[a.source], pos[a.target], colors[k]) for k, a in enumerate(Q.arrows)))
        if best is None or enc < best:
            best = enc
    head = tuple(invariant(v)[0] for v in order)
    return (n, head, best)


# ---------------------------------------------------------------------------
# Named quivers used throughout the docs and tests.

def loop_quiver(m: int) -> Quiver:
    """One vertex with ``m`` loops labelled a, b, c, ..."""
    names = "abcdefghijklmnopqrstuvwxyz"
    return Quiver.build(["*"], [(names[k], 0, 0) for k in range(m)])


def cyclic_quiver(n: int) -> Quiver:
    return Quiver.build(n, [(f"a{k}", k, (k + 1) % n) for k in range(n)])


def kronecker_quiver() -> Quiver:
    return Quiver.build(["i", "j"], [("a", "i", "j"), ("b", "i", "j")])


def double_chain_quiver() -> Quiver:
    """i <-> j <-> k with arrows alpha: i->j, delta: j->i, beta: j->k, gamma: k->j."""
    return Quiver.build(
        ["i", "j", "k"],
        [("alpha", "i", "j"), ("delta", "j", "i"), ("beta", "j", "k"), ("gamma", "k", "j")],
    )
