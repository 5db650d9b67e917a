"""Quiver representations with exact matrices.

A representation stores, for every arrow ``a: i -> j``, a ``d_j x d_i``
matrix over a fixed field (rationals or F_p). Nothing here uses floating
point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .cycles import Cycle, CycleClass
from .linalg import QQ, Field, PrimeField, inverse, matmul, rank, row_space, trace
from .quiver import Quiver, QuiverError

BRUTE_FORCE_LIMIT = 2**20


@dataclass(frozen=True, eq=False)
class Representation:
    quiver: Quiver
    dim: tuple[int, ...]
    field: Field
    maps: tuple[np.ndarray, ...]

    def __post_init__(self):
        Q = self.quiver
        if len(self.dim) != Q.n_vertices:
            raise QuiverError("dimension vector does not match the quiver")
        if len(self.maps) != Q.n_arrows:
            raise QuiverError("need exactly one matrix per arrow")
        for a, M in zip(Q.arrows, self.maps):
            want = (self.dim[a.target], self.dim[a.source])
            if M.shape != want:
                raise QuiverError(f"matrix for {a.label!r} has shape {M.shape}, expected {want}")

    @classmethod
    def zero(cls, Q: Quiver, d: Sequence[int], field: Field = QQ) -> "Representation":
        d = Q.dimvec(d)
        return cls(Q, d, field, tuple(field.zeros(d[a.target], d[a.source]) for a in Q.arrows))

    @classmethod
    def from_matrices(cls, Q: Quiver, d: Sequence[int], matrices: Mapping, field: Field = QQ) -> "Representation":
        """Matrices keyed by arrow label or index; missing arrows are zero."""
        d = Q.dimvec(d)
        maps = []
        for k, a in enumerate(Q.arrows):
            data = matrices.get(a.label, matrices.get(k))
            shape = (d[a.target], d[a.source])
            maps.append(field.zeros(*shape) if data is None else field.array(data, shape))
        return cls(Q, d, field, tuple(maps))

    @property
    def total_dim(self) -> int:
        return sum(self.dim)

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.quiver == other.quiver
            and self.dim == other.dim
            and self.field == other.field
            and all(np.array_equal(A, B) for A, B in zip(self.maps, other.maps))
        )

    __hash__ = None

    def direct_sum(self, other: "Representation") -> "Representation":
        if self.quiver != other.quiver or self.field != other.field:
            raise QuiverError("direct sum needs the same quiver and field")
        F = self.field
        maps = []
        for A, B in zip(self.maps, other.maps):
            M = F.zeros(A.shape[0] + B.shape[0], A.shape[1] + B.shape[1])
            M[: A.shape[0], : A.shape[1]] = A
            M[A.shape[0]:, A.shape[1]:] = B
            maps.append(M)
        dim = tuple(x + y for x, y in zip(self.dim, other.dim))
        return Representation(self.quiver, dim, F, tuple(maps))


def _arrows_of(c) -> tuple[int, ...]:
    if isinstance(c, (Cycle, CycleClass)):
        return c.arrows
    return tuple(c)


def string_rep(Q: Quiver, c, field: Field = QQ) -> Representation:
    """The 0/1 representation reading off a cycle: b_k -> b_{k+1} along the k-th arrow."""
    arrows = Cycle(Q, _arrows_of(c)).arrows
    s = len(arrows)
    visits = [Q.source(a) for a in arrows]
    pos = {}
    counts = [0] * Q.n_vertices
    for k, v in enumerate(visits):
        pos[k] = counts[v]
        counts[v] += 1
    maps = [field.zeros(counts[a.target], counts[a.source]) for a in Q.arrows]
    for k, a in enumerate(arrows):
        maps[a][pos[(k + 1) % s], pos[k]] = field.scalar(1)
    return Representation(Q, tuple(counts), field, tuple(maps))


def path_matrix(X: Representation, arrows: Sequence[int]) -> np.ndarray:
    """X_{a_s} ... X_{a_1} for a path a_1, ..., a_s."""
    Q, F = X.quiver, X.field
    v = Q.source(arrows[0])
    P = F.eye(X.dim[v])
    for a in arrows:
        if Q.source(a) != v:
            raise QuiverError("arrows do not form a path")
        P = matmul(F, X.maps[a], P)
        v = Q.target(a)
    return P


def trace_along_cycle(X: Representation, c):
    arrows = _arrows_of(c)
    Q = X.quiver
    if not arrows or Q.target(arrows[-1]) != Q.source(arrows[0]):
        raise QuiverError("not a cycle")
    return trace(X.field, path_matrix(X, arrows))


def base_change(X: Representation, g: Sequence[np.ndarray]) -> Representation:
    """(g_j X_a g_i^{-1})_a for per-vertex invertible g."""
    F, Q = X.field, X.quiver
    g = [F.array(m, (X.dim[i], X.dim[i])) for i, m in enumerate(g)]
    ginv = [inverse(F, m) for m in g]
    maps = tuple(
        matmul(F, matmul(F, g[a.target], M), ginv[a.source]) for a, M in zip(Q.arrows, X.maps)
    )
    return Representation(Q, X.dim, F, maps)


def torus_rescale(X: Representation, t: Sequence) -> Representation:
    F = X.field
    if len(t) != X.quiver.n_arrows:
        raise QuiverError("need one scalar per arrow")
    t = [F.scalar(x) for x in t]
    if any(x == 0 for x in t):
        raise ValueError("torus scalars must be nonzero")
    return Representation(X.quiver, X.dim, F, tuple(F.reduce(M * x) for M, x in zip(X.maps, t)))


def _span_cols(F: Field, cols: np.ndarray) -> np.ndarray:
    """Echelon basis (as columns) of the column span."""
    if cols.shape[1] == 0:
        return cols
    return row_space(F, cols.T).T


def is_nilpotent(X: Representation) -> bool:
    """Does the descending chain U_j <- sum of X_a U_i reach zero within |d| steps?"""
    F, Q = X.field, X.quiver
    U = [F.eye(n) for n in X.dim]
    for _ in range(X.total_dim + 1):
        if all(u.shape[1] == 0 for u in U):
            return True
        nxt = []
        for j in range(Q.n_vertices):
            images = [matmul(F, X.maps[a], U[Q.source(a)]) for a in Q.in_arrows(j)]
            cols = np.concatenate(images, axis=1) if images else F.zeros(X.dim[j], 0)
            nxt.append(_span_cols(F, cols))
        U = nxt
    return False


def traces_vanish_bounded(X: Representation, max_length: int | None = None) -> bool:
    """Do all traces along cycles of length <= |d|^2 + 1 vanish?

    Works with spans of path products between each pair of vertices, so the
    cost is polynomial in the bound rather than exponential.
    """
    if X.field.characteristic != 0:
        raise ValueError("characteristic-zero test only")
    F, Q = X.field, X.quiver
    L = X.total_dim**2 + 1 if max_length is None else max_length
    n = Q.n_vertices
    # spans[i][j]: list of d_j x d_i matrices spanning the products of paths i -> j
    spans = [[[] for _ in range(n)] for _ in range(n)]
    for k, a in enumerate(Q.arrows):
        spans[a.source][a.target].append(X.maps[k])
    spans = [[_basis(F, ms, X.dim[j], X.dim[i]) for j, ms in enumerate(row)] for i, row in enumerate(spans)]
    for _ in range(L):
        for i in range(n):
            if any(trace(F, M) != 0 for M in spans[i][i]):
                return False
        if all(not spans[i][j] for i in range(n) for j in range(n)):
            return True
        grown = [[[] for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for M in spans[i][j]:
                    for a in Q.out_arrows(j):
                        grown[i][Q.target(a)].append(matmul(F, X.maps[a], M))
        spans = [[_basis(F, ms, X.dim[j], X.dim[i]) for j, ms in enumerate(row)] for i, row in enumerate(grown)]
    return True


def _basis(F: Field, mats: list, rows: int, cols: int) -> list:
    if not mats or rows * cols == 0:
        return []
    flat = np.stack([M.reshape(-1) for M in mats])
    B = row_space(F, flat)
    return [B[k].reshape(rows, cols) for k in range(B.shape[0])]


def generated_subrep(X: Representation, i: int, v) -> tuple[np.ndarray, ...]:
    """Smallest subrepresentation containing ``v`` in V_i: per-vertex echelon bases (rows)."""
    F, Q = X.field, X.quiver
    v = F.array(v, (1, X.dim[i]))
    U = [F.zeros(0, n) for n in X.dim]
    U[i] = row_space(F, v)
    pending = [i] if U[i].shape[0] else []
    while pending:
        src = pending.pop()
        for a in Q.out_arrows(src):
            j = Q.target(a)
            if U[j].shape[0] == X.dim[j]:
                continue
            images = matmul(F, X.maps[a], U[src].T).T
            new = row_space(F, np.concatenate([U[j], images]))
            if new.shape[0] > U[j].shape[0]:
                U[j] = new
                pending.append(j)
    return tuple(U)


def _projective_points(F: PrimeField, n: int):
    """Nonzero vectors of F^n whose first nonzero entry is 1."""
    for lead in range(n):
        for tail in itertools.product(range(F.p), repeat=n - lead - 1):
            v = [0] * n
            v[lead] = 1
            v[lead + 1:] = tail
            yield v


def is_simple_bruteforce(X: Representation) -> bool:
    """Simplicity over F_p: every nonzero vector at every vertex generates everything."""
    F = X.field
    if not isinstance(F, PrimeField):
        raise ValueError("brute-force simplicity needs a prime field")
    if sum(F.p**n for n in X.dim) > BRUTE_FORCE_LIMIT:
        raise ValueError("instance too large for brute force")
    if X.total_dim == 0:
        return False
    for i, n in enumerate(X.dim):
        for v in _projective_points(F, n):
            U = generated_subrep(X, i, v)
            if any(u.shape[0] != m for u, m in zip(U, X.dim)):
                return False
    return True


def endomorphism_dim(X: Representation) -> int:
    """dim of {(g_i) : X_a g_i = g_j X_a for all a: i -> j}."""
    F, Q = X.field, X.quiver
    offsets, total = [], 0
    for n in X.dim:
        offsets.append(total)
        total += n * n
    rows = []
    for a, M in zip(Q.arrows, X.maps):
        i, j = a.source, a.target
        di, dj = X.dim[i], X.dim[j]
        for r in range(dj):
            for c in range(di):
                eq = [0] * total
                for k in range(di):  # (M g_i)[r, c]
                    eq[offsets[i] + k * di + c] += M[r, k]
                for k in range(dj):  # (g_j M)[r, c]
                    eq[offsets[j] + r * dj + k] -= M[k, c]
                rows.append(eq)
    if not rows:
        return total
    A = F.array(rows, (len(rows), total))
    return total - rank(F, A)


def covering_pushforward(Xhat: Representation) -> Representation:
    """Push a representation of a covering piece down to the base quiver (block sums over fibres)."""
    cover = Xhat.quiver.cover
    if cover is None:
        raise QuiverError("representation's quiver has no covering tags")
    Q, F = cover.base, Xhat.field
    offsets = [0] * Xhat.quiver.n_vertices
    d = [0] * Q.n_vertices
    for v, i in enumerate(cover.vertex_base):
        offsets[v] = d[i]
        d[i] += Xhat.dim[v]
    maps = [F.zeros(d[a.target], d[a.source]) for a in Q.arrows]
    for k, a in enumerate(Xhat.quiver.arrows):
        base = cover.arrow_base[k]
        rs, cs = offsets[a.target], offsets[a.source]
        M = Xhat.maps[k]
        maps[base][rs: rs + M.shape[0], cs: cs + M.shape[1]] = M
    return Representation(Q, tuple(d), F, tuple(maps))


def random_representation(Q: Quiver, d: Sequence[int], field: Field, rng, density: float = 1.0,
                          entries: Sequence[int] = (-2, -1, 0, 1, 2)) -> Representation:
    """Random matrices; entries uniform from F_p, or from ``entries`` over Q."""
    d = Q.dimvec(d)
    maps = []
    for a in Q.arrows:
        shape = (d[a.target], d[a.source])
        if isinstance(field, PrimeField):
            vals = rng.integers(0, field.p, size=shape)
        else:
            vals = rng.choice(np.array(entries), size=shape)
        if density < 1.0:
            vals = vals * (rng.random(shape) < density)
        maps.append(field.array(vals, shape))
    return Representation(Q, d, field, tuple(maps))
