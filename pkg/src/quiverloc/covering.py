"""Abelian covering quivers and the torus-fixed components they index.

The covering attached to an indivisible ``nu`` has vertices ``(i, r)`` with
``r`` a class in Z^arrows / Z nu, and an arrow ``(a, r): (i, r) -> (j, r + a)``
for every base arrow ``a: i -> j``. It is infinite, so it is only ever
explored lazily from a seed vertex.

A class is stored by its representative whose pivot coordinate (the first
arrow with ``nu_a != 0``) lies in ``[0, nu_pivot)``.

Candidate ``nu``: a non-empty component has a strongly connected support
with an arrow, so it contains a simple cycle. That cycle projects to a
cycle of the base quiver with dimension vector <= d whose weight is a
positive multiple of ``nu``. Hence ``nu`` is the primitive part of the
weight of some cycle with dimension vector <= d, a finite set.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .cycles import CycleClass, canonicalize, enumerate_cycles_bounded, weight
from .moduli import is_nonempty_simple
from .quiver import (
    Arrow,
    ArrowVector,
    CoverData,
    Quiver,
    QuiverError,
    is_indivisible,
    primitive_part,
)

Residue = tuple[int, ...]
CoveringVertex = tuple[int, Residue]
# A lifted dimension vector: sorted (base vertex, residue, multiplicity) triples.
Lift = tuple[tuple[int, Residue, int], ...]


def _pivot(nu: Sequence[int]) -> int:
    for k, x in enumerate(nu):
        if x:
            return k
    raise ValueError("nu must be nonzero")


def _check_nu(nu: Sequence[int]) -> None:
    if not nu or any(x < 0 for x in nu) or not any(nu):
        raise ValueError(f"nu must be a nonzero nonnegative vector, got {tuple(nu)}")
    if not is_indivisible(nu):
        raise ValueError(f"nu must be indivisible, got {tuple(nu)}")


def _reduce(lam: Sequence[int], nu: Sequence[int], p: int) -> Residue:
    k = lam[p] // nu[p]
    if k == 0:
        return tuple(lam)
    return tuple(x - k * y for x, y in zip(lam, nu))


def residue_reduce(lam: Sequence[int], nu: Sequence[int]) -> Residue:
    _check_nu(nu)
    if len(lam) != len(nu):
        raise ValueError("residue and nu have different lengths")
    return _reduce(lam, nu, _pivot(nu))


def _shift(lam: Residue, a: int, sign: int = 1) -> list[int]:
    out = list(lam)
    out[a] += sign
    return out


def covering_arrows_from(Q: Quiver, nu: Sequence[int], v: CoveringVertex) -> list[tuple[int, CoveringVertex]]:
    """Arrows of the covering leaving ``v``: (base arrow, target vertex)."""
    _check_nu(nu)
    p = _pivot(nu)
    i, lam = v
    return [(a, (Q.target(a), _reduce(_shift(lam, a), nu, p))) for a in Q.out_arrows(i)]


def candidate_nus(Q: Quiver, d: Sequence[int]) -> list[ArrowVector]:
    return sorted({primitive_part(weight(Q, c.arrows)) for c in enumerate_cycles_bounded(Q, d)})


def _translate(entries: Iterable[tuple[int, Residue, int]], by: Residue, nu, p) -> Lift:
    return tuple(sorted(
        (i, _reduce([x - y for x, y in zip(r, by)], nu, p), m) for i, r, m in entries
    ))


def _canonical_with_shift(entries: Sequence[tuple[int, Residue, int]], nu, p) -> tuple[Lift, Residue]:
    i0 = min(i for i, _, _ in entries)
    best = None
    for i, r, _ in entries:
        if i != i0:
            continue
        cand = _translate(entries, r, nu, p)
        if best is None or cand < best[0]:
            best = (cand, r)
    return best


def canonicalize_lift(nu: Sequence[int], lift: Mapping[CoveringVertex, int] | Iterable[tuple[int, Residue, int]]) -> Lift:
    """Representative of the translation class of a lifted dimension vector.

    Only translates putting the zero class over the smallest supported base
    vertex are compared; the translation group acts simply transitively on
    each fibre, so this covers the whole orbit.
    """
    _check_nu(nu)
    p = _pivot(nu)
    if isinstance(lift, Mapping):
        entries = [(i, tuple(r), m) for (i, r), m in lift.items()]
    else:
        entries = [(i, tuple(r), m) for i, r, m in lift]
    entries = [(i, _reduce(r, nu, p), m) for i, r, m in entries if m]
    if any(m < 0 for _, _, m in entries):
        raise ValueError("lifted dimension vectors are nonnegative")
    if not entries:
        return ()
    return _canonical_with_shift(entries, nu, p)[0]


def lift_pushdown(Q: Quiver, lift: Lift) -> tuple[int, ...]:
    d = [0] * Q.n_vertices
    for i, _, m in lift:
        d[i] += m
    return tuple(d)


def _fmt_residue(r: Residue) -> str:
    return ",".join(str(x) for x in r)


def support_quiver(Q: Quiver, nu: Sequence[int], lift: Lift) -> Quiver:
    """Full subquiver of the covering on the support of ``lift``, arrows tagged by base arrow."""
    p = _pivot(nu)
    verts = [(i, r) for i, r, _ in lift]
    index = {v: k for k, v in enumerate(verts)}
    arrows, arrow_base = [], []
    for k, (i, r) in enumerate(verts):
        for a in Q.out_arrows(i):
            t = (Q.target(a), _reduce(_shift(r, a), nu, p))
            if t in index:
                arrows.append(Arrow(f"{Q.arrows[a].label}@{_fmt_residue(r)}", k, index[t]))
                arrow_base.append(a)
    labels = tuple(f"{Q.vertex_labels[i]}@{_fmt_residue(r)}" for i, r in verts)
    cover = CoverData(
        base=Q,
        nu=tuple(nu),
        vertex_base=tuple(i for i, _ in verts),
        vertex_residue=tuple(r for _, r in verts),
        arrow_base=tuple(arrow_base),
    )
    return Quiver(labels, tuple(arrows), cover)


@dataclass(frozen=True)
class Component:
    """One torus-fixed component, indexed by ``nu`` and a lift class."""

    nu: ArrowVector
    lift: Lift
    quiver: Quiver

    @property
    def dimension(self) -> tuple[int, ...]:
        """Lifted dimension vector in the vertex order of ``quiver``."""
        return tuple(m for _, _, m in self.lift)

    @property
    def size(self) -> int:
        return len(self.lift)

    @property
    def key(self) -> tuple[ArrowVector, Lift]:
        return (self.nu, self.lift)


# ---------------------------------------------------------------------------
# Enumeration


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _lifts_for_nu(Q: Quiver, d: tuple[int, ...], nu: ArrowVector) -> Iterator[Lift]:
    p = _pivot(nu)
    n = sum(d)
    i0 = next(i for i, x in enumerate(d) if x)
    seed: CoveringVertex = (i0, tuple(0 for _ in nu))

    cache_out: dict[CoveringVertex, list[CoveringVertex]] = {}
    cache_in: dict[CoveringVertex, list[CoveringVertex]] = {}

    def out_nbrs(v):
        if v not in cache_out:
            i, r = v
            cache_out[v] = [
                (Q.target(a), _reduce(_shift(r, a), nu, p))
                for a in Q.out_arrows(i) if d[Q.target(a)]
            ]
        return cache_out[v]

    def in_nbrs(v):
        if v not in cache_in:
            i, r = v
            cache_in[v] = [
                (Q.source(a), _reduce(_shift(r, a, -1), nu, p))
                for a in Q.in_arrows(i) if d[Q.source(a)]
            ]
        return cache_in[v]

    # Every vertex of a strongly connected support of size <= n is within
    # directed distance n - 1 of the seed in both directions.
    def ball(step):
        seen = {seed}
        frontier = [seed]
        for _ in range(n - 1):
            nxt = []
            for v in frontier:
                for w in step(v):
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return seen

    region = ball(out_nbrs) & ball(in_nbrs)
    adj = {
        v: sorted({w for w in out_nbrs(v) + in_nbrs(v) if w in region and w != v})
        for v in region
    }
    supp = [i for i, x in enumerate(d) if x]
    fibers = [0] * len(d)

    def grow(S: list, cands: list, banned: frozenset):
        yield S
        if len(S) == n:
            return
        for idx, w in enumerate(cands):
            if fibers[w[0]] >= d[w[0]]:
                continue
            in_s = set(S)
            in_s.add(w)
            new_banned = banned.union(cands[:idx])
            rest = set(cands[idx + 1:])
            rest.update(u for u in adj[w] if u not in in_s and u not in new_banned)
            fibers[w[0]] += 1
            yield from grow(S + [w], sorted(rest), new_banned)
            fibers[w[0]] -= 1

    fibers[i0] = 1
    for S in grow([seed], list(adj[seed]), frozenset()):
        if any(fibers[i] == 0 for i in supp):
            continue
        yield from _assignments(Q, d, nu, p, S, out_nbrs)


def _assignments(Q, d, nu, p, S, out_nbrs) -> Iterator[Lift]:
    members = set(S)
    succ = {v: [w for w in out_nbrs(v) if w in members] for v in S}
    n_arrows = sum(len(x) for x in succ.values())
    if n_arrows == 0:
        return
    pred: dict = {v: [] for v in S}
    for v, ws in succ.items():
        for w in ws:
            pred[w].append(v)
    # strong connectivity of the induced subquiver
    for nbrs in (succ, pred):
        seen = {S[0]}
        stack = [S[0]]
        while stack:
            v = stack.pop()
            for w in nbrs[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(S):
            return
    single_cycle = n_arrows == len(S) and all(len(succ[v]) == 1 and len(pred[v]) == 1 for v in S)
    order = sorted(S)
    by_base: dict[int, list] = {}
    for v in order:
        by_base.setdefault(v[0], []).append(v)
    bases = sorted(by_base)

    def fill(k, acc):
        if k == len(bases):
            yield dict(acc)
            return
        verts = by_base[bases[k]]
        for comp in _compositions(d[bases[k]], len(verts)):
            for v, m in zip(verts, comp):
                acc[v] = m
            yield from fill(k + 1, acc)

    for dim in fill(0, {}):
        if single_cycle:
            if any(m != 1 for m in dim.values()):
                continue
        elif any(
            dim[v] > sum(dim[w] for w in succ[v]) or dim[v] > sum(dim[u] for u in pred[v])
            for v in S
        ):
            continue
        yield _canonical_with_shift([(i, r, dim[(i, r)]) for i, r in order], nu, p)[0]


def enumerate_components(Q: Quiver, d: Sequence[int]) -> list[Component]:
    """All (nu, lift class) pairs whose covering moduli are non-empty, sorted."""
    d = Q.dimvec(d)
    if not any(d):
        return []
    found: dict[tuple, Component] = {}
    for nu in candidate_nus(Q, d):
        for lift in _lifts_for_nu(Q, d, nu):
            if (nu, lift) in found:
                continue
            sq = support_quiver(Q, nu, lift)
            dim = tuple(m for _, _, m in lift)
            if not is_nonempty_simple(sq, dim):
                raise AssertionError(f"component filter disagrees with the non-emptiness test: {nu} {lift}")
            found[(nu, lift)] = Component(nu, lift, sq)
    return sorted(found.values(), key=lambda c: (c.size, c.nu, c.lift))


# ---------------------------------------------------------------------------
# Cycle lifting


@dataclass(frozen=True)
class CycleLift:
    nu: ArrowVector
    lift: Lift
    quiver: Quiver
    cycle: CycleClass


def lift_primitive_cycle(Q: Quiver, c: CycleClass | Sequence[int]) -> CycleLift:
    """Lift a primitive cycle to the covering of the primitive part of its weight.

    The lift starts over the zero class, so it is unique; the result is
    reported in the canonical translate of its dimension vector.
    """
    arrows = tuple(c.arrows if isinstance(c, CycleClass) else c)
    cls = canonicalize(arrows)
    if not cls.primitive:
        raise ValueError("only primitive cycles are lifted")
    nu = primitive_part(weight(Q, arrows))
    p = _pivot(nu)
    lam: Residue = tuple(0 for _ in nu)
    steps = []
    for a in arrows:
        steps.append((a, Q.source(a), lam))
        lam = _reduce(_shift(lam, a), nu, p)
    if any(lam):
        raise AssertionError("lifted walk failed to close")
    counts = Counter((i, r) for _, i, r in steps)
    lift, anchor = _canonical_with_shift([(i, r, m) for (i, r), m in counts.items()], nu, p)
    sq = support_quiver(Q, nu, lift)
    arrow_at = {
        (sq.cover.arrow_base[k], sq.cover.vertex_residue[sq.source(k)]): k for k in range(sq.n_arrows)
    }
    lifted = [arrow_at[(a, _reduce([x - y for x, y in zip(r, anchor)], nu, p))] for a, _, r in steps]
    return CycleLift(nu, lift, sq, canonicalize(lifted))


def project_cycle(cover_quiver: Quiver, arrows: Sequence[int]) -> tuple[int, ...]:
    """Replace each covering arrow by the base arrow it lies over."""
    if cover_quiver.cover is None:
        raise QuiverError("quiver carries no covering data")
    return tuple(cover_quiver.cover.arrow_base[a] for a in arrows)


def component_to_dot(comp: Component, name: str = "component") -> str:
    Q = comp.quiver
    base = Q.cover.base
    lines = [f"digraph {name} {{", f'  label="nu=({_fmt_residue(comp.nu)})";']
    for k, (i, r, m) in enumerate(comp.lift):
        lines.append(f'  v{k} [label="{base.vertex_labels[i]}@{_fmt_residue(r)}:{m}"];')
    for k, a in enumerate(Q.arrows):
        tag = base.arrows[Q.cover.arrow_base[k]].label
        lines.append(f'  v{a.source} -> v{a.target} [label="{tag}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
