"""Euler characteristic of projectivized simple moduli, computed three ways.

* ``euler_direct`` counts primitive cycle classes;
* ``euler_localized`` sums over torus-fixed components, recursing on the
  covering quivers until every branch ends at a single cycle;
* ``necklace_count`` (in ``cycles``) is the closed form for loop quivers.
"""

from __future__ import annotations

import json
import threading
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from .covering import Component, enumerate_components, lift_primitive_cycle
from .cycles import count_primitive_classes, enumerate_cycle_classes
from .moduli import is_nonempty_simple
from .quiver import Quiver, canonical_form, is_single_cycle, restrict


def euler_direct(Q: Quiver, d: Sequence[int]) -> int:
    return count_primitive_classes(Q, d)


@dataclass(frozen=True)
class TraceNode:
    quiver: Quiver
    dim: tuple[int, ...]
    kind: str  # "empty", "cycle" or "sum"
    value: int
    nu: tuple[int, ...] | None = None
    children: tuple["TraceNode", ...] = field(default=())

    def leaves(self):
        if not self.children:
            yield self
        for c in self.children:
            yield from c.leaves()

    def to_dict(self) -> dict:
        Q = self.quiver
        return {
            "vertices": list(Q.vertex_labels),
            "arrows": [[a.label, Q.vertex_labels[a.source], Q.vertex_labels[a.target]] for a in Q.arrows],
            "dim": list(self.dim),
            "nu": list(self.nu) if self.nu is not None else None,
            "kind": self.kind,
            "value": self.value,
            "children": [c.to_dict() for c in self.children],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dot(self) -> str:
        lines = ["digraph localization {"]
        counter = [0]

        def visit(node):
            k = counter[0]
            counter[0] += 1
            nu = "" if node.nu is None else f" nu=({','.join(map(str, node.nu))})"
            lines.append(
                f'  n{k} [label="{node.kind} |V|={node.quiver.n_vertices} '
                f'd=({",".join(map(str, node.dim))}){nu} chi={node.value}"];'
            )
            for c in node.children:
                ck = visit(c)
                lines.append(f"  n{k} -> n{ck};")
            return k

        visit(self)
        lines.append("}")
        return "\n".join(lines) + "\n"


_memo: dict[tuple, TraceNode] = {}
_memo_lock = threading.Lock()


def clear_cache() -> None:
    with _memo_lock:
        _memo.clear()


def _localize(Q: Quiver, d: tuple[int, ...], nu, depth: int, limit: int) -> TraceNode:
    if depth > limit:
        raise RuntimeError("localization recursion deeper than |d|; component enumeration is inconsistent")
    S, ds = restrict(Q, d)
    if not is_nonempty_simple(S, ds):
        return TraceNode(S, ds, "empty", 0, nu)
    # base case first: a single cycle would otherwise reappear as its own component
    if is_single_cycle(S) and all(x == 1 for x in ds):
        return TraceNode(S, ds, "cycle", 1, nu)
    key = canonical_form(S, ds)
    with _memo_lock:
        hit = _memo.get(key)
    if hit is not None:
        return TraceNode(S, ds, hit.kind, hit.value, nu, hit.children)
    children = tuple(
        _localize(c.quiver, c.dimension, c.nu, depth + 1, limit) for c in enumerate_components(S, ds)
    )
    node = TraceNode(S, ds, "sum", sum(c.value for c in children), nu, children)
    with _memo_lock:
        _memo.setdefault(key, node)
    return node


def localization_trace(Q: Quiver, d: Sequence[int]) -> TraceNode:
    d = Q.dimvec(d)
    if not any(d):
        raise ValueError("dimension vector must be nonzero")
    return _localize(Q, d, None, 0, sum(d))


def euler_localized(Q: Quiver, d: Sequence[int]) -> int:
    return localization_trace(Q, d).value


@dataclass
class BijectionReport:
    primitive_classes: int = 0
    components: int = 0
    # (nu, lift) -> (lifted classes landing there, primitive classes of the component)
    per_component: dict = field(default_factory=dict)
    discrepancies: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def verify_cycle_bijection(Q: Quiver, d: Sequence[int]) -> BijectionReport:
    """Check that lifting primitive cycles matches primitive cycles of the components."""
    d = Q.dimvec(d)
    report = BijectionReport()
    prim = [c for c in enumerate_cycle_classes(Q, d) if c.primitive]
    report.primitive_classes = len(prim)
    if not prim:
        return report
    comps: dict[tuple, Component] = {c.key: c for c in enumerate_components(Q, d)}
    report.components = len(comps)
    groups: dict[tuple, list] = defaultdict(list)
    for c in prim:
        lifted = lift_primitive_cycle(Q, c)
        groups[(lifted.nu, lifted.lift)].append(lifted.cycle)
    for key, cycles in sorted(groups.items()):
        comp = comps.get(key)
        if comp is None:
            report.discrepancies.append(f"lift {key} is not an enumerated component")
            continue
        own = {c for c in enumerate_cycle_classes(comp.quiver, comp.dimension) if c.primitive}
        report.per_component[key] = (len(cycles), len(own))
        if len(set(cycles)) != len(cycles):
            report.discrepancies.append(f"two primitive classes lift to the same class in {key}")
        if set(cycles) != own:
            report.discrepancies.append(
                f"component {key}: {len(cycles)} lifted classes vs {len(own)} primitive classes"
            )
    for key, comp in comps.items():
        if key not in groups:
            n = count_primitive_classes(comp.quiver, comp.dimension)
            report.per_component[key] = (0, n)
            if n:
                report.discrepancies.append(f"component {key} has {n} primitive classes but no lifts")
    total = sum(own for _, own in report.per_component.values())
    if total != report.primitive_classes:
        report.discrepancies.append(f"component total {total} != {report.primitive_classes}")
    return report
