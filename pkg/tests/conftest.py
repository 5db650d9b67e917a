import numpy as np
import pytest
from hypothesis import strategies as st

from quiverloc.quiver import Quiver
from quiverloc.representations import trace_along_cycle as _trace


@st.composite
def quivers(draw, max_vertices=3, max_arrows=4, min_arrows=0):
    n = draw(st.integers(1, max_vertices))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    arrows = draw(st.lists(pairs, min_size=min_arrows, max_size=max_arrows))
    return Quiver.build(n, arrows)


@st.composite
def quiver_and_dim(draw, max_vertices=3, max_arrows=4, max_entry=3):
    Q = draw(quivers(max_vertices, max_arrows))
    d = tuple(draw(st.lists(st.integers(0, max_entry), min_size=Q.n_vertices, max_size=Q.n_vertices)))
    return Q, d


def relabel(Q: Quiver, vperm, aperm) -> Quiver:
    """Isomorphic copy: old vertex v becomes vperm[v], arrows are reordered by aperm."""
    arrows = [None] * Q.n_arrows
    for k, a in enumerate(Q.arrows):
        arrows[aperm[k]] = (f"x{aperm[k]}", vperm[a.source], vperm[a.target])
    return Quiver.build(Q.n_vertices, arrows)


def permute_dim(d, vperm):
    out = [0] * len(d)
    for v, x in enumerate(d):
        out[vperm[v]] = x
    return tuple(out)


def lifted_trace(Xhat, base_cycle):
    """Trace of the pushforward along a Q-cycle, computed inside the covering piece."""
    S = Xhat.quiver
    F = Xhat.field
    cover = S.cover
    over = {}
    for k in range(S.n_arrows):
        over[(S.source(k), cover.arrow_base[k])] = k
    start_base = cover.base.source(base_cycle[0])
    total = F.scalar(0)
    for v in range(S.n_vertices):
        if cover.vertex_base[v] != start_base:
            continue
        walk, u = [], v
        for a in base_cycle:
            k = over.get((u, a))
            if k is None:
                break
            walk.append(k)
            u = S.target(k)
        else:
            if u == v:
                total = F.scalar(total + _trace(Xhat, walk))
    return total


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# one line per acceptance criterion, collected by tests/test_acceptance.py
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda k: int(k.split()[1])):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{name}: {'PASS' if ok else 'FAIL'}  {detail}")
