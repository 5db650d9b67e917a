"""The property corpus behind ``quiverloc selfcheck``.

Each check returns a list of failure messages; an empty list means the
engines agree everywhere they were compared.
"""

from __future__ import annotations

from typing import Callable

from .corpus import main_theorem_corpus, small_quivers
from .cycles import count_primitive_classes, enumerate_cycles_bounded, necklace_count
from .euler import euler_direct, euler_localized, verify_cycle_bijection
from .linalg import GF, QQ
from .quiver import loop_quiver
from .representations import (
    endomorphism_dim,
    is_nilpotent,
    is_simple_bruteforce,
    string_rep,
    trace_along_cycle,
)


def check_main_theorem(corpus) -> list[str]:
    bad = []
    for Q, d in corpus:
        a, b = euler_direct(Q, d), euler_localized(Q, d)
        if a != b:
            bad.append(f"euler {Q} d={d}: direct {a} != localized {b}")
    return bad


def check_necklaces(max_d: int = 8) -> list[str]:
    bad = []
    for m in (1, 2, 3):
        Q = loop_quiver(m)
        for d in range(1, max_d + 1):
            a, b = count_primitive_classes(Q, (d,)), necklace_count(m, d)
            if a != b:
                bad.append(f"necklace m={m} d={d}: {a} != {b}")
    return bad


def check_bijection(corpus) -> list[str]:
    bad = []
    for Q, d in corpus:
        rep = verify_cycle_bijection(Q, d)
        bad.extend(f"bijection {Q} d={d}: {msg}" for msg in rep.discrepancies)
    return bad


def check_string_reps(max_degree: int) -> list[str]:
    bad = []
    for Q in small_quivers(3, 4):
        for c in enumerate_cycles_bounded(Q, (max_degree,) * Q.n_vertices):
            if not c.primitive or c.length > max_degree:
                continue
            X = string_rep(Q, c, QQ)
            if trace_along_cycle(X, c) != 1 or is_nilpotent(X) or endomorphism_dim(X) != 1:
                bad.append(f"string rep {Q} {c.arrows}")
                continue
            for p in (2, 3):
                if not is_simple_bruteforce(string_rep(Q, c, GF(p))):
                    bad.append(f"string rep {Q} {c.arrows} not simple over F{p}")
    return bad


def run_selfcheck(quick: bool = False, log: Callable[[str], None] = print) -> list[str]:
    if quick:
        corpus = [(Q, d) for Q, d in main_theorem_corpus() if sum(d) <= 3]
    else:
        corpus = list(main_theorem_corpus())
    steps = [
        ("main theorem", lambda: check_main_theorem(corpus)),
        ("necklace formula", lambda: check_necklaces(6 if quick else 8)),
        ("cycle bijection", lambda: check_bijection(corpus)),
        ("string representations", lambda: check_string_reps(3 if quick else 5)),
    ]
    failures = []
    for name, fn in steps:
        bad = fn()
        log(f"{name}: {'ok' if not bad else f'{len(bad)} failures'}")
        failures.extend(bad)
    return failures
