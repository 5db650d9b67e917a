"""When projectivized moduli of simple representations are non-empty, and their dimension."""

from __future__ import annotations

from typing import Sequence

from .quiver import (
    Quiver,
    euler_form,
    is_single_cycle,
    is_strongly_connected,
    restrict,
    unit,
)


class EmptyModuliError(ValueError):
    pass


def nonempty_reason(Q: Quiver, d: Sequence[int]) -> tuple[bool, str]:
    """Decide non-emptiness and name the clause that decided it.

    A single-cycle support is governed only by the all-ones clause; every
    other support by the Euler form inequalities. Reading the two clauses
    as a plain disjunction would wrongly accept e.g. (2,2,2) on an
    oriented 3-cycle, which has no simple representations.
    """
    d = Q.dimvec(d)
    if not any(d):
        return False, "zero dimension vector"
    S, ds = restrict(Q, d)
    if not is_strongly_connected(S):
        return False, "support not strongly connected"
    if S.n_arrows == 0:
        return False, "support has no arrow"
    if is_single_cycle(S):
        if all(x == 1 for x in ds):
            return True, "single cycle with all entries 1"
        return False, "single cycle with an entry > 1"
    for i in range(S.n_vertices):
        e = unit(S, i)
        if euler_form(S, e, ds) > 0 or euler_form(S, ds, e) > 0:
            return False, f"Euler form positive at vertex {S.vertex_labels[i]}"
    return True, "Euler form inequalities"


def is_nonempty_simple(Q: Quiver, d: Sequence[int]) -> bool:
    return nonempty_reason(Q, d)[0]


def moduli_dims(Q: Quiver, d: Sequence[int]) -> tuple[int, int]:
    """(dimension of the affine moduli, dimension of its projectivization)."""
    d = Q.dimvec(d)
    if not is_nonempty_simple(Q, d):
        raise EmptyModuliError("moduli empty")
    q = euler_form(Q, d, d)
    return 1 - q, -q
