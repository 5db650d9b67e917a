from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from quiverloc.linalg import GF, QQ, inverse, matmul, nullspace, parse_field, rank, rref

small = st.integers(-3, 3)


def matrices(rows=(0, 4), cols=(0, 4)):
    return st.tuples(st.integers(*rows), st.integers(*cols)).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0]).map(
            lambda data: (rc, data)
        )
    )


@given(matrices())
def test_rank_matches_sympy(m):
    (r, c), data = m
    M = QQ.array(data, (r, c))
    want = sympy.Matrix(r, c, [x for row in data for x in row]).rank() if r and c else 0
    assert rank(QQ, M) == want


@given(matrices(rows=(1, 4), cols=(1, 5)))
def test_nullspace(m):
    (r, c), data = m
    M = QQ.array(data, (r, c))
    N = nullspace(QQ, M)
    assert N.shape == (c - rank(QQ, M), c)
    if N.shape[0]:
        assert not matmul(QQ, M, N.T).any()
        assert rank(QQ, N) == N.shape[0]


@given(matrices(rows=(1, 4), cols=(1, 5)), st.sampled_from([2, 3, 5]))
def test_nullspace_mod_p(m, p):
    (r, c), data = m
    F = GF(p)
    M = F.array(data, (r, c))
    N = nullspace(F, M)
    assert N.shape[0] == c - rank(F, M)
    assert not (matmul(F, M, N.T) % p).any()


@given(st.integers(1, 4).flatmap(lambda n: st.lists(small, min_size=n * n, max_size=n * n).map(lambda xs: (n, xs))))
def test_inverse(nx):
    n, xs = nx
    M = QQ.array(xs, (n, n))
    S = sympy.Matrix(n, n, xs)
    if S.det() == 0:
        with pytest.raises(ValueError, match="singular"):
            inverse(QQ, M)
    else:
        inv = inverse(QQ, M)
        assert [Fraction(int(x.p), int(x.q)) for x in S.inv()] == list(inv.reshape(-1))


def test_rref_and_fields():
    R, piv = rref(QQ, QQ.array([[2, 4], [1, 3]]))
    assert piv == (0, 1) and (R == QQ.eye(2)).all()
    assert parse_field("Q") == QQ and parse_field("Fp:7") == GF(7)
    with pytest.raises(ValueError):
        parse_field("R")
    with pytest.raises(ValueError):
        GF(4)
    assert GF(5).array([[Fraction(1, 2)]])[0, 0] == 3
    assert inverse(QQ, QQ.zeros(0, 0)).shape == (0, 0)
