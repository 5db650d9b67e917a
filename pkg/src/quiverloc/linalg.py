"""Exact linear algebra over the rationals and small prime fields.

Matrices are numpy arrays: dtype=object holding Fractions for the
rationals, int64 reduced mod p for F_p.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


class Field:
    name: str
    characteristic: int

    def array(self, data, shape=None) -> np.ndarray:
        raise NotImplementedError

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return self.array(np.zeros((rows, cols), dtype=np.int64))

    def eye(self, n: int) -> np.ndarray:
        return self.array(np.eye(n, dtype=np.int64))

    def reduce(self, a: np.ndarray) -> np.ndarray:
        return a

    def scalar(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def elements(self):
        raise NotImplementedError


class Rationals(Field):
    name = "Q"
    characteristic = 0

    def array(self, data, shape=None):
        a = np.array(data, dtype=object)
        if shape is not None:
            a = a.reshape(shape)
        out = np.empty(a.shape, dtype=object)
        for idx, x in np.ndenumerate(a):
            out[idx] = Fraction(x)
        return out

    def scalar(self, x):
        return Fraction(x)

    def inv(self, x):
        return 1 / Fraction(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"Fp:{p}"

    def array(self, data, shape=None):
        a = np.array(data, dtype=object)
        if shape is not None:
            a = a.reshape(shape)
        out = np.zeros(a.shape, dtype=np.int64)
        for idx, x in np.ndenumerate(a):
            x = Fraction(x)
            out[idx] = (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return out

    def reduce(self, a):
        return a % self.p

    def scalar(self, x):
        x = Fraction(x)
        return (x.numerator * pow(x.denominator, -1, self.p)) % self.p

    def inv(self, x):
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def elements(self):
        return range(self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(desc: str) -> Field:
    if desc == "Q":
        return QQ
    if desc.startswith("Fp:"):
        return GF(int(desc[3:]))
    raise ValueError(f"unknown field descriptor {desc!r}")


def matmul(F: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
    if A.shape[1] == 0:
        return F.zeros(A.shape[0], B.shape[1])
    return F.reduce(A @ B)


def rref(F: Field, M: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    A = M.copy()
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if A[i, c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = F.reduce(A[r] * F.inv(A[r, c]))
        for i in range(rows):
            if i != r and A[i, c] != 0:
                A[i] = F.reduce(A[i] - A[i, c] * A[r])
        pivots.append(c)
        r += 1
    return A[:r], tuple(pivots)


def rank(F: Field, M: np.ndarray) -> int:
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def row_space(F: Field, vectors: np.ndarray) -> np.ndarray:
    """Echelon basis (as rows) of the span of the rows of ``vectors``."""
    if vectors.shape[0] == 0:
        return vectors
    return rref(F, vectors)[0]


def nullspace(F: Field, M: np.ndarray) -> np.ndarray:
    """Basis of {x : M x = 0}, one vector per row."""
    cols = M.shape[1]
    R, pivots = rref(F, M) if M.shape[0] else (M, ())
    free = [c for c in range(cols) if c not in pivots]
    basis = F.zeros(len(free), cols)
    for k, f in enumerate(free):
        basis[k, f] = F.scalar(1)
        for r, pc in enumerate(pivots):
            basis[k, pc] = F.reduce(-R[r, f])
    return basis


def inverse(F: Field, A: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    if n == 0:
        return F.zeros(0, 0)
    R, pivots = rref(F, np.concatenate([A, F.eye(n)], axis=1))
    if tuple(c for c in pivots if c < n) != tuple(range(n)):
        raise ValueError("matrix is singular")
    return R[:, n:]


def trace(F: Field, A: np.ndarray):
    t = F.scalar(0)
    for k in range(A.shape[0]):
        t = t + A[k, k]
    return F.scalar(t)
