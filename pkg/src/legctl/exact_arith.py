"""Exact integer matrix algebra.

Everything here stays in Python ints or :class:`fractions.Fraction`; no
floating point is used anywhere. Elimination is fraction-free (Bareiss), so
every intermediate entry is itself a minor of the input and bit growth stays
polynomial.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotSymmetric, OutOfRange, SingularMatrix

Rational = Fraction


class IntMatrix:
    """Immutable square matrix of Python ints."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError(f"matrix is not square: row of length {len(r)} in {n}x{n}")
        self._rows = rows

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def __len__(self) -> int:
        return len(self._rows)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self._rows]})"

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def is_symmetric(self) -> bool:
        n = self.n
        return all(self._rows[i][j] == self._rows[j][i] for i in range(n) for j in range(i + 1, n))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self._rows)) if self._rows else self

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-x for x in r] for r in self._rows])

    def permuted(self, perm: Sequence[int]) -> "IntMatrix":
        """Simultaneous row/column permutation: result[i][j] = self[perm[i]][perm[j]]."""
        return IntMatrix([[self._rows[a][b] for b in perm] for a in perm])

    def delete(self, k: int) -> "IntMatrix":
        """Drop row and column k."""
        return IntMatrix([[x for j, x in enumerate(r) if j != k] for i, r in enumerate(self._rows) if i != k])

    def matvec(self, v: Sequence) -> list:
        if len(v) != self.n:
            raise ValueError("dimension mismatch")
        return [sum(a * b for a, b in zip(r, v)) for r in self._rows]


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(u, v)), 0)


def determinant(M: IntMatrix) -> int:
    """Exact determinant by Bareiss elimination with row pivoting."""
    n = M.n
    if n == 0:
        return 1
    a = M.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def solve(M: IntMatrix, v: Sequence[int]) -> list[Fraction]:
    """Unique rational solution of ``M x = v``.

    Forward pass is fraction-free on the augmented matrix; only the back
    substitution touches rationals.
    """
    n = M.n
    if len(v) != n:
        raise ValueError(f"vector length {len(v)} does not match matrix dimension {n}")
    a = [list(r) + [int(b)] for r, b in zip(M.rows, v)]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                raise SingularMatrix("matrix is singular (det = 0)")
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n + 1):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    x: list[Fraction] = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        rowk = a[k]
        acc = Fraction(rowk[n]) - sum((rowk[j] * x[j] for j in range(k + 1, n)), Fraction(0))
        x[k] = acc / rowk[k]
    return x


def leading_minors(M: IntMatrix) -> list[int]:
    """Leading principal minors D_1..D_n of a symmetric matrix brought into
    a congruent form where none vanish.

    Returns ``[1, D_1, ..., D_n]``. When some D_k would be zero, a symmetric
    swap with a later index is tried first; failing that, row/column j is
    added to row/column k (a congruence), which makes the pivot 2*a_kj.
    """
    if not M.is_symmetric():
        raise NotSymmetric("signature requires a symmetric matrix")
    n = M.n
    a = M.tolist()
    minors = [1]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for r in a:
                    r[k], r[swap] = r[swap], r[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    raise SingularMatrix("matrix is singular (det = 0)")
                for c in range(k, n):
                    a[k][c] += a[j][c]
                for r in range(k, n):
                    a[r][k] += a[r][j]
        akk = a[k][k]
        minors.append(akk)
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * akk - aik * a[k][j]) // prev
        prev = akk
    return minors


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def signature(M: IntMatrix) -> int:
    """(#positive - #negative) eigenvalues, via the Jacobi sign-change rule."""
    minors = leading_minors(M)
    # each ratio D_k / D_{k-1} is a pivot of the LDL^t factorisation
    return sum(_sign(minors[k]) * _sign(minors[k - 1]) for k in range(1, len(minors)))


def neg_cf_expand(r) -> list[int]:
    """Negative continued fraction ``r = a0 - 1/(a1 - 1/(a2 - ...))`` with
    every ``a_i <= -2``. Requires ``r < -1``."""
    r = Fraction(r)
    if r >= -1:
        raise OutOfRange(f"negative continued fraction needs r < -1, got {r}")
    coeffs = []
    while True:
        a = math.floor(r)
        coeffs.append(a)
        rest = r - a
        if rest == 0:
            return coeffs
        r = -1 / rest


def neg_cf_value(coeffs: Sequence[int]) -> Fraction:
    """Inverse of :func:`neg_cf_expand`."""
    if not coeffs:
        raise ValueError("empty continued fraction")
    value = Fraction(coeffs[-1])
    for a in reversed(coeffs[:-1]):
        value = a - 1 / value
    return value
