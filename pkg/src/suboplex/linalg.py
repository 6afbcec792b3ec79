"""Exact linear algebra over prime fields GF(p) and the rationals.

Everything here computes ranks of matrices given as sparse columns:
each column is a list of (row_index, coefficient) pairs with integer
coefficients.  Over GF(2) columns are packed into Python integers and
eliminated with XOR; large instances switch to a bit-packed numpy
elimination.  Over GF(p) small matrices use pure-Python modular
elimination and large ones a vectorised numpy routine.  Rationals use
``fractions.Fraction`` (exact, for small instances only).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import ValidationError

SparseColumn = Sequence[tuple[int, int]]

# Above this many matrix cells, switch to the numpy eliminations.
_DENSE_SWITCH = 1 << 21


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True, slots=True)
class FieldSpec:
    """A coefficient field: GF(p) for a prime p, or exact rationals (p=None)."""

    p: int | None = 2

    def __post_init__(self) -> None:
        if self.p is not None and not _is_prime(self.p):
            raise ValidationError(f"field characteristic must be prime, got {self.p}")

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip()
        if t.upper() == "Q":
            return cls(None)
        try:
            return cls(int(t))
        except ValueError:
            raise ValidationError(f"field must be a prime or 'Q', got {text!r}") from None

    def __str__(self) -> str:
        return "Q" if self.p is None else str(self.p)


GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
QQ = FieldSpec(None)


def rank_gf2(vectors: list[int], nbits: int) -> int:
    """Rank over GF(2) of vectors given as bit masks of width ``nbits``."""
    if not vectors or nbits == 0:
        return 0
    if len(vectors) * nbits > _DENSE_SWITCH:
        return _rank_gf2_packed(vectors, nbits)
    pivots: dict[int, int] = {}
    rank = 0
    for v in vectors:
        while v:
            low = v & -v
            p = pivots.get(low)
            if p is None:
                pivots[low] = v
                rank += 1
                break
            v ^= p
    return rank


def _rank_gf2_packed(vectors: list[int], nbits: int) -> int:
    words = (nbits + 63) // 64
    a = np.zeros((len(vectors), words), dtype=np.uint64)
    nbytes = words * 8
    for i, v in enumerate(vectors):
        a[i] = np.frombuffer(v.to_bytes(nbytes, "little"), dtype=np.uint64)
    m = len(vectors)
    rank = 0
    for bit in range(nbits):
        w, b = divmod(bit, 64)
        mask = np.uint64(1 << b)
        col = a[rank:, w] & mask
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        below = np.nonzero(a[rank + 1 :, w] & mask)[0]
        if below.size:
            a[rank + 1 + below] ^= a[rank]
        rank += 1
        if rank == m:
            break
    return rank


def _rank_modp_small(rows: list[list[int]], p: int) -> int:
    nrows = len(rows)
    if nrows == 0:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if rows[r][c] % p:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[c], -1, p)
        for j in range(c, ncols):
            prow[j] = prow[j] * inv % p
        for r in range(rank + 1, nrows):
            f = rows[r][c] % p
            if f:
                row = rows[r]
                for j in range(c, ncols):
                    row[j] = (row[j] - f * prow[j]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank_modp_numpy(a: np.ndarray, p: int) -> int:
    a = np.remainder(a.astype(np.int64), p)
    nrows, ncols = a.shape
    rank = 0
    for c in range(ncols):
        col = a[rank:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), -1, p)
        a[rank] = a[rank] * inv % p
        below = a[rank + 1 :, c]
        hit = np.nonzero(below)[0]
        if hit.size:
            idx = rank + 1 + hit
            a[idx] = (a[idx] - np.outer(a[idx, c], a[rank])) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank_rational(rows: list[list[Fraction]]) -> int:
    nrows = len(rows)
    if nrows == 0:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if rows[r][c]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[c]
        for j in range(c, ncols):
            prow[j] *= inv
        for r in range(rank + 1, nrows):
            f = rows[r][c]
            if f:
                row = rows[r]
                for j in range(c, ncols):
                    row[j] -= f * prow[j]
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_from_columns(
    columns: Sequence[SparseColumn], nrows: int, field: FieldSpec
) -> int:
    """Rank of the matrix whose columns are sparse (row, coeff) lists."""
    ncols = len(columns)
    if ncols == 0 or nrows == 0:
        return 0
    if field.p == 2:
        vecs = []
        for col in columns:
            v = 0
            for r, _ in col:
                v ^= 1 << r
            vecs.append(v)
        return rank_gf2(vecs, nrows)
    if field.p is not None:
        p = field.p
        if ncols * nrows > _DENSE_SWITCH:
            a = np.zeros((ncols, nrows), dtype=np.int64)
            for i, col in enumerate(columns):
                for r, coeff in col:
                    a[i, r] = coeff % p
            return _rank_modp_numpy(a, p)
        rows = [[0] * nrows for _ in range(ncols)]
        for i, col in enumerate(columns):
            row = rows[i]
            for r, coeff in col:
                row[r] = coeff % p
        return _rank_modp_small(rows, p)
    rows_q = [[Fraction(0)] * nrows for _ in range(ncols)]
    for i, col in enumerate(columns):
        for r, coeff in col:
            rows_q[i][r] = Fraction(coeff)
    return _rank_rational(rows_q)


def rank_modp_dense(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over GF(p) of a dense integer matrix given by rows."""
    if not _is_prime(p):
        raise ValidationError(f"field characteristic must be prime, got {p}")
    mat = [list(map(int, r)) for r in rows]
    if not mat:
        return 0
    return _rank_modp_small(mat, p)
